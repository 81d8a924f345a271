#include "tropmod/rational.hpp"

#include <cstddef>

namespace tropmod {

Rational Rational::parse(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t");
  size_t end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("empty rational");
  std::string t = s.substr(begin, end - begin + 1);
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      std::int64_t n = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument("trailing characters");
      return Rational(n);
    }
    size_t used = 0;
    std::int64_t n = std::stoll(t.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    std::string den_part = t.substr(slash + 1);
    std::int64_t d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument("trailing characters");
    return Rational(n, d);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + t);
  }
}

}  // namespace tropmod
