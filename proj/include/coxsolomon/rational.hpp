#ifndef COXSOLOMON_RATIONAL_HPP
#define COXSOLOMON_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coxsolomon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::int64_t to_int64(const Rational& q) {
  return static_cast<std::int64_t>(numerator(q) / denominator(q));
}

/// "3", "-1/2", ...
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace coxsolomon

#endif
