#ifndef COXSOLOMON_QUADRATIC_HPP
#define COXSOLOMON_QUADRATIC_HPP

#include "coxsolomon/rational.hpp"

namespace coxsolomon {

/// Exact scalar a + b*sqrt(5).  The sqrt(5) part only shows up for the H
/// types (edge label 5 needs the golden ratio); crystallographic root data
/// stays in the b == 0 slice.
struct ExactScalar {
  Rational a;
  Rational b;

  ExactScalar() = default;
  ExactScalar(Rational ra) : a(std::move(ra)) {}
  ExactScalar(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  static ExactScalar golden() { return ExactScalar(Rational(1, 2), Rational(1, 2)); }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.a + y.a, x.b + y.b);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.a - y.a, x.b - y.b);
  }
  friend ExactScalar operator-(const ExactScalar& x) { return ExactScalar(-x.a, -x.b); }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
  /// Lexicographic order; used only as a map key, not as a numeric order.
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  bool is_zero() const { return a == 0 && b == 0; }
};

}  // namespace coxsolomon

#endif
