#pragma once
// Exact scalar types: arbitrary-precision rationals and Gaussian rationals
// (complex numbers with rational real and imaginary parts). Used wherever the
// inputs are rational so that structural identities can be asserted with ==
// instead of tolerances.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qlat {

using BigRat = boost::multiprecision::cpp_rational;

struct GaussRat {
  BigRat re;
  BigRat im;

  GaussRat() = default;
  GaussRat(int r) : re(r) {}  // NOLINT: implicit 0/1 literals keep matrix code readable
  GaussRat(BigRat r) : re(std::move(r)) {}
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    BigRat n2 = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat conj(const GaussRat& x) { return {x.re, -x.im}; }
inline BigRat norm_sq(const GaussRat& x) { return x.re * x.re + x.im * x.im; }

inline std::string to_string(const BigRat& r) { return r.str(); }
inline std::string to_string(const GaussRat& x) {
  if (x.im == 0) return x.re.str();
  return x.re.str() + (x.im < 0 ? "-" : "+") + BigRat(boost::multiprecision::abs(x.im)).str() + "i";
}

}  // namespace qlat
