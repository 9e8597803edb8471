#pragma once

// Scalar backends for the exterior-algebra engine.
//
//   Rational          exact rational arithmetic (GMP), zero-residual identity checks
//   GaussianRational  exact complex rationals a + b*i, for mode symbols (entries in i*Z)
//   std::complex<double>  floating backend for spectra; every comparison takes an
//                         explicit tolerance, never an implicit one

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace g2calc {

using Rational = mpq_class;

/// Parses "p/q", "p", or a plain decimal ("1.5", "-0.25") into an exact rational.
inline Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(mpz_class(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational q(mpz_class(digits), den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact n-th root of a rational, when one exists (sign allowed for odd n).
inline std::optional<Rational> exact_nth_root(const Rational& q, unsigned long n) {
  if (n == 0) throw std::invalid_argument("0th root");
  if (q == 0) return Rational(0);
  const bool neg = q < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rnum, rden;
  const bool num_exact = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n) != 0;
  const bool den_exact = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  Rational r(rnum, rden);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

inline std::optional<Rational> exact_sqrt(const Rational& q) { return exact_nth_root(q, 2); }

/// Exact complex rationals. Division is exact (multiply by conjugate over the norm).
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT: implicit by design, mirrors arithmetic literals
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero GaussianRational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool real = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(static_cast<int>(v)); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational conj(const Rational& s) { return s; }
  static bool is_zero(const Rational& s) { return s == 0; }
  static double abs_approx(const Rational& s) { return std::abs(s.get_d()); }
  static std::complex<double> to_complex(const Rational& s) { return {s.get_d(), 0.0}; }
  static const char* name() { return "rational"; }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr bool real = false;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1), Rational(0)}; }
  static GaussianRational from_int(long v) { return {Rational(static_cast<int>(v)), Rational(0)}; }
  static GaussianRational from_rational(const Rational& q) { return {q, Rational(0)}; }
  static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }
  static GaussianRational conj(const GaussianRational& s) { return {s.re, -s.im}; }
  static bool is_zero(const GaussianRational& s) { return s.re == 0 && s.im == 0; }
  static double abs_approx(const GaussianRational& s) {
    return std::abs(std::complex<double>(s.re.get_d(), s.im.get_d()));
  }
  static std::complex<double> to_complex(const GaussianRational& s) {
    return {s.re.get_d(), s.im.get_d()};
  }
  static const char* name() { return "gaussian-rational"; }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  static constexpr bool real = false;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static std::complex<double> imag_unit() { return {0.0, 1.0}; }
  static std::complex<double> conj(const std::complex<double>& s) { return std::conj(s); }
  static bool is_zero(const std::complex<double>& s) { return s.real() == 0.0 && s.imag() == 0.0; }
  static double abs_approx(const std::complex<double>& s) { return std::abs(s); }
  static std::complex<double> to_complex(const std::complex<double>& s) { return s; }
  static const char* name() { return "complex-float"; }
};

using Complex = std::complex<double>;

}  // namespace g2calc
