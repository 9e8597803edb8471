#pragma once

// FormVector: a (possibly inhomogeneous) element of the exterior algebra on
// n generators, stored densely over 2^n blades.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2calc/blades.hpp"
#include "g2calc/scalars.hpp"

namespace g2calc {

template <class S>
class FormVector {
 public:
  FormVector() = default;
  explicit FormVector(int dim)
      : dim_(check_dim(dim)), coeffs_(std::size_t(1) << dim, scalar_traits<S>::zero()) {}

  static FormVector zero(int dim) { return FormVector(dim); }
  static FormVector scalar(int dim, S value) {
    FormVector f(dim);
    f[Blade(0)] = std::move(value);
    return f;
  }
  static FormVector basis_blade(int dim, Blade b, S coeff = scalar_traits<S>::one()) {
    FormVector f(dim);
    f[b] = std::move(coeff);
    return f;
  }
  /// Generator e_i, 1-based index as written in form literals.
  static FormVector generator(int dim, int i) {
    if (i < 1 || i > dim) throw std::invalid_argument("generator index out of range");
    return basis_blade(dim, Blade(1) << (i - 1));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }

  S& operator[](Blade b) { return coeffs_[b]; }
  const S& operator[](Blade b) const { return coeffs_[b]; }

  friend FormVector operator+(const FormVector& a, const FormVector& b) {
    a.require_same_space(b);
    FormVector c(a.dim_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return c;
  }
  friend FormVector operator-(const FormVector& a, const FormVector& b) {
    a.require_same_space(b);
    FormVector c(a.dim_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return c;
  }
  friend FormVector operator-(const FormVector& a) {
    FormVector c(a.dim_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.coeffs_[i] = -a.coeffs_[i];
    return c;
  }
  friend FormVector operator*(const S& s, const FormVector& a) {
    FormVector c(a.dim_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.coeffs_[i] = s * a.coeffs_[i];
    return c;
  }
  FormVector& operator+=(const FormVector& o) { return *this = *this + o; }
  FormVector& operator-=(const FormVector& o) { return *this = *this - o; }

  friend bool operator==(const FormVector& a, const FormVector& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const S& c : coeffs_)
      if (!scalar_traits<S>::is_zero(c)) return false;
    return true;
  }

  /// Exact degree-k component.
  FormVector degree_component(int k) const {
    FormVector out(dim_);
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (blade_degree(b) == k) out.coeffs_[b] = coeffs_[b];
    return out;
  }

  /// Degree when homogeneous (zero counts as any degree -> nullopt only when mixed).
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (Blade b = 0; b < coeffs_.size(); ++b) {
      if (scalar_traits<S>::is_zero(coeffs_[b])) continue;
      const int d = blade_degree(b);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg ? deg : std::optional<int>(0);
  }

  int nonzero_terms() const {
    int n = 0;
    for (const S& c : coeffs_)
      if (!scalar_traits<S>::is_zero(c)) ++n;
    return n;
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& c : coeffs_) m = std::max(m, scalar_traits<S>::abs_approx(c));
    return m;
  }

  template <class T>
  FormVector<T> convert() const {
    FormVector<T> out(dim_);
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if constexpr (std::is_same_v<S, Rational>)
        out[b] = scalar_traits<T>::from_rational(coeffs_[b]);
      else
        static_assert(std::is_same_v<S, Rational>, "convert() only lifts the rational backend");
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Blade b = 0; b < coeffs_.size(); ++b) {
      if (scalar_traits<S>::is_zero(coeffs_[b])) continue;
      if (!first) os << " + ";
      os << scalar_to_string(coeffs_[b]) << (b == 0 ? "" : "*") << (b == 0 ? "" : blade_to_string(b));
      first = false;
    }
    return first ? "0" : os.str();
  }

  void require_same_space(const FormVector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
  }

 private:
  static int check_dim(int dim) {
    if (dim < 1 || dim > kMaxGenerators) throw std::invalid_argument("dimension must be 1..8");
    return dim;
  }
  static std::string scalar_to_string(const S& s) {
    if constexpr (std::is_same_v<S, Rational>) {
      return s.get_str();
    } else if constexpr (std::is_same_v<S, GaussianRational>) {
      return "(" + s.re.get_str() + (s.im >= 0 ? "+" : "") + s.im.get_str() + "i)";
    } else {
      std::ostringstream os;
      os << s;
      return os.str();
    }
  }

  int dim_ = 0;
  std::vector<S> coeffs_;
};

/// Exterior product. Bilinear, graded-commutative on homogeneous inputs.
template <class S>
FormVector<S> wedge(const FormVector<S>& a, const FormVector<S>& b) {
  a.require_same_space(b);
  FormVector<S> out(a.dim());
  const Blade top = full_blade(a.dim());
  for (Blade x = 0; x <= top; ++x) {
    if (scalar_traits<S>::is_zero(a[x])) continue;
    for (Blade y = 0; y <= top; ++y) {
      if (x & y) continue;
      if (scalar_traits<S>::is_zero(b[y])) continue;
      const int sgn = wedge_sign(x, y);
      S term = a[x] * b[y];
      if (sgn < 0) term = -term;
      out[static_cast<Blade>(x | y)] += term;
    }
  }
  return out;
}

/// Interior product by the raw coordinate vector v (components in the
/// generator-dual frame); metric-aware contraction lives in metric.hpp.
template <class S>
FormVector<S> contract_vector(const FormVector<S>& a, const std::vector<S>& v) {
  if (static_cast<int>(v.size()) != a.dim())
    throw std::invalid_argument("contract_vector: component count");
  FormVector<S> out(a.dim());
  const Blade top = full_blade(a.dim());
  for (Blade b = 0; b <= top; ++b) {
    if (scalar_traits<S>::is_zero(a[b])) continue;
    for (int g = 0; g < a.dim(); ++g) {
      if (scalar_traits<S>::is_zero(v[g])) continue;
      const int sgn = contraction_sign(b, g);
      if (sgn == 0) continue;
      S term = v[g] * a[b];
      if (sgn < 0) term = -term;
      out[static_cast<Blade>(b & ~(Blade(1) << g))] += term;
    }
  }
  return out;
}

}  // namespace g2calc
