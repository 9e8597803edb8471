#pragma once

// Graded linear endomorphisms of the full exterior algebra.
//
// An operator stores its 2^n x 2^n matrix (column = input blade, row = output
// blade), a parity, and -- when it has one -- a uniform degree shift. Star-type
// compositions have no uniform shift; their degree structure is still checked
// blockwise where identities demand it.

#include <optional>
#include <stdexcept>
#include <vector>

#include "g2calc/forms.hpp"
#include "g2calc/matrix.hpp"
#include "g2calc/metric.hpp"

namespace g2calc {

enum class Parity { even, odd };

inline Parity parity_of_degree(int d) { return (d & 1) ? Parity::odd : Parity::even; }
inline Parity combine(Parity a, Parity b) {
  return (a == b) ? Parity::even : Parity::odd;
}
inline int parity_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

template <class S>
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(int dim, Parity parity, std::optional<int> degree_shift)
      : dim_(dim),
        parity_(parity),
        shift_(degree_shift),
        mat_(std::size_t(1) << dim, std::size_t(1) << dim) {}

  static GradedOperator identity(int dim) {
    GradedOperator op(dim, Parity::even, 0);
    op.mat_ = DenseMat<S>::identity(std::size_t(1) << dim);
    return op;
  }

  static GradedOperator zero(int dim, Parity parity = Parity::even,
                             std::optional<int> shift = 0) {
    return GradedOperator(dim, parity, shift);
  }

  /// Left wedge by a homogeneous form: alpha ^ (.) as an operator.
  static GradedOperator wedge_operator(const FormVector<S>& alpha) {
    const auto deg = alpha.homogeneous_degree();
    if (!deg) throw std::invalid_argument("wedge_operator: inhomogeneous form");
    GradedOperator op(alpha.dim(), parity_of_degree(*deg), *deg);
    const Blade top = full_blade(alpha.dim());
    for (Blade in = 0; in <= top; ++in) {
      for (Blade x = 0; x <= top; ++x) {
        if (scalar_traits<S>::is_zero(alpha[x]) || (x & in)) continue;
        const int sgn = wedge_sign(x, in);
        S v = alpha[x];
        if (sgn < 0) v = -v;
        op.mat_(static_cast<Blade>(x | in), in) += v;
      }
    }
    return op;
  }

  static GradedOperator star_operator(const Metric<S>& m) {
    const int n = m.dim();
    GradedOperator op(n, (n & 1) ? Parity::odd : Parity::even, std::nullopt);
    const Blade top = full_blade(n);
    for (Blade in = 0; in <= top; ++in) {
      const auto img = hodge_star(FormVector<S>::basis_blade(n, in), m);
      for (Blade out = 0; out <= top; ++out)
        if (!scalar_traits<S>::is_zero(img[out])) op.mat_(out, in) = img[out];
    }
    return op;
  }

  /// The unique derivation with rho|Lambda^0 = 0 and rho(e_i) = images[i-1].
  /// All images must be homogeneous of one common degree m; the result shifts
  /// degree by m-1 and has parity (m-1) mod 2 (graded Leibniz rule).
  static GradedOperator derivation_extend(int dim, const std::vector<FormVector<S>>& images) {
    if (static_cast<int>(images.size()) != dim)
      throw std::invalid_argument("derivation_extend: one image per generator");
    std::optional<int> m;
    for (const auto& img : images) {
      if (img.is_zero()) continue;
      const auto d = img.homogeneous_degree();
      if (!d) throw std::invalid_argument("derivation_extend: inhomogeneous image");
      if (m && *m != *d) throw std::invalid_argument("derivation_extend: mixed image degrees");
      m = d;
    }
    const int image_degree = m.value_or(1);
    const Parity rho_parity = parity_of_degree(image_degree - 1);
    GradedOperator op(dim, rho_parity, image_degree - 1);
    const Blade top = full_blade(dim);
    for (Blade in = 1; in <= top; ++in) {
      const auto gens = blade_indices(in);
      for (std::size_t a = 0; a < gens.size(); ++a) {
        // rho hops over the a leading 1-forms
        const bool hop_sign = (rho_parity == Parity::odd) && (a & 1);
        Blade prefix = 0, suffix = 0;
        for (std::size_t t = 0; t < gens.size(); ++t) {
          if (t < a) prefix |= Blade(1) << gens[t];
          if (t > a) suffix |= Blade(1) << gens[t];
        }
        const FormVector<S>& img = images[gens[a]];
        for (Blade x = 0; x <= top; ++x) {
          if (scalar_traits<S>::is_zero(img[x])) continue;
          if ((x & prefix) || (x & suffix)) continue;
          int sgn = wedge_sign(prefix, x) * wedge_sign(static_cast<Blade>(prefix | x), suffix);
          if (sgn == 0) continue;
          if (hop_sign) sgn = -sgn;
          S v = img[x];
          if (sgn < 0) v = -v;
          op.mat_(static_cast<Blade>(prefix | x | suffix), in) += v;
        }
      }
    }
    return op;
  }

  int dim() const { return dim_; }
  Parity parity() const { return parity_; }
  std::optional<int> degree_shift() const { return shift_; }
  const DenseMat<S>& matrix() const { return mat_; }
  DenseMat<S>& matrix() { return mat_; }

  FormVector<S> apply(const FormVector<S>& f) const {
    if (f.dim() != dim_) throw std::invalid_argument("apply: dimension mismatch");
    FormVector<S> out(dim_);
    const Blade top = full_blade(dim_);
    for (Blade in = 0; in <= top; ++in) {
      if (scalar_traits<S>::is_zero(f[in])) continue;
      for (Blade outb = 0; outb <= top; ++outb) {
        const S& m = mat_(outb, in);
        if (!scalar_traits<S>::is_zero(m)) out[outb] += m * f[in];
      }
    }
    return out;
  }
  FormVector<S> operator()(const FormVector<S>& f) const { return apply(f); }

  friend GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
    a.require_same_space(b);
    std::optional<int> shift;
    if (a.shift_ && b.shift_) shift = *a.shift_ + *b.shift_;
    GradedOperator c(a.dim_, combine(a.parity_, b.parity_), shift);
    c.mat_ = a.mat_ * b.mat_;
    return c;
  }

  friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    a.require_same_space(b);
    GradedOperator c(a.dim_, a.parity_,
                     (a.shift_ == b.shift_) ? a.shift_ : std::optional<int>());
    c.mat_ = a.mat_ + b.mat_;
    return c;
  }
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    a.require_same_space(b);
    GradedOperator c(a.dim_, a.parity_,
                     (a.shift_ == b.shift_) ? a.shift_ : std::optional<int>());
    c.mat_ = a.mat_ - b.mat_;
    return c;
  }
  friend GradedOperator operator*(const S& s, const GradedOperator& a) {
    GradedOperator c(a.dim_, a.parity_, a.shift_);
    c.mat_ = s * a.mat_;
    return c;
  }

  bool is_zero() const { return mat_.is_zero(); }
  double max_abs() const { return mat_.max_abs(); }

  /// Rectangular block mapping degree `src` into degree `dst`.
  DenseMat<S> block(int src, int dst) const {
    const auto in = blades_of_degree(dim_, src);
    const auto out = blades_of_degree(dim_, dst);
    DenseMat<S> b(out.size(), in.size());
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t c = 0; c < in.size(); ++c) b(r, c) = mat_(out[r], in[c]);
    return b;
  }

  /// True when the matrix vanishes outside the declared shift blocks.
  bool respects_degree_shift() const {
    if (!shift_) return true;
    const Blade top = full_blade(dim_);
    for (Blade in = 0; in <= top; ++in)
      for (Blade out = 0; out <= top; ++out)
        if (!scalar_traits<S>::is_zero(mat_(out, in)) &&
            blade_degree(out) != blade_degree(in) + *shift_)
          return false;
    return true;
  }

  template <class T>
  GradedOperator<T> convert() const {
    GradedOperator<T> out(dim_, parity_, shift_);
    const std::size_t n = std::size_t(1) << dim_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.matrix()(i, j) = scalar_traits<T>::from_rational(mat_(i, j));
    return out;
  }

  void require_same_space(const GradedOperator& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("operator dimension mismatch");
  }

 private:
  int dim_ = 0;
  Parity parity_ = Parity::even;
  std::optional<int> shift_;
  DenseMat<S> mat_;
};

/// {A, B} = AB - (-1)^{|A||B|} BA.
template <class S>
GradedOperator<S> supercommutator(const GradedOperator<S>& a, const GradedOperator<S>& b) {
  auto ab = compose(a, b);
  auto ba = compose(b, a);
  const int sgn = parity_sign(a.parity(), b.parity());
  GradedOperator<S> c(a.dim(), combine(a.parity(), b.parity()),
                      ab.degree_shift());
  c.matrix() = (sgn < 0) ? (ab.matrix() + ba.matrix()) : (ab.matrix() - ba.matrix());
  return c;
}

/// Metric adjoint: <A a, b> = <a, adjoint(A) b> for the Hermitian blade pairing.
/// In an orthonormal blade frame this is the conjugate transpose; general Gram
/// matrices conjugate by the blade Gram.
template <class S>
GradedOperator<S> adjoint(const GradedOperator<S>& a, const Metric<S>& m) {
  if (a.dim() != m.dim()) throw std::invalid_argument("adjoint: dimension mismatch");
  std::optional<int> shift;
  if (a.degree_shift()) shift = -*a.degree_shift();
  GradedOperator<S> out(a.dim(), a.parity(), shift);
  bool orthonormal = true;
  for (std::size_t i = 0; i < m.gram().rows() && orthonormal; ++i)
    for (std::size_t j = 0; j < m.gram().cols() && orthonormal; ++j)
      if (!(m.gram()(i, j) ==
            (i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero())))
        orthonormal = false;
  if (orthonormal) {
    out.matrix() = a.matrix().conjugate_transpose();
  } else {
    const auto w = m.blade_gram();
    out.matrix() = exact_inverse(w) * a.matrix().conjugate_transpose() * w;
  }
  return out;
}

template <class S>
double max_abs_diff(const GradedOperator<S>& a, const GradedOperator<S>& b) {
  return (a.matrix() - b.matrix()).max_abs();
}

}  // namespace g2calc
