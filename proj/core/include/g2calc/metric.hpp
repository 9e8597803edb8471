#pragma once

// Inner-product structure on the exterior algebra.
//
// `gram` is the inner product of the generators as 1-forms: gram(i,j) = <e_i, e_j>.
// Blade inner products are Gram minors: <e_I, e_J> = det gram[I, J]; the blade
// Gram matrix is block diagonal by degree. The volume form is
// orientation * sqrt(det g) e_1^...^e_n with g the tangent metric (= gram^{-1});
// exact backends require that square root to be rational.

#include <optional>
#include <stdexcept>
#include <vector>

#include "g2calc/forms.hpp"
#include "g2calc/matrix.hpp"

namespace g2calc {

template <class S>
class Metric {
 public:
  static Metric euclidean(int dim) {
    Metric m;
    m.dim_ = dim;
    m.gram_ = DenseMat<S>::identity(dim);
    m.vol_coeff_ = scalar_traits<S>::one();
    m.orientation_ = 1;
    return m;
  }

  /// Metric from the generator (1-form) Gram matrix; volume scale computed as
  /// sqrt(1/det gram), which must be exact for exact backends.
  static Metric from_one_form_gram(DenseMat<S> gram, int orientation = 1) {
    static_assert(std::is_same_v<S, Rational>, "exact construction; use euclidean() for float");
    Metric m;
    m.dim_ = static_cast<int>(gram.rows());
    require_symmetric(gram);
    const S det = exact_det(gram);
    if (scalar_traits<S>::is_zero(det)) throw std::domain_error("degenerate metric");
    const auto root = exact_sqrt(Rational(1) / det);
    if (!root) throw std::domain_error("volume scale is not rational for this gram matrix");
    m.gram_ = std::move(gram);
    m.vol_coeff_ = *root;
    m.orientation_ = orientation >= 0 ? 1 : -1;
    return m;
  }

  /// Metric from the tangent metric g and an explicitly known volume form
  /// vol = c * e_top (the G2 construction produces both; c^2 = det g is asserted).
  static Metric from_tangent_metric(const DenseMat<S>& tangent_gram, const S& vol_coeff) {
    Metric m;
    m.dim_ = static_cast<int>(tangent_gram.rows());
    require_symmetric(tangent_gram);
    m.gram_ = exact_inverse(tangent_gram);
    S c2 = vol_coeff * vol_coeff;
    if (!(c2 == exact_det(tangent_gram)))
      throw std::invalid_argument("volume coefficient inconsistent with det g");
    if (scalar_traits<S>::abs_approx(vol_coeff) == 0.0)
      throw std::invalid_argument("zero volume form");
    const bool neg = scalar_traits<S>::abs_approx(vol_coeff) > 0 &&
                     scalar_traits<S>::to_complex(vol_coeff).real() < 0;
    m.orientation_ = neg ? -1 : 1;
    m.vol_coeff_ = neg ? -vol_coeff : vol_coeff;
    return m;
  }

  int dim() const { return dim_; }
  const DenseMat<S>& gram() const { return gram_; }
  int orientation() const { return orientation_; }

  /// Signed volume coefficient: vol = signed_vol_coeff() * e_1^...^e_n.
  S signed_vol_coeff() const {
    return orientation_ < 0 ? S(-vol_coeff_) : vol_coeff_;
  }

  FormVector<S> volume_form() const {
    return FormVector<S>::basis_blade(dim_, full_blade(dim_), signed_vol_coeff());
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = 0; j < gram_.cols(); ++j)
        if (i != j && !scalar_traits<S>::is_zero(gram_(i, j))) return false;
    return true;
  }

  /// <e_I, e_J> = det gram[I, J]. Diagonal grams take the product shortcut.
  S blade_inner(Blade a, Blade b) const {
    if (blade_degree(a) != blade_degree(b)) return scalar_traits<S>::zero();
    const auto ia = blade_indices(a);
    const auto ib = blade_indices(b);
    if (is_diagonal()) {
      if (a != b) return scalar_traits<S>::zero();
      S p = scalar_traits<S>::one();
      for (int i : ia) p = p * gram_(i, i);
      return p;
    }
    DenseMat<S> sub(ia.size(), ib.size());
    for (std::size_t r = 0; r < ia.size(); ++r)
      for (std::size_t c = 0; c < ib.size(); ++c) sub(r, c) = gram_(ia[r], ib[c]);
    return exact_det(sub);
  }

  /// Bilinear extension of the blade pairing (no conjugation; the Hermitian
  /// pairing conjugates the second argument at call sites).
  S pairing(const FormVector<S>& a, const FormVector<S>& b) const {
    a.require_same_space(b);
    S acc = scalar_traits<S>::zero();
    const Blade top = full_blade(dim_);
    for (Blade x = 0; x <= top; ++x) {
      if (scalar_traits<S>::is_zero(a[x])) continue;
      for (Blade y = 0; y <= top; ++y) {
        if (scalar_traits<S>::is_zero(b[y])) continue;
        const S w = blade_inner(x, y);
        if (!scalar_traits<S>::is_zero(w)) acc += a[x] * w * b[y];
      }
    }
    return acc;
  }

  /// Full 2^n x 2^n blade Gram matrix (block diagonal by degree).
  DenseMat<S> blade_gram() const {
    const std::size_t n = std::size_t(1) << dim_;
    DenseMat<S> w(n, n);
    for (Blade a = 0; a < n; ++a)
      for (Blade b = 0; b < n; ++b)
        if (blade_degree(a) == blade_degree(b)) w(a, b) = blade_inner(a, b);
    return w;
  }

  /// Index raising: components of nu^sharp in the generator-dual frame.
  std::vector<S> raise_index(const FormVector<S>& nu) const {
    if (nu.homogeneous_degree() != std::optional<int>(1))
      throw std::invalid_argument("raise_index: need a 1-form");
    std::vector<S> comps(dim_, scalar_traits<S>::zero());
    for (int j = 0; j < dim_; ++j)
      for (int i = 0; i < dim_; ++i) {
        const S& c = nu[Blade(1) << i];
        if (!scalar_traits<S>::is_zero(c)) comps[j] += gram_(j, i) * c;
      }
    return comps;
  }

  /// Lifts a rational metric into another scalar backend.
  template <class T>
  Metric<T> convert() const {
    static_assert(std::is_same_v<S, Rational>, "convert() only lifts the rational backend");
    Metric<T> out;
    out.dim_ = dim_;
    out.gram_ = convert_matrix<S, T>(gram_, &scalar_traits<T>::from_rational);
    out.vol_coeff_ = scalar_traits<T>::from_rational(vol_coeff_);
    out.orientation_ = orientation_;
    return out;
  }

  template <class>
  friend class Metric;

 private:
  static void require_symmetric(const DenseMat<S>& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("gram must be square");
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = i + 1; j < g.cols(); ++j)
        if (!(g(i, j) == g(j, i))) throw std::invalid_argument("gram must be symmetric");
  }

  int dim_ = 0;
  DenseMat<S> gram_;
  S vol_coeff_ = scalar_traits<S>::one();
  int orientation_ = 1;
};

/// Interior product with the metric dual of a 1-form: a |_ v^sharp.
template <class S>
FormVector<S> contract(const FormVector<S>& a, const FormVector<S>& v, const Metric<S>& m) {
  if (v.homogeneous_degree() != std::optional<int>(1))
    throw std::invalid_argument("contract: second argument must be a 1-form");
  return contract_vector(a, m.raise_index(v));
}

/// Hodge star: the unique linear map with alpha ^ star(beta) = <alpha, beta> vol,
/// extended complex-linearly over non-real backends.
template <class S>
FormVector<S> hodge_star(const FormVector<S>& a, const Metric<S>& m) {
  if (a.dim() != m.dim()) throw std::invalid_argument("hodge_star: dimension mismatch");
  const int n = m.dim();
  const Blade top = full_blade(n);
  FormVector<S> out(n);
  const S vol = m.signed_vol_coeff();
  for (Blade i = 0; i <= top; ++i) {
    // coefficient of e_{I^c} in star(a) is vol * eps(I, I^c) * <e_I, a>
    S inner = scalar_traits<S>::zero();
    const int k = blade_degree(i);
    for (Blade j = 0; j <= top; ++j) {
      if (blade_degree(j) != k || scalar_traits<S>::is_zero(a[j])) continue;
      const S w = m.blade_inner(i, j);
      if (!scalar_traits<S>::is_zero(w)) inner += w * a[j];
    }
    if (scalar_traits<S>::is_zero(inner)) continue;
    const int eps = complement_sign(i, top);
    S coeff = vol * inner;
    if (eps < 0) coeff = -coeff;
    out[static_cast<Blade>(top & ~i)] += coeff;
  }
  return out;
}

/// Sylvester test on an exact symmetric matrix: all leading principal minors positive.
inline bool exact_positive_definite(const DenseMat<Rational>& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    DenseMat<Rational> lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (!(exact_det(lead) > 0)) return false;
  }
  return true;
}

}  // namespace g2calc
