#pragma once

// Basis blades of the exterior algebra over n <= 8 generators e1..en,
// encoded as bitmasks (bit i-1 <-> generator e_i).
//
// Sign convention (single source of truth for every orientation-sensitive
// identity in this library): a blade is canonical when its generators appear
// with increasing index, and the sign of any product is the parity of the
// sorting permutation. Everything else (contraction, star, adjoints) derives
// from this one rule.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace g2calc {

using Blade = std::uint16_t;  // bitmask; degree = popcount

constexpr int kMaxGenerators = 8;

inline int blade_degree(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

/// Sign of merging canonical blades a and b into the canonical a|b.
/// Returns 0 when the blades share a generator, else +1 / -1.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Count transpositions: for each generator of b, the generators of a above it.
  int swaps = 0;
  unsigned rest = a;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    // generators of b strictly below i must hop over e_{i+1}
    swaps += std::popcount(static_cast<unsigned>(b) & ((1u << i) - 1u));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign of removing generator index g (0-based) from canonical blade b:
/// iota_{d/dx_{g}} e_B = sign * e_{B minus g}. Zero when g is absent.
inline int contraction_sign(Blade b, int g) {
  if (!(b & (Blade(1) << g))) return 0;
  const int below = std::popcount(static_cast<unsigned>(b) & ((1u << g) - 1u));
  return (below & 1) ? -1 : 1;
}

/// Sign eps with e_B ^ e_{complement} = eps * e_top, for the full generator set top.
inline int complement_sign(Blade b, Blade top) {
  return wedge_sign(b, static_cast<Blade>(top & ~b));
}

inline Blade full_blade(int n) { return static_cast<Blade>((1u << n) - 1u); }

/// All degree-k blades on n generators, in increasing mask order.
inline std::vector<Blade> blades_of_degree(int n, int k) {
  std::vector<Blade> out;
  const Blade top = full_blade(n);
  for (Blade b = 0; b <= top; ++b)
    if (blade_degree(b) == k) out.push_back(b);
  return out;
}

/// Generator indices (0-based) of a blade, increasing.
inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  unsigned rest = b;
  while (rest) {
    idx.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return idx;
}

inline std::string blade_to_string(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (int i : blade_indices(b)) {
    if (!s.empty()) s += '^';
    s += 'e';
    s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace g2calc
