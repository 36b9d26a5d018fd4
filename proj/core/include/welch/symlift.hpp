#pragma once

#include <cstddef>
#include <vector>

#include "welch/asf.hpp"

namespace welch {

/// dim Sym^m of a d-dimensional space: binomial(d+m-1, m).
/// Throws OverflowError if the result is not representable.
std::size_t sym_dim(std::size_t d, unsigned m);

/// All d-tuples of non-negative integers summing to m, in a fixed
/// deterministic order (descending lexicographic, starting at (m,0,...,0)).
/// These label the monomial basis of Sym^m.
std::vector<std::vector<unsigned>> sym_multi_indices(std::size_t d, unsigned m);

/// Entrywise m-th power of a Gram matrix: (f_j(tau_k))^m, which equals the
/// pairing of the m-fold symmetric tensor lifts.
Matrix lifted_gram(const Matrix& g, unsigned m);

/// Explicit symmetric lift in the monomial basis: coordinate at multi-index
/// alpha is sqrt(multinomial(m; alpha)) * prod_i x_i^{alpha_i}, for vectors
/// and functionals alike, so that lifted pairings are m-th powers of the
/// source pairings. Cross-validation path only; capped at sym_dim <= 4096
/// (LiftTooLargeError).
DualPair explicit_lift(const DualPair& pair, unsigned m);

struct LiftedSpectrum {
  /// Spectrum of the n x n lifted Gram; its nonzero part equals the nonzero
  /// spectrum of the Sym^m frame operator.
  Spectrum spectrum;
  /// Extra zero eigenvalues of the D x D frame operator, max(D - n, 0).
  std::size_t zero_padding = 0;
};

LiftedSpectrum lifted_frame_spectrum(const DualPair& pair, unsigned m);

}  // namespace welch
