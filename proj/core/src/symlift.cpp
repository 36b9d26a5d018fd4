#include "welch/symlift.hpp"

#include <cmath>
#include <limits>

namespace welch {

namespace {

constexpr std::size_t kLiftCap = 4096;

// Checked multiply/divide chain for binomial(a, b) with b = min(b, a-b).
std::size_t checked_binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    const std::size_t factor = a - b + i;
    if (result > std::numeric_limits<std::size_t>::max() / factor) {
      throw OverflowError("sym_dim: binomial coefficient overflows");
    }
    result = result * factor / i;  // exact: result*(a-b+1)...(a-b+i) is divisible by i!
  }
  return result;
}

double multinomial(unsigned m, const std::vector<unsigned>& alpha) {
  // m! / prod(alpha_i!) built as a product of binomials; exact in double for
  // the desk-scale m used here.
  double result = 1.0;
  unsigned rest = m;
  for (unsigned a : alpha) {
    double binom = 1.0;
    for (unsigned i = 1; i <= a; ++i) binom = binom * double(rest - a + i) / double(i);
    result *= binom;
    rest -= a;
  }
  return result;
}

}  // namespace

std::size_t sym_dim(std::size_t d, unsigned m) {
  if (d < 1 || m < 1) throw ValidationError("sym_dim: requires d >= 1 and m >= 1");
  return checked_binomial(d + m - 1, m);
}

std::vector<std::vector<unsigned>> sym_multi_indices(std::size_t d, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(d, 0);
  // Depth-first over coordinates, largest first in each slot: yields
  // descending lexicographic order starting at (m, 0, ..., 0).
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == d) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      current[pos] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, m);
  return out;
}

Matrix lifted_gram(const Matrix& g, unsigned m) {
  if (g.rows() != g.cols()) throw NonSquareError("lifted_gram: Gram matrix must be square");
  return hadamard_power(g, m);
}

DualPair explicit_lift(const DualPair& pair, unsigned m) {
  if (m < 1) throw ValidationError("explicit_lift: order must be >= 1");
  if (m == 1) return pair;
  const std::size_t d = pair.dim();
  const std::size_t big_d = sym_dim(d, m);
  if (big_d > kLiftCap) throw LiftTooLargeError("explicit_lift: lifted dimension exceeds cap");

  const auto indices = sym_multi_indices(d, m);
  const std::size_t n = pair.size();
  Matrix lifted_vec(n, big_d);
  Matrix lifted_fun(n, big_d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t col = 0; col < big_d; ++col) {
      const auto& alpha = indices[col];
      const double w = std::sqrt(multinomial(m, alpha));
      Complex pv{1.0, 0.0};
      Complex pf{1.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) {
        for (unsigned rep = 0; rep < alpha[i]; ++rep) {
          pv *= pair.vectors()(j, i);
          pf *= pair.functionals()(j, i);
        }
      }
      lifted_vec(j, col) = w * pv;
      lifted_fun(j, col) = w * pf;
    }
  }
  LpSpace lifted_space = pair.space();
  lifted_space.dim = big_d;
  return DualPair(lifted_space, std::move(lifted_vec), std::move(lifted_fun));
}

LiftedSpectrum lifted_frame_spectrum(const DualPair& pair, unsigned m) {
  LiftedSpectrum out;
  out.spectrum = eigen(lifted_gram(gram(pair), m));
  const std::size_t big_d = sym_dim(pair.dim(), m);
  const std::size_t n = pair.size();
  out.zero_padding = big_d > n ? big_d - n : 0;
  return out;
}

}  // namespace welch
