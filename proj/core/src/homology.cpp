#include "polyspace/homology.hpp"

namespace polyspace {

std::vector<int> a_vector(const LengthVector& ell) { return chamber_signature(ell).stratum_sizes(); }

BettiVector betti(const ChamberSignature& sig) {
  const std::vector<int> a = sig.stratum_sizes();
  if (a.empty() || a[0] == 0) return {};
  const int top = sig.n - 3;
  BettiVector b(a.size());
  for (int k = 0; k <= top; ++k) b[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] + a[static_cast<std::size_t>(top - k)];
  return b;
}

BettiVector betti(const LengthVector& ell) { return betti(chamber_signature(ell)); }

long euler_characteristic(const BettiVector& b) {
  long chi = 0;
  for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b[k]);
  return chi;
}

long euler_characteristic(const LengthVector& ell) { return euler_characteristic(betti(ell)); }

}  // namespace polyspace
