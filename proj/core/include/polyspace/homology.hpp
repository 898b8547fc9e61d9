#pragma once

#include <vector>

#include "polyspace/combinatorics.hpp"

namespace polyspace {

/// (b_0, ..., b_{n-3}); empty when the polygon space is empty ({n} long).
using BettiVector = std::vector<int>;

/// (a_0, ..., a_{n-3}) with a_k = |short_sets(ell, k)|. Throws NonGeneric.
std::vector<int> a_vector(const LengthVector& ell);

/// b_k = a_k + a_{n-3-k}. Throws NonGeneric.
BettiVector betti(const LengthVector& ell);
BettiVector betti(const ChamberSignature& sig);

/// Alternating sum of the Betti numbers (0 for the empty space).
long euler_characteristic(const LengthVector& ell);
long euler_characteristic(const BettiVector& b);

}  // namespace polyspace
