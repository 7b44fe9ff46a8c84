#pragma once

#include <cstdint>

namespace kneserlab {

// Exact C(n, k) for 0 <= n <= 63 from a precomputed Pascal table; 0 when k < 0 or k > n.
// Throws DomainError for n outside [0, 63].
std::uint64_t binomial(int n, int k);

// C(n, k) with a saturating product, usable for any n >= 0; returns UINT64_MAX on overflow.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace kneserlab
