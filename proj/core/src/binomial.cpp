#include "kneserlab/binomial.hpp"

#include <array>
#include <limits>
#include <string>

#include "kneserlab/errors.hpp"

namespace kneserlab {
namespace {

constexpr int kTableSize = 64;

using PascalTable = std::array<std::array<std::uint64_t, kTableSize>, kTableSize>;

constexpr PascalTable make_pascal() {
  PascalTable t{};
  for (int n = 0; n < kTableSize; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = make_pascal();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n >= kTableSize) {
    throw DomainError("binomial: n=" + std::to_string(n) + " outside [0, 63]");
  }
  if (k < 0 || k > n) return 0;
  return kPascal[n][k];
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace kneserlab
