#ifndef OTALG_ARRMAT_SUBSET_HPP
#define OTALG_ARRMAT_SUBSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace otalg {

// Subsets of a ground set of at most 31 elements, as bit masks (bit i is
// element i, 0-based).
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxGroundSet = 31;
// Exhaustive sweeps over all 2^n subsets are only attempted up to here.
inline constexpr std::size_t kExhaustiveLimit = 16;

constexpr Subset bit(std::size_t i) { return Subset{1} << i; }
constexpr bool contains(Subset s, std::size_t i) { return (s >> i) & 1u; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr std::size_t cardinality(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }
constexpr Subset full_set(std::size_t n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

std::vector<std::size_t> elements_of(Subset s);
Subset subset_of(std::span<const std::size_t> elements);

// "{1,2,4}" with 1-based labels.
std::string subset_to_string(Subset s);

}  // namespace otalg

#endif  // OTALG_ARRMAT_SUBSET_HPP
