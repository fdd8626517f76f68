#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmds/family.hpp"

namespace rmds {

inline constexpr std::size_t kMaxPartitionBlocks = 8;
inline constexpr std::size_t kMaxRegularityDim = 12;
inline constexpr std::size_t kMaxEnumerationCells = 25;

// Partition-sum test for the k-dimensional null intersection property.
bool null_intersection(std::size_t k, const SetFamily& family);

// Calls visit(block_of) for every set partition of [ell]; block_of[i] is the
// block of i as a restricted-growth string.
void for_each_partition(std::size_t ell, const std::function<void(const std::vector<std::size_t>&)>& visit);

SetFamily pattern_to_family(const ErasurePattern& E);
ErasurePattern family_to_pattern(const SetFamily& family);

bool regularity_check(const ErasurePattern& E, std::size_t a, std::size_t b);

// Repeatedly empties rows with at most b erasures and columns with at most
// a erasures (the row code has distance b+1, the column code a+1).
ErasurePattern reduce_pattern(const ErasurePattern& E, std::size_t a, std::size_t b);

// All reduced patterns (for a = 1) that pass the regularity test.
std::vector<ErasurePattern> enumerate_check_patterns(std::size_t m, std::size_t n, std::size_t a, std::size_t b);

using BigInt = boost::multiprecision::cpp_int;
// Σ_{i=0}^{b} C(a, i); 0 for b < 0 and 2^a for b ≥ a.
BigInt binomial_sum(long long a, long long b);
BigInt binomial(long long a, long long b);
// min(2^{mn}, C(n,≤b(m−a))·C(bm(m−a),≤b(a+1)(m−a)), the same with the roles
// of rows and columns exchanged).
BigInt pattern_count_bound(std::size_t m, std::size_t n, std::size_t a, std::size_t b);

ErasurePattern pad_pattern(const ErasurePattern& E, Mask rows, Mask cols);

IndexType index_type(std::size_t i, const SetFamily& family);

// Families of ℓ subsets of [n] drawn from candidates, up to reordering
// (non-decreasing candidate index tuples). visit returns false to stop.
// Returns the number of families visited.
std::size_t for_each_family(std::size_t ell, const std::vector<Mask>& candidates,
                            const std::function<bool(const std::vector<Mask>&)>& visit);

// Subsets of [n] with size in [lo, hi], in increasing mask order.
std::vector<Mask> subsets_with_size(std::size_t n, std::size_t lo, std::size_t hi);

}  // namespace rmds
