#pragma once

#include <functional>
#include <vector>

#include "overpart/integer.hpp"

namespace overpart {

// A partition as its non-increasing sequence of positive parts.
using PartitionLambda = std::vector<unsigned>;

// Visits every partition of n exactly once, in lexicographically decreasing
// order; n = 0 yields the single empty partition.
void for_each_partition(unsigned n, const std::function<void(const PartitionLambda&)>& visit);

std::vector<PartitionLambda> enumerate_partitions(unsigned n);

// Number of overpartitions of n: sum over partitions of 2^{#distinct parts},
// since the first occurrence of each distinct part value may independently be
// overlined. Deliberately naive; practical up to n ~ 60.
Integer overpartition_count_bruteforce(unsigned n);

// Same count by explicitly enumerating (partition, overline set) objects.
// Exponential in the number of distinct parts; intended for small n as an
// independent check of the closed form above.
Integer overpartition_count_by_enumeration(unsigned n);

// Number of t-colored overpartitions of n: sum over compositions
// n_1 + ... + n_t = n of the product of per-component overpartition counts.
// Rejects t = 0. Practical up to n ~ 40.
Integer t_colored_bruteforce(unsigned t, unsigned n);

}  // namespace overpart
