#include "overpart/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace overpart {

namespace {

void visit_partitions(unsigned remaining, unsigned max_part, PartitionLambda& current,
                      const std::function<void(const PartitionLambda&)>& visit)
{
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        visit_partitions(remaining - part, part, current, visit);
        current.pop_back();
    }
}

unsigned distinct_part_count(const PartitionLambda& parts)
{
    unsigned distinct = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1])
            ++distinct;
    return distinct;
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const PartitionLambda&)>& visit)
{
    PartitionLambda current;
    visit_partitions(n, n == 0 ? 1 : n, current, visit);
}

std::vector<PartitionLambda> enumerate_partitions(unsigned n)
{
    std::vector<PartitionLambda> all;
    for_each_partition(n, [&](const PartitionLambda& p) { all.push_back(p); });
    return all;
}

Integer overpartition_count_bruteforce(unsigned n)
{
    Integer total = 0;
    for_each_partition(n, [&](const PartitionLambda& p) {
        total += pow2(distinct_part_count(p));
    });
    return total;
}

Integer overpartition_count_by_enumeration(unsigned n)
{
    Integer total = 0;
    for_each_partition(n, [&](const PartitionLambda& p) {
        const unsigned distinct = distinct_part_count(p);
        // One object per subset of distinct part values chosen for overlining.
        for (unsigned long mask = 0; mask < (1ul << distinct); ++mask)
            total += 1;
    });
    return total;
}

Integer t_colored_bruteforce(unsigned t, unsigned n)
{
    if (t == 0)
        throw std::invalid_argument("t_colored_bruteforce: t must be at least 1");
    std::vector<Integer> single(n + 1);
    for (unsigned m = 0; m <= n; ++m)
        single[m] = overpartition_count_bruteforce(m);

    // Recursive composition sum: component sizes n_1 + ... + n_t = n.
    std::function<Integer(unsigned, unsigned)> compose = [&](unsigned components,
                                                             unsigned remaining) -> Integer {
        if (components == 1)
            return single[remaining];
        Integer total = 0;
        for (unsigned first = 0; first <= remaining; ++first)
            total += single[first] * compose(components - 1, remaining - first);
        return total;
    };
    return compose(t, n);
}

}  // namespace overpart
