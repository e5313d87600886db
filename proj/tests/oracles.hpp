#pragma once

// Test-side oracles, independent of the library's partitioning path.

#include <vector>

#include "qcensus/census.hpp"

namespace qcensus::oracles {

// O(|G|^2) pairwise-conjugacy partition: conjugate every element by every
// group element. No generator set, no breadth-first search.
inline ClassPartition brute_force_partition(const QuotientContext& ctx) {
    const std::uint64_t n = ctx.order();
    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    ClassPartition part;
    part.class_id.assign(n, kUnassigned);
    std::vector<QuotientContext::ConjPair> pairs;
    pairs.reserve(n);
    for (std::uint64_t g = 0; g < n; ++g) pairs.push_back(ctx.make_conj_pair({g}));
    for (std::uint64_t e = 0; e < n; ++e) {
        if (part.class_id[e] != kUnassigned) continue;
        std::uint32_t cid = static_cast<std::uint32_t>(part.reps.size());
        part.reps.push_back(e);
        for (const auto& p : pairs) {
            std::uint64_t f = ctx.conj({e}, p).enc;
            if (part.class_id[f] == kUnassigned) part.class_id[f] = cid;
        }
    }
    part.sizes.assign(part.reps.size(), 0);
    for (std::uint32_t c : part.class_id) ++part.sizes[c];
    part.real_flags.assign(part.reps.size(), 0);
    for (std::size_t c = 0; c < part.reps.size(); ++c)
        part.real_flags[c] = part.class_id[ctx.inv({part.reps[c]}).enc] == c ? 1 : 0;
    return part;
}

}  // namespace qcensus::oracles
