#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace toric {

/// Graded ranks plus a torsion summary per degree. Only nonzero entries are
/// stored; absent degrees have rank 0 and no torsion.
struct BettiTable {
    std::map<int, long long> ranks;
    std::map<int, std::vector<std::int64_t>> torsion;

    long long rank_at(int degree) const {
        auto it = ranks.find(degree);
        return it == ranks.end() ? 0 : it->second;
    }

    bool has_torsion() const { return !torsion.empty(); }

    /// Largest degree carrying rank or torsion; -2 when the table is empty.
    int top_degree() const {
        int top = -2;
        if (!ranks.empty()) top = ranks.rbegin()->first;
        if (!torsion.empty() && torsion.rbegin()->first > top) top = torsion.rbegin()->first;
        return top;
    }

    long long total_rank() const {
        long long t = 0;
        for (const auto& [deg, r] : ranks) t += r;
        return t;
    }

    bool operator==(const BettiTable&) const = default;
};

}  // namespace toric
