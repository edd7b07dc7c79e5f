#pragma once

#include "plueckerfan/order.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_helpers {

inline pf::Poset chain(int m)
{
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < m; ++i) {
        ids.push_back("c" + std::to_string(i));
        if (i) covers.emplace_back(ids[i - 1], ids[i]);
    }
    return pf::Poset::from_covers(ids, covers);
}

inline pf::Poset antichain(int m)
{
    std::vector<std::string> ids;
    for (int i = 0; i < m; ++i) ids.push_back("e" + std::to_string(i));
    return pf::Poset::from_covers(ids, {});
}

// Random partial order: i < j (i < j as integers) with probability prob,
// transitively closed.
inline pf::Poset random_poset(int m, double prob, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(prob);
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) rel[i][j] = coin(rng);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    std::vector<std::string> ids;
    for (int i = 0; i < m; ++i) ids.push_back("p" + std::to_string(i));
    return pf::Poset::from_relation(ids, [&](pf::Elem a, pf::Elem b) { return a == b || rel[a][b]; });
}

// All subsets closed downward, by brute force over bit masks.
inline std::size_t count_ideals_brute(const pf::Poset& p)
{
    std::size_t count = 0;
    const std::size_t n = p.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (pf::Elem a = 0; a < n && ok; ++a)
            if (mask >> a & 1)
                for (pf::Elem b = 0; b < n; ++b)
                    if (p.leq(b, a) && !(mask >> b & 1)) ok = false;
        count += ok;
    }
    return count;
}

}  // namespace testing_helpers
