#include "incidence/generators.hpp"

#include <array>
#include <stdexcept>

namespace incidence {

namespace {

using Pair = std::array<int, 2>;
using Matching = std::array<Pair, 3>;

void enumerate_matchings(std::array<bool, 6>& used, std::vector<Pair>& acc,
                         std::vector<Matching>& out) {
    int lo = -1;
    for (int i = 0; i < 6; ++i)
        if (!used[i]) { lo = i; break; }
    if (lo < 0) {
        out.push_back({acc[0], acc[1], acc[2]});
        return;
    }
    used[lo] = true;
    for (int j = lo + 1; j < 6; ++j) {
        if (used[j]) continue;
        used[j] = true;
        acc.push_back({lo, j});
        enumerate_matchings(used, acc, out);
        acc.pop_back();
        used[j] = false;
    }
    used[lo] = false;
}

} // namespace

IncidenceStructure gen_doily() {
    std::vector<Pair> points;   // 2-subsets of {0..5}, lexicographic
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) points.push_back({a, b});

    std::vector<Matching> matchings;   // the 15 perfect matchings of K6
    std::array<bool, 6> used{};
    std::vector<Pair> acc;
    enumerate_matchings(used, acc, matchings);

    IncidenceStructure d(points.size(), matchings.size());
    for (std::size_t x = 0; x < points.size(); ++x)
        for (std::size_t y = 0; y < matchings.size(); ++y)
            for (const Pair& e : matchings[y])
                if (e == points[x]) d.flags(x, y) = 1;
    return d;
}

IncidenceStructure gen_grid(std::size_t n) {
    if (n < 2) throw std::invalid_argument("gen_grid: n must be at least 2");
    IncidenceStructure d(n * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d.flags(i * n + j, i) = 1;       // row block i
            d.flags(i * n + j, n + j) = 1;   // column block j
        }
    return d;
}

} // namespace incidence
