#ifndef CATREP_TESTS_ORACLES_HPP
#define CATREP_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written along a different route than the
// production code (different elimination order, tuple enumeration instead of
// offset arithmetic, exhaustive scans instead of backtracking).

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "catrep/cyclotomic.hpp"
#include "catrep/groups.hpp"
#include "catrep/twovect.hpp"

namespace oracles {

using catrep::CycMatrix;
using catrep::CycNumber;
using catrep::Rational;

// Rank by a second, independent elimination order: denominators cleared
// row-wise first, then elimination sweeps columns right-to-left choosing the
// bottom-most unused nonzero row as pivot.
inline int rank_by_reverse_elimination(const CycMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<CycNumber>> w(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        long long den_lcm = 1;
        for (int j = 0; j < cols; ++j)
            for (const auto& c : m.at(i, j).coeffs()) den_lcm = std::lcm(den_lcm, c.den());
        CycNumber scale(Rational(den_lcm), m.conductor());
        w[size_t(i)].reserve(size_t(cols));
        for (int j = 0; j < cols; ++j) w[size_t(i)].push_back(m.at(i, j) * scale);
    }
    std::vector<bool> used(size_t(rows), false);
    int rank = 0;
    for (int c = cols - 1; c >= 0; --c) {
        int pivot = -1;
        for (int i = rows - 1; i >= 0; --i)
            if (!used[size_t(i)] && !w[size_t(i)][size_t(c)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        used[size_t(pivot)] = true;
        ++rank;
        for (int i = 0; i < rows; ++i) {
            if (i == pivot || w[size_t(i)][size_t(c)].is_zero()) continue;
            // cross-multiplication keeps the arithmetic division-free
            CycNumber a = w[size_t(pivot)][size_t(c)];
            CycNumber b = w[size_t(i)][size_t(c)];
            for (int j = 0; j < cols; ++j)
                w[size_t(i)][size_t(j)] = w[size_t(i)][size_t(j)] * a - w[size_t(pivot)][size_t(j)] * b;
        }
    }
    return rank;
}

inline CycNumber random_cyc(std::mt19937& rng, int conductor) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> coeffs(size_t(catrep::euler_phi(conductor)));
    for (auto& c : coeffs) c = Rational(num(rng), den(rng));
    return CycNumber::from_coeffs(conductor, std::move(coeffs));
}

inline CycMatrix random_cyc_matrix(std::mt19937& rng, int rows, int cols, int conductor) {
    CycMatrix m(rows, cols, conductor);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, random_cyc(rng, conductor));
    return m;
}

// Every homomorphism G -> H by scanning all |H|^|G| element maps.
inline std::vector<std::vector<int>> brute_force_homs(const catrep::FiniteGroup& g,
                                                      const catrep::FiniteGroup& h) {
    std::vector<std::vector<int>> result;
    std::vector<int> map(size_t(g.order), 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            for (int b = 0; b < g.order && ok; ++b)
                if (map[size_t(g.mul(a, b))] != h.mul(map[size_t(a)], map[size_t(b)])) ok = false;
        if (ok) result.push_back(map);
        int pos = g.order - 1;
        while (pos >= 0) {
            if (++map[size_t(pos)] < h.order) break;
            map[size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace oracles

#endif
