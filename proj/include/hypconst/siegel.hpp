#pragma once

#include <hypconst/interval.hpp>
#include <hypconst/rational.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypconst {

/// Compressed description of a candidate subset of the upper triangle T in
/// the Siegel minimization: k diagonal elements (placed at the largest
/// indices) and rows[j] off-diagonal elements in row j+1 (packed right-most).
struct GammaShape {
    int k = 0;
    std::vector<int> rows;  // length g-1

    friend bool operator==(const GammaShape&, const GammaShape&) = default;
    friend auto operator<=>(const GammaShape&, const GammaShape&) = default;
};

/// Linear coefficients of a shape quadratic program: b[i] counts how often
/// index i+1 appears among the elements of the subset, diagonal counted twice.
using CoefficientVector = std::vector<long>;

struct SiegelConstant {
    int g = 0;
    int p = 0;
    Rational D;
    Rational C;  // D / (g+1)
    GammaShape witness;
};

inline long triangle_size(long g) { return g * (g + 1) / 2; }

inline void check_siegel_args(int g, int p) {
    if (g < 2) throw std::invalid_argument("siegel: g must be >= 2");
    if (p < 1 || p > triangle_size(g)) throw std::invalid_argument("siegel: p out of [1, g(g+1)/2]");
}

/// All candidate shapes for (g, p), generated by the incremental recursion:
/// the unique shape for p = 1 is (k=0, all rows empty); each step grows every
/// shape of level p-1 by one element wherever the packing rules allow.
/// Results are memoized per (g, p).
inline const std::set<GammaShape>& enumerate_shapes(int g, int p) {
    check_siegel_args(g, p);

    static std::map<std::pair<int, int>, std::shared_ptr<const std::set<GammaShape>>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    // Build levels 1..p bottom-up; each level is cached once.
    std::shared_ptr<const std::set<GammaShape>> prev;
    int start = p;
    for (; start >= 1; --start) {
        if (auto it = memo.find({g, start}); it != memo.end()) {
            prev = it->second;
            break;
        }
    }
    if (start < 1) {
        auto base = std::make_shared<std::set<GammaShape>>();
        base->insert(GammaShape{0, std::vector<int>(static_cast<size_t>(g - 1), 0)});
        memo[{g, 1}] = base;
        prev = base;
        start = 1;
    }

    for (int q = start + 1; q <= p; ++q) {
        auto next = std::make_shared<std::set<GammaShape>>();
        for (const GammaShape& s : *prev) {
            if (s.k < g - 1) next->insert(GammaShape{s.k + 1, s.rows});
            for (int i = 0; i + 2 <= g - 1; ++i) {
                // Row i+1 may grow while it stays within its capacity g-1-i and
                // remains packed against the next row.
                if (s.rows[i] < g - 1 - i && (s.rows[i] < s.rows[i + 1] || s.rows[i + 1] == g - i - 2)) {
                    GammaShape t = s;
                    ++t.rows[i];
                    next->insert(std::move(t));
                }
            }
            if (s.rows[static_cast<size_t>(g - 2)] == 0) {
                GammaShape t = s;
                t.rows[static_cast<size_t>(g - 2)] = 1;
                next->insert(std::move(t));
            }
        }
        memo[{g, q}] = next;
        prev = next;
    }
    return *prev;
}

/// Linear part of the quadratic form attached to a shape: row j contributes
/// rows[j] at position j and one unit at each of the rows[j] right-most
/// columns; each diagonal element contributes two units at its index.
inline CoefficientVector lin_part(int g, const GammaShape& shape) {
    CoefficientVector res(static_cast<size_t>(g), 0);
    for (int i = 0; i + 1 <= g - 1; ++i) {
        res[static_cast<size_t>(i)] += shape.rows[static_cast<size_t>(i)];
        for (int j = 0; j < shape.rows[static_cast<size_t>(i)]; ++j)
            res[static_cast<size_t>(g - j - 1)] += 1;
    }
    for (int i = 0; i < shape.k; ++i) res[static_cast<size_t>(g - i - 1)] += 2;
    return res;
}

struct MinQuadResult {
    Rational value;
    int t = 0;  // entries m_{t+1..g} vanish at the optimum
};

/// Exact minimum of 2*sum m_i^2 + sum b_i m_i over the ordered simplex
/// {m_1 >= ... >= m_g >= 0, sum m_i = 1}, for non-decreasing b. The active
/// length t is the largest prefix kept by the descending cutoff
/// sum_{i<=t}(b_t - b_i) < 4; the closed formula then gives the minimum.
inline MinQuadResult min_quadratic(const CoefficientVector& b) {
    if (b.empty()) throw std::invalid_argument("min_quadratic: empty coefficient vector");
    for (size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] > b[i + 1]) throw std::invalid_argument("min_quadratic: coefficients must be non-decreasing");

    size_t t = b.size();
    while (true) {
        long s = 0;
        for (size_t i = 0; i < t; ++i) s += b[t - 1] - b[i];
        if (s < 4 || t == 1) break;
        --t;
    }
    Integer s1 = 0, s2 = 0;
    for (size_t i = 0; i < t; ++i) {
        s1 += Integer(b[i]);
        s2 += Integer(b[i]) * Integer(b[i]);
    }
    const Rational value = Rational((s1 + 4) * (s1 + 4), Integer(8) * Integer(static_cast<long>(t))) - Rational(s2, Integer(8));
    return {value, static_cast<int>(t)};
}

/// D_p for the Siegel half-space H_g: minimum of the shape values over all
/// candidate shapes. A shape with the full k = g-1 diagonal contributes
/// 2 + rows[0] (its linear coefficients are non-decreasing, so the linear
/// minimum over the ordered simplex sits at m = (1,0,...,0)); every other
/// shape contributes the quadratic minimum of its linear part. Ties are
/// broken by the lexicographically smallest (k, rows).
inline SiegelConstant siegel_D(int g, int p) {
    check_siegel_args(g, p);
    const auto& shapes = enumerate_shapes(g, p);

    SiegelConstant best;
    best.g = g;
    best.p = p;
    bool first = true;
    for (const GammaShape& s : shapes) {  // std::set iterates in lex order
        Rational v = (s.k == g - 1) ? Rational(2 + s.rows[0]) : min_quadratic(lin_part(g, s)).value;
        if (first || v < best.D) {
            best.D = std::move(v);
            best.witness = s;
            first = false;
        }
    }
    best.C = best.D / Rational(static_cast<long>(g) + 1);
    return best;
}

/// Splits p into (k, r): k is the largest integer with k(k+1)/2 <= p-1, and
/// r = p - 1 - k(k+1)/2.
inline std::pair<long, long> siegel_kr(long p) {
    Integer disc = 8 * Integer(p - 1) + 1;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    long k = Integer((root - 1) / 2).get_si();
    while (triangle_size(k + 1) <= p - 1) ++k;  // guard against isqrt truncation
    while (k > 0 && triangle_size(k) > p - 1) --k;
    return {k, p - 1 - triangle_size(k)};
}

/// Closed-form C_p for H_g, read off the published (g-k, r) table.
inline Rational table_C(int g, int p) {
    check_siegel_args(g, p);
    const auto [k, r] = siegel_kr(p);
    const Rational over_g1 = Rational(1, static_cast<long>(g) + 1);
    if (g - k == 1) return Rational(r + 2) * over_g1;
    if (r == 0) return Rational(2, g - k) * over_g1;
    if (g - k == 2 && r == 1) return Rational(23, 16) * over_g1;
    if (g - k == 2 && r == 2) return Rational(7, 4) * over_g1;
    if (g - k == 2 && r == 3) return Rational(31, 16) * over_g1;
    if (g - k == 3 && r == 1) return Rational(11, 12) * over_g1;
    if (g - k == 4 && r == 1) return Rational(21, 32) * over_g1;
    return Rational(2, g - k - 1) * over_g1;
}

struct TableMismatch {
    int g = 0;
    int p = 0;
    Rational computed;  // from the combinatorial minimization
    Rational table;     // from the closed-form table
};

/// Cross-checks the combinatorial minimization against the closed-form table
/// for every 2 <= g <= g_max and every admissible p. A mismatch is reported,
/// not thrown: agreement is only established for g <= 8.
inline std::vector<TableMismatch> verify_table(int g_max) {
    if (g_max < 2) throw std::invalid_argument("verify_table: g_max must be >= 2");
    std::vector<TableMismatch> mismatches;
    for (int g = 2; g <= g_max; ++g) {
        for (int p = 1; p <= triangle_size(g); ++p) {
            const Rational computed = siegel_D(g, p).C;
            const Rational table = table_C(g, p);
            if (computed != table) mismatches.push_back({g, p, computed, table});
        }
    }
    return mismatches;
}

}  // namespace hypconst
