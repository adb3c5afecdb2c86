#pragma once

#include <hypconst/rational.hpp>
#include <hypconst/siegel.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hypconst {

/// Exact minimum of 2*sum m_i^2 + sum b_i m_i over the ordered simplex
/// {m_1 >= ... >= m_g >= 0, sum m_i = 1}, for arbitrary non-negative b.
///
/// Active-set search: at an optimum the nonzero entries form consecutive
/// blocks of equal value followed by a zero tail. For each support size s and
/// each block pattern, the equality-constrained stationary point is solved in
/// closed form (v_j = (lambda - mean_j)/4 with lambda = (4 + sum b)/s) and
/// kept when feasible. The optimum's own pattern always appears, so the
/// feasible minimum is the exact minimum.
inline Rational ordered_simplex_qp(const CoefficientVector& b) {
    const size_t g = b.size();
    if (g == 0) throw std::invalid_argument("ordered_simplex_qp: empty coefficient vector");
    for (long x : b)
        if (x < 0) throw std::invalid_argument("ordered_simplex_qp: coefficients must be >= 0");

    bool have_best = false;
    Rational best;
    for (size_t s = 1; s <= g; ++s) {
        Rational sum_b(0);
        for (size_t i = 0; i < s; ++i) sum_b += Rational(b[i]);
        const Rational lambda = (Rational(4) + sum_b) / Rational(static_cast<long>(s));

        const size_t patterns = s >= 2 ? (size_t(1) << (s - 1)) : 1;
        for (size_t mask = 0; mask < patterns; ++mask) {
            // Bit i set = block boundary between positions i and i+1.
            Rational prev_v;
            Rational objective(0);
            bool feasible = true, first_block = true;
            size_t start = 0;
            for (size_t i = 0; i < s && feasible; ++i) {
                const bool boundary = (i + 1 == s) || ((mask >> i) & 1);
                if (!boundary) continue;
                const size_t len = i + 1 - start;
                Rational block_sum(0);
                for (size_t j = start; j <= i; ++j) block_sum += Rational(b[j]);
                const Rational mean = block_sum / Rational(static_cast<long>(len));
                const Rational v = (lambda - mean) / Rational(4);
                if (v.sign() < 0 || (!first_block && v > prev_v)) {
                    feasible = false;
                    break;
                }
                objective += Rational(2 * static_cast<long>(len)) * v * v + block_sum * v;
                prev_v = v;
                first_block = false;
                start = i + 1;
            }
            if (!feasible) continue;
            if (!have_best || objective < best) {
                best = objective;
                have_best = true;
            }
        }
    }
    return best;
}

namespace detail {

/// Minimum of a linear form sum c_i m_i over the ordered simplex: the
/// vertices are the uniform prefixes (1/s, ..., 1/s, 0, ..., 0).
inline Rational min_linear_ordered_simplex(const CoefficientVector& c) {
    Rational best;
    Integer prefix = 0;
    for (size_t s = 1; s <= c.size(); ++s) {
        prefix += Integer(c[s - 1]);
        const Rational v(prefix, Integer(static_cast<long>(s)));
        if (s == 1 || v < best) best = v;
    }
    return best;
}

template <class Fn>
void for_each_subset(size_t universe, size_t size, Fn&& fn) {
    std::vector<size_t> idx(size);
    if (size == 0) {
        fn(idx);
        return;
    }
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        // next combination in lexicographic order
        size_t i = size;
        while (i > 0) {
            --i;
            if (idx[i] != i + universe - size) break;
            if (i == 0) return;
        }
        if (idx[i] == i + universe - size) return;
        ++idx[i];
        for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Unpruned evaluation of D_p: every subset of the upper triangle of size
/// p-1 with at most g-1 diagonal elements is scored straight from the
/// two-branch curvature function, with the ordered-simplex QP doing the inner
/// minimization. Deliberately independent of the shape enumeration and of the
/// sorted-only closed form it validates.
inline Rational brute_force_D(int g, int p) {
    if (g < 2 || g > 6) throw std::invalid_argument("brute_force_D: g out of supported range [2, 6]");
    check_siegel_args(g, p);

    // Upper triangle, diagonal entries first so the diagonal count of a
    // subset is cheap to track.
    std::vector<std::pair<int, int>> tri;
    for (int i = 1; i <= g; ++i)
        for (int j = i; j <= g; ++j) tri.push_back({i, j});

    const size_t universe = tri.size();
    const size_t size = static_cast<size_t>(p - 1);
    bool have_best = false;
    Rational best;

    detail::for_each_subset(universe, size, [&](const std::vector<size_t>& idx) {
        int diag = 0;
        for (size_t t : idx)
            if (tri[t].first == tri[t].second) ++diag;
        if (diag > g - 1) return;

        Rational value;
        if (diag == g - 1) {
            CoefficientVector c_off(static_cast<size_t>(g), 0);
            for (size_t t : idx) {
                const auto [i, j] = tri[t];
                if (i != j) {
                    ++c_off[static_cast<size_t>(i - 1)];
                    ++c_off[static_cast<size_t>(j - 1)];
                }
            }
            value = Rational(2) + detail::min_linear_ordered_simplex(c_off);
        } else {
            CoefficientVector c(static_cast<size_t>(g), 0);
            for (size_t t : idx) {
                const auto [i, j] = tri[t];
                c[static_cast<size_t>(i - 1)] += (i == j) ? 2 : 1;
                if (i != j) c[static_cast<size_t>(j - 1)] += 1;
            }
            value = ordered_simplex_qp(c);
        }
        if (!have_best || value < best) {
            best = value;
            have_best = true;
        }
    });
    if (size == 0 && !have_best) {
        // p = 1: the empty subset only
        CoefficientVector zero(static_cast<size_t>(g), 0);
        best = ordered_simplex_qp(zero);
    }
    return best;
}

/// Floating-point evaluation of D_p straight from the curvature definition:
/// for each grid point on the ordered simplex, assemble the eigenvalues of
/// the bisectional form, compress the diagonal block onto the hyperplane
/// orthogonal to X, and sum the p-1 smallest eigenvalues. Validates the
/// combinatorial reduction structurally, to grid accuracy.
inline double numeric_D(int g, int p, int grid_steps) {
    if (g < 2 || g > 4) throw std::invalid_argument("numeric_D: g out of supported range [2, 4]");
    check_siegel_args(g, p);
    if (grid_steps < 10) throw std::invalid_argument("numeric_D: grid too coarse");

    double best = std::numeric_limits<double>::infinity();

    std::vector<int> parts(static_cast<size_t>(g), 0);
    std::function<void(int, int, int)> recurse = [&](int pos, int remaining, int cap) {
        if (pos == g) {
            if (remaining != 0) return;
            Eigen::VectorXd m(g);
            for (int i = 0; i < g; ++i) m(i) = double(parts[static_cast<size_t>(i)]) / grid_steps;

            double base = 0.0;
            for (int i = 0; i < g; ++i) base += 2.0 * m(i) * m(i);

            // Orthonormal complement of X = sum sqrt(m_i) E_ii inside the
            // diagonal block, then conjugate diag(2 m_i) onto it.
            Eigen::VectorXd x(g);
            for (int i = 0; i < g; ++i) x(i) = std::sqrt(m(i));
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
            Eigen::MatrixXd q = qr.householderQ();
            Eigen::MatrixXd comp = q.rightCols(g - 1);
            Eigen::MatrixXd compressed = comp.transpose() * (2.0 * m).asDiagonal() * comp;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(compressed);

            std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + g - 1);
            for (int i = 0; i < g; ++i)
                for (int j = i + 1; j < g; ++j) eigs.push_back(m(i) + m(j));
            std::sort(eigs.begin(), eigs.end());

            double total = base;
            for (int t = 0; t < p - 1; ++t) total += eigs[static_cast<size_t>(t)];
            best = std::min(best, total);
            return;
        }
        for (int v = std::min(cap, remaining); v >= 0; --v) {
            parts[static_cast<size_t>(pos)] = v;
            recurse(pos + 1, remaining - v, v);
        }
    };
    recurse(0, grid_steps, grid_steps);
    return best;
}

}  // namespace hypconst
