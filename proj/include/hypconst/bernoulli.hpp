#pragma once

#include <hypconst/rational.hpp>

#include <mutex>
#include <vector>

namespace hypconst {

/// Bernoulli number B_n in the convention B_1 = -1/2, from the defining
/// recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0. Values are cached; the cache is
/// guarded by a mutex so concurrent callers are safe.
inline Rational bernoulli(unsigned long n) {
    static std::vector<Rational> cache{Rational(1)};  // B_0 = 1
    static std::mutex mtx;

    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        const unsigned long m = cache.size();
        // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
        Rational acc(0);
        for (unsigned long k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(Integer(m + 1)));
    }
    return cache[n];
}

}  // namespace hypconst
