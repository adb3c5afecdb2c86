#pragma once

#include <hypconst/rational.hpp>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace hypconst {

/// Raised when the configured maximum working precision cannot deliver the
/// requested certification.
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an interval straddles an integer, so no strict integer bound
/// can be certified without refinement.
struct uncertifiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Target width 2^(-bits) for interval enclosures of irrational quantities.
struct Precision {
    static constexpr int kMinBits = 8;
    static constexpr int kMaxBits = 4096;

    int bits;

    explicit Precision(int b) : bits(b) {
        if (b < kMinBits || b > kMaxBits)
            throw std::invalid_argument("Precision: bits out of [8, 4096]");
    }

    Rational width_bound() const { return Rational(Integer(1), pow2(static_cast<unsigned long>(bits))); }
};

/// Closed interval [lo, hi] with exact rational endpoints. All arithmetic is
/// exact on the endpoints, so enclosures are preserved without any
/// floating-point rounding step.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
    }
    /// Point interval.
    explicit Interval(const Rational& x) : lo_(x), hi_(x) {}

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    /// True iff every member of *this is < every member of o.
    bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }
    bool certainly_less(const Rational& x) const { return hi_ < x; }
    bool certainly_greater(const Rational& x) const { return lo_ > x; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

    friend Interval operator*(const Interval& a, const Interval& b) {
        const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
        const Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
            throw std::domain_error("Interval: division by interval containing zero");
        return a * b.inverse();
    }

    friend Interval operator+(const Interval& a, const Rational& x) { return a + Interval(x); }
    friend Interval operator*(const Interval& a, const Rational& x) { return a * Interval(x); }
    friend Interval operator*(const Rational& x, const Interval& a) { return a * Interval(x); }
    friend Interval operator/(const Interval& a, const Rational& x) { return a / Interval(x); }
    friend Interval operator/(const Rational& x, const Interval& a) { return Interval(x) / a; }

    Interval inverse() const {
        if (lo_.sign() <= 0 && hi_.sign() >= 0)
            throw std::domain_error("Interval: inverse of interval containing zero");
        return Interval(hi_.inverse(), lo_.inverse());
    }

    /// e-th power; requires lo >= 0 (the only case the library needs).
    Interval pow(unsigned long e) const {
        if (e == 0) return Interval(Rational(1));
        if (lo_.sign() < 0) throw std::domain_error("Interval: pow of interval below zero");
        return Interval(lo_.pow(e), hi_.pow(e));
    }

    /// Tightest interval containing both operands.
    friend Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    /// Text form "[lo,hi]" with rational endpoints.
    std::string str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

private:
    Rational lo_, hi_;
};

/// Least integer strictly greater than x. For an exact integer m this is m+1.
inline Integer smallest_integer_above(const Rational& x) {
    return x.floor() + 1;
}

/// Least integer strictly greater than every point of the interval, certified.
/// Throws `uncertifiable` when the interval straddles an integer; the caller
/// is expected to refine the enclosure and retry.
inline Integer smallest_integer_above(const Interval& x) {
    if (x.is_point()) return smallest_integer_above(x.lo());
    const Integer f = x.lo().floor();
    if (x.hi().floor() != f)
        throw uncertifiable("smallest_integer_above: interval " + x.str() + " straddles an integer");
    return f + 1;
}

template <class Stream>
Stream& operator<<(Stream& os, const Interval& iv) {
    os << iv.str();
    return os;
}

}  // namespace hypconst
