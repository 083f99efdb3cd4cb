#pragma once

// Shared vocabulary: error types, the certified interval, and the two
// validated scalars (dimension, maximal dilatation) used across the library.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcb {

/// Argument outside the mathematical domain of a function.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The function diverges at the requested argument (e.g. K(r) at r = 1).
class divergence_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A theorem is requested outside the parameter range it is stated for.
class validity_range_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// The bound expression has no real value for the given parameters.
class bound_undefined_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// The operation is not defined for this kind of domain.
class unsupported_operation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr double pi = std::numbers::pi;
inline constexpr double inf = std::numeric_limits<double>::infinity();

namespace detail {

inline void require(bool ok, const char* what)
{
    if (!ok) throw domain_error(what);
}

inline bool finite(double v) { return std::isfinite(v); }

} // namespace detail

/// Space dimension n >= 2.
class Dimension {
public:
    // NOLINTNEXTLINE(google-explicit-constructor)
    Dimension(int n) : n_(n)
    {
        if (n < 2) throw domain_error("dimension must be at least 2, got " + std::to_string(n));
    }

    [[nodiscard]] int value() const noexcept { return n_; }
    // NOLINTNEXTLINE(google-explicit-constructor)
    operator int() const noexcept { return n_; }

private:
    int n_;
};

/// Maximal dilatation K > 0. Theorem bounds additionally require K >= 1,
/// checked where they are stated.
class Dilatation {
public:
    // NOLINTNEXTLINE(google-explicit-constructor)
    Dilatation(double k) : k_(k)
    {
        if (!(k > 0.0) || !std::isfinite(k))
            throw domain_error("dilatation must be a finite positive number");
    }

    [[nodiscard]] double value() const noexcept { return k_; }
    // NOLINTNEXTLINE(google-explicit-constructor)
    operator double() const noexcept { return k_; }

    /// alpha = K^{1/(1-n)}, the Hoelder exponent attached to K in dimension n.
    [[nodiscard]] double alpha(Dimension n) const { return std::pow(k_, 1.0 / (1.0 - n.value())); }
    /// beta = 1/alpha = K^{1/(n-1)}.
    [[nodiscard]] double beta(Dimension n) const { return std::pow(k_, 1.0 / (n.value() - 1.0)); }

private:
    double k_;
};

inline void require_at_least_one(Dilatation k, const char* what)
{
    if (k.value() < 1.0) throw domain_error(std::string(what) + ": requires K >= 1");
}

/// Closed interval [lo, hi] bracketing a quantity that is only known through
/// bounds. Degenerate (lo == hi) when the value is exact.
struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr RealInterval() = default;
    constexpr explicit RealInterval(double v) : lo(v), hi(v) {}
    RealInterval(double l, double h) : lo(l), hi(h)
    {
        if (std::isnan(l) || std::isnan(h) || l > h)
            throw domain_error("interval endpoints out of order");
    }

    [[nodiscard]] bool degenerate() const noexcept { return lo == hi; }
    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] double mid() const noexcept { return lo + (hi - lo) / 2; }
    [[nodiscard]] bool contains(double v, double tol = 0.0) const noexcept
    {
        return v >= lo - tol && v <= hi + tol;
    }

    /// Image under a nondecreasing map.
    template <class F>
    [[nodiscard]] RealInterval map_increasing(F&& f) const
    {
        return {f(lo), f(hi)};
    }

    /// Image under a nonincreasing map.
    template <class F>
    [[nodiscard]] RealInterval map_decreasing(F&& f) const
    {
        return {f(hi), f(lo)};
    }

    friend RealInterval operator*(double c, const RealInterval& x)
    {
        return c >= 0 ? RealInterval{c * x.lo, c * x.hi} : RealInterval{c * x.hi, c * x.lo};
    }

    friend bool operator==(const RealInterval&, const RealInterval&) = default;

    friend std::ostream& operator<<(std::ostream& os, const RealInterval& x)
    {
        return os << '[' << x.lo << ", " << x.hi << ']';
    }
};

} // namespace qcb
