#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "ternary/checked.hpp"

namespace ternary {

/// Argument of the ternary product, always held in non-decreasing order.
///
/// The product is fully commutative, so only the sorted form is stored;
/// equality, ordering and hashing all act on it. Components are >= 1.
class Triple {
public:
    /// Sorts the arguments. Throws DomainError if any of them is zero.
    static Triple canonicalize(Natural x, Natural y, Natural z);

    Natural x() const noexcept { return x_; }
    Natural y() const noexcept { return y_; }
    Natural z() const noexcept { return z_; }

    std::string to_string() const;

    friend auto operator<=>(const Triple&, const Triple&) = default;

private:
    Triple(Natural x, Natural y, Natural z) noexcept : x_(x), y_(y), z_(z) {}

    Natural x_;
    Natural y_;
    Natural z_;
};

inline Triple canonicalize(Natural x, Natural y, Natural z) { return Triple::canonicalize(x, y, z); }

/// k(k+1)/2, exact.
Natural triangular(Natural k);

// Three algebraically equal closed forms for the discrete volume of the
// (x, y, z) lattice hexagon. Each throws OverflowError instead of wrapping.

/// xy + yz + zx - x - y - z + 1
Natural product_symmetric(const Triple& t);
/// xy + (z-1)(x+y-1): the x-by-y parallelogram plus z-1 strips of x+y-1 points.
Natural product_strip(const Triple& t);
/// xyz - (x-1)(y-1)(z-1)
Natural product_inclusion(const Triple& t);

/// The ternary product. Uses the strip form, whose intermediates never
/// exceed the result, so it overflows only when the result itself does.
Natural product(const Triple& t);

inline Natural product(Natural x, Natural y, Natural z) { return product(canonicalize(x, y, z)); }

} // namespace ternary

template <>
struct std::hash<ternary::Triple> {
    std::size_t operator()(const ternary::Triple& t) const noexcept
    {
        std::size_t h = std::hash<ternary::Natural>{}(t.x());
        h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<ternary::Natural>{}(t.y());
        h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<ternary::Natural>{}(t.z());
        return h;
    }
};
