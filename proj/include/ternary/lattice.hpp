#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ternary/core.hpp"

namespace ternary {

/// Point of the triangular lattice in cube coordinates (u + v + w = 0).
struct LatticePoint {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t w = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Closed interval of one cube coordinate.
struct Slab {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t c) const noexcept { return lo <= c && c <= hi; }
};

/// Equiangular lattice hexagon as an intersection of three coordinate slabs.
///
/// Side pair a runs along (1,-1,0) and keeps w fixed, pair b runs along
/// (1,0,-1) and keeps v fixed, pair c runs along (0,1,-1) and keeps u fixed.
/// A pair with count 1 collapses, giving a parallelogram, segment or point;
/// those are the same type with no special casing.
class Hexagon {
public:
    /// Walks the boundary from the origin with step lengths
    /// (a-1, b-1, c-1, a-1, b-1, c-1). Any order of counts is accepted.
    static Hexagon from_sides(Natural a, Natural b, Natural c);

    /// Hexagon for a region given directly by its slabs; side counts are
    /// recovered from the tightened bounds. Throws DomainError if the region
    /// is empty or its opposite sides differ in length.
    static Hexagon from_slabs(Slab u, Slab v, Slab w);

    /// Point counts along the three opposite-side pairs (a, b, c).
    const std::array<Natural, 3>& sides() const noexcept { return sides_; }

    const Slab& u() const noexcept { return u_; }
    const Slab& v() const noexcept { return v_; }
    const Slab& w() const noexcept { return w_; }

    bool contains(const LatticePoint& p) const noexcept
    {
        return p.u + p.v + p.w == 0 && u_.contains(p.u) && v_.contains(p.v) && w_.contains(p.w);
    }

    /// Corner points in boundary order, duplicates removed (fewer than six
    /// when sides collapse).
    std::vector<LatticePoint> vertices() const;

private:
    Hexagon(std::array<Natural, 3> sides, Slab u, Slab v, Slab w) : sides_(sides), u_(u), v_(v), w_(w) {}

    std::array<Natural, 3> sides_;
    Slab u_;
    Slab v_;
    Slab w_;
};

Hexagon hexagon_from_triple(const Triple& t);

/// Largest number of (u, v) cells discrete_volume will scan.
inline constexpr std::uint64_t kMaxEnumerationCells = 4'000'000'000ULL;

/// Counts lattice points of the region by scanning its u/v bounding box and
/// testing w. Uses no closed-form product. Throws LimitError past
/// kMaxEnumerationCells.
Natural discrete_volume(const Hexagon& h);

/// Every lattice point of the region, row by row (u outer, v inner).
std::vector<LatticePoint> lattice_points(const Hexagon& h);

struct Completion {
    Hexagon parallelogram;
    Natural added_points;
};

/// Extends the two sides adjacent to pair `pair_index` (1, 2 or 3) until
/// they meet, adjoining two corner triangles. The flattened pair's slab is
/// dropped, so the result is the parallelogram cut out by the other two.
/// Throws DomainError for an index outside 1..3.
Completion complete_to_parallelogram(const Hexagon& h, int pair_index);

} // namespace ternary
