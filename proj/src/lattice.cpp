#include "ternary/lattice.hpp"

#include <algorithm>
#include <limits>

namespace ternary {
namespace {

constexpr std::array<LatticePoint, 6> kDirections{{
    {1, -1, 0},
    {1, 0, -1},
    {0, 1, -1},
    {-1, 1, 0},
    {-1, 0, 1},
    {0, -1, 1},
}};

// Side lengths must stay well inside int64 so that coordinate sums of the
// walk and of the completion cannot overflow.
constexpr Natural kMaxSide = Natural{1} << 60;

std::int64_t step_length(Natural count)
{
    if (count == 0)
        throw DomainError("hexagon side counts must be >= 1");
    if (count > kMaxSide)
        throw OverflowError("hexagon side count too large for lattice coordinates");
    return static_cast<std::int64_t>(count - 1);
}

Natural width(const Slab& s) { return static_cast<Natural>(s.hi - s.lo); }

} // namespace

Hexagon Hexagon::from_sides(Natural a, Natural b, Natural c)
{
    const std::array<std::int64_t, 3> steps{step_length(a), step_length(b), step_length(c)};

    LatticePoint p{};
    Slab u{0, 0}, v{0, 0}, w{0, 0};
    for (std::size_t i = 0; i < kDirections.size(); ++i) {
        const std::int64_t len = steps[i % 3];
        p.u += kDirections[i].u * len;
        p.v += kDirections[i].v * len;
        p.w += kDirections[i].w * len;
        u = {std::min(u.lo, p.u), std::max(u.hi, p.u)};
        v = {std::min(v.lo, p.v), std::max(v.hi, p.v)};
        w = {std::min(w.lo, p.w), std::max(w.hi, p.w)};
    }
    return Hexagon({a, b, c}, u, v, w);
}

Hexagon Hexagon::from_slabs(Slab u, Slab v, Slab w)
{
    // Tighten each slab to what the other two allow, until stable.
    for (bool changed = true; changed;) {
        const Slab u0 = u, v0 = v, w0 = w;
        u = {std::max(u.lo, -(v.hi + w.hi)), std::min(u.hi, -(v.lo + w.lo))};
        v = {std::max(v.lo, -(u.hi + w.hi)), std::min(v.hi, -(u.lo + w.lo))};
        w = {std::max(w.lo, -(u.hi + v.hi)), std::min(w.hi, -(u.lo + v.lo))};
        if (u.lo > u.hi || v.lo > v.hi || w.lo > w.hi)
            throw DomainError("slab intersection contains no lattice points");
        changed = u.lo != u0.lo || u.hi != u0.hi || v.lo != v0.lo || v.hi != v0.hi || w.lo != w0.lo
                  || w.hi != w0.hi;
    }
    // Opposite sides are equal only for centrally symmetric regions.
    if ((u.lo + u.hi) + (v.lo + v.hi) + (w.lo + w.hi) != 0)
        throw DomainError("slab intersection is not a ternary-product hexagon");

    // Each width is the sum of the two step lengths not parallel to it.
    const Natural wu = width(u), wv = width(v), ww = width(w);
    const Natural a = (wu + wv - ww) / 2 + 1;
    const Natural b = (wu + ww - wv) / 2 + 1;
    const Natural c = (wv + ww - wu) / 2 + 1;
    return Hexagon({a, b, c}, u, v, w);
}

std::vector<LatticePoint> Hexagon::vertices() const
{
    // Boundary walk order; consecutive corners share one slab bound.
    const std::array<LatticePoint, 6> corners{{
        {u_.lo, -(u_.lo + w_.hi), w_.hi},
        {-(v_.lo + w_.hi), v_.lo, w_.hi},
        {u_.hi, v_.lo, -(u_.hi + v_.lo)},
        {u_.hi, -(u_.hi + w_.lo), w_.lo},
        {-(v_.hi + w_.lo), v_.hi, w_.lo},
        {u_.lo, v_.hi, -(u_.lo + v_.hi)},
    }};
    std::vector<LatticePoint> out;
    for (const auto& c : corners) {
        if (out.empty() || !(out.back() == c))
            out.push_back(c);
    }
    while (out.size() > 1 && out.front() == out.back())
        out.pop_back();
    return out;
}

Hexagon hexagon_from_triple(const Triple& t) { return Hexagon::from_sides(t.x(), t.y(), t.z()); }

Natural discrete_volume(const Hexagon& h)
{
    const Natural rows = width(h.u()) + 1;
    const Natural cols = width(h.v()) + 1;
    if (rows > kMaxEnumerationCells / cols)
        throw LimitError("hexagon too large for brute-force enumeration");

    Natural count = 0;
    for (std::int64_t u = h.u().lo; u <= h.u().hi; ++u) {
        for (std::int64_t v = h.v().lo; v <= h.v().hi; ++v) {
            if (h.w().contains(-u - v))
                ++count;
        }
    }
    return count;
}

std::vector<LatticePoint> lattice_points(const Hexagon& h)
{
    std::vector<LatticePoint> out;
    for (std::int64_t u = h.u().lo; u <= h.u().hi; ++u) {
        for (std::int64_t v = h.v().lo; v <= h.v().hi; ++v) {
            const std::int64_t w = -u - v;
            if (h.w().contains(w))
                out.push_back({u, v, w});
        }
    }
    return out;
}

Completion complete_to_parallelogram(const Hexagon& h, int pair_index)
{
    if (pair_index < 1 || pair_index > 3)
        throw DomainError("pair index must be 1, 2 or 3");

    Slab u = h.u(), v = h.v(), w = h.w();
    // Pair 1 lies on w-lines, pair 2 on v-lines, pair 3 on u-lines.
    // Dropping that slab leaves the parallelogram of the other two.
    constexpr std::int64_t kOpen = std::numeric_limits<std::int64_t>::max() / 4;
    switch (pair_index) {
    case 1: w = {-kOpen, kOpen}; break;
    case 2: v = {-kOpen, kOpen}; break;
    case 3: u = {-kOpen, kOpen}; break;
    }
    Hexagon para = Hexagon::from_slabs(u, v, w);
    const Natural added = discrete_volume(para) - discrete_volume(h);
    return {para, added};
}

} // namespace ternary
