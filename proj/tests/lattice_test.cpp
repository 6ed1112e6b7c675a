#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "ternary/lattice.hpp"

using namespace ternary;

namespace {

std::array<Natural, 3> sorted(std::array<Natural, 3> s)
{
    std::sort(s.begin(), s.end());
    return s;
}

std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> point_set(const std::vector<LatticePoint>& pts)
{
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (const auto& p : pts)
        out.insert({p.u, p.v, p.w});
    return out;
}

} // namespace

TEST(Hexagon, DegenerateShapes)
{
    const Hexagon point = hexagon_from_triple(canonicalize(1, 1, 1));
    EXPECT_EQ(discrete_volume(point), 1u);
    EXPECT_EQ(point.vertices().size(), 1u);

    const Hexagon row = Hexagon::from_sides(1, 1, 9);
    EXPECT_EQ(discrete_volume(row), 9u);
    EXPECT_EQ(row.vertices().size(), 2u);

    for (Natural m = 2; m <= 9; ++m) {
        for (Natural n = 2; n <= 9; ++n) {
            const Hexagon para = hexagon_from_triple(canonicalize(1, m, n));
            EXPECT_EQ(discrete_volume(para), m * n);
            EXPECT_EQ(para.vertices().size(), 4u);
        }
    }
}

TEST(Hexagon, KnownCounts)
{
    EXPECT_EQ(discrete_volume(Hexagon::from_sides(2, 3, 4)), 18u);
    EXPECT_EQ(discrete_volume(Hexagon::from_sides(4, 3, 2)), 18u);
    EXPECT_EQ(discrete_volume(Hexagon::from_sides(3, 3, 3)), 19u);
    EXPECT_EQ(discrete_volume(Hexagon::from_sides(2, 2, 2)), 7u);
    EXPECT_EQ(discrete_volume(Hexagon::from_sides(1, 2, 5)), 10u);
    EXPECT_EQ(Hexagon::from_sides(2, 3, 4).vertices().size(), 6u);
}

TEST(Hexagon, RejectsZeroAndHugeRegions)
{
    EXPECT_THROW(Hexagon::from_sides(0, 1, 1), DomainError);
    const Natural big = Natural{1} << 40;
    EXPECT_THROW(discrete_volume(Hexagon::from_sides(big, big, 1)), LimitError);
    EXPECT_THROW(Hexagon::from_sides(Natural{1} << 62, 1, 1), OverflowError);
}

TEST(Hexagon, FromSlabsRecoversSides)
{
    for (Natural a = 1; a <= 6; ++a)
        for (Natural b = 1; b <= 6; ++b)
            for (Natural c = 1; c <= 6; ++c) {
                const Hexagon h = Hexagon::from_sides(a, b, c);
                const Hexagon again = Hexagon::from_slabs(h.u(), h.v(), h.w());
                EXPECT_EQ(again.sides(), (std::array<Natural, 3>{a, b, c}));
            }
    EXPECT_THROW(Hexagon::from_slabs({5, 6}, {5, 6}, {5, 6}), DomainError);
    // Non-empty but lopsided: opposite sides of unequal length.
    EXPECT_THROW(Hexagon::from_slabs({0, 2}, {-2, 0}, {-1, 0}), DomainError);
}

TEST(HexagonProperty, OracleMatchesProductUpToTwelve)
{
    for (Natural a = 1; a <= 12; ++a)
        for (Natural b = 1; b <= 12; ++b)
            for (Natural c = 1; c <= 12; ++c)
                ASSERT_EQ(discrete_volume(Hexagon::from_sides(a, b, c)), product(a, b, c)) << a << b << c;
}

TEST(HexagonProperty, PointsLieInsideAndMatchVolume)
{
    for (Natural a = 1; a <= 7; ++a)
        for (Natural b = 1; b <= 7; ++b)
            for (Natural c = 1; c <= 7; ++c) {
                const Hexagon h = Hexagon::from_sides(a, b, c);
                const auto pts = lattice_points(h);
                ASSERT_EQ(pts.size(), discrete_volume(h));
                for (const auto& p : pts)
                    ASSERT_TRUE(h.contains(p));
                for (const auto& corner : h.vertices())
                    ASSERT_TRUE(h.contains(corner));
            }
}

TEST(HexagonProperty, ClosedUnderLatticeSymmetries)
{
    // Generators of the 12-element point group in cube coordinates.
    const std::function<LatticePoint(LatticePoint)> rotate = [](LatticePoint p) {
        return LatticePoint{-p.w, -p.u, -p.v};
    };
    const std::function<LatticePoint(LatticePoint)> reflect = [](LatticePoint p) {
        return LatticePoint{p.u, p.w, p.v};
    };

    for (Natural a = 1; a <= 6; ++a)
        for (Natural b = 1; b <= 6; ++b)
            for (Natural c = 1; c <= 6; ++c) {
                const Hexagon h = Hexagon::from_sides(a, b, c);
                auto pts = lattice_points(h);
                for (int g = 0; g < 12; ++g) {
                    const auto& op = g == 6 ? reflect : rotate;
                    for (auto& p : pts)
                        p = op(p);
                    Slab u{pts[0].u, pts[0].u}, v{pts[0].v, pts[0].v}, w{pts[0].w, pts[0].w};
                    for (const auto& p : pts) {
                        u = {std::min(u.lo, p.u), std::max(u.hi, p.u)};
                        v = {std::min(v.lo, p.v), std::max(v.hi, p.v)};
                        w = {std::min(w.lo, p.w), std::max(w.hi, p.w)};
                    }
                    const Hexagon image = Hexagon::from_slabs(u, v, w);
                    ASSERT_EQ(sorted(image.sides()), sorted(h.sides()));
                    ASSERT_EQ(point_set(lattice_points(image)), point_set(pts));
                }
            }
}

TEST(Completion, Examples)
{
    const auto c333 = complete_to_parallelogram(Hexagon::from_sides(3, 3, 3), 3);
    EXPECT_EQ(c333.added_points, 6u);
    EXPECT_EQ(sorted(c333.parallelogram.sides()), (std::array<Natural, 3>{1, 5, 5}));
    EXPECT_EQ(discrete_volume(c333.parallelogram), 25u);

    const auto c1mn = complete_to_parallelogram(Hexagon::from_sides(1, 4, 6), 1);
    EXPECT_EQ(c1mn.added_points, 0u);
    EXPECT_EQ(c1mn.parallelogram.sides(), (std::array<Natural, 3>{1, 4, 6}));

    const auto c226 = complete_to_parallelogram(Hexagon::from_sides(2, 2, 6), 1);
    EXPECT_EQ(c226.added_points, 2u);
    EXPECT_EQ(c226.parallelogram.sides(), (std::array<Natural, 3>{1, 3, 7}));
    EXPECT_EQ(discrete_volume(c226.parallelogram), 21u);

    EXPECT_THROW(complete_to_parallelogram(Hexagon::from_sides(2, 2, 2), 0), DomainError);
    EXPECT_THROW(complete_to_parallelogram(Hexagon::from_sides(2, 2, 2), 4), DomainError);
}

TEST(CompletionProperty, AddsTwoTriangles)
{
    for (Natural a = 1; a <= 12; ++a)
        for (Natural b = 1; b <= 12; ++b)
            for (Natural c = 1; c <= 12; ++c) {
                const Hexagon h = Hexagon::from_sides(a, b, c);
                const std::array<Natural, 3> s{a, b, c};
                for (int pair = 1; pair <= 3; ++pair) {
                    const Natural k = s[pair - 1];
                    const auto done = complete_to_parallelogram(h, pair);
                    ASSERT_EQ(done.added_points, 2 * triangular(k - 1));
                    ASSERT_EQ(discrete_volume(done.parallelogram), product(a, b, c) + 2 * triangular(k - 1));

                    std::array<Natural, 3> expected = s;
                    for (int i = 0; i < 3; ++i)
                        expected[i] = (i == pair - 1) ? 1 : s[i] + k - 1;
                    ASSERT_EQ(done.parallelogram.sides(), expected);
                    for (const auto& p : lattice_points(h))
                        ASSERT_TRUE(done.parallelogram.contains(p));
                }
            }
}
