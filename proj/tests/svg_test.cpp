#include <string>

#include <gtest/gtest.h>

#include "ternary/svg.hpp"

using namespace ternary;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::size_t point_markers(const SvgDocument& doc) { return count_occurrences(doc.text, "class=\"point\""); }

// Tag balance is enough to catch broken emission; attribute values are escaped.
bool tags_balanced(const std::string& text)
{
    return count_occurrences(text, "<svg ") == 1 && count_occurrences(text, "</svg>") == 1
           && count_occurrences(text, "<g ") == count_occurrences(text, "</g>");
}

} // namespace

TEST(Svg, KnownPointCounts)
{
    EXPECT_EQ(point_markers(render_svg(Hexagon::from_sides(2, 3, 4))), 18u);
    EXPECT_EQ(point_markers(render_svg(Hexagon::from_sides(1, 1, 1))), 1u);
    EXPECT_EQ(point_markers(render_svg(Hexagon::from_sides(2, 2, 2))), 7u);
}

TEST(Svg, DocumentShape)
{
    const SvgDocument doc = render_svg(Hexagon::from_sides(3, 3, 3));
    EXPECT_EQ(doc.text.rfind("<?xml", 0), 0u);
    EXPECT_NE(doc.text.find("xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    EXPECT_NE(doc.text.find("<polygon class=\"region\""), std::string::npos);
    EXPECT_GT(count_occurrences(doc.text, "<line "), 0u);
    EXPECT_GT(doc.width, 0.0);
    EXPECT_GT(doc.height, 0.0);
    EXPECT_TRUE(tags_balanced(doc.text));
}

TEST(Svg, EscapesStyleStrings)
{
    SvgStyle style;
    style.point_fill = "a\"<b>&";
    const SvgDocument doc = render_svg(Hexagon::from_sides(2, 2, 2), style);
    EXPECT_NE(doc.text.find("a&quot;&lt;b&gt;&amp;"), std::string::npos);
    EXPECT_EQ(doc.text.find("a\"<b>"), std::string::npos);
}

TEST(Svg, SizeLimit)
{
    EXPECT_NO_THROW(render_svg(Hexagon::from_sides(100, 1, 1)));
    EXPECT_THROW(render_svg(Hexagon::from_sides(101, 1, 1)), LimitError);
    SvgStyle style;
    style.margin = -1;
    EXPECT_THROW(render_svg(Hexagon::from_sides(2, 2, 2), style), DomainError);
}

TEST(SvgProperty, MarkersMatchDiscreteVolume)
{
    for (Natural a = 1; a <= 8; ++a)
        for (Natural b = 1; b <= 8; ++b)
            for (Natural c = 1; c <= 8; ++c) {
                const Hexagon h = Hexagon::from_sides(a, b, c);
                const SvgDocument doc = render_svg(h);
                ASSERT_EQ(point_markers(doc), discrete_volume(h));
                ASSERT_TRUE(tags_balanced(doc.text));
            }
}
