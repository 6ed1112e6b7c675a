#include "ternary/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace ternary {
namespace {

constexpr double kRowHeight = 0.86602540378443864676; // sqrt(3) / 2

std::string escape_attribute(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

// Maps cube coordinates to the page. d1 = (1,0,-1) points right and
// d2 = (0,1,-1) points up-right at 60 degrees.
class Projection {
public:
    Projection(const Hexagon& frame, double spacing) : spacing_(spacing)
    {
        min_x_ = min_y_ = 1e300;
        max_x_ = max_y_ = -1e300;
        for (const auto& p : frame.vertices()) {
            const auto [x, y] = raw(p);
            min_x_ = std::min(min_x_, x);
            max_x_ = std::max(max_x_, x);
            min_y_ = std::min(min_y_, y);
            max_y_ = std::max(max_y_, y);
        }
    }

    double width() const { return (max_x_ - min_x_) * spacing_ + 2 * kPad; }
    double height() const { return (max_y_ - min_y_) * spacing_ + 2 * kPad; }

    std::pair<double, double> operator()(const LatticePoint& p) const
    {
        const auto [x, y] = raw(p);
        return {(x - min_x_) * spacing_ + kPad, (max_y_ - y) * spacing_ + kPad};
    }

private:
    static constexpr double kPad = 12.0;

    static std::pair<double, double> raw(const LatticePoint& p)
    {
        return {static_cast<double>(p.u) + 0.5 * static_cast<double>(p.v), kRowHeight * static_cast<double>(p.v)};
    }

    double spacing_;
    double min_x_, max_x_, min_y_, max_y_;
};

void grid_line(std::ostream& os, const Projection& proj, LatticePoint a, LatticePoint b)
{
    const auto [x1, y1] = proj(a);
    const auto [x2, y2] = proj(b);
    os << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
}

} // namespace

SvgDocument render_svg(const Hexagon& h, const SvgStyle& style)
{
    for (Natural side : h.sides()) {
        if (side > kMaxRenderSide)
            throw LimitError("hexagon sides above " + std::to_string(kMaxRenderSide) + " are not rendered");
    }
    if (style.margin < 0)
        throw DomainError("svg margin must be non-negative");

    const std::int64_t m = style.margin;
    const Slab pu{h.u().lo - m, h.u().hi + m};
    const Slab pv{h.v().lo - m, h.v().hi + m};
    const Slab pw{h.w().lo - m, h.w().hi + m};
    const Hexagon frame = Hexagon::from_slabs(pu, pv, pw);
    const Projection proj(frame, style.spacing);

    SvgDocument doc;
    doc.width = proj.width();
    doc.height = proj.height();

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << doc.width << "\" height=\""
       << doc.height << "\" viewBox=\"0 0 " << doc.width << ' ' << doc.height << "\">\n";
    os << "  <title>lattice hexagon " << h.sides()[0] << ' ' << h.sides()[1] << ' ' << h.sides()[2] << "</title>\n";

    const auto corners = h.vertices();
    if (corners.size() >= 3) {
        os << "  <polygon class=\"region\" fill=\"" << escape_attribute(style.region_fill) << "\" points=\"";
        for (std::size_t i = 0; i < corners.size(); ++i) {
            const auto [x, y] = proj(corners[i]);
            os << (i ? " " : "") << x << ',' << y;
        }
        os << "\"/>\n";
    }

    os << "  <g class=\"grid\" stroke=\"" << escape_attribute(style.grid_stroke) << "\" stroke-width=\"1\">\n";
    const Slab& fu = frame.u();
    const Slab& fv = frame.v();
    const Slab& fw = frame.w();
    for (std::int64_t u = fu.lo; u <= fu.hi; ++u) {
        const std::int64_t lo = std::max(fv.lo, -u - fw.hi), hi = std::min(fv.hi, -u - fw.lo);
        if (lo < hi)
            grid_line(os, proj, {u, lo, -u - lo}, {u, hi, -u - hi});
    }
    for (std::int64_t v = fv.lo; v <= fv.hi; ++v) {
        const std::int64_t lo = std::max(fu.lo, -v - fw.hi), hi = std::min(fu.hi, -v - fw.lo);
        if (lo < hi)
            grid_line(os, proj, {lo, v, -lo - v}, {hi, v, -hi - v});
    }
    for (std::int64_t w = fw.lo; w <= fw.hi; ++w) {
        const std::int64_t lo = std::max(fu.lo, -w - fv.hi), hi = std::min(fu.hi, -w - fv.lo);
        if (lo < hi)
            grid_line(os, proj, {lo, -lo - w, w}, {hi, -hi - w, w});
    }
    os << "  </g>\n";

    std::ostringstream inside;
    inside << std::fixed << std::setprecision(2);
    os << "  <g fill=\"" << escape_attribute(style.lattice_fill) << "\">\n";
    for (const auto& p : lattice_points(frame)) {
        const auto [x, y] = proj(p);
        std::ostream& target = h.contains(p) ? inside : os;
        const char* cls = h.contains(p) ? "point" : "lattice";
        const double r = h.contains(p) ? style.point_radius : style.lattice_radius;
        target << "    <circle class=\"" << cls << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\"/>\n";
    }
    os << "  </g>\n";
    os << "  <g fill=\"" << escape_attribute(style.point_fill) << "\">\n" << inside.str() << "  </g>\n";
    os << "</svg>\n";

    doc.text = os.str();
    return doc;
}

} // namespace ternary
