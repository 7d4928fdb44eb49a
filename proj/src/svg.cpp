#include "tubecat/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "tubecat/layout.hpp"

namespace tubecat {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

constexpr std::array<const char*, 5> kLevelColour = {"#4a6fa5", "#c0504d", "#6a9f58", "#8064a2", "#d08c2c"};

const char* colour(int level) { return kLevelColour[static_cast<std::size_t>(level) % kLevelColour.size()]; }

}  // namespace

std::string render_svg(const TubeMorphism& rho) {
    const Layout lay = layout(rho, 4);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(lay.width) + "\" height=\"" + num(lay.height) +
           "\" viewBox=\"0 0 " + num(lay.width) + " " + num(lay.height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(lay.width) + "\" height=\"" + num(lay.height) +
           "\" fill=\"white\"/>\n";

    // Outer tubes first so inner ones are painted over them.
    std::vector<std::size_t> order(lay.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lay.blocks[a].level < lay.blocks[b].level; });
    for (std::size_t bi : order) {
        const LayoutBlock& b = lay.blocks[bi];
        const double width = std::max(1.5, 8.0 - 2.5 * b.level);
        out += "<g class=\"block\" stroke=\"" + std::string(colour(b.level)) + "\" stroke-width=\"" + num(width) +
               "\" stroke-opacity=\"0.75\" fill=\"none\" stroke-linecap=\"round\">\n";
        for (std::size_t pi : b.points) {
            const LayoutPoint& p = lay.points[pi];
            const double ay = p.side == Side::Upper ? p.y + p.ry : p.y - p.ry;
            const double cy = (ay + b.hub_y) / 2;
            out += "<path d=\"M " + num(p.x) + " " + num(ay) + " C " + num(p.x) + " " + num(cy) + " " + num(b.hub_x) +
                   " " + num(cy) + " " + num(b.hub_x) + " " + num(b.hub_y) + "\"/>\n";
        }
        out += "<circle cx=\"" + num(b.hub_x) + "\" cy=\"" + num(b.hub_y) + "\" r=\"" + num(width / 2) +
               "\" fill=\"" + colour(b.level) + "\" stroke=\"none\"/>\n";
        out += "</g>\n";
    }
    for (const LayoutPoint& p : lay.points) {
        if (p.opening) {
            out += "<ellipse class=\"opening\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" rx=\"" + num(p.rx) +
                   "\" ry=\"" + num(p.ry) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
        } else {
            out += "<circle class=\"point\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(p.rx) +
                   "\" fill=\"black\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace tubecat
