#include "tubecat/layout.hpp"

#include <algorithm>
#include <string>

#include "flat_tree.hpp"
#include "tubecat/error.hpp"

namespace tubecat {

namespace {

constexpr double kDot = 14;
constexpr double kEmpty = 24;
constexpr double kPad = 10;
constexpr double kGap = 12;
constexpr double kMargin = 30;
constexpr double kMinWidth = 120;
constexpr double kUnitHeight = 80;

double ellipse_ry(const TubeObject& t) { return 12 + 8 * t.height(); }

double vertex_width(const TubeObject& t) {
    if (t.is_unit()) return kDot;
    double w = 2 * kPad + kGap * (t.arity() - 1);
    for (const auto& c : t.children()) w += c.is_unit() && !t.is_leaf() ? kEmpty : vertex_width(c);
    return w;
}

double row_width(const TubeObject& t) {
    double w = kGap * std::max(0, t.arity() - 1);
    for (const auto& c : t.children()) w += c.is_unit() && !t.is_leaf() ? kEmpty : vertex_width(c);
    return w;
}

double row_ry(const TubeObject& t) {
    double r = 4;
    for (const auto& c : t.children()) {
        if (!(c.is_unit() && t.is_leaf())) r = std::max(r, ellipse_ry(c));
    }
    return r;
}

// Places the children of `parent` (flat-tree vertex `v`) from `left` along row y.
void place(const TubeObject& parent, const detail::FlatTree& tree, int v, double left, double y, Side side,
           int level, std::ptrdiff_t parent_point, std::vector<std::ptrdiff_t>& index_of, Layout& out) {
    double x = left;
    const auto& kids = tree.children[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < kids.size(); ++i) {
        const TubeObject& c = parent.children()[i];
        LayoutPoint p;
        p.side = side;
        p.level = level;
        p.y = y;
        p.parent = parent_point;
        double w;
        if (c.is_unit() && parent.is_leaf()) {
            w = kDot;
            p.rx = p.ry = 4;
        } else {
            w = c.is_unit() ? kEmpty : vertex_width(c);
            p.opening = true;
            p.rx = w / 2;
            p.ry = ellipse_ry(c);
        }
        p.x = x + w / 2;
        const auto id = static_cast<std::ptrdiff_t>(out.points.size());
        index_of[static_cast<std::size_t>(kids[i])] = id;
        out.points.push_back(p);
        if (!c.is_unit()) place(c, tree, kids[i], x + kPad, y, side, level + 1, id, index_of, out);
        x += w + kGap;
    }
}

struct BlockCtx {
    const detail::FlatTree* dom;
    const detail::FlatTree* cod;
    const std::vector<std::ptrdiff_t>* dom_index;
    const std::vector<std::ptrdiff_t>* cod_index;
    double top, bottom;
};

void add_blocks(const TubeMorphism& mor, const std::vector<int>& top, const std::vector<int>& bottom, int level,
                std::ptrdiff_t parent, const BlockCtx& ctx, Layout& out) {
    std::vector<int> uppers, lowers;
    for (int v : top) {
        for (int ch : ctx.dom->children[static_cast<std::size_t>(v)]) uppers.push_back(ch);
    }
    for (int v : bottom) {
        for (int ch : ctx.cod->children[static_cast<std::size_t>(v)]) lowers.push_back(ch);
    }
    const auto& p = mor.outer();
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        LayoutBlock blk;
        blk.level = level;
        blk.parent = parent;
        std::vector<int> sub_top, sub_bottom;
        bool has_upper = false, has_lower = false;
        for (int pos : p.upper_positions(b)) {
            const int vtx = uppers[static_cast<std::size_t>(pos - 1)];
            sub_top.push_back(vtx);
            blk.points.push_back(static_cast<std::size_t>((*ctx.dom_index)[static_cast<std::size_t>(vtx)]));
            has_upper = true;
        }
        for (int pos : p.lower_positions(b)) {
            const int vtx = lowers[static_cast<std::size_t>(pos - 1)];
            sub_bottom.push_back(vtx);
            blk.points.push_back(static_cast<std::size_t>((*ctx.cod_index)[static_cast<std::size_t>(vtx)]));
            has_lower = true;
        }
        double sx = 0;
        for (std::size_t i : blk.points) sx += out.points[i].x;
        blk.hub_x = sx / static_cast<double>(blk.points.size());
        const double mid = (ctx.top + ctx.bottom) / 2;
        if (has_upper && has_lower) blk.hub_y = mid;
        else if (has_upper) blk.hub_y = ctx.top + 0.55 * (mid - ctx.top);
        else blk.hub_y = ctx.bottom - 0.55 * (ctx.bottom - mid);
        const auto id = static_cast<std::ptrdiff_t>(out.blocks.size());
        out.blocks.push_back(std::move(blk));
        add_blocks(mor.inner()[b], sub_top, sub_bottom, level + 1, id, ctx, out);
    }
}

}  // namespace

Layout layout(const TubeMorphism& rho, int max_depth) {
    const int depth = std::max(rho.domain().depth(), rho.codomain().depth());
    if (depth > max_depth) {
        throw Error(ErrorKind::DepthExceeded, "nesting depth " + std::to_string(depth) + " exceeds drawable depth " +
                                                  std::to_string(max_depth));
    }
    Layout out;
    const TubeObject& dom = rho.domain();
    const TubeObject& cod = rho.codomain();
    if (dom.is_unit() && cod.is_unit()) {
        out.width = kMinWidth;
        out.height = kUnitHeight;
        return out;
    }
    const double top_w = row_width(dom), bot_w = row_width(cod);
    out.width = std::max(kMinWidth, std::max(top_w, bot_w) + 2 * kMargin);
    const double top_ry = row_ry(dom), bot_ry = row_ry(cod);
    const double middle = 100 + 30 * (depth - 1);
    const double top = kMargin + top_ry;
    const double bottom = top + top_ry + middle + bot_ry;
    out.height = bottom + bot_ry + kMargin;

    const detail::FlatTree dt(dom), ct(cod);
    std::vector<std::ptrdiff_t> dom_index(dt.node.size(), -1), cod_index(ct.node.size(), -1);
    place(dom, dt, 0, (out.width - top_w) / 2, top, Side::Upper, 0, -1, dom_index, out);
    place(cod, ct, 0, (out.width - bot_w) / 2, bottom, Side::Lower, 0, -1, cod_index, out);
    const BlockCtx ctx{&dt, &ct, &dom_index, &cod_index, top, bottom};
    add_blocks(rho, {0}, {0}, 0, -1, ctx, out);
    return out;
}

}  // namespace tubecat
