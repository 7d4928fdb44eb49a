#include "tubecat/tube.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "tubecat/error.hpp"
#include "union_find.hpp"
#include "flat_tree.hpp"

namespace tubecat {

// ---------------------------------------------------------------- objects

TubeObject TubeObject::leaf(int m) {
    if (m < 0) throw Error(ErrorKind::ShapeMismatch, "negative arity");
    TubeObject t;
    t.children_.resize(static_cast<std::size_t>(m));
    return t;
}

TubeObject TubeObject::node(std::vector<TubeObject> children) {
    TubeObject t;
    t.children_ = std::move(children);
    return t;
}

bool TubeObject::is_leaf() const noexcept {
    return std::all_of(children_.begin(), children_.end(), [](const TubeObject& c) { return c.is_unit(); });
}

int TubeObject::height() const noexcept {
    int h = 0;
    for (const auto& c : children_) h = std::max(h, 1 + c.height());
    return h;
}

int TubeObject::vertex_count() const noexcept {
    int v = 0;
    for (const auto& c : children_) v += 1 + c.vertex_count();
    return v;
}

TubeObject tensor(const TubeObject& a, const TubeObject& b) {
    std::vector<TubeObject> children = a.children();
    children.insert(children.end(), b.children().begin(), b.children().end());
    return TubeObject::node(std::move(children));
}

TubeObject tensor_all(std::span<const TubeObject> objects) {
    std::vector<TubeObject> children;
    for (const auto& o : objects) children.insert(children.end(), o.children().begin(), o.children().end());
    return TubeObject::node(std::move(children));
}

TubeObject psi(const TubeObject& a) { return TubeObject::node({a}); }

TubeObject psi_power(int n) {
    TubeObject t = TubeObject::leaf(1);
    for (int i = 0; i < n; ++i) t = psi(t);
    return t;
}

TubeObject dual(const TubeObject& a) {
    std::vector<TubeObject> children;
    for (auto it = a.children().rbegin(); it != a.children().rend(); ++it) children.push_back(dual(*it));
    return TubeObject::node(std::move(children));
}

TubeObject block_domain(const TubeObject& dom, const NCPartition& p, std::size_t block) {
    std::vector<TubeObject> children;
    for (int pos : p.upper_positions(block)) {
        const auto& c = dom.child(pos - 1).children();
        children.insert(children.end(), c.begin(), c.end());
    }
    return TubeObject::node(std::move(children));
}

TubeObject block_codomain(const TubeObject& cod, const NCPartition& p, std::size_t block) {
    std::vector<TubeObject> children;
    for (int pos : p.lower_positions(block)) {
        const auto& c = cod.child(pos - 1).children();
        children.insert(children.end(), c.begin(), c.end());
    }
    return TubeObject::node(std::move(children));
}

// -------------------------------------------------------------- morphisms

TubeMorphism TubeMorphism::base(NCPartition p) {
    TubeMorphism r;
    r.domain_ = TubeObject::leaf(p.m());
    r.codomain_ = TubeObject::leaf(p.n());
    r.inner_.resize(p.block_count());
    r.outer_ = std::move(p);
    return r;
}

TubeMorphism TubeMorphism::nested(TubeObject domain, TubeObject codomain, NCPartition outer,
                                  std::vector<TubeMorphism> inner) {
    if (outer.m() != domain.arity() || outer.n() != codomain.arity()) {
        throw Error(ErrorKind::ShapeMismatch, "outer partition NC(" + std::to_string(outer.m()) + "," +
                                                  std::to_string(outer.n()) + ") does not fit objects with " +
                                                  std::to_string(domain.arity()) + " and " +
                                                  std::to_string(codomain.arity()) + " openings");
    }
    if (inner.size() != outer.block_count()) {
        throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(outer.block_count()) +
                                                  " inner morphisms, got " + std::to_string(inner.size()));
    }
    for (std::size_t b = 0; b < inner.size(); ++b) {
        if (inner[b].domain() != block_domain(domain, outer, b) ||
            inner[b].codomain() != block_codomain(codomain, outer, b)) {
            throw Error(ErrorKind::ShapeMismatch, "inner morphism " + std::to_string(b + 1) + " has the wrong type");
        }
    }
    TubeMorphism r;
    r.domain_ = std::move(domain);
    r.codomain_ = std::move(codomain);
    r.outer_ = std::move(outer);
    r.inner_ = std::move(inner);
    return r;
}

int TubeMorphism::total_blocks() const noexcept {
    int total = static_cast<int>(outer_.block_count());
    for (const auto& i : inner_) total += i.total_blocks();
    return total;
}

std::strong_ordering TubeMorphism::operator<=>(const TubeMorphism& other) const {
    if (auto c = domain_ <=> other.domain_; c != 0) return c;
    if (auto c = codomain_ <=> other.codomain_; c != 0) return c;
    if (auto c = outer_ <=> other.outer_; c != 0) return c;
    return inner_ <=> other.inner_;
}

// ------------------------------------------------------------- composition

namespace {

using detail::FlatTree;
using detail::Slot;

// A morphism whose upper openings sit at `top` and lower openings at `bottom`.
struct Piece {
    const TubeMorphism* morphism;
    std::vector<Slot> top;
    std::vector<Slot> bottom;
};

constexpr int kDomainTree = 0;
constexpr int kMiddleTree = 1;
constexpr int kCodomainTree = 2;

struct Glued {
    TubeMorphism morphism;
    int removed = 0;
};

std::vector<Slot> points_below(const std::vector<Slot>& slots, const std::array<const FlatTree*, 3>& trees) {
    std::vector<Slot> out;
    for (const Slot& s : slots) {
        for (int c : trees[static_cast<std::size_t>(s.tree)]->children[static_cast<std::size_t>(s.vertex)]) {
            out.push_back({s.tree, c});
        }
    }
    return out;
}

// Glues pieces along shared middle vertices. Classes of blocks touching no
// domain or codomain vertex are deleted together with everything nested in
// them, and all of these are counted.
Glued glue(const std::vector<Piece>& pieces, const std::array<const FlatTree*, 3>& trees) {
    std::vector<std::vector<Slot>> uppers, lowers;
    std::vector<std::size_t> base;
    std::size_t total = 0;
    for (const auto& piece : pieces) {
        uppers.push_back(points_below(piece.top, trees));
        lowers.push_back(points_below(piece.bottom, trees));
        base.push_back(total);
        total += piece.morphism->outer().block_count();
    }

    detail::UnionFind uf(total);
    std::map<Slot, std::size_t> middle;
    auto touch = [&](const Slot& s, std::size_t gid) {
        if (s.tree != kMiddleTree) return;
        auto [it, fresh] = middle.emplace(s, gid);
        if (!fresh) uf.unite(it->second, gid);
    };
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& p = pieces[k].morphism->outer();
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            for (int pos : p.upper_positions(b)) touch(uppers[k][static_cast<std::size_t>(pos - 1)], base[k] + b);
            for (int pos : p.lower_positions(b)) touch(lowers[k][static_cast<std::size_t>(pos - 1)], base[k] + b);
        }
    }

    // Free boundary points, in left-to-right order.
    std::vector<Slot> dom_points, cod_points;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        for (const Slot& s : uppers[k]) {
            if (s.tree == kDomainTree) dom_points.push_back(s);
        }
        for (const Slot& s : lowers[k]) {
            if (s.tree == kCodomainTree) cod_points.push_back(s);
        }
    }
    std::sort(dom_points.begin(), dom_points.end());
    std::sort(cod_points.begin(), cod_points.end());
    auto position_in = [](const std::vector<Slot>& v, const Slot& s) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), s) - v.begin()) + 1;
    };

    struct Class {
        PointBlock points;
        std::vector<Piece> inner;
    };
    std::map<std::size_t, Class> classes;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& mor = *pieces[k].morphism;
        const auto& p = mor.outer();
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            Class& cls = classes[uf.find(base[k] + b)];
            Piece sub{&mor.inner()[b], {}, {}};
            for (int pos : p.upper_positions(b)) {
                const Slot& s = uppers[k][static_cast<std::size_t>(pos - 1)];
                sub.top.push_back(s);
                if (s.tree == kDomainTree) cls.points.upper.push_back(position_in(dom_points, s));
            }
            for (int pos : p.lower_positions(b)) {
                const Slot& s = lowers[k][static_cast<std::size_t>(pos - 1)];
                sub.bottom.push_back(s);
                if (s.tree == kCodomainTree) cls.points.lower.push_back(position_in(cod_points, s));
            }
            cls.inner.push_back(std::move(sub));
        }
    }

    int removed = 0;
    std::vector<PointBlock> blocks;
    std::vector<const Class*> block_class;
    for (auto& [root, cls] : classes) {
        if (cls.points.upper.empty() && cls.points.lower.empty()) {
            removed += 1 + glue(cls.inner, trees).removed;
            continue;
        }
        std::sort(cls.points.upper.begin(), cls.points.upper.end());
        std::sort(cls.points.lower.begin(), cls.points.lower.end());
        blocks.push_back(cls.points);
        block_class.push_back(&cls);
    }

    const int m = static_cast<int>(dom_points.size());
    const int n = static_cast<int>(cod_points.size());
    auto [outer, order] = NCPartition::from_points(m, n, blocks);
    std::vector<TubeMorphism> inner;
    for (std::size_t idx : order) {
        Glued g = glue(block_class[idx]->inner, trees);
        removed += g.removed;
        inner.push_back(std::move(g.morphism));
    }

    auto subtree_list = [&](const std::vector<Slot>& points) {
        std::vector<TubeObject> out;
        for (const Slot& s : points) out.push_back(*trees[static_cast<std::size_t>(s.tree)]->node[static_cast<std::size_t>(s.vertex)]);
        return TubeObject::node(std::move(out));
    };
    return {TubeMorphism::nested(subtree_list(dom_points), subtree_list(cod_points), std::move(outer),
                                 std::move(inner)),
            removed};
}

}  // namespace

TubeComposite compose(const TubeMorphism& rho, const TubeMorphism& pi) {
    if (pi.codomain() != rho.domain()) {
        throw Error(ErrorKind::ShapeMismatch, "codomain of the right factor differs from the domain of the left");
    }
    const FlatTree dom(pi.domain()), mid(pi.codomain()), cod(rho.codomain());
    const std::array<const FlatTree*, 3> trees{&dom, &mid, &cod};
    std::vector<Piece> pieces{
        {&pi, {{kDomainTree, 0}}, {{kMiddleTree, 0}}},
        {&rho, {{kMiddleTree, 0}}, {{kCodomainTree, 0}}},
    };
    Glued g = glue(pieces, trees);
    return {std::move(g.morphism), g.removed};
}

// --------------------------------------------------------------- structure

TubeMorphism tensor(const TubeMorphism& a, const TubeMorphism& b) {
    const auto& p = a.outer();
    const auto& q = b.outer();
    const NCPartition joined = tensor(p, q);
    // Each block of p⊗q is a block of p or a shifted block of q; match them by
    // their minimal upper-or-lower point.
    std::vector<TubeMorphism> inner;
    inner.reserve(joined.block_count());
    for (std::size_t i = 0; i < joined.block_count(); ++i) {
        const auto& up = joined.upper_positions(i);
        const auto& lo = joined.lower_positions(i);
        const bool from_left = !up.empty() ? up.front() <= p.m() : lo.front() <= p.n();
        if (from_left) {
            const PointRef ref = !up.empty() ? PointRef{Side::Upper, up.front()} : PointRef{Side::Lower, lo.front()};
            inner.push_back(a.inner()[p.block_of(ref)]);
        } else {
            const PointRef ref = !up.empty() ? PointRef{Side::Upper, up.front() - p.m()}
                                             : PointRef{Side::Lower, lo.front() - p.n()};
            inner.push_back(b.inner()[q.block_of(ref)]);
        }
    }
    return TubeMorphism::nested(tensor(a.domain(), b.domain()), tensor(a.codomain(), b.codomain()), joined,
                                std::move(inner));
}

TubeMorphism tensor_all(std::span<const TubeMorphism> morphisms) {
    TubeMorphism acc;
    for (const auto& m : morphisms) acc = tensor(acc, m);
    return acc;
}

TubeMorphism adjoint(const TubeMorphism& rho) {
    const auto& p = rho.outer();
    const NCPartition flipped = adjoint(p);
    std::vector<TubeMorphism> inner;
    inner.reserve(flipped.block_count());
    for (std::size_t i = 0; i < flipped.block_count(); ++i) {
        const auto& up = flipped.upper_positions(i);
        const auto& lo = flipped.lower_positions(i);
        const PointRef ref = !up.empty() ? PointRef{Side::Lower, up.front()} : PointRef{Side::Upper, lo.front()};
        inner.push_back(adjoint(rho.inner()[p.block_of(ref)]));
    }
    return TubeMorphism::nested(rho.codomain(), rho.domain(), flipped, std::move(inner));
}

TubeMorphism psi(const TubeMorphism& rho) {
    return TubeMorphism::nested(psi(rho.domain()), psi(rho.codomain()), identity_partition(1), {rho});
}

TubeMorphism identity(const TubeObject& a) {
    std::vector<TubeMorphism> inner;
    for (const auto& c : a.children()) inner.push_back(identity(c));
    return TubeMorphism::nested(a, a, identity_partition(a.arity()), std::move(inner));
}

TubeMorphism p_morphism(std::span<const TubeObject> objects) {
    if (objects.empty()) throw Error(ErrorKind::EmptyList, "P needs at least one object");
    std::vector<TubeObject> wrapped;
    for (const auto& o : objects) wrapped.push_back(psi(o));
    const TubeObject joined = tensor_all(objects);
    return TubeMorphism::nested(psi(joined), tensor_all(wrapped),
                                single_block(1, static_cast<int>(objects.size())), {identity(joined)});
}

TubeMorphism eta(const TubeObject& a) {
    std::vector<TubeMorphism> inner;
    for (const auto& c : a.children()) inner.push_back(eta(c));
    return TubeMorphism::nested(TubeObject{}, tensor(a, dual(a)), eta(a.arity()), std::move(inner));
}

TubeMorphism epsilon(const TubeObject& a) {
    std::vector<TubeMorphism> inner;
    for (auto it = a.children().rbegin(); it != a.children().rend(); ++it) inner.push_back(epsilon(*it));
    return TubeMorphism::nested(tensor(dual(a), a), TubeObject{}, epsilon(a.arity()), std::move(inner));
}

// ---------------------------------------------------------------- rotation

namespace {

TubeMorphism checked(TubeComposite c) {
    if (c.removed != 0) throw Error(ErrorKind::ShapeMismatch, "rotation deleted blocks");
    return std::move(c.morphism);
}

TubeObject slice(const TubeObject& a, int from, int to) {
    std::vector<TubeObject> children(a.children().begin() + from, a.children().begin() + to);
    return TubeObject::node(std::move(children));
}

}  // namespace

TubeMorphism rotate_left(const TubeMorphism& rho) {
    const TubeObject& dom = rho.domain();
    if (dom.arity() == 0) throw Error(ErrorKind::NothingToRotate, "domain has no openings");
    const TubeObject flipped = psi(dual(dom.child(0)));
    const TubeObject rest = slice(dom, 1, dom.arity());
    const TubeMorphism bend = tensor(eta(flipped), identity(rest));
    return checked(compose(tensor(identity(flipped), rho), bend));
}

TubeMorphism rotate_right(const TubeMorphism& rho) {
    const TubeObject& dom = rho.domain();
    if (dom.arity() == 0) throw Error(ErrorKind::NothingToRotate, "domain has no openings");
    const TubeObject last = psi(dom.child(dom.arity() - 1));
    const TubeObject rest = slice(dom, 0, dom.arity() - 1);
    const TubeMorphism bend = tensor(identity(rest), eta(last));
    return checked(compose(tensor(rho, identity(psi(dual(dom.child(dom.arity() - 1))))), bend));
}

TubeMorphism unrotate_left(const TubeMorphism& sigma) { return adjoint(rotate_left(adjoint(sigma))); }

TubeMorphism unrotate_right(const TubeMorphism& sigma) { return adjoint(rotate_right(adjoint(sigma))); }

// ----------------------------------------------------------- decomposition

SDecomposition s_decomposition(const TubeObject& a) {
    std::vector<TubeMorphism> factors;
    std::vector<int> levels;
    for (const auto& child : a.children()) {
        SDecomposition sub = s_decomposition(child);
        const TubeMorphism wrapped = psi(sub.isometry);
        if (sub.levels.empty()) {
            // Ψ of the unit is already ψ_0.
            factors.push_back(wrapped);
            levels.push_back(0);
            continue;
        }
        std::vector<TubeObject> targets;
        for (int l : sub.levels) {
            targets.push_back(psi_power(l));
            levels.push_back(l + 1);
        }
        factors.push_back(compose(p_morphism(targets), wrapped).morphism);
    }
    if (factors.empty()) return {TubeMorphism{}, {}};
    return {tensor_all(factors), std::move(levels)};
}

// -------------------------------------------------------------- generators

bool eta_generator_identity_holds(const TubeObject& a) {
    const TubeObject abar = dual(a);
    const std::array<TubeObject, 2> pair{a, abar};
    const TubeComposite lifted = compose(psi(eta(a)), TubeMorphism::base(cap()));
    if (lifted.removed != 0) return false;
    const TubeComposite full = compose(p_morphism(pair), lifted.morphism);
    return full.removed == 0 && full.morphism == eta(psi(a));
}

bool single_block_generator_identity_holds(std::span<const TubeObject> alphas, std::span<const TubeObject> betas,
                                           const TubeMorphism& phi) {
    const TubeObject source = tensor_all(alphas);
    const TubeObject target = tensor_all(betas);
    if (phi.domain() != source || phi.codomain() != target) {
        throw Error(ErrorKind::ShapeMismatch, "phi is not typed by the given object lists");
    }
    std::vector<TubeObject> upper, lower;
    for (const auto& a : alphas) upper.push_back(psi(a));
    for (const auto& b : betas) lower.push_back(psi(b));
    const int m = static_cast<int>(alphas.size());
    const int n = static_cast<int>(betas.size());
    if (m + n == 0) return true;  // no one-block partition on zero points
    const TubeMorphism rho = TubeMorphism::nested(tensor_all(upper), tensor_all(lower), single_block(m, n), {phi});

    const TubeMorphism in = m > 0 ? adjoint(p_morphism(alphas)) : TubeMorphism::base(cap());
    const TubeMorphism out = n > 0 ? p_morphism(betas) : TubeMorphism::base(cup());
    const TubeComposite first = compose(psi(phi), in);
    if (first.removed != 0) return false;
    const TubeComposite second = compose(out, first.morphism);
    return second.removed == 0 && second.morphism == rho;
}

bool generator_identities_check(std::span<const TubeObject> alphas, std::span<const TubeObject> betas,
                                const TubeMorphism& phi) {
    for (const auto& a : alphas) {
        if (!eta_generator_identity_holds(a)) return false;
    }
    for (const auto& b : betas) {
        if (!eta_generator_identity_holds(b)) return false;
    }
    return single_block_generator_identity_holds(alphas, betas, phi);
}

// ------------------------------------------------------------- enumeration

std::vector<TubeMorphism> enumerate_hom(const TubeObject& a, const TubeObject& b, int bound) {
    if (a.vertex_count() + b.vertex_count() > bound) {
        throw Error(ErrorKind::BoundExceeded, "Hom enumeration exceeds point bound " + std::to_string(bound));
    }
    std::vector<TubeMorphism> out;
    for (const auto& p : enumerate_nc(a.arity(), b.arity(), bound)) {
        std::vector<std::vector<TubeMorphism>> choices;
        bool empty = false;
        for (std::size_t blk = 0; blk < p.block_count(); ++blk) {
            choices.push_back(enumerate_hom(block_domain(a, p, blk), block_codomain(b, p, blk), bound));
            if (choices.back().empty()) empty = true;
        }
        if (empty) continue;
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            std::vector<TubeMorphism> inner;
            for (std::size_t i = 0; i < choices.size(); ++i) inner.push_back(choices[i][idx[i]]);
            out.push_back(TubeMorphism::nested(a, b, p, std::move(inner)));
            // Odometer with the last block varying fastest.
            std::size_t pos = choices.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) {
                    pos = choices.size() + 1;
                    break;
                }
            }
            if (choices.empty() || pos == choices.size() + 1) break;
        }
    }
    return out;
}

}  // namespace tubecat
