#include "tubecat/wreath.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "tubecat/error.hpp"
#include "union_find.hpp"

namespace tubecat {

// --------------------------------------------------------------- TreeAut

TreeAut::TreeAut(int alphabet, int depth) : alphabet_(alphabet), depth_(depth) {
    if (alphabet < 1 || depth < 0) throw Error(ErrorKind::ShapeMismatch, "tree automorphism needs |X| >= 1, depth >= 0");
    if (depth == 0) return;
    root_.resize(static_cast<std::size_t>(alphabet));
    std::iota(root_.begin(), root_.end(), 0);
    children_.assign(static_cast<std::size_t>(alphabet), TreeAut(alphabet, depth - 1));
}

TreeAut TreeAut::make(std::vector<int> root, std::vector<TreeAut> children) {
    const int k = static_cast<int>(root.size());
    if (k < 1 || children.size() != root.size()) throw Error(ErrorKind::ShapeMismatch, "one child per letter required");
    std::vector<int> sorted = root;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i) throw Error(ErrorKind::ShapeMismatch, "root is not a permutation");
    }
    const int child_depth = children.front().depth();
    for (const auto& c : children) {
        if (c.alphabet() != k || c.depth() != child_depth) {
            throw Error(ErrorKind::ShapeMismatch, "children must share alphabet and depth");
        }
    }
    TreeAut g;
    g.alphabet_ = k;
    g.depth_ = child_depth + 1;
    g.root_ = std::move(root);
    g.children_ = std::move(children);
    return g;
}

int TreeAut::act_letter(int x) const {
    if (depth_ == 0) throw Error(ErrorKind::DepthExceeded, "depth-0 automorphism has no letters to act on");
    if (x < 0 || x >= alphabet_) throw Error(ErrorKind::ShapeMismatch, "letter outside alphabet");
    return root_[static_cast<std::size_t>(x)];
}

const TreeAut& TreeAut::restrict(int x) const {
    if (depth_ == 0) throw Error(ErrorKind::DepthExceeded, "cannot restrict a depth-0 automorphism");
    if (x < 0 || x >= alphabet_) throw Error(ErrorKind::ShapeMismatch, "letter outside alphabet");
    return children_[static_cast<std::size_t>(x)];
}

std::vector<int> TreeAut::act(std::span<const int> word) const {
    if (static_cast<int>(word.size()) > depth_) {
        throw Error(ErrorKind::DepthExceeded, "word of length " + std::to_string(word.size()) +
                                                  " exceeds automorphism depth " + std::to_string(depth_));
    }
    std::vector<int> out(word.size());
    const TreeAut* g = this;
    for (std::size_t i = 0; i < word.size(); ++i) {
        out[i] = g->act_letter(word[i]);
        g = &g->restrict(word[i]);
    }
    return out;
}

TreeAut TreeAut::operator*(const TreeAut& h) const {
    if (alphabet_ != h.alphabet_ || depth_ != h.depth_) throw Error(ErrorKind::ShapeMismatch, "incompatible automorphisms");
    if (depth_ == 0) return *this;
    TreeAut gh;
    gh.alphabet_ = alphabet_;
    gh.depth_ = depth_;
    gh.root_.resize(root_.size());
    gh.children_.reserve(root_.size());
    for (std::size_t x = 0; x < root_.size(); ++x) {
        const int hx = h.root_[x];
        gh.root_[x] = root_[static_cast<std::size_t>(hx)];
        gh.children_.push_back(children_[static_cast<std::size_t>(hx)] * h.children_[x]);
    }
    return gh;
}

TreeAut TreeAut::inverse() const {
    if (depth_ == 0) return *this;
    TreeAut inv;
    inv.alphabet_ = alphabet_;
    inv.depth_ = depth_;
    inv.root_.resize(root_.size());
    for (std::size_t x = 0; x < root_.size(); ++x) inv.root_[static_cast<std::size_t>(root_[x])] = static_cast<int>(x);
    inv.children_.reserve(root_.size());
    // (g^{-1})|_x = (g|_{g^{-1}(x)})^{-1}
    for (std::size_t x = 0; x < root_.size(); ++x) {
        inv.children_.push_back(children_[static_cast<std::size_t>(inv.root_[x])].inverse());
    }
    return inv;
}

std::string TreeAut::to_string() const {
    if (depth_ == 0) return "e";
    std::ostringstream out;
    for (std::size_t x = 0; x < root_.size(); ++x) {
        if (alphabet_ > 10 && x) out << '.';
        out << root_[x];
    }
    if (depth_ > 1) {
        out << '[';
        for (std::size_t x = 0; x < children_.size(); ++x) out << (x ? "," : "") << children_[x].to_string();
        out << ']';
    }
    return out.str();
}

std::strong_ordering TreeAut::operator<=>(const TreeAut& other) const {
    if (auto c = alphabet_ <=> other.alphabet_; c != 0) return c;
    if (auto c = depth_ <=> other.depth_; c != 0) return c;
    if (auto c = root_ <=> other.root_; c != 0) return c;
    return children_ <=> other.children_;
}

// ----------------------------------------------------------------- groups

std::uint64_t group_order(int alphabet, int depth) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t fact = 1;
    for (int i = 2; i <= alphabet; ++i) fact *= static_cast<std::uint64_t>(i);
    // vertices with children: 1 + |X| + ... + |X|^{d-1}
    std::uint64_t internal = 0, level = 1;
    for (int i = 0; i < depth; ++i) {
        internal += level;
        if (level > kMax / static_cast<std::uint64_t>(alphabet)) return fact == 1 ? 1 : kMax;
        level *= static_cast<std::uint64_t>(alphabet);
    }
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < internal && fact > 1; ++i) {
        if (order > kMax / fact) return kMax;
        order *= fact;
    }
    return order;
}

std::vector<TreeAut> enumerate_group(int alphabet, int depth, std::uint64_t bound) {
    const std::uint64_t order = group_order(alphabet, depth);
    if (order > bound) {
        throw Error(ErrorKind::BoundExceeded,
                    "group order " + std::to_string(order) + " exceeds bound " + std::to_string(bound));
    }
    if (depth == 0) return {TreeAut(alphabet, 0)};
    const std::vector<TreeAut> sub = enumerate_group(alphabet, depth - 1, bound);
    std::vector<TreeAut> out;
    out.reserve(static_cast<std::size_t>(order));
    std::vector<int> perm(static_cast<std::size_t>(alphabet));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Odometer over the choice of restriction per letter, first letter most significant.
        std::vector<std::size_t> pick(static_cast<std::size_t>(alphabet), 0);
        while (true) {
            std::vector<TreeAut> children;
            children.reserve(pick.size());
            for (std::size_t i : pick) children.push_back(sub[i]);
            out.push_back(TreeAut::make(perm, std::move(children)));
            std::size_t i = pick.size();
            while (i > 0 && ++pick[i - 1] == sub.size()) pick[--i] = 0;
            if (i == 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TreeAut random_element(int alphabet, int depth, std::mt19937_64& rng) {
    if (depth == 0) return TreeAut(alphabet, 0);
    std::vector<int> perm(static_cast<std::size_t>(alphabet));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<TreeAut> children;
    for (int x = 0; x < alphabet; ++x) children.push_back(random_element(alphabet, depth - 1, rng));
    return TreeAut::make(std::move(perm), std::move(children));
}

int coefficient(const TreeAut& g, std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw Error(ErrorKind::ShapeMismatch, "coefficient words must have equal length");
    if (static_cast<int>(u.size()) > g.depth()) {
        throw Error(ErrorKind::DepthExceeded, "coefficient a_{u,v} with |u| = " + std::to_string(u.size()) +
                                                  " beyond model depth " + std::to_string(g.depth()));
    }
    const std::vector<int> gv = g.act(v);
    return std::equal(gv.begin(), gv.end(), u.begin()) ? 1 : 0;
}

// --------------------------------------------------------- representations

namespace {

void act_shape(const TubeObject& shape, const TreeAut& g, std::span<const int> in, std::vector<int>& out,
               std::size_t& pos) {
    for (const auto& child : shape.children()) {
        const int x = in[pos];
        out[pos] = g.act_letter(x);
        ++pos;
        act_shape(child, g.restrict(x), in, out, pos);
    }
}

// Index of g·v for every word v of the given shape.
std::vector<std::uint64_t> action_table(const TubeObject& a, const TreeAut& g, std::uint64_t bound) {
    if (a.height() > g.depth()) {
        throw Error(ErrorKind::DepthExceeded, "object of height " + std::to_string(a.height()) +
                                                  " needs model depth >= " + std::to_string(a.height()));
    }
    const WordSpace space(a, Alphabet(g.alphabet()));
    if (space.dimension() > bound) {
        throw Error(ErrorKind::BoundExceeded, "representation dimension " + std::to_string(space.dimension()) +
                                                  " exceeds bound " + std::to_string(bound));
    }
    std::vector<std::uint64_t> table(static_cast<std::size_t>(space.dimension()));
    std::vector<int> out(static_cast<std::size_t>(a.vertex_count()));
    for (std::uint64_t v = 0; v < space.dimension(); ++v) {
        const std::vector<int> letters = space.decode_letters(v);
        std::size_t pos = 0;
        act_shape(a, g, letters, out, pos);
        table[static_cast<std::size_t>(v)] = space.encode_letters(out);
    }
    return table;
}

}  // namespace

IntMatrix rep_matrix(const TubeObject& a, const TreeAut& g, std::uint64_t bound) {
    const std::vector<std::uint64_t> table = action_table(a, g, bound);
    std::vector<std::vector<IntMatrix::Entry>> cols(table.size());
    for (std::size_t v = 0; v < table.size(); ++v) cols[v].push_back({static_cast<std::size_t>(table[v]), 1});
    return IntMatrix::from_columns(table.size(), std::move(cols));
}

std::size_t intertwiner_dimension(const TubeObject& a, const TubeObject& b, std::span<const TreeAut> group,
                                  std::uint64_t bound) {
    const std::uint64_t da = WordSpace(a, Alphabet(group.empty() ? 1 : group.front().alphabet())).dimension();
    const std::uint64_t db = WordSpace(b, Alphabet(group.empty() ? 1 : group.front().alphabet())).dimension();
    if (da * db > bound * bound) throw Error(ErrorKind::BoundExceeded, "intertwiner space too large");
    detail::UnionFind uf(static_cast<std::size_t>(da * db));
    for (const auto& g : group) {
        const auto ta = action_table(a, g, bound);
        const auto tb = action_table(b, g, bound);
        for (std::uint64_t w = 0; w < db; ++w) {
            for (std::uint64_t v = 0; v < da; ++v) {
                uf.unite(static_cast<std::size_t>(w * da + v), static_cast<std::size_t>(tb[w] * da + ta[v]));
            }
        }
    }
    return uf.class_count();
}

// ------------------------------------------------------------------ checks

GroupSample sample_group(const ModelOptions& opts) {
    GroupSample s;
    if (group_order(opts.alphabet, opts.depth) <= opts.group_bound) {
        s.elements = enumerate_group(opts.alphabet, opts.depth, opts.group_bound);
        return s;
    }
    s.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    s.elements.reserve(opts.samples);
    for (std::size_t i = 0; i < opts.samples; ++i) s.elements.push_back(random_element(opts.alphabet, opts.depth, rng));
    return s;
}

namespace {

// a^{(n)} of one element: table[n][v] = index of g·v among words of length n.
using Tables = std::vector<std::vector<std::uint64_t>>;

Tables level_tables(const TreeAut& g) {
    Tables t;
    // Plain words of length n have the shape ψ_{n-1}.
    for (int n = 0; n <= g.depth(); ++n) {
        const TubeObject shape = n == 0 ? TubeObject() : psi_power(n - 1);
        t.push_back(action_table(shape, g, std::numeric_limits<std::uint64_t>::max()));
    }
    return t;
}

std::uint64_t ipow(int base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
    return r;
}

std::vector<std::pair<std::string, std::string>> base_parameters(const ModelOptions& opts, const GroupSample& s) {
    return {{"alphabet", std::to_string(opts.alphabet)},
            {"depth", std::to_string(opts.depth)},
            {"group_order", std::to_string(group_order(opts.alphabet, opts.depth))},
            {"elements", std::to_string(s.elements.size())},
            {"exhaustive", s.exhaustive ? "true" : "false"},
            {"seed", std::to_string(opts.seed)}};
}

std::string word_string(std::uint64_t index, int len, int k) {
    if (len == 0) return "∅";
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = len - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<char>('0' + index % static_cast<std::uint64_t>(k));
        index /= static_cast<std::uint64_t>(k);
    }
    return s;
}

struct PointwiseCheck {
    std::string identity;
    std::function<std::optional<std::string>(const TreeAut&, const Tables&)> test;
};

CheckResult run_pointwise(const PointwiseCheck& check, const ModelOptions& opts, const GroupSample& s,
                          const std::vector<Tables>& tables) {
    CheckResult r;
    r.identity = check.identity;
    r.parameters = base_parameters(opts, s);
    r.cases = s.elements.size();
    auto fail = detail::first_failure(s.elements.size(), opts.threads, [&](std::size_t i) {
        return check.test(s.elements[i], tables[i]);
    });
    if (fail) {
        r.passed = false;
        r.counterexample = "g=" + s.elements[fail->first].to_string() + ": " + fail->second;
    }
    return r;
}

}  // namespace

std::vector<CheckResult> check_ax_relations(const ModelOptions& opts) {
    const GroupSample s = sample_group(opts);
    const int k = opts.alphabet;
    const int d = opts.depth;
    std::vector<Tables> tables(s.elements.size());
    for (std::size_t i = 0; i < s.elements.size(); ++i) tables[i] = level_tables(s.elements[i]);
    auto a = [](const Tables& t, int n, std::uint64_t u, std::uint64_t v) -> int {
        return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)] == u ? 1 : 0;
    };

    std::vector<PointwiseCheck> checks;
    checks.push_back({"relation (1): a_{∅,∅} = 1", [&](const TreeAut& g, const Tables&) -> std::optional<std::string> {
                          if (coefficient(g, {}, {}) != 1) return "a_{∅,∅} != 1";
                          return std::nullopt;
                      }});
    checks.push_back({"relation (2): a_{u,v}^2 = a_{u,v} = a_{u,v}^*",
                      [&](const TreeAut&, const Tables& t) -> std::optional<std::string> {
                          for (int n = 0; n <= d; ++n) {
                              const std::uint64_t N = ipow(k, n);
                              for (std::uint64_t u = 0; u < N; ++u) {
                                  for (std::uint64_t v = 0; v < N; ++v) {
                                      const int x = a(t, n, u, v);
                                      if (x * x != x) {
                                          return "u=" + word_string(u, n, k) + " v=" + word_string(v, n, k);
                                      }
                                  }
                              }
                          }
                          return std::nullopt;
                      }});
    checks.push_back({"relation (3): a_{u,v} = Σ_y a_{ux,vy} = Σ_z a_{uz,vx}",
                      [&](const TreeAut&, const Tables& t) -> std::optional<std::string> {
                          for (int n = 0; n < d; ++n) {
                              const std::uint64_t N = ipow(k, n);
                              for (std::uint64_t u = 0; u < N; ++u) {
                                  for (std::uint64_t v = 0; v < N; ++v) {
                                      const int lhs = a(t, n, u, v);
                                      for (int x = 0; x < k; ++x) {
                                          int row = 0, col = 0;
                                          for (int y = 0; y < k; ++y) {
                                              const auto ux = u * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(x);
                                              const auto vx = v * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(x);
                                              const auto vy = v * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(y);
                                              const auto uy = u * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(y);
                                              row += a(t, n + 1, ux, vy);
                                              col += a(t, n + 1, uy, vx);
                                          }
                                          if (row != lhs || col != lhs) {
                                              return "u=" + word_string(u, n, k) + " v=" + word_string(v, n, k) +
                                                     " x=" + std::to_string(x);
                                          }
                                      }
                                  }
                              }
                          }
                          return std::nullopt;
                      }});
    if (d >= 1) {
        checks.push_back({"consequence (i): a_{x,z} a_{y,z} = δ_{x,y} a_{x,z}",
                          [&](const TreeAut&, const Tables& t) -> std::optional<std::string> {
                              for (int x = 0; x < k; ++x) {
                                  for (int y = 0; y < k; ++y) {
                                      for (int z = 0; z < k; ++z) {
                                          const int lhs = a(t, 1, x, z) * a(t, 1, y, z);
                                          const int rhs = (x == y) * a(t, 1, x, z);
                                          if (lhs != rhs) {
                                              return "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                                     " z=" + std::to_string(z);
                                          }
                                      }
                                  }
                              }
                              return std::nullopt;
                          }});
        checks.push_back({"consequence (ii): Σ_y a_{x,y} = Σ_x a_{x,y} = 1",
                          [&](const TreeAut&, const Tables& t) -> std::optional<std::string> {
                              for (int x = 0; x < k; ++x) {
                                  int row = 0, col = 0;
                                  for (int y = 0; y < k; ++y) {
                                      row += a(t, 1, x, y);
                                      col += a(t, 1, y, x);
                                  }
                                  if (row != 1 || col != 1) return "letter " + std::to_string(x);
                              }
                              return std::nullopt;
                          }});
    }

    std::vector<CheckResult> results;
    for (const auto& c : checks) results.push_back(run_pointwise(c, opts, s, tables));

    // Comultiplication: a_{u,v}(gh) = Σ_w a_{u,w}(g) a_{w,v}(h).
    CheckResult co;
    co.identity = "comultiplication: a_{u,v}(gh) = Σ_w a_{u,w}(g) a_{w,v}(h)";
    co.parameters = base_parameters(opts, s);
    const std::uint64_t n_el = s.elements.size();
    const bool all_pairs = s.exhaustive && n_el * n_el <= opts.pair_bound;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (all_pairs) {
        for (std::size_t i = 0; i < n_el; ++i) {
            for (std::size_t j = 0; j < n_el; ++j) pairs.emplace_back(i, j);
        }
    } else {
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(n_el - 1));
        for (std::size_t i = 0; i < opts.samples; ++i) pairs.emplace_back(pick(rng), pick(rng));
    }
    co.parameters.emplace_back("pairs", std::to_string(pairs.size()));
    co.parameters.emplace_back("pairs_exhaustive", all_pairs ? "true" : "false");
    co.cases = pairs.size();
    auto fail = detail::first_failure(pairs.size(), opts.threads, [&](std::size_t i) -> std::optional<std::string> {
        const auto& [gi, hi] = pairs[i];
        const Tables& tg = tables[gi];
        const Tables& th = tables[hi];
        const Tables tgh = level_tables(s.elements[gi] * s.elements[hi]);
        for (int n = 0; n <= d; ++n) {
            const std::uint64_t N = ipow(k, n);
            for (std::uint64_t u = 0; u < N; ++u) {
                for (std::uint64_t v = 0; v < N; ++v) {
                    int sum = 0;
                    for (std::uint64_t w = 0; w < N; ++w) sum += a(tg, n, u, w) * a(th, n, w, v);
                    if (sum != a(tgh, n, u, v)) {
                        return "g=" + s.elements[gi].to_string() + " h=" + s.elements[hi].to_string() +
                               " u=" + word_string(u, n, k) + " v=" + word_string(v, n, k);
                    }
                }
            }
        }
        return std::nullopt;
    });
    if (fail) {
        co.passed = false;
        co.counterexample = fail->second;
    }
    results.push_back(std::move(co));
    return results;
}

namespace {

std::vector<TubeObject> hom_catalog(int max_height) {
    const TubeObject l1 = TubeObject::leaf(1);
    const std::vector<TubeObject> all = {TubeObject(),   l1,
                                         TubeObject::leaf(2),
                                         TubeObject::leaf(3),
                                         psi(l1),
                                         psi(TubeObject::leaf(2)),
                                         TubeObject::node({l1, TubeObject()})};
    std::vector<TubeObject> out;
    for (const auto& o : all) {
        if (o.height() <= max_height) out.push_back(o);
    }
    return out;
}

bool intertwines(const IntMatrix& t, const IntMatrix& ra, const IntMatrix& rb) {
    return matmul(t, ra) == matmul(rb, t);
}

struct TypedMatrix {
    TubeObject dom, cod;
    IntMatrix t;
    std::string label;
};

}  // namespace

std::vector<CheckResult> check_intertwiners(const ModelOptions& opts) {
    const GroupSample s = sample_group(opts);
    const Alphabet X(opts.alphabet);
    const int d = opts.depth;
    const std::uint64_t bound = opts.dimension_bound;
    std::vector<CheckResult> results;

    // Intertwining of a list of typed matrices for every sampled g.
    auto run = [&](std::string identity, const std::vector<TypedMatrix>& items) {
        CheckResult r;
        r.identity = std::move(identity);
        r.parameters = base_parameters(opts, s);
        r.parameters.emplace_back("morphisms", std::to_string(items.size()));
        r.cases = s.elements.size() * items.size();
        auto fail = detail::first_failure(s.elements.size(), opts.threads, [&](std::size_t i) -> std::optional<std::string> {
            const TreeAut& g = s.elements[i];
            for (const auto& item : items) {
                if (!intertwines(item.t, rep_matrix(item.dom, g, bound), rep_matrix(item.cod, g, bound))) {
                    return item.label;
                }
            }
            return std::nullopt;
        });
        if (fail) {
            r.passed = false;
            r.counterexample = "g=" + s.elements[fail->first].to_string() + ": " + fail->second;
        }
        results.push_back(std::move(r));
    };
    auto typed = [&](const TubeMorphism& m, std::string label) {
        return TypedMatrix{m.domain(), m.codomain(), matrix_of(m, X, bound), std::move(label)};
    };

    const TubeObject one = TubeObject::leaf(1);
    if (d >= 1) {
        run("identity (1): T_id intertwines u^1", {typed(identity(one), "id_1")});
        run("identity (2): T_pants intertwines u^1 and u^2", {typed(TubeMorphism::base(pants()), "pants")});
        run("identity (3): T_cap intertwines u^0 and u^1", {typed(TubeMorphism::base(cap()), "cap")});
    }

    // Objects whose Ψ-image is still representable at this depth.
    const std::vector<TubeObject> inner = [&] {
        std::vector<TubeObject> v;
        for (const auto& o : {one, TubeObject::leaf(2), psi(one)}) {
            if (o.height() <= d - 1) v.push_back(o);
        }
        return v;
    }();
    {
        std::vector<TypedMatrix> items;
        for (const auto& a : inner) {
            for (const auto& b : inner) {
                if (psi(tensor(a, b)).height() > d) continue;
                const std::vector<TubeObject> ab = {a, b};
                items.push_back(typed(p_morphism(ab), "P_{" + std::to_string(a.vertex_count()) + "," +
                                                          std::to_string(b.vertex_count()) + "}"));
            }
        }
        if (!items.empty()) run("identity (4): T_{P_{α,β}} intertwines u^{Ψ(α⊗β)} and u^{Ψ(α)⊗Ψ(β)}", items);
    }
    {
        // φ intertwines ⇒ Ψ(φ) intertwines, over every morphism between small objects.
        std::vector<TypedMatrix> phis, psis;
        const auto objs = hom_catalog(d - 1);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                if (a.vertex_count() + b.vertex_count() > 4) continue;
                const auto hom = enumerate_hom(a, b);
                for (std::size_t i = 0; i < hom.size(); ++i) {
                    const std::string label = "hom#" + std::to_string(i) + " " + std::to_string(a.vertex_count()) +
                                              "->" + std::to_string(b.vertex_count());
                    phis.push_back(typed(hom[i], label));
                    psis.push_back(typed(psi(hom[i]), "Ψ(" + label + ")"));
                }
            }
        }
        if (!phis.empty()) {
            CheckResult r;
            r.identity = "identity (5): T_φ intertwiner implies T_{Ψ(φ)} intertwiner";
            r.parameters = base_parameters(opts, s);
            r.parameters.emplace_back("morphisms", std::to_string(phis.size()));
            r.cases = s.elements.size() * phis.size();
            auto fail = detail::first_failure(s.elements.size(), opts.threads, [&](std::size_t i) -> std::optional<std::string> {
                const TreeAut& g = s.elements[i];
                for (std::size_t j = 0; j < phis.size(); ++j) {
                    const bool before = intertwines(phis[j].t, rep_matrix(phis[j].dom, g, bound),
                                                    rep_matrix(phis[j].cod, g, bound));
                    if (!before) continue;
                    if (!intertwines(psis[j].t, rep_matrix(psis[j].dom, g, bound), rep_matrix(psis[j].cod, g, bound))) {
                        return psis[j].label;
                    }
                }
                return std::nullopt;
            });
            if (fail) {
                r.passed = false;
                r.counterexample = "g=" + s.elements[fail->first].to_string() + ": " + fail->second;
            }
            results.push_back(std::move(r));
        }
    }
    if (d >= 1) {
        // ψ(u)_{(x1,i),(y,j)} ψ(v)_{(x2,i'),(y,j')} = 0 for x1 ≠ x2.
        std::vector<TubeObject> objs = hom_catalog(d - 1);
        CheckResult r;
        r.identity = "orthogonality: ψ(u) and ψ(v) entries with distinct first letters never share a column letter";
        r.parameters = base_parameters(opts, s);
        r.cases = s.elements.size() * objs.size() * objs.size();
        auto fail = detail::first_failure(s.elements.size(), opts.threads, [&](std::size_t i) -> std::optional<std::string> {
            const TreeAut& g = s.elements[i];
            // For each column letter y, the first letters of rows hit by either matrix.
            std::vector<std::vector<int>> hit_by(objs.size());
            for (std::size_t o = 0; o < objs.size(); ++o) {
                const TubeObject shape = psi(objs[o]);
                const IntMatrix m = rep_matrix(shape, g, bound);
                const std::size_t sub = m.rows() / static_cast<std::size_t>(opts.alphabet);
                auto& h = hit_by[o];
                h.assign(static_cast<std::size_t>(opts.alphabet), -1);
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    const std::size_t y = c / sub;
                    for (const auto& [row, v] : m.column(c)) {
                        const int x = static_cast<int>(row / sub);
                        if (h[y] >= 0 && h[y] != x) return "object #" + std::to_string(o) + " column letter " + std::to_string(y);
                        h[y] = x;
                    }
                }
            }
            for (std::size_t o1 = 0; o1 < objs.size(); ++o1) {
                for (std::size_t o2 = 0; o2 < objs.size(); ++o2) {
                    for (int y = 0; y < opts.alphabet; ++y) {
                        if (hit_by[o1][static_cast<std::size_t>(y)] != hit_by[o2][static_cast<std::size_t>(y)]) {
                            return "objects #" + std::to_string(o1) + ", #" + std::to_string(o2) + " column letter " +
                                   std::to_string(y);
                        }
                    }
                }
            }
            return std::nullopt;
        });
        if (fail) {
            r.passed = false;
            r.counterexample = "g=" + s.elements[fail->first].to_string() + ": " + fail->second;
        }
        results.push_back(std::move(r));
    }

    // Every enumerated morphism between catalog objects intertwines.
    const auto objs = hom_catalog(std::min(d, 2));
    std::vector<std::pair<TubeObject, TubeObject>> pairs;
    for (const auto& a : objs) {
        for (const auto& b : objs) {
            if (a.vertex_count() + b.vertex_count() <= 5) pairs.emplace_back(a, b);
        }
    }
    {
        std::vector<TypedMatrix> items;
        for (const auto& [a, b] : pairs) {
            const auto hom = enumerate_hom(a, b);
            for (std::size_t i = 0; i < hom.size(); ++i) {
                items.push_back(typed(hom[i], "hom#" + std::to_string(i) + " " + std::to_string(a.vertex_count()) +
                                                  "->" + std::to_string(b.vertex_count())));
            }
        }
        run("tubular morphisms: T_ρ u^α = u^β T_ρ for every enumerated ρ", items);
    }
    {
        CheckResult r;
        r.identity = "span rank: rank span{T_ρ} <= dimension of the commutant";
        r.parameters = base_parameters(opts, s);
        r.parameters.emplace_back("object_pairs", std::to_string(pairs.size()));
        r.cases = pairs.size();
        auto fail = detail::first_failure(pairs.size(), opts.threads, [&](std::size_t i) -> std::optional<std::string> {
            const auto& [a, b] = pairs[i];
            const std::size_t rank = hom_span_rank(a, b, X, kDefaultHomPointBound, bound);
            const std::size_t dim = intertwiner_dimension(a, b, s.elements, bound);
            if (rank > dim) return "rank " + std::to_string(rank) + " > commutant " + std::to_string(dim);
            return std::nullopt;
        });
        if (fail) {
            r.passed = false;
            r.counterexample = "pair #" + std::to_string(fail->first) + ": " + fail->second;
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace tubecat
