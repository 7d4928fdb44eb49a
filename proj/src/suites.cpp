#include "tubecat/suites.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "parallel.hpp"
#include "tubecat/error.hpp"
#include "tubecat/io.hpp"
#include "tubecat/random.hpp"
#include "tubecat/tube.hpp"
#include "tubecat/wreath.hpp"

namespace tubecat {

namespace {

using Outcome = std::optional<std::string>;
using Case = std::function<Outcome(std::mt19937_64&, std::size_t)>;

std::uint64_t case_seed(std::uint64_t seed, std::size_t i) {
    // splitmix64 of (seed, i)
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i) + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CheckResult property(std::string identity, std::size_t count, const SuiteOptions& o, const Case& f) {
    CheckResult r;
    r.identity = std::move(identity);
    r.parameters = {{"seed", std::to_string(o.seed)}};
    r.cases = count;
    auto fail = detail::first_failure(count, o.threads, [&](std::size_t i) {
        std::mt19937_64 rng(case_seed(o.seed, i));
        return f(rng, i);
    });
    if (fail) {
        r.passed = false;
        r.counterexample = "case " + std::to_string(fail->first) + ": " + fail->second;
    }
    return r;
}

template <typename T, typename F>
CheckResult exhaustive(std::string identity, const std::vector<T>& items, const SuiteOptions& o, F&& f) {
    CheckResult r;
    r.identity = std::move(identity);
    r.cases = items.size();
    auto fail = detail::first_failure(items.size(), o.threads, [&](std::size_t i) -> Outcome { return f(items[i]); });
    if (fail) {
        r.passed = false;
        r.counterexample = "item " + std::to_string(fail->first) + ": " + fail->second;
    }
    return r;
}

NCPartition random_nc(int m, int n, std::mt19937_64& rng) {
    return random_morphism(TubeObject::leaf(m), TubeObject::leaf(n), rng).outer();
}

std::string show(const NCPartition& p) { return io::to_text(p); }
std::string show(const TubeMorphism& r) { return io::to_text(r); }
std::string show(const TubeObject& a) { return io::to_text(a); }

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

TubeMorphism first_snake(const TubeObject& g) {
    const auto a = compose(tensor(identity(g), epsilon(g)), tensor(eta(g), identity(g)));
    if (a.removed != 0) throw Error(ErrorKind::ShapeMismatch, "snake deleted blocks");
    return a.morphism;
}

TubeMorphism second_snake(const TubeObject& g) {
    const TubeObject gb = dual(g);
    const auto a = compose(tensor(epsilon(g), identity(gb)), tensor(identity(gb), eta(g)));
    if (a.removed != 0) throw Error(ErrorKind::ShapeMismatch, "snake deleted blocks");
    return a.morphism;
}

}  // namespace

// ------------------------------------------------------------------ nc-core

std::vector<CheckResult> run_nc_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    out.push_back(property("nc: composition is associative and rb is additive", 300, o, [](auto& rng, std::size_t) -> Outcome {
        const int m = uniform_int(rng, 0, 4), n = uniform_int(rng, 0, 4), r = uniform_int(rng, 0, 4),
                  s = uniform_int(rng, 0, 4);
        const auto p = random_nc(m, n, rng), q = random_nc(n, r, rng), t = random_nc(r, s, rng);
        const auto qp = compose(q, p), tq = compose(t, q);
        const auto left = compose(t, qp.partition), right = compose(tq.partition, p);
        if (left.partition != right.partition || left.removed + qp.removed != right.removed + tq.removed) {
            return show(p) + " " + show(q) + " " + show(t);
        }
        return std::nullopt;
    }));
    out.push_back(property("nc: adjoint reverses composition with equal rb", 300, o, [](auto& rng, std::size_t) -> Outcome {
        const int m = uniform_int(rng, 0, 5), n = uniform_int(rng, 0, 5), r = uniform_int(rng, 0, 5);
        const auto p = random_nc(m, n, rng), q = random_nc(n, r, rng);
        const auto a = compose(q, p), b = compose(adjoint(p), adjoint(q));
        if (adjoint(a.partition) != b.partition || a.removed != b.removed) return show(p) + " " + show(q);
        if (adjoint(adjoint(p)) != p) return "involution " + show(p);
        return std::nullopt;
    }));
    out.push_back(property("nc: tensor is associative and unital, adjoint distributes", 300, o,
                           [](auto& rng, std::size_t) -> Outcome {
                               auto draw = [&] { return random_nc(uniform_int(rng, 0, 3), uniform_int(rng, 0, 3), rng); };
                               const auto p = draw(), q = draw(), r = draw();
                               if (tensor(tensor(p, q), r) != tensor(p, tensor(q, r))) return "associativity";
                               if (tensor(p, NCPartition()) != p || tensor(NCPartition(), p) != p) return "unit";
                               if (adjoint(tensor(p, q)) != tensor(adjoint(p), adjoint(q))) return "adjoint";
                               return std::nullopt;
                           }));
    out.push_back(property("nc: identities are neutral for composition", 200, o, [](auto& rng, std::size_t) -> Outcome {
        const int m = uniform_int(rng, 0, 5), n = uniform_int(rng, 0, 5);
        const auto p = random_nc(m, n, rng);
        const auto a = compose(identity_partition(n), p), b = compose(p, identity_partition(m));
        if (a.partition != p || b.partition != p || a.removed || b.removed) return show(p);
        return std::nullopt;
    }));
    out.push_back(exhaustive("nc: snake (id ⊗ ε_m) ∘ (η_m ⊗ id) = id_m with rb = 0", std::vector<int>{0, 1, 2, 3, 4}, o,
                             [](int m) -> Outcome {
                                 const auto c = compose(tensor(identity_partition(m), epsilon(m)),
                                                        tensor(eta(m), identity_partition(m)));
                                 if (c.partition != identity_partition(m) || c.removed) return "m=" + std::to_string(m);
                                 const auto d = compose(tensor(epsilon(m), identity_partition(m)),
                                                        tensor(identity_partition(m), eta(m)));
                                 if (d.partition != identity_partition(m) || d.removed) return "mirror m=" + std::to_string(m);
                                 return std::nullopt;
                             }));
    out.push_back(exhaustive("nc: |NC(m,n)| is the Catalan number C_{m+n}", std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8}, o,
                             [](int len) -> Outcome {
                                 for (int m = 0; m <= len; ++m) {
                                     const auto all = enumerate_nc(m, len - m);
                                     if (all.size() != catalan(len)) {
                                         return "NC(" + std::to_string(m) + "," + std::to_string(len - m) + ") has " +
                                                std::to_string(all.size());
                                     }
                                     auto sorted = all;
                                     std::sort(sorted.begin(), sorted.end());
                                     if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate";
                                 }
                                 return std::nullopt;
                             }));
    return out;
}

// ----------------------------------------------------------------- tube-cat

std::vector<CheckResult> run_tube_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    auto obj = [](std::mt19937_64& rng) { return random_object(rng, 4, 3); };

    out.push_back(property("tube: interchange law with additive rb", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto a = obj(rng), b = obj(rng), c = obj(rng), d = obj(rng), e = obj(rng), f = obj(rng);
        const auto rho1 = random_morphism(a, b, rng), rho = random_morphism(b, c, rng);
        const auto pi1 = random_morphism(d, e, rng), pi = random_morphism(e, f, rng);
        const auto lhs = compose(tensor(rho, pi), tensor(rho1, pi1));
        const auto x = compose(rho, rho1), y = compose(pi, pi1);
        if (lhs.morphism != tensor(x.morphism, y.morphism) || lhs.removed != x.removed + y.removed) {
            return show(rho) + " | " + show(rho1) + " | " + show(pi) + " | " + show(pi1);
        }
        return std::nullopt;
    }));
    out.push_back(property("tube: composition is associative and rb is additive", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto a = obj(rng), b = obj(rng), c = obj(rng), d = obj(rng);
        const auto p = random_morphism(a, b, rng), q = random_morphism(b, c, rng), t = random_morphism(c, d, rng);
        const auto qp = compose(q, p), tq = compose(t, q);
        const auto left = compose(t, qp.morphism), right = compose(tq.morphism, p);
        if (left.morphism != right.morphism || left.removed + qp.removed != right.removed + tq.removed) {
            return show(p) + " | " + show(q) + " | " + show(t);
        }
        return std::nullopt;
    }));
    out.push_back(property("tube: adjoint reverses composition with equal rb", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto a = obj(rng), b = obj(rng), c = obj(rng);
        const auto p = random_morphism(a, b, rng), q = random_morphism(b, c, rng);
        const auto x = compose(q, p), y = compose(adjoint(p), adjoint(q));
        if (adjoint(x.morphism) != y.morphism || x.removed != y.removed) return show(p) + " | " + show(q);
        return std::nullopt;
    }));
    out.push_back(property("tube: adjoint is an involution commuting with Ψ", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto p = random_morphism(obj(rng), obj(rng), rng);
        if (adjoint(adjoint(p)) != p) return "involution " + show(p);
        if (adjoint(psi(p)) != psi(adjoint(p))) return "psi " + show(p);
        return std::nullopt;
    }));
    out.push_back(property("tube: Ψ is a functor preserving rb", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto a = obj(rng), b = obj(rng), c = obj(rng);
        const auto p = random_morphism(a, b, rng), q = random_morphism(b, c, rng);
        const auto x = compose(q, p), y = compose(psi(q), psi(p));
        if (psi(x.morphism) != y.morphism || x.removed != y.removed) return show(p) + " | " + show(q);
        if (psi(identity(a)) != identity(psi(a))) return "identity " + show(a);
        return std::nullopt;
    }));
    out.push_back(property("tube: identities are neutral", 200, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto a = obj(rng), b = obj(rng);
        const auto p = random_morphism(a, b, rng);
        const auto x = compose(identity(b), p), y = compose(p, identity(a));
        if (x.morphism != p || y.morphism != p || x.removed || y.removed) return show(p);
        if (tensor(p, TubeMorphism()) != p || tensor(TubeMorphism(), p) != p) return "unit " + show(p);
        return std::nullopt;
    }));
    out.push_back(property("tube: base morphisms agree with nc-core under the I_1 embedding", 300, o,
                           [&](auto& rng, std::size_t) -> Outcome {
                               const int m = uniform_int(rng, 0, 4), n = uniform_int(rng, 0, 4), r = uniform_int(rng, 0, 4);
                               const auto p = random_nc(m, n, rng), q = random_nc(n, r, rng);
                               const auto tc = compose(TubeMorphism::base(q), TubeMorphism::base(p));
                               const auto nc = compose(q, p);
                               if (tc.morphism != TubeMorphism::base(nc.partition) || tc.removed != nc.removed) return "compose";
                               if (tensor(TubeMorphism::base(p), TubeMorphism::base(q)) != TubeMorphism::base(tensor(p, q))) {
                                   return "tensor";
                               }
                               if (adjoint(TubeMorphism::base(p)) != TubeMorphism::base(adjoint(p))) return "adjoint";
                               std::vector<TubeMorphism> units(p.block_count());
                               if (TubeMorphism::nested(TubeObject::leaf(m), TubeObject::leaf(n), p, units) !=
                                   TubeMorphism::base(p)) {
                                   return "nested form";
                               }
                               return std::nullopt;
                           }));
    out.push_back(exhaustive("tube: both snake identities hold with rb = 0 (height ≤ 3, ≤ 6 letters)",
                             enumerate_objects(6, 3), o, [](const TubeObject& g) -> Outcome {
                                 if (first_snake(g) != identity(g)) return "first " + show(g);
                                 if (second_snake(g) != identity(dual(g))) return "second " + show(g);
                                 return std::nullopt;
                             }));
    out.push_back(property("tube: S*∘S = id with rb = 0", 100, o, [](auto& rng, std::size_t) -> Outcome {
        const auto a = random_object(rng, 6, 4);
        const auto s = s_decomposition(a);
        std::vector<TubeObject> targets;
        for (int l : s.levels) targets.push_back(psi_power(l));
        if (s.isometry.domain() != a || s.isometry.codomain() != tensor_all(targets)) return "type " + show(a);
        const auto c = compose(adjoint(s.isometry), s.isometry);
        if (c.morphism != identity(a) || c.removed) return show(a);
        return std::nullopt;
    }));
    out.push_back(property("tube: generator identities for η_{Ψ(α)} and single-block morphisms", 100, o,
                           [](auto& rng, std::size_t) -> Outcome {
                               const int m = uniform_int(rng, 0, 2);
                               const int n = uniform_int(rng, m == 0 ? 1 : 0, 2);
                               std::vector<TubeObject> as, bs;
                               for (int i = 0; i < m; ++i) as.push_back(random_object(rng, 2, 2));
                               for (int i = 0; i < n; ++i) bs.push_back(random_object(rng, 2, 2));
                               const auto phi = random_morphism(tensor_all(as), tensor_all(bs), rng);
                               if (!generator_identities_check(as, bs, phi)) return show(phi);
                               return std::nullopt;
                           }));
    out.push_back(property("tube: L(L(ρ)*)* = ρ and R(R(ρ)*)* = ρ", 200, o, [](auto& rng, std::size_t) -> Outcome {
        TubeObject a;
        while (a.arity() == 0) a = random_object(rng, 4, 3);
        const auto b = random_object(rng, 4, 3);
        const auto rho = random_morphism(a, b, rng);
        if (unrotate_left(rotate_left(rho)) != rho) return "left " + show(rho);
        if (unrotate_right(rotate_right(rho)) != rho) return "right " + show(rho);
        return std::nullopt;
    }));
    {
        std::vector<std::pair<TubeObject, TubeObject>> pairs;
        const auto objs = enumerate_objects(3, 2);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                if (a.vertex_count() + b.vertex_count() <= 4) pairs.emplace_back(a, b);
            }
        }
        out.push_back(exhaustive("tube: Hom enumeration is duplicate-free and closed under adjoint", pairs, o,
                                 [](const std::pair<TubeObject, TubeObject>& ab) -> Outcome {
                                     auto fwd = enumerate_hom(ab.first, ab.second);
                                     auto back = enumerate_hom(ab.second, ab.first);
                                     for (auto& r : fwd) r = adjoint(r);
                                     std::sort(fwd.begin(), fwd.end());
                                     std::sort(back.begin(), back.end());
                                     if (std::adjacent_find(back.begin(), back.end()) != back.end()) return "duplicate";
                                     if (fwd != back) return show(ab.first) + " vs " + show(ab.second);
                                     return std::nullopt;
                                 }));
    }
    return out;
}

// ------------------------------------------------------------------ lin-rep

std::vector<CheckResult> run_linrep_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    // Letters per object keeping matrix sides ≤ 512.
    auto max_letters = [](int k) { return k == 1 ? 6 : k == 2 ? 8 : 5; };

    out.push_back(property("linrep: T_ρ T_π = |X|^rb T_{ρ∘π}, T_{ρ⊗π} = T_ρ ⊗ T_π, T_{ρ*} = T_ρ^t", 500, o,
                           [&](auto& rng, std::size_t i) -> Outcome {
                               const int k = 1 + static_cast<int>(i % 3);
                               const Alphabet X(k);
                               const int v = max_letters(k);
                               const auto a = random_object(rng, v, 3), b = random_object(rng, v, 3),
                                          c = random_object(rng, v, 3);
                               const auto pi = random_morphism(a, b, rng), rho = random_morphism(b, c, rng);
                               const auto comp = compose(rho, pi);
                               std::int64_t scale = 1;
                               for (int j = 0; j < comp.removed; ++j) scale *= k;
                               const auto tr = matrix_of(rho, X), tp = matrix_of(pi, X);
                               if (matmul(tr, tp) != matrix_of(comp.morphism, X).scaled(scale)) {
                                   return "composition |X|=" + std::to_string(k) + " " + show(rho) + " | " + show(pi);
                               }
                               if (transpose(tr) != matrix_of(adjoint(rho), X)) return "transpose " + show(rho);
                               const auto d = random_object(rng, v / 2, 3), e = random_object(rng, v / 2, 3),
                                          f = random_object(rng, v / 2, 3), g = random_object(rng, v / 2, 3);
                               const auto x = random_morphism(d, e, rng), y = random_morphism(f, g, rng);
                               if (matrix_of(tensor(x, y), X) != kron(matrix_of(x, X), matrix_of(y, X))) {
                                   return "kron " + show(x) + " | " + show(y);
                               }
                               return std::nullopt;
                           }));
    {
        const Alphabet X(o.alphabet);
        std::vector<TubeObject> objs;
        for (const auto& a : enumerate_objects(5, 3)) {
            std::uint64_t dim = 1;
            for (int l : s_decomposition(a).levels) {
                for (int j = 0; j <= l; ++j) dim *= static_cast<std::uint64_t>(o.alphabet);
            }
            if (dim <= o.bound) objs.push_back(a);
        }
        auto r = exhaustive("linrep: T_S^t T_S = 1 for the S-decomposition isometry", objs, o, [&](const TubeObject& a) -> Outcome {
            const auto t = matrix_of(s_decomposition(a).isometry, X, o.bound);
            if (matmul(transpose(t), t) != IntMatrix::identity(t.cols())) return show(a);
            return std::nullopt;
        });
        r.parameters = {{"alphabet", std::to_string(o.alphabet)}};
        out.push_back(std::move(r));
    }
    {
        const Alphabet X(o.alphabet);
        constexpr std::uint64_t kSnakeBound = std::uint64_t{1} << 18;
        std::vector<TubeObject> objs;
        for (const auto& g : enumerate_objects(6, 3)) {
            std::uint64_t dim = 1;
            for (int j = 0; j < 3 * g.vertex_count(); ++j) dim *= static_cast<std::uint64_t>(o.alphabet);
            if (dim <= kSnakeBound) objs.push_back(g);
        }
        auto r = exhaustive("linrep: snake matrices are identities with no |X| factor", objs, o, [&](const TubeObject& g) -> Outcome {
            const auto m1 = matmul(matrix_of(tensor(identity(g), epsilon(g)), X, kSnakeBound),
                                   matrix_of(tensor(eta(g), identity(g)), X, kSnakeBound));
            if (m1 != IntMatrix::identity(m1.cols())) return "first " + show(g);
            const TubeObject gb = dual(g);
            const auto m2 = matmul(matrix_of(tensor(epsilon(g), identity(gb)), X, kSnakeBound),
                                   matrix_of(tensor(identity(gb), eta(g)), X, kSnakeBound));
            if (m2 != IntMatrix::identity(m2.cols())) return "second " + show(g);
            return std::nullopt;
        });
        r.parameters = {{"alphabet", std::to_string(o.alphabet)}};
        out.push_back(std::move(r));
    }
    {
        const Alphabet X(o.alphabet);
        std::vector<TubeMorphism> morphs;
        const auto objs = enumerate_objects(3, 3);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                if (WordSpace(a, X).dimension() > 64 || WordSpace(b, X).dimension() > 64) continue;
                if (a.vertex_count() + b.vertex_count() > 5) continue;
                for (auto& r : enumerate_hom(a, b)) morphs.push_back(std::move(r));
            }
        }
        out.push_back(exhaustive("linrep: δ_ρ(v,w) = δ_{ρ*}(w,v) = T_ρ(w,v)", morphs, o, [&](const TubeMorphism& rho) -> Outcome {
            const WordSpace dom(rho.domain(), X), cod(rho.codomain(), X);
            const auto t = matrix_of(rho, X);
            const auto star = adjoint(rho);
            for (std::uint64_t v = 0; v < dom.dimension(); ++v) {
                for (std::uint64_t w = 0; w < cod.dimension(); ++w) {
                    const bool d1 = delta_rho(rho, dom.decode(v), cod.decode(w));
                    const bool d2 = delta_rho(star, cod.decode(w), dom.decode(v));
                    if (d1 != d2 || t.at(static_cast<std::size_t>(w), static_cast<std::size_t>(v)) != (d1 ? 1 : 0)) {
                        return show(rho);
                    }
                }
            }
            return std::nullopt;
        }));
    }
    {
        const Alphabet X(o.alphabet);
        std::vector<std::pair<TubeObject, TubeObject>> pairs;
        const auto objs = enumerate_objects(3, 3);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                if (a.vertex_count() + b.vertex_count() <= 4) pairs.emplace_back(a, b);
            }
        }
        out.push_back(exhaustive("linrep: dim(α⊗β) = dim α · dim β and the codec respects concatenation", pairs, o,
                                 [&](const std::pair<TubeObject, TubeObject>& ab) -> Outcome {
                                     const WordSpace sa(ab.first, X), sb(ab.second, X), sab(tensor(ab.first, ab.second), X);
                                     if (sab.dimension() != sa.dimension() * sb.dimension()) return "dimension";
                                     for (std::uint64_t v = 0; v < sa.dimension(); ++v) {
                                         for (std::uint64_t w = 0; w < sb.dimension(); ++w) {
                                             const auto joined = GeneralizedWord::concat(sa.decode(v), sb.decode(w));
                                             if (sab.encode(joined) != v * sb.dimension() + w) return "codec";
                                             if (sab.decode(v * sb.dimension() + w) != joined) return "decode";
                                         }
                                     }
                                     return std::nullopt;
                                 }));
    }
    return out;
}

// -------------------------------------------------------------- wreath-model

std::vector<CheckResult> run_wreath_suite(const SuiteOptions& o) {
    ModelOptions m;
    m.alphabet = o.alphabet;
    m.depth = o.depth;
    m.seed = o.seed;
    m.threads = o.threads;
    m.dimension_bound = o.bound;
    std::vector<CheckResult> out = check_ax_relations(m);
    for (auto& r : check_intertwiners(m)) out.push_back(std::move(r));

    const GroupSample s = sample_group(m);
    const std::size_t n = s.elements.size();
    const bool all_pairs = s.exhaustive && static_cast<std::uint64_t>(n) * n <= m.pair_bound;
    const std::size_t pair_count = all_pairs ? n * n : m.samples;
    auto pick_pair = [&](std::mt19937_64& rng, std::size_t i) {
        if (all_pairs) return std::make_pair(i / n, i % n);
        return std::make_pair(static_cast<std::size_t>(rng() % n), static_cast<std::size_t>(rng() % n));
    };
    const TreeAut e(o.alphabet, o.depth);

    out.push_back(exhaustive("wreath: identity and inverse laws", s.elements, o, [&](const TreeAut& g) -> Outcome {
        if (e * g != g || g * e != g) return "identity " + g.to_string();
        if (g * g.inverse() != e || g.inverse() * g != e) return "inverse " + g.to_string();
        return std::nullopt;
    }));
    out.push_back(property("wreath: associativity", m.samples, o, [&](auto& rng, std::size_t) -> Outcome {
        const auto& a = s.elements[rng() % n];
        const auto& b = s.elements[rng() % n];
        const auto& c = s.elements[rng() % n];
        if ((a * b) * c != a * (b * c)) return a.to_string() + " " + b.to_string() + " " + c.to_string();
        return std::nullopt;
    }));
    out.push_back(property("wreath: (gh)·w = g·(h·w) and (gh)|_x = g|_{h(x)} h|_x", pair_count, o,
                           [&](auto& rng, std::size_t i) -> Outcome {
                               const auto [gi, hi] = pick_pair(rng, i);
                               const TreeAut& g = s.elements[gi];
                               const TreeAut& h = s.elements[hi];
                               const TreeAut gh = g * h;
                               if (o.depth == 0) return std::nullopt;
                               for (int x = 0; x < o.alphabet; ++x) {
                                   if (gh.restrict(x) != g.restrict(h.act_letter(x)) * h.restrict(x)) {
                                       return "cocycle " + g.to_string() + " " + h.to_string();
                                   }
                               }
                               const WordSpace words(psi_power(o.depth - 1), Alphabet(o.alphabet));
                               for (std::uint64_t w = 0; w < words.dimension(); ++w) {
                                   const auto letters = words.decode_letters(w);
                                   if (gh.act(letters) != g.act(h.act(letters))) {
                                       return "action " + g.to_string() + " " + h.to_string();
                                   }
                               }
                               return std::nullopt;
                           }));
    std::vector<TubeObject> objs;
    for (const auto& a : enumerate_objects(3, o.depth)) {
        if (WordSpace(a, Alphabet(o.alphabet)).dimension() <= 64) objs.push_back(a);
    }
    out.push_back(property("wreath: rep_matrix(α, gh) = rep_matrix(α, g) rep_matrix(α, h)", pair_count, o,
                           [&](auto& rng, std::size_t i) -> Outcome {
                               const auto [gi, hi] = pick_pair(rng, i);
                               const TreeAut& g = s.elements[gi];
                               const TreeAut& h = s.elements[hi];
                               const TreeAut gh = g * h;
                               for (const auto& a : objs) {
                                   if (rep_matrix(a, gh, o.bound) != matmul(rep_matrix(a, g, o.bound), rep_matrix(a, h, o.bound))) {
                                       return show(a) + " " + g.to_string() + " " + h.to_string();
                                   }
                               }
                               return std::nullopt;
                           }));
    return out;
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts) {
    if (name == "nc") return run_nc_suite(opts);
    if (name == "tube") return run_tube_suite(opts);
    if (name == "linrep") return run_linrep_suite(opts);
    if (name == "wreath") return run_wreath_suite(opts);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (auto* f : {run_nc_suite, run_tube_suite, run_linrep_suite, run_wreath_suite}) {
            for (auto& r : f(opts)) out.push_back(std::move(r));
        }
        return out;
    }
    throw Error(ErrorKind::Parse, "unknown suite '" + std::string(name) + "'");
}

}  // namespace tubecat
