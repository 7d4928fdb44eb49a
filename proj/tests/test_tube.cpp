#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tubecat/error.hpp"
#include "tubecat/random.hpp"
#include "tubecat/tube.hpp"

using namespace tubecat;
using namespace fixture;

namespace {

ErrorKind kind_of(auto f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("objects are reduced trees") {
    CHECK(L(0) == TubeObject());
    CHECK(N({TubeObject(), TubeObject()}) == L(2));
    CHECK(L(2).is_leaf());
    CHECK_FALSE(psi(L(1)).is_leaf());
    CHECK(psi_power(0) == L(1));
    CHECK(psi(psi(L(1))) == psi_power(2));
    CHECK(psi_power(2).height() == 3);
    CHECK(N({N({L(1), L(2), L(0)})}).vertex_count() == 7);
    CHECK(dual(N({L(1), L(3)})) == N({L(3), L(1)}));
    CHECK(tensor(L(2), N({L(1)})) == N({TubeObject(), TubeObject(), L(1)}));
}

TEST_CASE("domains and codomains") {
    const auto pants = TubeMorphism::base(tubecat::pants());
    CHECK(pants.domain() == L(1));
    CHECK(pants.codomain() == L(2));
    CHECK(pi().domain() == N({L(1)}));
    CHECK(pi().codomain() == N({L(2), L(3), L(1)}));
    const auto p = psi(TubeMorphism::base(identity_partition(2)));
    CHECK(p.domain() == N({L(2)}));
    CHECK(p.codomain() == N({L(2)}));
}

TEST_CASE("nested rejects ill-typed inner morphisms") {
    CHECK(kind_of([] {
              TubeMorphism::nested(N({L(1)}), N({L(2)}), nc(1, 1, {{1, 2}}), {base(1, 1, {{1, 2}})});
          }) == ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { TubeMorphism::nested(N({L(1)}), N({L(1)}), nc(1, 1, {{1, 2}}), {}); }) ==
          ErrorKind::ShapeMismatch);
}

TEST_CASE("nested composition removes four blocks across levels") {
    const auto c = compose(rho(), pi());
    CHECK(c.morphism.domain() == N({L(1)}));
    CHECK(c.morphism.codomain() == N({L(2), L(1)}));
    CHECK(c.morphism.outer() == nc(1, 2, {{1, 2, 3}}));
    REQUIRE(c.morphism.inner().size() == 1);
    CHECK(c.morphism.inner()[0].outer() == nc(1, 3, {{1, 2, 4}, {3}}));
    CHECK(c.removed == 4);
    CHECK(kind_of([] { compose(pi(), pi()); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("base composition delegates to partitions") {
    const auto c = compose(TubeMorphism::base(cup()), TubeMorphism::base(cap()));
    CHECK(c.morphism == TubeMorphism());
    CHECK(c.removed == 1);
    const auto id = compose(identity(pi().codomain()), pi());
    CHECK(id.morphism == pi());
    CHECK(id.removed == 0);
}

TEST_CASE("tensor") {
    const auto one = psi(TubeMorphism::base(identity_partition(1)));
    const auto t = tensor(one, one);
    CHECK(t.outer() == nc(2, 2, {{1, 4}, {2, 3}}));
    CHECK(t.inner() == std::vector<TubeMorphism>{TubeMorphism::base(identity_partition(1)),
                                                 TubeMorphism::base(identity_partition(1))});
    CHECK(tensor(pi(), TubeMorphism()) == pi());
    CHECK(tensor(TubeMorphism::base(pants()), TubeMorphism::base(cap())) ==
          TubeMorphism::base(tensor(pants(), cap())));
}

TEST_CASE("adjoint of the π fixture") {
    const auto a = adjoint(pi());
    CHECK(a.domain() == N({L(2), L(3), L(1)}));
    CHECK(a.codomain() == N({L(1)}));
    CHECK(adjoint(a) == pi());
}

TEST_CASE("P morphism") {
    const std::vector<TubeObject> two{L(1), L(1)};
    const auto p = p_morphism(two);
    CHECK(p.outer() == pants());
    CHECK(p.inner() == std::vector<TubeMorphism>{TubeMorphism::base(identity_partition(2))});
    CHECK(kind_of([] { p_morphism(std::vector<TubeObject>{}); }) == ErrorKind::EmptyList);
}

TEST_CASE("duality morphisms") {
    const auto a = N({L(1), L(3)});
    CHECK(eta(a).domain() == TubeObject());
    CHECK(eta(a).codomain() == tensor(a, dual(a)));
    CHECK(epsilon(a).domain() == tensor(dual(a), a));
    CHECK(epsilon(L(2)) == TubeMorphism::base(tubecat::epsilon(2)));
    const auto snake = compose(tensor(identity(a), epsilon(a)), tensor(eta(a), identity(a)));
    CHECK(snake.morphism == identity(a));
    CHECK(snake.removed == 0);
}

TEST_CASE("rotations") {
    const auto one = psi(TubeMorphism::base(identity_partition(1)));
    CHECK(unrotate_left(rotate_left(one)) == one);
    CHECK(unrotate_right(rotate_right(one)) == one);
    const std::vector<TubeObject> ab{L(1), L(2)};
    const auto l = rotate_left(p_morphism(ab));
    CHECK(l.domain() == TubeObject());
    CHECK(l.codomain() == tensor(dual(psi(tensor(L(1), L(2)))), tensor(psi(L(1)), psi(L(2)))));
    CHECK(kind_of([] { rotate_left(TubeMorphism::base(cap())); }) == ErrorKind::NothingToRotate);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto a = tensor(L(1), random_object(rng, 4, 2));
        const auto b = random_object(rng, 4, 2);
        const auto r = random_morphism(a, b, rng);
        CHECK(adjoint(rotate_left(adjoint(rotate_left(r)))) == r);
        CHECK(adjoint(rotate_right(adjoint(rotate_right(tensor(r, identity(L(1))))))) ==
              tensor(r, identity(L(1))));
    }
}

TEST_CASE("S decomposition") {
    const auto s3 = s_decomposition(L(3));
    CHECK(s3.isometry == TubeMorphism::base(identity_partition(3)));
    CHECK(s3.levels == std::vector<int>{0, 0, 0});
    const auto a = N({N({L(1), L(2), L(0)})});
    const auto s = s_decomposition(a);
    CHECK(s.levels == std::vector<int>{2, 2, 2, 1});
    const auto c = compose(adjoint(s.isometry), s.isometry);
    CHECK(c.morphism == identity(a));
    CHECK(c.removed == 0);
}

TEST_CASE("generator identities") {
    CHECK(eta_generator_identity_holds(L(1)));
    const std::vector<TubeObject> one{L(1)}, two{L(1), L(1)};
    CHECK(single_block_generator_identity_holds(one, two, TubeMorphism::base(pants())));
    CHECK(generator_identities_check(one, two, TubeMorphism::base(pants())));
    CHECK(kind_of([&] { single_block_generator_identity_holds(two, two, TubeMorphism::base(pants())); }) ==
          ErrorKind::ShapeMismatch);
}

TEST_CASE("Hom enumeration matches the recursive count") {
    CHECK(enumerate_hom(L(1), L(1)).size() == 2);
    CHECK(enumerate_hom(psi(L(1)), psi(L(1))).size() == 3);
    CHECK(enumerate_hom(TubeObject(), TubeObject()).size() == 1);
    const auto objs = enumerate_objects(4, 3);
    for (std::size_t i = 0; i < objs.size(); i += 3) {
        for (std::size_t j = 0; j < objs.size(); j += 5) {
            if (objs[i].vertex_count() + objs[j].vertex_count() > 6) continue;
            CAPTURE(i);
            CAPTURE(j);
            CHECK(enumerate_hom(objs[i], objs[j]).size() == oracle::hom_count(objs[i], objs[j]));
        }
    }
    CHECK(kind_of([] { enumerate_hom(L(7), L(6)); }) == ErrorKind::BoundExceeded);
}
