#pragma once

#include "tubecat/tube.hpp"

namespace fixture {

using tubecat::NCPartition;
using tubecat::TubeMorphism;
using tubecat::TubeObject;

inline TubeObject L(int m) { return TubeObject::leaf(m); }
inline TubeObject N(std::vector<TubeObject> c) { return TubeObject::node(std::move(c)); }
inline NCPartition nc(int m, int n, std::vector<NCPartition::Block> b) {
    return NCPartition::validate(m, n, std::move(b));
}
inline TubeMorphism base(int m, int n, std::vector<NCPartition::Block> b) {
    return TubeMorphism::base(nc(m, n, std::move(b)));
}

// π ∈ T((1;1), (3;2,3,1)), the first half of a composable pair.
inline TubeMorphism pi() {
    return TubeMorphism::nested(N({L(1)}), N({L(2), L(3), L(1)}), nc(1, 3, {{1, 2, 4}, {3}}),
                                {base(1, 3, {{1, 2, 4}, {3}}), base(0, 3, {{1, 3}, {2}})});
}

// ρ ∈ T((3;2,3,1), (2;2,1)), composable after π.
inline TubeMorphism rho() {
    return TubeMorphism::nested(N({L(2), L(3), L(1)}), N({L(2), L(1)}), nc(3, 2, {{1, 3, 4, 5}, {2}}),
                                {base(3, 3, {{1, 4, 6}, {2}, {3}, {5}}), base(3, 0, {{1, 3}, {2}})});
}

// The δ example: outer {{1,2}} ∈ NC(1,1), inner {{1,3,4},{2}} ∈ NC(2,2).
inline TubeMorphism delta_example() {
    return TubeMorphism::nested(N({L(2)}), N({L(2)}), nc(1, 1, {{1, 2}}), {base(2, 2, {{1, 3, 4}, {2}})});
}

}  // namespace fixture
