#pragma once

#include <random>
#include <vector>

#include "tubecat/tube.hpp"

namespace tubecat {

/// Seeded generators for property tests and the check suites. All draws go
/// through std::mt19937_64, so a fixed seed reproduces the same values.

/// Random object with at most `max_vertices` letters and height ≤ max_height;
/// each vertex gets at most `max_arity` children.
TubeObject random_object(std::mt19937_64& rng, int max_vertices, int max_height, int max_arity = 3);

/// Uniform outer partition from NC(a.arity(), b.arity()), then independent
/// random inner morphisms per block. Throws BoundExceeded when an outer
/// partition would exceed kDefaultNcPointBound points.
TubeMorphism random_morphism(const TubeObject& a, const TubeObject& b, std::mt19937_64& rng);

/// Every object with at most `max_vertices` letters and height ≤ max_height,
/// ordered by vertex count and then structurally.
std::vector<TubeObject> enumerate_objects(int max_vertices, int max_height);

/// Uniform integer in the closed range [lo, hi].
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace tubecat
