#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tubecat/check.hpp"
#include "tubecat/int_matrix.hpp"
#include "tubecat/lin_rep.hpp"
#include "tubecat/tube.hpp"

namespace tubecat {

/// Automorphism of the rooted tree X^* truncated at depth d: a root
/// permutation plus one restriction g|_x of depth d-1 per letter.
class TreeAut {
public:
    /// Identity of the given depth.
    TreeAut(int alphabet, int depth);

    /// Throws Error(ShapeMismatch) unless `root` is a permutation of
    /// 0..|X|-1 and every child has depth d-1 over the same alphabet.
    static TreeAut make(std::vector<int> root, std::vector<TreeAut> children);

    int alphabet() const noexcept { return alphabet_; }
    int depth() const noexcept { return depth_; }
    const std::vector<int>& root() const noexcept { return root_; }
    /// Level-1 action σ(x). Requires depth ≥ 1.
    int act_letter(int x) const;
    /// g|_x. Throws Error(DepthExceeded) at depth 0.
    const TreeAut& restrict(int x) const;
    /// g·(x w) = g(x) (g|_x · w). Throws Error(DepthExceeded) if |w| > depth.
    std::vector<int> act(std::span<const int> word) const;

    /// (g h)(w) = g(h(w)).
    TreeAut operator*(const TreeAut& h) const;
    TreeAut inverse() const;

    /// Root permutation digits followed by bracketed children, e.g. `10[01,01]`.
    std::string to_string() const;

    bool operator==(const TreeAut&) const = default;
    std::strong_ordering operator<=>(const TreeAut& other) const;

private:
    TreeAut() = default;

    int alphabet_ = 1;
    int depth_ = 0;
    std::vector<int> root_;
    std::vector<TreeAut> children_;
};

/// (|X|!)^{(|X|^d-1)/(|X|-1)}, saturating at UINT64_MAX.
std::uint64_t group_order(int alphabet, int depth);

inline constexpr std::uint64_t kDefaultGroupBound = 10000;

/// Every automorphism of the depth-d tree exactly once. Throws
/// Error(BoundExceeded) when the group order exceeds `bound`.
std::vector<TreeAut> enumerate_group(int alphabet, int depth, std::uint64_t bound = kDefaultGroupBound);

/// Uniformly random automorphism.
TreeAut random_element(int alphabet, int depth, std::mt19937_64& rng);

/// Classical coefficient a_{u,v}(g) = [g·v = u]. Throws Error(DepthExceeded)
/// when |u| > depth(g) and Error(ShapeMismatch) when |u| ≠ |v|.
int coefficient(const TreeAut& g, std::span<const int> u, std::span<const int> v);

/// Permutation matrix of g on X^α: column v has its 1 in row g·v. Letters at
/// one nesting level are moved by the level-1 action and their subwords by the
/// corresponding restriction. Requires height(α) ≤ depth(g).
IntMatrix rep_matrix(const TubeObject& a, const TreeAut& g, std::uint64_t bound = default_dimension_bound());

/// Dimension of the commutant between the permutation actions of `group` on
/// X^a and X^b: the number of orbits on X^b × X^a.
std::size_t intertwiner_dimension(const TubeObject& a, const TubeObject& b, std::span<const TreeAut> group,
                                  std::uint64_t bound = default_dimension_bound());

struct ModelOptions {
    int alphabet = 2;
    int depth = 2;
    std::uint64_t seed = 1;
    int threads = 1;
    /// Exhaustive enumeration up to this order; seeded sampling beyond it.
    std::uint64_t group_bound = kDefaultGroupBound;
    /// Pair checks are exhaustive up to this many pairs.
    std::uint64_t pair_bound = 65536;
    std::size_t samples = 10000;
    std::uint64_t dimension_bound = default_dimension_bound();
};

struct GroupSample {
    std::vector<TreeAut> elements;
    bool exhaustive = true;
};

GroupSample sample_group(const ModelOptions& opts);

/// Relations (1)-(3), the two consequences a_{x,z}a_{y,z} = δ_{x,y}a_{x,z} and
/// Σ_y a_{x,y} = Σ_x a_{x,y} = 1, pointwise on every sampled g, and the
/// comultiplication identity on pairs.
std::vector<CheckResult> check_ax_relations(const ModelOptions& opts);

/// The five generator intertwiner identities, the orthogonality of ψ(u)
/// entries with distinct first letters, intertwining of every enumerated
/// morphism in a small catalog, and the span-rank bound by the commutant
/// dimension.
std::vector<CheckResult> check_intertwiners(const ModelOptions& opts);

}  // namespace tubecat
