#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "tubecat/nc_partition.hpp"

namespace tubecat {

/// An object of the tubular category.
///
/// Objects are planar rooted trees. The unit is the bare root; `leaf(m)` (an
/// object of the base category) is a root with m childless children, and
/// `node(children)` is the nested object (m; α_1,…,α_m). Because the
/// embedding (m;0,…,0) ~ m is exactly "a vertex whose children are childless",
/// every tree is already the minimal representative of its class.
class TubeObject {
public:
    TubeObject() = default;

    static TubeObject leaf(int m);
    static TubeObject node(std::vector<TubeObject> children);

    int arity() const noexcept { return static_cast<int>(children_.size()); }
    const std::vector<TubeObject>& children() const noexcept { return children_; }
    const TubeObject& child(int i) const { return children_.at(static_cast<std::size_t>(i)); }

    bool is_unit() const noexcept { return children_.empty(); }
    /// True when this is an object of the base category (all children units).
    bool is_leaf() const noexcept;

    /// Edges on the longest root-to-leaf path; 0 for the unit.
    int height() const noexcept;
    /// Nesting depth: 1 for base-category objects, 1 + max child depth otherwise.
    int depth() const noexcept { return height() < 1 ? 1 : height(); }
    /// Number of vertices below the root, i.e. letters in a generalised word.
    int vertex_count() const noexcept;

    bool operator==(const TubeObject&) const = default;
    std::strong_ordering operator<=>(const TubeObject& other) const { return children_ <=> other.children_; }

private:
    std::vector<TubeObject> children_;
};

TubeObject tensor(const TubeObject& a, const TubeObject& b);
TubeObject tensor_all(std::span<const TubeObject> objects);
/// Ψ(α) = (1; α).
TubeObject psi(const TubeObject& a);
/// ψ_n = Ψ^n(1).
TubeObject psi_power(int n);
/// Mirror image: children reversed, recursively dualised.
TubeObject dual(const TubeObject& a);

/// Tensor of the children of `dom` at the block's upper positions.
TubeObject block_domain(const TubeObject& dom, const NCPartition& p, std::size_t block);
/// Tensor of the children of `cod` at the block's lower positions, left to right.
TubeObject block_codomain(const TubeObject& cod, const NCPartition& p, std::size_t block);

/// A morphism (p; φ_1,…,φ_l) of the tubular category, typed by its domain and
/// codomain. Inner morphisms follow the canonical block order of p: φ_i runs
/// from block_domain(dom,p,i) to block_codomain(cod,p,i).
class TubeMorphism {
public:
    /// The unit morphism on the unit object.
    TubeMorphism() = default;

    /// A base-category partition p ∈ NC(m,n) as a morphism leaf(m) → leaf(n).
    static TubeMorphism base(NCPartition p);
    /// Checks every typing constraint; throws Error(ShapeMismatch).
    static TubeMorphism nested(TubeObject domain, TubeObject codomain, NCPartition outer,
                               std::vector<TubeMorphism> inner);

    const TubeObject& domain() const noexcept { return domain_; }
    const TubeObject& codomain() const noexcept { return codomain_; }
    const NCPartition& outer() const noexcept { return outer_; }
    const std::vector<TubeMorphism>& inner() const noexcept { return inner_; }

    bool is_base() const noexcept { return domain_.is_leaf() && codomain_.is_leaf(); }
    /// Blocks counted at every nesting level.
    int total_blocks() const noexcept;

    bool operator==(const TubeMorphism&) const = default;
    std::strong_ordering operator<=>(const TubeMorphism& other) const;

private:
    TubeObject domain_;
    TubeObject codomain_;
    NCPartition outer_;
    std::vector<TubeMorphism> inner_;
};

struct TubeComposite {
    TubeMorphism morphism;
    int removed = 0;  // deleted blocks over all nesting levels
};

/// rho ∘ pi. Throws Error(ShapeMismatch) unless pi.codomain() == rho.domain().
TubeComposite compose(const TubeMorphism& rho, const TubeMorphism& pi);
TubeMorphism tensor(const TubeMorphism& a, const TubeMorphism& b);
TubeMorphism tensor_all(std::span<const TubeMorphism> morphisms);
TubeMorphism adjoint(const TubeMorphism& rho);
/// Ψ(φ) = (id_1; φ).
TubeMorphism psi(const TubeMorphism& rho);
TubeMorphism identity(const TubeObject& a);

/// P_{α_1,…,α_n}: Ψ(α_1⊗…⊗α_n) → Ψ(α_1)⊗…⊗Ψ(α_n). Throws Error(EmptyList).
TubeMorphism p_morphism(std::span<const TubeObject> objects);

/// η_α: unit → α ⊗ dual(α).
TubeMorphism eta(const TubeObject& a);
/// ε_α: dual(α) ⊗ α → unit.
TubeMorphism epsilon(const TubeObject& a);

/// Moves the leftmost (resp. rightmost) upper opening to the bottom.
/// Throws Error(NothingToRotate) when the domain has no openings.
TubeMorphism rotate_left(const TubeMorphism& rho);
TubeMorphism rotate_right(const TubeMorphism& rho);
/// Inverses: σ ↦ L(σ*)* and σ ↦ R(σ*)*.
TubeMorphism unrotate_left(const TubeMorphism& sigma);
TubeMorphism unrotate_right(const TubeMorphism& sigma);

struct SDecomposition {
    TubeMorphism isometry;    // α → ψ_{ℓ_1} ⊗ … ⊗ ψ_{ℓ_k}
    std::vector<int> levels;  // ℓ_1,…,ℓ_k
};

/// The isometric embedding S_α into a tensor of ψ-levels with S*∘S = id.
SDecomposition s_decomposition(const TubeObject& a);

/// η_{Ψ(α)} == P_{α,ᾱ} ∘ Ψ(η_α) ∘ cap, with no deleted blocks at any step.
bool eta_generator_identity_holds(const TubeObject& a);

/// (p;φ) == P_{β_1⊗…⊗β_n} ∘ Ψ(φ) ∘ P*_{α_1⊗…⊗α_m} for the one-block outer
/// partition p, with no deleted blocks at any step. An empty side uses the
/// cap (or cup) in place of P. Throws Error(ShapeMismatch) if φ is not typed
/// α_1⊗…⊗α_m → β_1⊗…⊗β_n.
bool single_block_generator_identity_holds(std::span<const TubeObject> alphas, std::span<const TubeObject> betas,
                                           const TubeMorphism& phi);

/// Both identities above, with the η identity checked for every α_i and β_j.
bool generator_identities_check(std::span<const TubeObject> alphas, std::span<const TubeObject> betas,
                                const TubeMorphism& phi);

inline constexpr int kDefaultHomPointBound = 12;

/// Every morphism α → β: outer partitions in enumeration order, then the
/// cartesian product of the inner enumerations (first block most
/// significant). Throws BoundExceeded when the two objects together carry more
/// than `bound` vertices.
std::vector<TubeMorphism> enumerate_hom(const TubeObject& a, const TubeObject& b,
                                        int bound = kDefaultHomPointBound);

}  // namespace tubecat
