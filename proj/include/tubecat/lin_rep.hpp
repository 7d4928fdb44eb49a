#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tubecat/int_matrix.hpp"
#include "tubecat/tube.hpp"

namespace tubecat {

/// A finite alphabet X with letters 0..size-1.
class Alphabet {
public:
    explicit Alphabet(int size);
    int size() const noexcept { return size_; }

private:
    int size_;
};

/// Generalised word of a given shape: one (letter, subword) pair per opening.
struct GeneralizedWord {
    std::vector<std::pair<int, GeneralizedWord>> entries;

    TubeObject shape() const;
    /// Letters in preorder (each letter before the letters of its subword).
    std::vector<int> letters() const;

    static GeneralizedWord from_letters(const TubeObject& shape, std::span<const int> letters);
    /// Plain word of a base-category shape.
    static GeneralizedWord plain(std::span<const int> letters);
    /// Concatenation, matching the bijection X^{α⊗β} ≅ X^α × X^β.
    static GeneralizedWord concat(const GeneralizedWord& a, const GeneralizedWord& b);

    bool operator==(const GeneralizedWord&) const = default;
};

/// Basis index set X^α of H_α with a mixed-radix codec: letters are digits in
/// preorder, most significant first, so tensor products index like kron.
class WordSpace {
public:
    WordSpace(TubeObject shape, Alphabet alphabet);

    const TubeObject& shape() const noexcept { return shape_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint64_t dimension() const noexcept { return dimension_; }

    std::uint64_t encode(const GeneralizedWord& w) const;
    GeneralizedWord decode(std::uint64_t index) const;
    std::uint64_t encode_letters(std::span<const int> letters) const;
    std::vector<int> decode_letters(std::uint64_t index) const;

private:
    TubeObject shape_;
    Alphabet alphabet_;
    int length_;
    std::uint64_t dimension_;
};

/// Default limit on matrix side lengths; the TUBECAT_BOUND environment
/// variable overrides it.
std::uint64_t default_dimension_bound();

/// δ_p with both rows read left to right.
bool delta_p(const NCPartition& p, std::span<const int> upper, std::span<const int> lower);

/// δ_ρ evaluated recursively: δ_p on the outer letters, then each block's inner
/// morphism on its own openings' subwords.
bool delta_rho(const TubeMorphism& rho, const GeneralizedWord& v, const GeneralizedWord& w);

/// T_ρ: rows index codomain words, columns index domain words.
IntMatrix matrix_of(const TubeMorphism& rho, const Alphabet& alphabet, std::uint64_t bound = default_dimension_bound());

/// Rank of span{T_ρ : ρ ∈ Hom(α,β)}.
std::size_t hom_span_rank(const TubeObject& a, const TubeObject& b, const Alphabet& alphabet,
                          int hom_bound = kDefaultHomPointBound, std::uint64_t bound = default_dimension_bound());

}  // namespace tubecat
