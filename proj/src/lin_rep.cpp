#include "tubecat/lin_rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "flat_tree.hpp"
#include "tubecat/error.hpp"

namespace tubecat {

Alphabet::Alphabet(int size) : size_(size) {
    if (size < 1) throw Error(ErrorKind::ShapeMismatch, "alphabet needs at least one letter");
}

// ------------------------------------------------------------------ words

TubeObject GeneralizedWord::shape() const {
    std::vector<TubeObject> children;
    for (const auto& [letter, sub] : entries) children.push_back(sub.shape());
    return TubeObject::node(std::move(children));
}

namespace {

void collect_letters(const GeneralizedWord& w, std::vector<int>& out) {
    for (const auto& [letter, sub] : w.entries) {
        out.push_back(letter);
        collect_letters(sub, out);
    }
}

GeneralizedWord build_word(const TubeObject& shape, std::span<const int> letters, std::size_t& pos) {
    GeneralizedWord w;
    for (const auto& child : shape.children()) {
        const int letter = letters[pos++];
        GeneralizedWord sub = build_word(child, letters, pos);
        w.entries.emplace_back(letter, std::move(sub));
    }
    return w;
}

}  // namespace

std::vector<int> GeneralizedWord::letters() const {
    std::vector<int> out;
    collect_letters(*this, out);
    return out;
}

GeneralizedWord GeneralizedWord::from_letters(const TubeObject& shape, std::span<const int> letters) {
    if (static_cast<int>(letters.size()) != shape.vertex_count()) {
        throw Error(ErrorKind::ShapeMismatch, "letter count does not match word shape");
    }
    std::size_t pos = 0;
    return build_word(shape, letters, pos);
}

GeneralizedWord GeneralizedWord::plain(std::span<const int> letters) {
    GeneralizedWord w;
    for (int x : letters) w.entries.emplace_back(x, GeneralizedWord{});
    return w;
}

GeneralizedWord GeneralizedWord::concat(const GeneralizedWord& a, const GeneralizedWord& b) {
    GeneralizedWord w = a;
    w.entries.insert(w.entries.end(), b.entries.begin(), b.entries.end());
    return w;
}

WordSpace::WordSpace(TubeObject shape, Alphabet alphabet)
    : shape_(std::move(shape)), alphabet_(alphabet), length_(shape_.vertex_count()), dimension_(1) {
    const auto radix = static_cast<std::uint64_t>(alphabet_.size());
    for (int i = 0; i < length_; ++i) {
        if (dimension_ > (std::numeric_limits<std::uint64_t>::max() >> 2) / radix) {
            throw Error(ErrorKind::BoundExceeded, "word space dimension overflows");
        }
        dimension_ *= radix;
    }
}

std::uint64_t WordSpace::encode_letters(std::span<const int> letters) const {
    if (static_cast<int>(letters.size()) != length_) throw Error(ErrorKind::ShapeMismatch, "word length mismatch");
    std::uint64_t idx = 0;
    for (int x : letters) {
        if (x < 0 || x >= alphabet_.size()) throw Error(ErrorKind::ShapeMismatch, "letter outside alphabet");
        idx = idx * static_cast<std::uint64_t>(alphabet_.size()) + static_cast<std::uint64_t>(x);
    }
    return idx;
}

std::vector<int> WordSpace::decode_letters(std::uint64_t index) const {
    if (index >= dimension_) throw Error(ErrorKind::ShapeMismatch, "word index out of range");
    std::vector<int> letters(static_cast<std::size_t>(length_));
    const auto radix = static_cast<std::uint64_t>(alphabet_.size());
    for (int i = length_ - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(index % radix);
        index /= radix;
    }
    return letters;
}

std::uint64_t WordSpace::encode(const GeneralizedWord& w) const {
    if (w.shape() != shape_) throw Error(ErrorKind::ShapeMismatch, "word has the wrong shape");
    return encode_letters(w.letters());
}

GeneralizedWord WordSpace::decode(std::uint64_t index) const {
    return GeneralizedWord::from_letters(shape_, decode_letters(index));
}

std::uint64_t default_dimension_bound() {
    if (const char* env = std::getenv("TUBECAT_BOUND")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 4096;
}

// ------------------------------------------------------------------ delta

bool delta_p(const NCPartition& p, std::span<const int> upper, std::span<const int> lower) {
    if (static_cast<int>(upper.size()) != p.m() || static_cast<int>(lower.size()) != p.n()) {
        throw Error(ErrorKind::ShapeMismatch, "word lengths do not match the partition");
    }
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        int letter = -1;
        auto agree = [&](int x) {
            if (letter < 0) letter = x;
            return letter == x;
        };
        for (int pos : p.upper_positions(b)) {
            if (!agree(upper[static_cast<std::size_t>(pos - 1)])) return false;
        }
        for (int pos : p.lower_positions(b)) {
            if (!agree(lower[static_cast<std::size_t>(pos - 1)])) return false;
        }
    }
    return true;
}

bool delta_rho(const TubeMorphism& rho, const GeneralizedWord& v, const GeneralizedWord& w) {
    if (v.shape() != rho.domain() || w.shape() != rho.codomain()) {
        throw Error(ErrorKind::ShapeMismatch, "words do not match the morphism's domain and codomain");
    }
    std::vector<int> x, y;
    for (const auto& e : v.entries) x.push_back(e.first);
    for (const auto& e : w.entries) y.push_back(e.first);
    const auto& p = rho.outer();
    if (!delta_p(p, x, y)) return false;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        GeneralizedWord u, z;
        for (int pos : p.upper_positions(b)) u = GeneralizedWord::concat(u, v.entries[static_cast<std::size_t>(pos - 1)].second);
        for (int pos : p.lower_positions(b)) z = GeneralizedWord::concat(z, w.entries[static_cast<std::size_t>(pos - 1)].second);
        if (!delta_rho(rho.inner()[b], u, z)) return false;
    }
    return true;
}

// ----------------------------------------------------------------- matrix

namespace {

struct FlatBlock {
    std::vector<int> dom;  // digit positions in domain words
    std::vector<int> cod;  // digit positions in codomain words
};

void flatten(const TubeMorphism& mor, const std::vector<int>& top, const std::vector<int>& bottom,
             const detail::FlatTree& d, const detail::FlatTree& c, std::vector<FlatBlock>& out) {
    std::vector<int> uppers, lowers;
    for (int v : top) {
        for (int ch : d.children[static_cast<std::size_t>(v)]) uppers.push_back(ch);
    }
    for (int v : bottom) {
        for (int ch : c.children[static_cast<std::size_t>(v)]) lowers.push_back(ch);
    }
    const auto& p = mor.outer();
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        FlatBlock fb;
        std::vector<int> sub_top, sub_bottom;
        for (int pos : p.upper_positions(b)) {
            const int vtx = uppers[static_cast<std::size_t>(pos - 1)];
            fb.dom.push_back(vtx - 1);
            sub_top.push_back(vtx);
        }
        for (int pos : p.lower_positions(b)) {
            const int vtx = lowers[static_cast<std::size_t>(pos - 1)];
            fb.cod.push_back(vtx - 1);
            sub_bottom.push_back(vtx);
        }
        out.push_back(std::move(fb));
        flatten(mor.inner()[b], sub_top, sub_bottom, d, c, out);
    }
}

}  // namespace

IntMatrix matrix_of(const TubeMorphism& rho, const Alphabet& alphabet, std::uint64_t bound) {
    const WordSpace dom_space(rho.domain(), alphabet);
    const WordSpace cod_space(rho.codomain(), alphabet);
    if (dom_space.dimension() > bound || cod_space.dimension() > bound) {
        throw Error(ErrorKind::BoundExceeded, "matrix side " +
                                                  std::to_string(std::max(dom_space.dimension(), cod_space.dimension())) +
                                                  " exceeds bound " + std::to_string(bound));
    }
    const detail::FlatTree d(rho.domain()), c(rho.codomain());
    std::vector<FlatBlock> blocks;
    flatten(rho, {0}, {0}, d, c, blocks);

    const int radix = alphabet.size();
    const auto cols = static_cast<std::size_t>(dom_space.dimension());
    std::vector<std::vector<IntMatrix::Entry>> columns(cols);
    std::vector<int> cod_digits(static_cast<std::size_t>(rho.codomain().vertex_count()), 0);
    std::vector<std::size_t> free_blocks;
    std::vector<int> digits(static_cast<std::size_t>(rho.domain().vertex_count()), 0);
    for (std::size_t col = 0; col < cols; ++col) {
        if (col) {
            // Next domain word: increment the least significant letter.
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (++digits[i] < radix) break;
                digits[i] = 0;
            }
        }
        free_blocks.clear();
        bool ok = true;
        for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
            const auto& fb = blocks[b];
            if (fb.dom.empty()) {
                free_blocks.push_back(b);
                continue;
            }
            const int letter = digits[static_cast<std::size_t>(fb.dom.front())];
            for (int pos : fb.dom) ok = ok && digits[static_cast<std::size_t>(pos)] == letter;
            for (int pos : fb.cod) cod_digits[static_cast<std::size_t>(pos)] = letter;
        }
        if (!ok) continue;
        // Blocks without domain points take every letter independently.
        std::vector<int> choice(free_blocks.size(), 0);
        auto& out = columns[col];
        while (true) {
            for (std::size_t i = 0; i < free_blocks.size(); ++i) {
                for (int pos : blocks[free_blocks[i]].cod) cod_digits[static_cast<std::size_t>(pos)] = choice[i];
            }
            out.push_back({static_cast<std::size_t>(cod_space.encode_letters(cod_digits)), 1});
            std::size_t i = 0;
            for (; i < choice.size(); ++i) {
                if (++choice[i] < radix) break;
                choice[i] = 0;
            }
            if (i == choice.size()) break;
        }
        std::sort(out.begin(), out.end());
    }
    return IntMatrix::from_columns(static_cast<std::size_t>(cod_space.dimension()), std::move(columns));
}

std::size_t hom_span_rank(const TubeObject& a, const TubeObject& b, const Alphabet& alphabet, int hom_bound,
                          std::uint64_t bound) {
    const std::vector<TubeMorphism> hom = enumerate_hom(a, b, hom_bound);
    std::vector<IntMatrix::Triplet> rows;
    std::size_t width = 0;
    for (std::size_t r = 0; r < hom.size(); ++r) {
        const IntMatrix t = matrix_of(hom[r], alphabet, bound);
        width = t.rows() * t.cols();
        for (const auto& [i, j, v] : t.triplets()) rows.emplace_back(r, i * t.cols() + j, v);
    }
    return rank_exact(IntMatrix::from_triplets(hom.size(), width, std::move(rows)));
}

}  // namespace tubecat
