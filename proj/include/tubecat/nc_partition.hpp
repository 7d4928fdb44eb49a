#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tubecat {

enum class Side { Upper, Lower };

/// A boundary point addressed by row and 1-based left-to-right position.
struct PointRef {
    Side side = Side::Upper;
    int position = 1;

    auto operator<=>(const PointRef&) const = default;
};

/// Blocks given by the positions of their points rather than by labels.
struct PointBlock {
    std::vector<int> upper;  // 1-based positions on the upper row
    std::vector<int> lower;  // 1-based positions on the lower row
};

/// A non-crossing partition of m upper and n lower points.
///
/// Labels follow the circular convention: upper position i carries label i,
/// lower position j carries label m+n+1-j. Blocks are sorted label sets and
/// are themselves ordered by their minimal label, so every partition has a
/// single stored form. Instances are immutable.
class NCPartition {
public:
    using Block = std::vector<int>;

    /// The empty partition in NC(0,0).
    NCPartition() = default;

    /// Checks that `blocks` partitions {1..m+n} without crossings and returns
    /// the canonical form. Throws Error(NotAPartition) or CrossingError.
    static NCPartition validate(int m, int n, std::vector<Block> blocks);

    /// Builds a partition from position-addressed blocks. The second member
    /// maps canonical block index -> index into `blocks`.
    static std::pair<NCPartition, std::vector<std::size_t>> from_points(
        int m, int n, const std::vector<PointBlock>& blocks);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    int label(PointRef point) const;
    PointRef point(int label) const;

    // Positions of a block's points, ascending (left to right).
    const std::vector<int>& upper_positions(std::size_t block) const { return points_[block].upper; }
    const std::vector<int>& lower_positions(std::size_t block) const { return points_[block].lower; }

    std::size_t block_of(PointRef point) const;

    bool operator==(const NCPartition& other) const {
        return m_ == other.m_ && n_ == other.n_ && blocks_ == other.blocks_;
    }
    std::strong_ordering operator<=>(const NCPartition& other) const {
        if (auto c = m_ <=> other.m_; c != 0) return c;
        if (auto c = n_ <=> other.n_; c != 0) return c;
        return blocks_ <=> other.blocks_;
    }

private:
    NCPartition(int m, int n, std::vector<Block> blocks);

    int m_ = 0;
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<PointBlock> points_;
    std::vector<std::size_t> block_of_label_;  // index label-1
};

/// First crossing quadruple (x1,x2,x3,x4) found in circular label order, if any.
std::optional<std::array<int, 4>> find_crossing(const std::vector<NCPartition::Block>& blocks);

struct NCComposite {
    NCPartition partition;
    int removed = 0;  // blocks touching neither outer row
};

/// q ∘ p: p on top, q below. Requires p.n() == q.m().
NCComposite compose(const NCPartition& q, const NCPartition& p);

/// Horizontal juxtaposition, p to the left of q.
NCPartition tensor(const NCPartition& p, const NCPartition& q);

/// Reflection in the horizontal axis.
NCPartition adjoint(const NCPartition& p);

NCPartition identity_partition(int m);
NCPartition single_block(int m, int n);
NCPartition cap();
NCPartition cup();
NCPartition pants();
NCPartition shirt();
NCPartition paircap();
NCPartition paircup();
/// Nested arcs {i, 2m+1-i} on 2m lower points.
NCPartition eta(int m);
/// Nested arcs {i, 2m+1-i} on 2m upper points.
NCPartition epsilon(int m);

inline constexpr int kDefaultNcPointBound = 12;

/// Every partition in NC(m,n), generated by placing the block of the first
/// label and recursing into the gaps. Throws BoundExceeded if m+n > bound.
std::vector<NCPartition> enumerate_nc(int m, int n, int bound = kDefaultNcPointBound);

}  // namespace tubecat
