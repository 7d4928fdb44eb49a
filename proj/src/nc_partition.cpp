#include "tubecat/nc_partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "tubecat/error.hpp"
#include "union_find.hpp"

namespace tubecat {

NCPartition::NCPartition(int m, int n, std::vector<Block> blocks)
    : m_(m), n_(n), blocks_(std::move(blocks)) {
    const int total = m_ + n_;
    block_of_label_.assign(static_cast<std::size_t>(total), 0);
    points_.resize(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int label : blocks_[b]) {
            block_of_label_[static_cast<std::size_t>(label - 1)] = b;
            if (label <= m_) {
                points_[b].upper.push_back(label);
            } else {
                points_[b].lower.push_back(total + 1 - label);
            }
        }
        // Lower labels ascend right to left.
        std::reverse(points_[b].lower.begin(), points_[b].lower.end());
    }
}

std::optional<std::array<int, 4>> find_crossing(const std::vector<NCPartition::Block>& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    std::vector<int> owner(static_cast<std::size_t>(total) + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int label : blocks[b]) {
            if (label >= 1 && label <= total) owner[label] = static_cast<int>(b);
        }
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        const auto& block = blocks[a];
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            const int lo = block[i];
            const int hi = block[i + 1];
            for (int x = lo + 1; x < hi; ++x) {
                const int other = owner[x];
                if (other == static_cast<int>(a)) continue;
                const auto& ob = blocks[static_cast<std::size_t>(other)];
                if (ob.front() < lo) return std::array<int, 4>{ob.front(), lo, x, hi};
                if (ob.back() > hi) return std::array<int, 4>{lo, x, hi, ob.back()};
            }
        }
    }
    return std::nullopt;
}

NCPartition NCPartition::validate(int m, int n, std::vector<Block> blocks) {
    if (m < 0 || n < 0) throw Error(ErrorKind::NotAPartition, "negative point count");
    const int total = m + n;
    std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
    for (auto& block : blocks) {
        if (block.empty()) throw Error(ErrorKind::NotAPartition, "empty block");
        std::sort(block.begin(), block.end());
        for (int label : block) {
            if (label < 1 || label > total) {
                throw Error(ErrorKind::NotAPartition, "label " + std::to_string(label) + " out of range");
            }
            if (seen[label]++) {
                throw Error(ErrorKind::NotAPartition, "label " + std::to_string(label) + " repeated");
            }
        }
    }
    for (int label = 1; label <= total; ++label) {
        if (!seen[label]) {
            throw Error(ErrorKind::NotAPartition, "label " + std::to_string(label) + " missing");
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    if (auto w = find_crossing(blocks)) {
        throw CrossingError(*w, "labels " + std::to_string((*w)[0]) + "<" + std::to_string((*w)[1]) + "<" +
                                    std::to_string((*w)[2]) + "<" + std::to_string((*w)[3]) + " cross");
    }
    return NCPartition(m, n, std::move(blocks));
}

std::pair<NCPartition, std::vector<std::size_t>> NCPartition::from_points(int m, int n,
                                                                          const std::vector<PointBlock>& blocks) {
    const int total = m + n;
    std::vector<std::pair<Block, std::size_t>> labelled;
    labelled.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block block;
        for (int pos : blocks[i].upper) block.push_back(pos);
        for (int pos : blocks[i].lower) block.push_back(total + 1 - pos);
        std::sort(block.begin(), block.end());
        labelled.emplace_back(std::move(block), i);
    }
    std::sort(labelled.begin(), labelled.end(),
              [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    std::vector<Block> sorted;
    std::vector<std::size_t> order;
    for (auto& [block, index] : labelled) {
        sorted.push_back(std::move(block));
        order.push_back(index);
    }
    return {validate(m, n, std::move(sorted)), std::move(order)};
}

int NCPartition::label(PointRef point) const {
    if (point.side == Side::Upper) {
        if (point.position < 1 || point.position > m_) throw Error(ErrorKind::ShapeMismatch, "upper position out of range");
        return point.position;
    }
    if (point.position < 1 || point.position > n_) throw Error(ErrorKind::ShapeMismatch, "lower position out of range");
    return m_ + n_ + 1 - point.position;
}

PointRef NCPartition::point(int label) const {
    if (label < 1 || label > m_ + n_) throw Error(ErrorKind::ShapeMismatch, "label out of range");
    if (label <= m_) return {Side::Upper, label};
    return {Side::Lower, m_ + n_ + 1 - label};
}

std::size_t NCPartition::block_of(PointRef point) const {
    return block_of_label_[static_cast<std::size_t>(label(point) - 1)];
}

NCComposite compose(const NCPartition& q, const NCPartition& p) {
    if (p.n() != q.m()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot compose NC(" + std::to_string(q.m()) + "," +
                                                  std::to_string(q.n()) + ") after NC(" + std::to_string(p.m()) +
                                                  "," + std::to_string(p.n()) + ")");
    }
    const std::size_t offset = p.block_count();
    detail::UnionFind uf(offset + q.block_count());
    for (int j = 1; j <= p.n(); ++j) {
        uf.unite(p.block_of({Side::Lower, j}), offset + q.block_of({Side::Upper, j}));
    }
    std::map<std::size_t, PointBlock> classes;
    for (int i = 1; i <= p.m(); ++i) classes[uf.find(p.block_of({Side::Upper, i}))].upper.push_back(i);
    for (int j = 1; j <= q.n(); ++j) classes[uf.find(offset + q.block_of({Side::Lower, j}))].lower.push_back(j);

    const int class_count = static_cast<int>(uf.class_count());
    std::vector<PointBlock> blocks;
    for (auto& [root, pb] : classes) blocks.push_back(std::move(pb));
    const int removed = class_count - static_cast<int>(blocks.size());
    return {NCPartition::from_points(p.m(), q.n(), blocks).first, removed};
}

NCPartition tensor(const NCPartition& p, const NCPartition& q) {
    std::vector<PointBlock> blocks;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        blocks.push_back({p.upper_positions(b), p.lower_positions(b)});
    }
    for (std::size_t b = 0; b < q.block_count(); ++b) {
        PointBlock pb;
        for (int pos : q.upper_positions(b)) pb.upper.push_back(pos + p.m());
        for (int pos : q.lower_positions(b)) pb.lower.push_back(pos + p.n());
        blocks.push_back(std::move(pb));
    }
    return NCPartition::from_points(p.m() + q.m(), p.n() + q.n(), blocks).first;
}

NCPartition adjoint(const NCPartition& p) {
    std::vector<PointBlock> blocks;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        blocks.push_back({p.lower_positions(b), p.upper_positions(b)});
    }
    return NCPartition::from_points(p.n(), p.m(), blocks).first;
}

NCPartition identity_partition(int m) {
    std::vector<PointBlock> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({{i}, {i}});
    return NCPartition::from_points(m, m, blocks).first;
}

NCPartition single_block(int m, int n) {
    if (m + n < 1) throw Error(ErrorKind::NotAPartition, "single block needs at least one point");
    NCPartition::Block block(static_cast<std::size_t>(m + n));
    std::iota(block.begin(), block.end(), 1);
    return NCPartition::validate(m, n, {block});
}

NCPartition cap() { return single_block(0, 1); }
NCPartition cup() { return single_block(1, 0); }
NCPartition pants() { return single_block(1, 2); }
NCPartition shirt() { return single_block(2, 1); }
NCPartition paircap() { return single_block(0, 2); }
NCPartition paircup() { return single_block(2, 0); }

NCPartition eta(int m) {
    std::vector<NCPartition::Block> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({i, 2 * m + 1 - i});
    return NCPartition::validate(0, 2 * m, blocks);
}

NCPartition epsilon(int m) {
    std::vector<NCPartition::Block> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({i, 2 * m + 1 - i});
    return NCPartition::validate(2 * m, 0, blocks);
}

namespace {

using BlockList = std::vector<NCPartition::Block>;

// Non-crossing partitions of the labels {0..len-1}.
const std::vector<BlockList>& nc_of_length(int len) {
    static std::mutex mutex;
    static std::map<int, std::vector<BlockList>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(len); it != memo.end()) return it->second;
    }
    std::vector<BlockList> result;
    if (len == 0) {
        result.push_back({});
    } else {
        // Label 0 is in the first block; `mask` selects its other members.
        const int rest = len - 1;
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            NCPartition::Block first{0};
            for (int i = 0; i < rest; ++i) {
                if (mask & (1u << i)) first.push_back(i + 1);
            }
            // Gaps between consecutive members, and the tail after the last.
            std::vector<std::pair<int, int>> gaps;  // (start, length)
            for (std::size_t k = 0; k < first.size(); ++k) {
                const int start = first[k] + 1;
                const int end = (k + 1 < first.size()) ? first[k + 1] : len;
                if (end > start) gaps.emplace_back(start, end - start);
            }
            std::vector<BlockList> partial{BlockList{first}};
            for (auto [start, glen] : gaps) {
                const auto& sub = nc_of_length(glen);
                std::vector<BlockList> next;
                next.reserve(partial.size() * sub.size());
                for (const auto& prefix : partial) {
                    for (const auto& s : sub) {
                        BlockList combined = prefix;
                        for (const auto& b : s) {
                            NCPartition::Block shifted;
                            for (int x : b) shifted.push_back(x + start);
                            combined.push_back(std::move(shifted));
                        }
                        next.push_back(std::move(combined));
                    }
                }
                partial = std::move(next);
            }
            for (auto& p : partial) result.push_back(std::move(p));
        }
    }
    std::lock_guard lock(mutex);
    return memo.emplace(len, std::move(result)).first->second;
}

}  // namespace

std::vector<NCPartition> enumerate_nc(int m, int n, int bound) {
    if (m < 0 || n < 0) throw Error(ErrorKind::NotAPartition, "negative point count");
    if (m + n > bound) {
        throw Error(ErrorKind::BoundExceeded,
                    "NC(" + std::to_string(m) + "," + std::to_string(n) + ") exceeds point bound " + std::to_string(bound));
    }
    std::vector<NCPartition> out;
    for (const auto& blocks : nc_of_length(m + n)) {
        BlockList labelled = blocks;
        for (auto& b : labelled) {
            for (int& x : b) x += 1;
        }
        out.push_back(NCPartition::validate(m, n, std::move(labelled)));
    }
    return out;
}

}  // namespace tubecat
