#pragma once

#include <compare>
#include <vector>

#include "tubecat/tube.hpp"

namespace tubecat::detail {

/// Preorder vertex table of an object; vertex 0 is the root, and vertex v>0
/// carries digit v-1 of a generalised word of this shape.
struct FlatTree {
    std::vector<const TubeObject*> node;
    std::vector<std::vector<int>> children;

    explicit FlatTree(const TubeObject& root) { add(root); }

private:
    int add(const TubeObject& t) {
        const int id = static_cast<int>(node.size());
        node.push_back(&t);
        children.emplace_back();
        for (const auto& c : t.children()) {
            const int cid = add(c);
            children[static_cast<std::size_t>(id)].push_back(cid);
        }
        return id;
    }
};

/// A vertex of one of several trees taking part in a gluing.
struct Slot {
    int tree = 0;
    int vertex = 0;

    auto operator<=>(const Slot&) const = default;
};

}  // namespace tubecat::detail
