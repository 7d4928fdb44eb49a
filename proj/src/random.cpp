#include "tubecat/random.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "tubecat/error.hpp"

namespace tubecat {

namespace {

const std::vector<NCPartition>& cached_nc(int m, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<NCPartition>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), enumerate_nc(m, n)).first;
    return it->second;
}

TubeObject grow(std::mt19937_64& rng, int& budget, int height, int max_arity) {
    if (height == 0 || budget == 0) return TubeObject();
    const int k = uniform_int(rng, 0, std::min(budget, max_arity));
    budget -= k;
    std::vector<TubeObject> children;
    for (int i = 0; i < k; ++i) children.push_back(grow(rng, budget, height - 1, max_arity));
    return TubeObject::node(std::move(children));
}

// Objects with exactly n letters and height ≤ h.
std::vector<TubeObject> objects_of_size(int n, int h) {
    if (n == 0) return {TubeObject()};
    if (h == 0) return {};
    std::vector<TubeObject> out;
    for (int k = 1; k <= n; ++k) {
        for (const auto& first : objects_of_size(k - 1, h - 1)) {
            for (const auto& rest : objects_of_size(n - k, h)) {
                std::vector<TubeObject> children{first};
                children.insert(children.end(), rest.children().begin(), rest.children().end());
                out.push_back(TubeObject::node(std::move(children)));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<TubeObject> enumerate_objects(int max_vertices, int max_height) {
    std::vector<TubeObject> out;
    for (int n = 0; n <= max_vertices; ++n) {
        auto level = objects_of_size(n, max_height);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    // Explicit reduction keeps draws identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

TubeObject random_object(std::mt19937_64& rng, int max_vertices, int max_height, int max_arity) {
    int budget = uniform_int(rng, 0, max_vertices);
    return grow(rng, budget, max_height, max_arity);
}

TubeMorphism random_morphism(const TubeObject& a, const TubeObject& b, std::mt19937_64& rng) {
    const auto& all = cached_nc(a.arity(), b.arity());
    const NCPartition& p = all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
    std::vector<TubeMorphism> inner;
    for (std::size_t blk = 0; blk < p.block_count(); ++blk) {
        inner.push_back(random_morphism(block_domain(a, p, blk), block_codomain(b, p, blk), rng));
    }
    return TubeMorphism::nested(a, b, p, std::move(inner));
}

}  // namespace tubecat
