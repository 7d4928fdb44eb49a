#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace tubecat::detail {

using Failure = std::pair<std::size_t, std::string>;

/// Runs f(0..count-1) and returns the failure with the smallest index, so the
/// result does not depend on the thread count. f returns a message on failure;
/// an escaping exception counts as a failure.
template <typename F>
std::optional<Failure> first_failure(std::size_t count, int threads, F&& f) {
    auto guarded = [&](std::size_t i) -> std::optional<std::string> {
        try {
            return f(i);
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            if (auto msg = guarded(i)) return Failure{i, std::move(*msg)};
        }
        return std::nullopt;
    }
    // Strided split: each worker's first failure is its smallest failing index.
    std::vector<std::optional<Failure>> found(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < count; i += workers) {
                    if (auto msg = guarded(i)) {
                        found[t] = Failure{i, std::move(*msg)};
                        return;
                    }
                }
            });
        }
    }
    std::optional<Failure> best;
    for (auto& f2 : found) {
        if (f2 && (!best || f2->first < best->first)) best = std::move(f2);
    }
    return best;
}

}  // namespace tubecat::detail
