#include "ubkit/combinatorics.hpp"

#include <stdexcept>

namespace ubkit {

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || n < 0) {
        throw std::invalid_argument("for_each_combination: negative arguments");
    }
    if (k > n) {
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_combination(n, k, [&](const std::vector<int>& idx) { out.push_back(idx); });
    return out;
}

}  // namespace ubkit
