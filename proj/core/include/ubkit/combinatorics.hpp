#pragma once

#include <functional>
#include <vector>

namespace ubkit {

/// Calls fn(indices) for every size-k subset of {0,...,n-1}, lexicographic.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace ubkit
