#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace incmat::detail {

/// Calls f(sub) for every k-element submask of mask, in increasing order
/// of the submask read as a sorted element tuple.
template <class F>
void for_each_submask(std::uint64_t mask, int k, F&& f) {
    std::vector<std::uint64_t> bits;
    for (std::uint64_t m = mask; m; m &= m - 1) bits.push_back(m & -m);
    const int total = static_cast<int>(bits.size());
    if (k < 0 || k > total) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        std::uint64_t sub = 0;
        for (int i : c) sub |= bits[i];
        f(sub);
        int i = k - 1;
        while (i >= 0 && c[i] == total - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

/// Calls f(sup) for every superset of t inside [n] with exactly r elements.
template <class F>
void for_each_superset(std::uint64_t t, int n, int r, F&& f) {
    const std::uint64_t ground = n == 64 ? ~0ULL : ((std::uint64_t{1} << n) - 1);
    const int extra = r - std::popcount(t);
    for_each_submask(ground & ~t, extra, [&](std::uint64_t add) { f(t | add); });
}

} // namespace incmat::detail
