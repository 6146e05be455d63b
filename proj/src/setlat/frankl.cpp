#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "enumerate.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

FranklRank frankl_rank(const Subset& a) {
    int excess = 0;
    int ell = 0;
    for (int i = 1; i <= a.n(); ++i) {
        excess += a.contains(i) ? 1 : -1;
        ell = std::max(ell, excess);
    }
    return {a.size() - ell, ell};
}

bool has_full_frankl_rank(const Subset& a) { return frankl_rank(a).ell == 0; }

std::vector<Subset> full_rank_sets(int n, int j) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("S(j) requires 0 <= j <= n/2");
    std::vector<Subset> out;
    for (const auto& a : k_subsets(n, j)) {
        if (has_full_frankl_rank(a)) out.push_back(a);
    }
    return out;
}

int m_parameter(const Subset& a) {
    const auto elems = a.elements();
    for (int m = static_cast<int>(elems.size()); m >= 1; --m) {
        if (elems[m - 1] < 2 * m) return m;
    }
    return 0;
}

SetFamily shadow(const SetFamily& f, int s) {
    if (s < 0 || s > f.r()) throw std::invalid_argument("shadow requires 0 <= s <= r");
    std::vector<std::uint64_t> idx;
    for (const auto& member : f.subsets()) {
        detail::for_each_submask(member.mask(), s, [&](std::uint64_t sub) {
            idx.push_back(subset_index(Subset(f.n(), sub)));
        });
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return {f.n(), s, std::move(idx)};
}

double lovasz_x(const BigInt& size, int r) {
    if (size < 1) throw std::invalid_argument("lovasz_x requires size >= 1");
    if (r < 1) throw std::invalid_argument("lovasz_x requires r >= 1");
    const double target = size.get_d();
    auto falling = [r](double x) {
        double v = 1.0;
        for (int i = 0; i < r; ++i) v *= (x - i) / (i + 1);
        return v;
    };
    // falling() is increasing on [r-1, inf) and equals 1 at x = r.
    double lo = r;
    double hi = r + 1.0;
    while (falling(hi) < target) hi = r + 2.0 * (hi - r);
    for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
        const double mid = lo + (hi - lo) / 2;
        (falling(mid) < target ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2;
}

} // namespace incmat
