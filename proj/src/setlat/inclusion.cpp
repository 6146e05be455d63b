#include <stdexcept>

#include "enumerate.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

ExactMatrix build_w(int n, int r, int s, const Field& field, const std::optional<SetFamily>& f) {
    if (s < 0 || s > r || r > n) throw std::invalid_argument("build_w requires 0 <= s <= r <= n");
    if (f && (f->n() != n || f->r() != r)) throw std::invalid_argument("build_w: family has wrong n or r");
    const SetFamily rows = f ? *f : SetFamily::all(n, r);
    ExactMatrix w(field, rows.size(), binom64(n, s));
    std::size_t i = 0;
    for (auto index : rows.members()) {
        const Subset row = subset_at(n, r, index);
        detail::for_each_submask(row.mask(), s, [&](std::uint64_t sub) {
            w.set_int(i, subset_index(Subset(n, sub)), 1);
        });
        ++i;
    }
    return w;
}

BigInt wilson_rank(int n, int r, int s, std::uint32_t characteristic) {
    if (s < 0 || s > r) throw std::invalid_argument("wilson_rank requires 0 <= s <= r");
    if (n < r + s) throw RefusedError("wilson_rank: formula needs n >= r + s");
    BigInt total = 0;
    for (int j = 0; j <= s; ++j) {
        const BigInt c = binomial(r - j, s - j);
        if (characteristic != 0 && c % characteristic == 0) continue;
        total += binomial(n, j) - binomial(n, j - 1);
    }
    return total;
}

} // namespace incmat
