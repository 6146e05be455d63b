#include <stdexcept>

#include "cache.hpp"

namespace incmat {

ExactMatrix build_wq(int n, int r, int s, std::uint64_t q, const Field& field, const std::optional<QFamily>& f) {
    if (s < 0 || s > r || r > n) throw std::invalid_argument("build_wq requires 0 <= s <= r <= n");
    if (f && (f->n() != n || f->r() != r || f->q() != q)) {
        throw std::invalid_argument("build_wq: family has wrong n, r or q");
    }
    const auto lists = incidence_lists(n, r, s, q);
    const auto cols = detail::shared_catalog(n, s, q);
    std::vector<std::uint64_t> rows;
    if (f) {
        rows = f->members();
    } else {
        rows.resize(lists->size());
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    }
    ExactMatrix w(field, rows.size(), cols->size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto c : lists->at(rows[i])) w.set_int(i, c, 1);
    }
    return w;
}

BigInt fy_rank(int n, int r, int s, std::uint64_t q, std::uint32_t ell) {
    if (s < 0 || s > r) throw std::invalid_argument("fy_rank requires 0 <= s <= r");
    const std::uint32_t p = prime_power(q).p;
    if (ell != 0 && !is_prime(ell)) throw std::invalid_argument("fy_rank: characteristic must be 0 or a prime");
    if (ell == p) throw RefusedError("fy_rank: characteristic equal to p is not covered by the formula");
    if (n < r + s) throw RefusedError("fy_rank: formula needs n >= r + s");
    BigInt total = 0;
    for (int i = 0; i <= s; ++i) {
        if (ell != 0 && gaussian_binomial(r - i, s - i, q) % ell == 0) continue;
        total += gaussian_binomial(n, i, q) - gaussian_binomial(n, i - 1, q);
    }
    return total;
}

FieldVector up_vector(const SubspaceCode& x, int r, const Field& field) {
    x.validate();
    if (x.r > r || r > x.n) throw std::invalid_argument("up_vector requires dim X <= r <= n");
    const auto cat = detail::shared_catalog(x.n, r, x.q);
    const ExactMatrix xm = decode_subspace(x, cat->q_field());
    FieldVector v = zero_vector(field, cat->size());
    for (std::size_t i = 0; i < cat->size(); ++i) {
        if (rank(ExactMatrix::vstack(cat->matrix(i), xm)) == static_cast<std::size_t>(r)) v[i] = field.one();
    }
    return v;
}

} // namespace incmat
