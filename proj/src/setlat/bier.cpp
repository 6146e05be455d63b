#include <stdexcept>

#include "enumerate.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

namespace {

// acc += coeff * <t>_r
void add_up(FieldVector& acc, const Subset& t, int r, const Ffe& coeff) {
    const int n = t.n();
    detail::for_each_superset(t.mask(), n, r, [&](std::uint64_t sup) {
        auto& slot = acc[subset_index(Subset(n, sup))];
        slot += coeff;
    });
}

Subset prefix_set(int n, int k) {
    return {n, k <= 0 ? 0 : ((std::uint64_t{1} << k) - 1)};
}

void check_bracket_args(const Subset& x, int m, int r) {
    const int n = x.n();
    if (m < 1 || 2 * m - 1 > n) throw std::invalid_argument("bracket requires 1 <= m and 2m-1 <= n");
    if (m + x.size() > r || r > n) throw std::invalid_argument("bracket requires m + |X| <= r <= n");
    int k = m + 1;
    for (int e : x.elements()) {
        if (e < 2 * k) throw std::invalid_argument("bracket: X must satisfy x_i >= 2i past position m");
        ++k;
    }
}

} // namespace

FieldVector bier_vector(const Subset& a, int r, const Field& field) {
    if (a.size() > r || r > a.n()) throw std::invalid_argument("bier_vector requires |A| <= r <= n");
    FieldVector v = zero_vector(field, binom64(a.n(), r));
    add_up(v, a, r, field.one());
    return v;
}

ExactMatrix bier_basis_matrix(int n, int r, const Field& field) {
    if (r < 0 || 2 * r > n) throw std::invalid_argument("bier_basis_matrix requires 0 <= r <= n/2");
    const std::size_t size = binom64(n, r);
    ExactMatrix m(field, size, size);
    std::size_t row = 0;
    for (int j = 0; j <= r; ++j) {
        for (const auto& a : full_rank_sets(n, j)) {
            detail::for_each_superset(a.mask(), n, r, [&](std::uint64_t sup) {
                m.set_int(row, subset_index(Subset(n, sup)), 1);
            });
            ++row;
        }
    }
    return m;
}

FieldVector bier_identity_residual(const Subset& a, int r, int ell, const Field& field) {
    const int n = a.n();
    const int j = a.size();
    if (j >= r || r > n) throw std::invalid_argument("bier_identity_residual requires |A| < r <= n");
    if (ell < 1 || ell > r - j) throw std::invalid_argument("bier_identity_residual requires 1 <= ell <= r - |A|");

    FieldVector acc = zero_vector(field, binom64(n, r));
    add_up(acc, a, r, field.embed(binomial(r - j, ell)));
    const std::uint64_t ground = (std::uint64_t{1} << n) - 1;
    for (int i = 1; i <= ell; ++i) {
        BigInt c = binomial(r - j - i, ell - i);
        if (i % 2) c = -c;
        const Ffe coeff = field.embed(c);
        detail::for_each_submask(ground & ~a.mask(), i, [&](std::uint64_t add) {
            add_up(acc, Subset(n, a.mask() | add), r, coeff);
        });
    }
    return acc;
}

FieldVector bracket(const Subset& u, const Subset& x, int m, int r, const Field& field) {
    check_bracket_args(x, m, r);
    const int n = x.n();
    const Subset low = prefix_set(n, 2 * m - 1);
    if (!u.is_subset_of(low) || u.size() > m) throw std::invalid_argument("bracket requires U ⊆ [2m-1], |U| <= m");

    FieldVector acc = zero_vector(field, binom64(n, r));
    detail::for_each_submask(low.mask() & ~u.mask(), m - u.size(), [&](std::uint64_t add) {
        add_up(acc, Subset(n, u.mask() | add | x.mask()), r, field.one());
    });
    return acc;
}

FieldVector bracket_alternating_sum(const Subset& i, const Subset& x, int m, int r, const Field& field) {
    const int n = x.n();
    if (i.size() != m || !i.is_subset_of(prefix_set(n, 2 * m - 1))) {
        throw std::invalid_argument("bracket_alternating_sum requires I ⊆ [2m-1] with |I| = m");
    }
    FieldVector acc = zero_vector(field, binom64(n, r));
    for (int k = 0; k <= m; ++k) {
        const Ffe sign = field.embed(k % 2 ? -1 : 1);
        detail::for_each_submask(i.mask(), k, [&](std::uint64_t u) {
            add_scaled(acc, sign, bracket(Subset(n, u), x, m, r, field));
        });
    }
    return acc;
}

ExactMatrix bier_span_columns(int n, int r, int t, const Field& field) {
    if (t < 0 || t > r || 2 * t > n) throw std::invalid_argument("bier_span_columns requires 0 <= t <= min(r, n/2)");
    std::vector<Subset> sets;
    for (int j = 0; j <= t; ++j) {
        for (const auto& a : full_rank_sets(n, j)) sets.push_back(a);
    }
    ExactMatrix m(field, binom64(n, r), sets.size());
    for (std::size_t col = 0; col < sets.size(); ++col) {
        detail::for_each_superset(sets[col].mask(), n, r, [&](std::uint64_t sup) {
            m.set_int(subset_index(Subset(n, sup)), col, 1);
        });
    }
    return m;
}

bool diagonal_form_check(int n, int r, int s, const Field& field) {
    if (s < 0 || s > r || 2 * r > n) throw std::invalid_argument("diagonal_form_check requires s <= r <= n/2");
    const ExactMatrix w = build_w(n, r, s, field);
    for (int j = 0; j <= s; ++j) {
        const Ffe coeff = field.embed(binomial(r - j, s - j));
        for (const auto& a : full_rank_sets(n, j)) {
            FieldVector expected = zero_vector(field, w.rows());
            add_scaled(expected, coeff, bier_vector(a, r, field));
            if (!(w.apply(bier_vector(a, s, field)) == expected)) return false;
        }
    }
    return true;
}

} // namespace incmat
