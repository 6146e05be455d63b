#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "incmat/linalg.hpp"
#include "incmat/setlat.hpp"
#include "support.hpp"

using namespace incmat;
using testing_support::pascal_binomial;

namespace {

// Maximal excess 2|A ∩ [i]| - i over prefixes, clamped at 0.
int excess_oracle(const Subset& a) {
    int best = 0, count = 0;
    for (int i = 1; i <= a.n(); ++i) {
        count += a.contains(i);
        best = std::max(best, 2 * count - i);
    }
    return best;
}

bool prefix_condition(const Subset& a) {
    int count = 0;
    for (int i = 1; i <= a.n(); ++i) {
        count += a.contains(i);
        if (count > i / 2) return false;
    }
    return true;
}

std::vector<Subset> all_subsets(int n) {
    std::vector<Subset> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
    return out;
}

const std::vector<Field>& test_fields() {
    static const std::vector<Field> f = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
    return f;
}

} // namespace

TEST_CASE("subset enumeration and indexing") {
    const auto sets = k_subsets(5, 2);
    REQUIRE(sets.size() == 10);
    CHECK(sets.front() == Subset::of(5, {1, 2}));
    CHECK(sets[1] == Subset::of(5, {1, 3}));
    CHECK(sets.back() == Subset::of(5, {4, 5}));
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto all = k_subsets(n, k);
            REQUIRE(all.size() == pascal_binomial(n, k));
            for (std::size_t i = 0; i < all.size(); ++i) {
                REQUIRE(subset_index(all[i]) == i);
                REQUIRE(subset_at(n, k, i) == all[i]);
                if (i) REQUIRE(all[i - 1].elements() < all[i].elements());
            }
        }
    }
    CHECK(Subset::parse(7, "1,3,7") == Subset::of(7, {1, 3, 7}));
    CHECK(Subset::of(7, {1, 3, 7}).to_string() == "1,3,7");
    CHECK_THROWS(Subset::parse(5, "1,6"));
    CHECK_THROWS(Subset::parse(5, "1,1"));
    CHECK_THROWS(SetFamily(5, 2, {3, 3}));
    CHECK_THROWS(SetFamily(5, 2, {10}));
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == pascal_binomial(n, k));
    }
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("Frankl rank") {
    CHECK(frankl_rank(Subset(4, 0)).rank == 0);
    CHECK(frankl_rank(Subset(4, 0)).ell == 0);
    const auto a = frankl_rank(Subset::of(4, {1, 2}));
    CHECK(a.rank == 0);
    CHECK(a.ell == 2);
    const auto b = frankl_rank(Subset::of(5, {2, 4}));
    CHECK(b.rank == 2);
    CHECK(b.ell == 0);
    for (int n = 0; n <= 10; ++n) {
        for (const auto& s : all_subsets(n)) {
            const auto fr = frankl_rank(s);
            REQUIRE(fr.ell == excess_oracle(s));
            REQUIRE(fr.rank >= 0);
            REQUIRE(fr.rank <= std::min(s.size(), n - s.size()));
            REQUIRE(has_full_frankl_rank(s) == prefix_condition(s));
        }
    }
}

TEST_CASE("S(j)") {
    CHECK(full_rank_sets(4, 0) == std::vector<Subset>{Subset(4, 0)});
    const std::vector<Subset> s52 = {Subset::of(5, {2, 4}), Subset::of(5, {2, 5}), Subset::of(5, {3, 4}),
                                     Subset::of(5, {3, 5}), Subset::of(5, {4, 5})};
    CHECK(full_rank_sets(5, 2) == s52);
    CHECK(full_rank_sets(6, 3).size() == 5);
    CHECK_THROWS(full_rank_sets(5, 3));
    for (int n = 0; n <= 12; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            const auto expected = pascal_binomial(n, j) - (j ? pascal_binomial(n, j - 1) : 0);
            REQUIRE(full_rank_sets(n, j).size() == expected);
        }
    }
}

TEST_CASE("m parameter") {
    CHECK(m_parameter(Subset::of(5, {2, 4})) == 0);
    CHECK(m_parameter(Subset::of(5, {1, 4})) == 1);
    CHECK(m_parameter(Subset::of(6, {1, 2, 6})) == 2);
    CHECK(m_parameter(Subset(6, 0)) == 0);
    for (int n = 1; n <= 9; ++n) {
        for (const auto& s : all_subsets(n)) {
            const int m = m_parameter(s);
            const auto e = s.elements();
            REQUIRE((m == 0) == has_full_frankl_rank(s));
            if (m > 0) REQUIRE(e[m - 1] < 2 * m);
            for (int i = m + 1; i <= static_cast<int>(e.size()); ++i) REQUIRE(e[i - 1] >= 2 * i);
        }
    }
}

TEST_CASE("shadow") {
    const std::vector<Subset> one = {Subset::of(4, {1, 2})};
    const auto sh = shadow(SetFamily::from_subsets(4, 2, one), 1);
    CHECK(sh.subsets() == std::vector<Subset>{Subset::of(4, {1}), Subset::of(4, {2})});
    CHECK(shadow(SetFamily(7, 3, {}), 2).empty());

    std::vector<Subset> c53;
    for (const auto& s : k_subsets(7, 3)) {
        if (s.is_subset_of(Subset::of(7, {1, 2, 3, 4, 5}))) c53.push_back(s);
    }
    const auto sh2 = shadow(SetFamily::from_subsets(7, 3, c53), 2);
    CHECK(sh2.size() == 10);
    for (const auto& s : sh2.subsets()) CHECK(s.is_subset_of(Subset::of(7, {1, 2, 3, 4, 5})));
}

TEST_CASE("Lovasz x") {
    CHECK(std::abs(lovasz_x(10, 3) - 5.0) < 1e-9);
    CHECK(std::abs(lovasz_x(4, 2) - (1 + std::sqrt(33.0)) / 2) < 1e-9);
    CHECK(std::abs(lovasz_x(1, 2) - 2.0) < 1e-9);
    CHECK_THROWS(lovasz_x(0, 2));
}

TEST_CASE("build_w shape and sums") {
    const Field q = Field::rationals();
    const ExactMatrix w = build_w(3, 2, 1, q);
    CHECK(w.rows() == 3);
    CHECK(w.cols() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        int row = 0, col = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            row += !w.is_zero_at(i, j);
            col += !w.is_zero_at(j, i);
        }
        CHECK(row == 2);
        CHECK(col == 2);
    }
    const ExactMatrix w0 = build_w(5, 2, 0, q);
    CHECK(w0.cols() == 1);
    CHECK(w0.nonzero_count() == 10);
    CHECK(rank(build_w(6, 2, 1, Field::prime(2))) == 5);
    CHECK_THROWS(build_w(4, 1, 2, q));

    for (int n = 1; n <= 7; ++n) {
        for (int r = 0; r <= n; ++r) {
            for (int s = 0; s <= r; ++s) {
                const ExactMatrix m = build_w(n, r, s, Field::prime(2));
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    std::uint64_t sum = 0;
                    for (std::size_t j = 0; j < m.cols(); ++j) sum += !m.is_zero_at(i, j);
                    REQUIRE(sum == pascal_binomial(r, s));
                }
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    std::uint64_t sum = 0;
                    for (std::size_t i = 0; i < m.rows(); ++i) sum += !m.is_zero_at(i, j);
                    REQUIRE(sum == pascal_binomial(n - s, r - s));
                }
            }
        }
    }
}

TEST_CASE("build_w on a subfamily uses canonical row order") {
    const SetFamily f(5, 2, {7, 2});
    const ExactMatrix w = build_w(5, 2, 1, Field::prime(3), f);
    REQUIRE(w.rows() == 2);
    // index 2 = {1,4}, index 7 = {3,4}
    CHECK(!w.is_zero_at(0, 0));
    CHECK(!w.is_zero_at(0, 3));
    CHECK(!w.is_zero_at(1, 2));
    CHECK(!w.is_zero_at(1, 3));
    CHECK(w.nonzero_count() == 4);
}

TEST_CASE("Wilson rank formula") {
    CHECK(wilson_rank(6, 2, 1, 0) == 6);
    CHECK(wilson_rank(6, 2, 1, 2) == 5);
    CHECK(wilson_rank(9, 4, 0, 3) == 1);
    CHECK(wilson_rank(7, 3, 1, 2) == 7);
    CHECK_THROWS_AS((void)wilson_rank(5, 3, 3, 0), RefusedError);
    for (int n = 1; n <= 8; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (int s = 0; s <= r && r + s <= n; ++s) {
                for (const Field& f : test_fields()) {
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(f.to_string());
                    REQUIRE(wilson_rank(n, r, s, f.characteristic()) == rank(build_w(n, r, s, f)));
                }
            }
        }
    }
}

TEST_CASE("Bier vectors") {
    const Field f = Field::prime(3);
    const Subset a = Subset::of(5, {2, 4});
    const auto v = bier_vector(a, 2, f);
    CHECK(v[subset_index(a)].is_one());
    CHECK(std::count_if(v.begin(), v.end(), [](const Ffe& x) { return !x.is_zero(); }) == 1);
    for (const auto& x : bier_vector(Subset(5, 0), 2, f)) CHECK(x.is_one());
    const auto w = bier_vector(Subset::of(3, {1}), 2, f);
    CHECK(w == FieldVector{f.one(), f.one(), f.zero()});
    CHECK_THROWS(bier_vector(Subset::of(3, {1, 2, 3}), 2, f));
}

TEST_CASE("Bier basis") {
    const Field f2 = Field::prime(2);
    const ExactMatrix b21 = bier_basis_matrix(2, 1, f2);
    CHECK(b21.row(0) == FieldVector{f2.one(), f2.one()});
    CHECK(b21.row(1) == FieldVector{f2.zero(), f2.one()});
    CHECK(rank(bier_basis_matrix(4, 2, Field::rationals())) == 6);
    CHECK(rank(bier_basis_matrix(4, 2, f2)) == 6);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank(bier_basis_matrix(6, 3, Field::prime(p))) == 20);
    CHECK_THROWS(bier_basis_matrix(5, 3, f2));
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (const Field& f : test_fields()) {
                REQUIRE(rank(bier_basis_matrix(n, r, f)) == pascal_binomial(n, r));
            }
        }
    }
}

TEST_CASE("Bier identity residual vanishes") {
    CHECK(is_zero(bier_identity_residual(Subset::of(4, {1}), 2, 1, Field::rationals())));
    CHECK(is_zero(bier_identity_residual(Subset::of(6, {2}), 3, 2, Field::rationals())));
    CHECK(is_zero(bier_identity_residual(Subset(7, 0), 3, 3, Field::prime(2))));
    CHECK_THROWS(bier_identity_residual(Subset::of(4, {1, 2}), 2, 1, Field::rationals()));
    CHECK_THROWS(bier_identity_residual(Subset::of(4, {1}), 2, 2, Field::rationals()));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : all_subsets(n)) {
            for (int r = a.size() + 1; r <= n; ++r) {
                for (int ell = 1; ell <= r - a.size(); ++ell) {
                    REQUIRE(is_zero(bier_identity_residual(a, r, ell, Field::rationals())));
                    REQUIRE(is_zero(bier_identity_residual(a, r, ell, Field::prime(3))));
                }
            }
        }
    }
}

TEST_CASE("Bier identity residual does not vanish for wrong coefficients") {
    // Sanity check that the residual is not trivially zero: dropping the
    // alternating terms leaves C(r-j, l) <A>_r, which is nonzero over Q.
    const Field q = Field::rationals();
    const Subset a = Subset::of(6, {2});
    FieldVector v = bier_vector(a, 3, q);
    CHECK_FALSE(is_zero(v));
    add_scaled(v, q.embed(-1), bier_identity_residual(a, 3, 2, q));
    CHECK_FALSE(is_zero(v));
}

namespace {

struct BracketCase {
    int n, r, m;
    Subset i, x;
};

std::vector<BracketCase> legal_bracket_cases(int max_n) {
    std::vector<BracketCase> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; 2 * m - 1 <= n; ++m) {
            const std::uint64_t low = (std::uint64_t{1} << (2 * m - 1)) - 1;
            const std::uint64_t high = ((std::uint64_t{1} << n) - 1) & ~low;
            for (std::uint64_t xm = high;; xm = (xm - 1) & high) {
                const Subset x(n, xm);
                bool ok = true;
                int k = m + 1;
                for (int e : x.elements()) ok = ok && e >= 2 * k++;
                if (ok) {
                    for (const auto& i : k_subsets(2 * m - 1, m)) {
                        for (int r = m + x.size(); r <= n; ++r) out.push_back({n, r, m, Subset(n, i.mask()), x});
                    }
                }
                if (xm == 0) break;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("bracket basics") {
    const Field q = Field::rationals();
    const Subset i = Subset::of(7, {1, 3});
    const Subset x = Subset::of(7, {6});
    CHECK(bracket(i, x, 2, 3, q) == bier_vector(i | x, 3, q));
    CHECK(is_zero(bracket_alternating_sum(Subset::of(5, {1}), Subset::of(5, {4}), 1, 2, q)));
    CHECK(is_zero(bracket_alternating_sum(i, x, 2, 3, q)));
    CHECK_THROWS(bracket(Subset::of(7, {1}), Subset::of(7, {3}), 2, 3, q));
    CHECK_THROWS(bracket(Subset::of(7, {1}), Subset::of(7, {5}), 2, 3, q));
}

TEST_CASE("bracket claims hold for every legal configuration up to n = 7") {
    const auto cases = legal_bracket_cases(7);
    REQUIRE(cases.size() > 100);
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
        for (const auto& c : cases) {
            CAPTURE(c.n);
            CAPTURE(c.r);
            CAPTURE(c.m);
            CAPTURE(c.i.to_string());
            CAPTURE(c.x.to_string());
            REQUIRE(is_zero(bracket_alternating_sum(c.i, c.x, c.m, c.r, f)));
            REQUIRE(bracket(c.i, c.x, c.m, c.r, f) == bier_vector(c.i | c.x, c.r, f));
        }
    }
}

TEST_CASE("proper sub-brackets lie in the span of lower Bier vectors") {
    const Field q = Field::rationals();
    for (const auto& c : legal_bracket_cases(7)) {
        const int t = c.m + c.x.size();
        if (2 * t > c.n || t > c.r) continue;
        const ExactMatrix span = bier_span_columns(c.n, c.r, t, q);
        for (std::uint64_t u = c.i.mask();; u = (u - 1) & c.i.mask()) {
            if (u != c.i.mask()) REQUIRE(in_column_space(span, bracket(Subset(c.n, u), c.x, c.m, c.r, q)));
            if (u == 0) break;
        }
    }
}

TEST_CASE("diagonal form of the up map in the Bier basis") {
    CHECK(diagonal_form_check(4, 2, 1, Field::rationals()));
    CHECK(diagonal_form_check(6, 3, 2, Field::rationals()));
    CHECK(diagonal_form_check(6, 3, 2, Field::prime(3)));
    // Explicit coefficients from the examples.
    const Field q = Field::rationals();
    const ExactMatrix w = build_w(4, 2, 1, q);
    auto expect = [&](const Subset& a, long long coeff) {
        FieldVector rhs = zero_vector(q, w.rows());
        add_scaled(rhs, q.embed(coeff), bier_vector(a, 2, q));
        CHECK(w.apply(bier_vector(a, 1, q)) == rhs);
    };
    expect(Subset::of(4, {2}), 1);
    expect(Subset(4, 0), 2);
    for (int n = 2; n <= 8; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (int s = 0; s <= r; ++s) REQUIRE(diagonal_form_check(n, r, s, Field::prime(2)));
        }
    }
}

TEST_CASE("find_sigma examples") {
    SUBCASE("family already inside S(r)") {
        const std::vector<Subset> fam = {Subset::of(7, {2, 4, 6}), Subset::of(7, {3, 5, 7})};
        const auto sigma = find_sigma(SetFamily::from_subsets(7, 3, fam));
        REQUIRE(sigma);
        CHECK(*sigma == PermCert::identity(7));
    }
    SUBCASE("two disjoint r-sets with n = 2r + 1") {
        for (int r = 1; r <= 4; ++r) {
            const int n = 2 * r + 1;
            std::vector<int> a, b;
            for (int i = 1; i <= r; ++i) a.push_back(i);
            for (int i = r + 1; i <= 2 * r; ++i) b.push_back(i);
            const std::vector<Subset> fam = {Subset::of(n, a), Subset::of(n, b)};
            const SetFamily fc = SetFamily::from_subsets(n, r, fam);
            const auto sigma = find_sigma(fc);
            REQUIRE(sigma);
            CHECK(sigma_certifies(fc, *sigma));
        }
    }
    SUBCASE("impossible family") {
        // Five 2-sets through the element 1 in [6]: the image of 1 and the
        // images of the five partners all need to avoid 1.
        std::vector<Subset> fam;
        for (int k = 2; k <= 6; ++k) fam.push_back(Subset::of(6, {1, k}));
        CHECK_FALSE(find_sigma(SetFamily::from_subsets(6, 2, fam)));
    }
    CHECK_THROWS(find_sigma(SetFamily(5, 3, {})));
}

TEST_CASE("find_sigma succeeds for every family of at most two 3-sets in [7]") {
    const std::uint64_t total = binom64(7, 3);
    std::vector<SetFamily> families = {SetFamily(7, 3, {})};
    for (std::uint64_t a = 0; a < total; ++a) {
        families.emplace_back(7, 3, std::vector<std::uint64_t>{a});
        for (std::uint64_t b = a + 1; b < total; ++b) families.emplace_back(7, 3, std::vector<std::uint64_t>{a, b});
    }
    CHECK(families.size() == 35 * 34 / 2 + 35 + 1);
    for (const auto& fc : families) {
        const auto sigma = find_sigma(fc);
        REQUIRE(sigma);
        REQUIRE(sigma_certifies(fc, *sigma));
    }
}

TEST_CASE("set resilience examples") {
    SUBCASE("nothing removed") {
        const auto rep = verify_set_resilience(7, 3, 1, SetFamily(7, 3, {}), Field::prime(2));
        CHECK(rep.equal);
        CHECK(rep.has_certificate());
    }
    SUBCASE("all pairs of 3-sets in [7] over F_2") {
        const Field f2 = Field::prime(2);
        for (std::uint64_t a = 0; a < 35; ++a) {
            for (std::uint64_t b = a + 1; b < 35; ++b) {
                const auto rep = verify_set_resilience(7, 3, 1, SetFamily(7, 3, {a, b}), f2);
                REQUIRE(rep.equal);
                REQUIRE(rep.computed_rank == 7);
                REQUIRE(rep.within_bound);
                REQUIRE(rep.has_certificate());
            }
        }
    }
    SUBCASE("removing the star of an element drops the rank") {
        std::vector<Subset> fam;
        for (int k = 2; k <= 6; ++k) fam.push_back(Subset::of(6, {1, k}));
        const auto rep = verify_set_resilience(6, 2, 1, SetFamily::from_subsets(6, 2, fam), Field::rationals());
        CHECK_FALSE(rep.equal);
        CHECK(rep.computed_rank == 5);
        CHECK(rep.formula_rank == 6);
        CHECK_FALSE(rep.within_bound);
        CHECK_FALSE(rep.is_counterexample());
    }
    CHECK_THROWS(verify_set_resilience(7, 3, 3, SetFamily(7, 3, {}), Field::prime(2)));
    CHECK_THROWS(verify_set_resilience(7, 4, 1, SetFamily(7, 4, {}), Field::prime(2)));
}

TEST_CASE("sigma exists for small removals, exhaustive for n <= 8") {
    const std::vector<Field> fields = {Field::rationals(), Field::prime(2)};
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; 2 * r <= n; ++r) {
            const int k = (n - 1) / r;
            const std::uint64_t total = binom64(n, r);
            std::vector<std::uint64_t> idx;
            std::function<void(std::uint64_t)> rec = [&](std::uint64_t from) {
                const SetFamily fc(n, r, idx);
                const auto sigma = find_sigma(fc);
                REQUIRE(sigma);
                REQUIRE(sigma_certifies(fc, *sigma));
                for (int s = 0; s < r; ++s) {
                    for (const Field& f : fields) {
                        const auto rep = verify_set_resilience(n, r, s, fc, f);
                        REQUIRE(rep.within_bound);
                        REQUIRE(rep.equal);
                    }
                }
                if (static_cast<int>(idx.size()) == k) return;
                for (std::uint64_t i = from; i < total; ++i) {
                    idx.push_back(i);
                    rec(i + 1);
                    idx.pop_back();
                }
            };
            rec(0);
        }
    }
}

TEST_CASE("rank of a restricted matrix is bounded by its shadow") {
    std::mt19937_64 rng(99);
    const Field q = Field::rationals();
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const int r = 1 + static_cast<int>(rng() % (n / 2));
        const int s = static_cast<int>(rng() % (r + 1));
        std::vector<std::uint64_t> idx;
        for (std::uint64_t i = 0; i < binom64(n, r); ++i) {
            if (rng() % 3 == 0) idx.push_back(i);
        }
        const SetFamily f(n, r, idx);
        REQUIRE(rank(build_w(n, r, s, q, f)) <= shadow(f, s).size());
    }
}
