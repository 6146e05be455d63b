#include <doctest.h>

#include <random>
#include <sstream>

#include "incmat/linalg.hpp"
#include "incmat/matrix_io.hpp"
#include "support.hpp"

using namespace incmat;
using testing_support::rank_mod_p;

namespace {

ExactMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                          long long lo = 0, long long hi = -1) {
    ExactMatrix m(f, rows, cols);
    if (hi < lo) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.order() - 1));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, f.from_code(pick(rng)));
        }
    } else {
        std::uniform_int_distribution<long long> pick(lo, hi);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, pick(rng));
        }
    }
    return m;
}

// A rows x cols matrix of rank at most k, as a product of random factors.
ExactMatrix low_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
    return random_matrix(f, rows, k, rng) * random_matrix(f, k, cols, rng);
}

bool annihilates(const ExactMatrix& m, const SubspaceBasis& kernel) {
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
        if (!is_zero(m.apply(kernel.vectors().row(i)))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rank of trivial matrices") {
    for (const char* spec : {"q0", "gf2", "gf3", "gf2^2", "gf7"}) {
        const Field f{std::string_view(spec)};
        CHECK(rank(ExactMatrix::identity(f, 3)) == 3);
        CHECK(rank(ExactMatrix(f, 4, 5)) == 0);
        CHECK(rank(ExactMatrix(f, 0, 5)) == 0);
        CHECK(rank(ExactMatrix(f, 5, 0)) == 0);
    }
}

TEST_CASE("rank of W_{2,1} for n = 4 over Q") {
    // Rows: 12 13 14 23 24 34; columns 1 2 3 4.
    const std::vector<long long> w = {1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1};
    const ExactMatrix m = ExactMatrix::from_ints(Field::rationals(), 6, 4, w);
    CHECK(rank(m) == 4);
    CHECK(rank(ExactMatrix::from_ints(Field::prime(2), 6, 4, w)) == 3);
}

TEST_CASE("rank is invariant under transposition") {
    std::mt19937_64 rng(11);
    for (const char* spec : {"q0", "gf2", "gf3", "gf5", "gf2^2", "gf3^2"}) {
        const Field f{std::string_view(spec)};
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, k = rng() % 6;
            const ExactMatrix m = f.is_rational() ? random_matrix(f, rows, k, rng, -3, 3) * random_matrix(f, k, cols, rng, -3, 3)
                                                  : low_rank(f, rows, cols, k, rng);
            REQUIRE(rank(m) == rank(m.transpose()));
            REQUIRE(rank(m) == rank(m, Engine::Generic));
            REQUIRE(rank(m) <= k);
        }
    }
}

TEST_CASE("rank over Q agrees with rank over large primes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8, k = 1 + rng() % 6;
        const Field q = Field::rationals();
        const ExactMatrix m = random_matrix(q, rows, k, rng, -4, 4) * random_matrix(q, k, cols, rng, -4, 4);
        std::vector<std::vector<long long>> ints(rows, std::vector<long long>(cols));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) ints[i][j] = m.at(i, j).rational().get_num().get_si();
        }
        const std::size_t rq = rank(m);
        std::vector<std::size_t> modular;
        for (long long p : {101, 103, 107}) modular.push_back(rank_mod_p(ints, p));
        // Q-rank is at least every modular rank; equality holds whenever
        // the three primes agree, which is the expected generic case.
        for (auto rp : modular) REQUIRE(rq >= rp);
        if (modular[0] == modular[1] && modular[1] == modular[2]) REQUIRE(rq == modular[0]);
    }
}

TEST_CASE("rank over Q with fractional entries") {
    const Field q = Field::rationals();
    ExactMatrix m(q, 2, 2);
    m.set(0, 0, q.embed(1) / q.embed(2));
    m.set(0, 1, q.embed(1) / q.embed(3));
    m.set(1, 0, q.embed(3));
    m.set(1, 1, q.embed(2));
    CHECK(rank(m) == 1);
    m.set(1, 1, q.embed(5) / q.embed(2));
    CHECK(rank(m) == 2);
}

TEST_CASE("packed GF(2) elimination agrees with the generic path") {
    std::mt19937_64 rng(2024);
    const Field f = Field::prime(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows, cols;
        if (trial < 8) {
            rows = cols = 256;
        } else {
            rows = 1 + rng() % 130;
            cols = 1 + rng() % 130;
        }
        const std::size_t k = 1 + rng() % std::max(rows, cols);
        const ExactMatrix m = trial % 2 ? low_rank(f, rows, cols, k, rng) : random_matrix(f, rows, cols, rng);
        REQUIRE(rank(m) == rank(m, Engine::Generic));
    }
}

TEST_CASE("reduced row echelon form") {
    const Field f = Field::prime(5);
    // third row = first + second
    const std::vector<long long> a = {0, 2, 4, 1, 0, 1, 3, 2, 0, 3, 2, 3};
    const ExactMatrix m = ExactMatrix::from_ints(f, 3, 4, a);
    const Echelon e = reduced_row_echelon(m);
    CHECK(e.pivots == std::vector<std::size_t>{1, 2});
    CHECK(e.rows.row(1) == FieldVector{f.zero(), f.zero(), f.one(), f.embed(4)});
    CHECK(e.rows.rows() == 2);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        for (std::size_t k = 0; k < e.pivots.size(); ++k) CHECK(e.rows.at(k, e.pivots[i]) == (i == k ? f.one() : f.zero()));
    }
    CHECK(rank(ExactMatrix::vstack(m, e.rows)) == 2);

    const Field q = Field::rationals();
    const ExactMatrix mq = ExactMatrix::from_ints(q, 3, 4, a);
    const Echelon eq = reduced_row_echelon(mq);
    CHECK(eq.pivots.size() == rank(mq));
    CHECK(rank(ExactMatrix::vstack(mq, eq.rows)) == eq.pivots.size());
}

TEST_CASE("kernel basis") {
    SUBCASE("identity has trivial kernel") {
        CHECK(kernel_basis(ExactMatrix::identity(Field::prime(3), 4)).dim() == 0);
    }
    SUBCASE("(1 1) over F_2") {
        const Field f = Field::prime(2);
        const std::vector<long long> a = {1, 1};
        const auto k = kernel_basis(ExactMatrix::from_ints(f, 1, 2, a));
        REQUIRE(k.dim() == 1);
        CHECK(k.vectors().row(0) == FieldVector{f.one(), f.one()});
    }
    SUBCASE("rank-3 4x6 over F_5") {
        std::mt19937_64 rng(3);
        const Field f = Field::prime(5);
        ExactMatrix m = low_rank(f, 4, 6, 3, rng);
        while (rank(m) != 3) m = low_rank(f, 4, 6, 3, rng);
        const auto k = kernel_basis(m);
        CHECK(k.dim() == 3);
        CHECK(annihilates(m, k));
    }
    SUBCASE("random, all fields") {
        std::mt19937_64 rng(8);
        for (const char* spec : {"q0", "gf2", "gf3", "gf2^2", "gf3^2"}) {
            const Field f{std::string_view(spec)};
            for (int trial = 0; trial < 15; ++trial) {
                const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
                const ExactMatrix m = f.is_rational() ? random_matrix(f, rows, cols, rng, -2, 2)
                                                      : low_rank(f, rows, cols, 1 + rng() % 5, rng);
                const auto k = kernel_basis(m);
                REQUIRE(k.dim() + rank(m) == cols);
                REQUIRE(annihilates(m, k));
                REQUIRE(rank(k.vectors()) == k.dim());
            }
        }
    }
}

TEST_CASE("subspace intersection") {
    const Field f3 = Field::prime(3);
    SUBCASE("U with itself") {
        std::mt19937_64 rng(1);
        const auto u = SubspaceBasis::span_of_rows(random_matrix(f3, 3, 5, rng));
        CHECK(intersect(u, u).dim() == u.dim());
    }
    SUBCASE("complementary coordinate subspaces") {
        const std::vector<long long> a = {1, 0, 0, 0, 0, 1, 0, 0};
        const std::vector<long long> b = {0, 0, 1, 0, 0, 0, 0, 1};
        const SubspaceBasis u(ExactMatrix::from_ints(f3, 2, 4, a));
        const SubspaceBasis v(ExactMatrix::from_ints(f3, 2, 4, b));
        CHECK(intersect(u, v).dim() == 0);
    }
    SUBCASE("random 3-spaces of F_2^4") {
        std::mt19937_64 rng(17);
        const Field f2 = Field::prime(2);
        for (int trial = 0; trial < 30; ++trial) {
            ExactMatrix a = random_matrix(f2, 3, 4, rng);
            ExactMatrix b = random_matrix(f2, 3, 4, rng);
            if (rank(a) != 3 || rank(b) != 3) continue;
            const SubspaceBasis u(a), v(b);
            const auto w = intersect(u, v);
            const std::size_t sum_dim = rank(ExactMatrix::vstack(a, b));
            REQUIRE(w.dim() >= 2);
            REQUIRE(w.dim() == u.dim() + v.dim() - sum_dim);
            for (std::size_t i = 0; i < w.dim(); ++i) {
                REQUIRE(u.contains(w.vectors().row(i)));
                REQUIRE(v.contains(w.vectors().row(i)));
            }
        }
    }
    SUBCASE("dimension formula over Q") {
        std::mt19937_64 rng(4);
        const Field q = Field::rationals();
        for (int trial = 0; trial < 20; ++trial) {
            const auto u = SubspaceBasis::span_of_rows(random_matrix(q, 1 + rng() % 4, 6, rng, -1, 1));
            const auto v = SubspaceBasis::span_of_rows(random_matrix(q, 1 + rng() % 4, 6, rng, -1, 1));
            const auto w = intersect(u, v);
            const std::size_t sum_dim = rank(ExactMatrix::vstack(u.vectors(), v.vectors()));
            REQUIRE(w.dim() + sum_dim == u.dim() + v.dim());
        }
    }
    CHECK_THROWS(intersect(SubspaceBasis::zero(f3, 3), SubspaceBasis::zero(f3, 4)));
}

TEST_CASE("subspace basis rejects dependent rows") {
    const Field f = Field::prime(2);
    const std::vector<long long> a = {1, 1, 1, 1};
    CHECK_THROWS(SubspaceBasis(ExactMatrix::from_ints(f, 2, 2, a)));
}

TEST_CASE("column space membership") {
    const Field f = Field::prime(7);
    std::mt19937_64 rng(9);
    const ExactMatrix m = random_matrix(f, 4, 3, rng);
    CHECK(in_column_space(m, m.column(0)));
    CHECK(in_column_space(m, zero_vector(f, 4)));
    const std::vector<long long> e1 = {1, 0};
    CHECK_FALSE(in_column_space(ExactMatrix::from_ints(f, 2, 1, e1), FieldVector{f.zero(), f.one()}));
    CHECK_THROWS(in_column_space(m, zero_vector(f, 3)));
}

TEST_CASE("matrix text format round-trip") {
    std::mt19937_64 rng(21);
    for (const char* spec : {"q0", "gf2", "gf3^2"}) {
        const Field f{std::string_view(spec)};
        ExactMatrix m = f.is_rational() ? random_matrix(f, 3, 4, rng, -5, 5) : random_matrix(f, 3, 4, rng);
        if (f.is_rational()) m.set(1, 1, f.embed(3) / f.embed(7));
        std::stringstream ss;
        write_matrix(ss, m);
        CHECK(read_matrix(ss) == m);
    }
    std::stringstream bad("incmat 2 2 gf2\n1 0 1\n0 1 1\n");
    CHECK_THROWS_WITH(read_matrix(bad), doctest::Contains("line 3"));
    std::stringstream comment("# hello\nincmat 1 2 gf3\n0 1 2\n");
    const ExactMatrix m = read_matrix(comment);
    CHECK(m.at(0, 1) == Field::prime(3).embed(2));
}
