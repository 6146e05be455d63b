#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "incmat/linalg.hpp"
#include "incmat/qlat.hpp"
#include "incmat/setlat.hpp"
#include "support.hpp"

using namespace incmat;
using testing_support::count_subspaces;
using testing_support::PrimeSpace;

namespace {

// All r-dimensional subspaces of F_p^n as vector sets, by brute force.
std::set<std::set<std::uint64_t>> brute_subspaces(int n, int r, std::uint32_t p) {
    const PrimeSpace sp{n, p};
    std::uint64_t expected = 1;
    for (int i = 0; i < r; ++i) expected *= p;
    std::set<std::set<std::uint64_t>> out;
    std::vector<std::uint64_t> gens(static_cast<std::size_t>(r));
    std::function<void(int, std::uint64_t)> rec = [&](int k, std::uint64_t from) {
        if (k == r) {
            auto s = sp.span(gens);
            if (s.size() == expected) out.insert(std::move(s));
            return;
        }
        for (std::uint64_t v = from; v < sp.size(); ++v) {
            gens[k] = v;
            rec(k + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

std::set<std::uint64_t> row_space(const ExactMatrix& m, std::uint32_t p) {
    const PrimeSpace sp{static_cast<int>(m.cols()), p};
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::uint32_t> c;
        for (std::size_t j = 0; j < m.cols(); ++j) c.push_back(m.at(i, j).code());
        gens.push_back(sp.encode(c));
    }
    return sp.span(gens);
}

// Gaussian polynomial coefficients by the q-Pascal rule
// [n k] = [n-1 k-1] + q^k [n-1 k].
std::vector<std::uint64_t> gaussian_poly(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return {1};
    auto a = gaussian_poly(n - 1, k - 1);
    auto b = gaussian_poly(n - 1, k);
    std::vector<std::uint64_t> out(std::max(a.size(), b.size() + k), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
    return out;
}

} // namespace

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(7, 0, 3) == 1);
    CHECK(gaussian_binomial(4, 1, 2) == 15);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, -1, 2) == 0);
    CHECK(gaussian_binomial(4, 5, 2) == 0);
    CHECK(gaussian_binomial(5, 2, 3) == 1210);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) REQUIRE(gaussian_binomial(n, k, q) == count_subspaces(n, k, q));
        }
    }
    CHECK(brute_subspaces(4, 2, 2).size() == 35);
}

TEST_CASE("path order") {
    std::vector<std::string> got;
    for (const auto& pi : enumerate_paths(4, 2)) got.push_back(pi.to_string());
    CHECK(got == std::vector<std::string>{"SSEE", "SESE", "SEES", "ESSE", "ESES", "EESS"});
    CHECK(enumerate_paths(5, 2).size() == 10);
    for (int n = 1; n <= 9; ++n) {
        for (int r = 0; r <= n; ++r) {
            const auto paths = enumerate_paths(n, r);
            REQUIRE(paths.size() == binom64(n, r));
            const std::string first = std::string(r, 'S') + std::string(n - r, 'E');
            const std::string last = std::string(n - r, 'E') + std::string(r, 'S');
            REQUIRE(paths.front().to_string() == first);
            REQUIRE(paths.back().to_string() == last);
            for (std::size_t k = 0; k < paths.size(); ++k) {
                REQUIRE(path_index(paths[k]) == k);
                if (k) {
                    REQUIRE(paths[k - 1] < paths[k]);
                    // Independent order check: replace S/E by 0/1 and compare strings.
                    auto key = [](std::string s) {
                        for (char& c : s) c = c == 'S' ? '0' : '1';
                        return s;
                    };
                    REQUIRE(key(paths[k - 1].to_string()) < key(paths[k].to_string()));
                }
            }
        }
    }
    CHECK(LatticePath::parse("ESESE").as_subset() == Subset::of(5, {2, 4}));
    CHECK_THROWS(LatticePath::parse("ESX"));
}

TEST_CASE("box counts") {
    CHECK(box_count(LatticePath::parse("ESESESE")) == 6);
    CHECK(box_count(LatticePath::parse("SSSEEEE")) == 0);
    CHECK(box_count(LatticePath::parse("EEEESSS")) == 12);
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            std::vector<std::uint64_t> poly;
            for (const auto& pi : enumerate_paths(n, r)) {
                const auto b = static_cast<std::size_t>(box_count(pi));
                if (poly.size() <= b) poly.resize(b + 1, 0);
                ++poly[b];
            }
            REQUIRE(poly == gaussian_poly(n, r));
            for (std::uint64_t q : {2, 3, 4, 5}) {
                BigInt sum = 0;
                for (const auto& pi : enumerate_paths(n, r)) {
                    BigInt c;
                    mpz_ui_pow_ui(c.get_mpz_t(), q, static_cast<unsigned long>(box_count(pi)));
                    sum += c;
                }
                REQUIRE(sum == gaussian_binomial(n, r, q));
            }
        }
    }
}

TEST_CASE("leading terms and classes") {
    CHECK(leading_term(LatticePath::parse("EESS")) == 2);
    CHECK(classify(LatticePath::parse("EESS")) == PathClass::Plus);
    CHECK(leading_term(LatticePath::parse("SSEE")) == 0);
    CHECK(classify(LatticePath::parse("SSEE")) == PathClass::Outside);
    CHECK(leading_term(LatticePath::parse("ESES")) == 1);
    CHECK(classify(LatticePath::parse("ESES")) == PathClass::Minus);
    for (int n = 0; n <= 10; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            std::set<Subset> in_s;
            for (const auto& a : full_rank_sets(n, r)) in_s.insert(a);
            std::size_t inside = 0;
            for (const auto& pi : enumerate_paths(n, r)) {
                const PathClass c = classify(pi);
                const bool member = in_s.count(pi.as_subset()) > 0;
                REQUIRE(member == (c != PathClass::Outside));
                if (c == PathClass::Plus) REQUIRE(leading_term(pi) >= r);
                if (c == PathClass::Minus) REQUIRE(leading_term(pi) < r);
                inside += member;
            }
            REQUIRE(inside == in_s.size());
        }
    }
}

TEST_CASE("codec on the worked example") {
    const Field f = Field::of_order(5);
    // a b c d = 1 2 3 4
    const std::vector<long long> rows = {1, 1, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 3, 0, 0, 4, 1, 0, 0};
    const ExactMatrix canonical = ExactMatrix::from_ints(f, 3, 7, rows);
    // Scramble with an invertible row operation; the code must not change.
    const std::vector<long long> mix = {1, 1, 0, 0, 2, 1, 1, 0, 1};
    const ExactMatrix b = ExactMatrix::from_ints(f, 3, 3, mix) * canonical;
    const SubspaceCode code = encode_subspace(b, 3);
    CHECK(code.pivots == std::vector<int>{2, 3, 5});
    CHECK(code.path().to_string() == "ESSESEE");
    CHECK(code.filling == std::vector<std::vector<std::uint32_t>>{{1}, {2}, {3, 4}});
    CHECK(decode_subspace(code, f) == canonical);
    CHECK(code.to_string(f) == "2,3,5|1 2 3 4");
    CHECK(SubspaceCode::parse(7, f, "2,3,5|1 2 3 4") == code);
}

TEST_CASE("codec edge cases") {
    const Field f = Field::of_order(3);
    const int n = 6, r = 2;
    ExactMatrix first(f, r, n), last(f, r, n);
    for (int i = 0; i < r; ++i) {
        first.set_int(i, i, 1);
        last.set_int(i, n - r + i, 1);
    }
    const auto c1 = encode_subspace(first, r);
    CHECK(c1.path().to_string() == "SSEEEE");
    CHECK(c1.box_count() == 0);
    const auto c2 = encode_subspace(last, r);
    CHECK(c2.path().to_string() == "EEEESS");
    CHECK(c2.box_count() == r * (n - r));
    for (const auto& row : c2.filling) {
        for (auto v : row) CHECK(v == 0);
    }
    SubspaceCode z{4, 2, 2, {3, 4}, {{0, 0}, {0, 0}}};
    const ExactMatrix d = decode_subspace(z);
    CHECK(d == ExactMatrix::from_ints(Field::of_order(2), 2, 4, std::vector<long long>{0, 0, 1, 0, 0, 0, 0, 1}));
    CHECK_THROWS(encode_subspace(first, 1));
    SubspaceCode bad{4, 2, 2, {3, 4}, {{0}, {0, 0}}};
    CHECK_THROWS(decode_subspace(bad));
    CHECK_THROWS(encode_subspace(ExactMatrix::identity(Field::rationals(), 2), 2));
}

TEST_CASE("codec round-trip over all subspaces") {
    for (std::uint64_t q : {2, 3}) {
        const Field f = Field::of_order(q);
        for (int n = 0; n <= 5; ++n) {
            for (int r = 0; r <= n; ++r) {
                const SubspaceOrder order(n, r, q);
                REQUIRE(order.size() == gaussian_binomial(n, r, q));
                std::uint64_t seen = 0;
                order.for_each([&](std::uint64_t index, const SubspaceCode& code) {
                    REQUIRE(index == seen++);
                    const ExactMatrix m = decode_subspace(code, f);
                    REQUIRE(rank(m) == static_cast<std::size_t>(r));
                    REQUIRE(encode_subspace(m, r) == code);
                    REQUIRE(order.index_of(code) == index);
                    REQUIRE(order.at(index) == code);
                    // S steps of the path are the pivot columns.
                    REQUIRE(code.path().south_positions() == code.pivots);
                });
                REQUIRE(seen == order.size());
            }
        }
    }
}

TEST_CASE("codes are in bijection with brute-force subspaces") {
    for (auto [n, r, p] : std::vector<std::tuple<int, int, std::uint32_t>>{{4, 2, 2}, {4, 1, 3}, {3, 2, 3}, {5, 2, 2}}) {
        const auto brute = brute_subspaces(n, r, p);
        const Field f = Field::of_order(p);
        std::set<std::set<std::uint64_t>> decoded;
        SubspaceOrder(n, r, p).for_each([&](std::uint64_t, const SubspaceCode& code) {
            decoded.insert(row_space(decode_subspace(code, f), p));
        });
        CHECK(decoded == brute);
    }
}

TEST_CASE("encoding random spanning sets") {
    std::mt19937_64 rng(31);
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        const Field f = Field::of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const std::size_t k = 1 + rng() % 5;
            ExactMatrix b(f, k, static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < k; ++i) {
                for (int j = 0; j < n; ++j) b.set(i, static_cast<std::size_t>(j), f.from_code(static_cast<std::uint32_t>(rng() % q)));
            }
            const int r = static_cast<int>(rank(b));
            const SubspaceCode code = encode_subspace(b, r);
            const ExactMatrix c = decode_subspace(code, f);
            REQUIRE(rank(ExactMatrix::vstack(b, c)) == static_cast<std::size_t>(r));
            REQUIRE(encode_subspace(c, r) == code);
        }
    }
}

TEST_CASE("families of subspaces") {
    const QFamily fam(4, 2, 2, {5, 1});
    CHECK(fam.members() == std::vector<std::uint64_t>{1, 5});
    CHECK(fam.complement().size() == 33);
    CHECK(QFamily::from_codes(4, 2, 2, fam.codes()) == fam);
    CHECK_THROWS(QFamily(4, 2, 2, {35}));
    CHECK_THROWS(QFamily(4, 2, 6, {}));
}

TEST_CASE("good fillings: hand example") {
    // n = 4, r = 2, path ESES: good iff the first box of row 2 is zero.
    const Field f = Field::of_order(2);
    int good = 0;
    for (std::uint32_t a = 0; a < 2; ++a) {
        for (std::uint32_t b = 0; b < 2; ++b) {
            for (std::uint32_t c = 0; c < 2; ++c) {
                const SubspaceCode code{4, 2, 2, {2, 4}, {{a}, {b, c}}};
                REQUIRE(is_good(code, f) == (b == 0));
                good += is_good(code, f);
            }
        }
    }
    CHECK(good == 4);
}

TEST_CASE("good fillings: classes") {
    for (std::uint64_t q : {2, 3}) {
        const Field f = Field::of_order(q);
        for (int n = 1; n <= 5; ++n) {
            for (int r = 0; 2 * r <= n; ++r) {
                SubspaceOrder(n, r, q).for_each([&](std::uint64_t, const SubspaceCode& code) {
                    const PathClass c = classify(code.path());
                    const bool good = is_good(code, f);
                    if (c == PathClass::Plus) REQUIRE(good);
                    if (c == PathClass::Outside) REQUIRE_FALSE(good);
                    bool zero = true;
                    for (const auto& row : code.filling) {
                        for (auto v : row) zero = zero && v == 0;
                    }
                    if (zero && c != PathClass::Outside) REQUIRE(good);
                });
            }
        }
    }
}

TEST_CASE("count of good subspaces") {
    CHECK(count_good(4, 2, 2) == 20);
    for (std::uint64_t q : {2, 3, 4, 5}) CHECK(count_good(2, 1, q) == q);
    CHECK(count_good(5, 2, 3) == 1089);
    CHECK_THROWS(count_good(5, 3, 2));
    for (std::uint64_t q : {2, 3}) {
        for (int n = 0; n <= 5; ++n) {
            for (int r = 0; 2 * r <= n; ++r) {
                REQUIRE(count_good(n, r, q) == gaussian_binomial(n, r, q) - gaussian_binomial(n, r - 1, q));
            }
        }
    }
}
