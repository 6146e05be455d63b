#pragma once

// Helpers shared by the unit tests. Everything here is deliberately
// independent of the library code it is used to check.

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

/// Exact binomial coefficient by Pascal's rule (no library calls).
inline std::uint64_t pascal_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
    }
    return t[n][k];
}

/// Number of k-dimensional subspaces of F_q^n by counting ordered bases.
inline mpz_class count_subspaces(int n, int k, std::uint64_t q) {
    if (k < 0 || k > n) return 0;
    mpz_class num = 1, den = 1, qn = 1, qk = 1, qi = 1;
    for (int i = 0; i < n; ++i) qn *= static_cast<unsigned long>(q);
    for (int i = 0; i < k; ++i) qk *= static_cast<unsigned long>(q);
    for (int i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= static_cast<unsigned long>(q);
    }
    return num / den;
}

/// Rank of a matrix over F_p for prime p, plain elimination on integers.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    auto inv = [p](long long x) {
        long long res = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) res = res * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return res;
    };
    for (auto& row : a) {
        for (auto& v : row) v = ((v % p) + p) % p;
    }
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const long long iv = inv(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const long long f = a[i][c] * iv % p;
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

// Vectors of F_p^n (p prime) encoded as integers base p, first coordinate
// most significant.
struct PrimeSpace {
    int n;
    std::uint32_t p;

    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (int i = 0; i < n; ++i) s *= p;
        return s;
    }
    std::vector<std::uint32_t> coords(std::uint64_t v) const {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            c[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        return c;
    }
    std::uint64_t encode(const std::vector<std::uint32_t>& c) const {
        std::uint64_t v = 0;
        for (auto x : c) v = v * p + x;
        return v;
    }
    // The set of all vectors in the span of the given ones.
    std::set<std::uint64_t> span(const std::vector<std::uint64_t>& gens) const {
        std::set<std::uint64_t> out = {0};
        for (auto g : gens) {
            const auto gc = coords(g);
            std::set<std::uint64_t> next;
            for (auto v : out) {
                auto vc = coords(v);
                for (std::uint32_t a = 0; a < p; ++a) {
                    std::vector<std::uint32_t> w(vc.size());
                    for (std::size_t i = 0; i < w.size(); ++i) w[i] = (vc[i] + a * gc[i]) % p;
                    next.insert(encode(w));
                }
            }
            out = std::move(next);
        }
        return out;
    }
};


} // namespace testing_support
