#include "elimination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace incmat::detail {

namespace {

struct PrimeArith {
    std::uint64_t p;

    std::uint32_t inv(std::uint32_t a, const Field& f) const { return f.inv(a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    // a - f*b
    std::uint32_t sub_mul(std::uint32_t a, std::uint32_t f, std::uint32_t b) const {
        return static_cast<std::uint32_t>((a + (p - f) * b) % p);
    }
};

struct TableArith {
    const Field* field;

    std::uint32_t inv(std::uint32_t a, const Field& f) const { return f.inv(a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return field->mul(a, b); }
    std::uint32_t sub_mul(std::uint32_t a, std::uint32_t f, std::uint32_t b) const {
        return field->sub(a, field->mul(f, b));
    }
};

template <class Arith>
std::vector<std::size_t> eliminate(const Field& field, const Arith& arith, std::uint32_t* a, std::size_t rows,
                                   std::size_t cols, bool reduce) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a + piv * cols, a + (piv + 1) * cols, a + r * cols);
        std::uint32_t* prow = a + r * cols;
        const std::uint32_t scale = arith.inv(prow[c], field);
        for (std::size_t k = c; k < cols; ++k) {
            if (prow[k] != 0) prow[k] = arith.mul(prow[k], scale);
        }
        // Columns of the pivot row that are nonzero; rows are often sparse.
        std::vector<std::size_t> support;
        for (std::size_t k = c; k < cols; ++k) {
            if (prow[k] != 0) support.push_back(k);
        }
        for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t* row = a + i * cols;
            const std::uint32_t f = row[c];
            if (f == 0) continue;
            for (std::size_t k : support) row[k] = arith.sub_mul(row[k], f, prow[k]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Clears denominators row by row; row scaling preserves rank.
std::vector<BigInt> integer_rows(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const auto src = m.rationals();
    std::vector<BigInt> out(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& den = src[i * cols + j].get_den();
            if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& v = src[i * cols + j];
            if (v == 0) continue;
            out[i * cols + j] = v.get_num() * (lcm / v.get_den());
        }
    }
    return out;
}

// Forward fraction-free elimination in place; returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<BigInt>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    BigInt tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t k = 0; k < cols; ++k) swap(a[piv * cols + k], a[r * cols + k]);
        }
        const BigInt& pv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            BigInt& f = a[i * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                BigInt& x = a[i * cols + k];
                const BigInt& y = a[r * cols + k];
                const bool x_zero = x == 0;
                if (x_zero && (f == 0 || y == 0)) continue;
                mpz_mul(tmp.get_mpz_t(), pv.get_mpz_t(), x.get_mpz_t());
                if (f != 0 && y != 0) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), y.get_mpz_t());
                mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            f = 0;
        }
        prev = pv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

CodeEchelon eliminate_codes(const Field& field, std::vector<std::uint32_t> codes, std::size_t rows, std::size_t cols,
                            bool reduce) {
    if (!field.is_finite()) throw std::invalid_argument("eliminate_codes needs a finite field");
    CodeEchelon out;
    if (field.is_prime_field()) {
        out.pivots = eliminate(field, PrimeArith{field.characteristic()}, codes.data(), rows, cols, reduce);
    } else {
        out.pivots = eliminate(field, TableArith{&field}, codes.data(), rows, cols, reduce);
    }
    out.codes = std::move(codes);
    return out;
}

std::size_t rank_gf2_packed(const ExactMatrix& m) {
    if (m.field().characteristic() != 2 || m.field().degree() != 1) {
        throw std::invalid_argument("packed elimination needs GF(2)");
    }
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> a(rows * words, 0);
    const auto src = m.codes();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (src[i * cols + j]) a[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t piv = r;
        while (piv < rows && !(a[piv * words + w] & bit)) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(&a[piv * words], &a[piv * words] + words, &a[r * words]);
        const std::uint64_t* prow = &a[r * words];
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t* row = &a[i * words];
            if (!(row[w] & bit)) continue;
            for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
        }
        ++r;
    }
    return r;
}

std::size_t rank_fraction_free(const ExactMatrix& m) {
    if (!m.field().is_rational()) throw std::invalid_argument("fraction-free elimination runs over Q");
    auto a = integer_rows(m);
    return bareiss(a, m.rows(), m.cols()).size();
}

RationalEchelon rational_echelon(const ExactMatrix& m) {
    if (!m.field().is_rational()) throw std::invalid_argument("rational_echelon runs over Q");
    const std::size_t cols = m.cols();
    auto a = integer_rows(m);
    RationalEchelon out;
    out.pivots = bareiss(a, m.rows(), cols);
    const std::size_t r = out.pivots.size();
    out.rows.resize(r * cols);
    for (std::size_t i = 0; i < r * cols; ++i) out.rows[i] = Rational(a[i]);
    for (std::size_t k = r; k-- > 0;) {
        Rational* row = &out.rows[k * cols];
        const Rational scale = 1 / row[out.pivots[k]];
        for (std::size_t j = out.pivots[k]; j < cols; ++j) {
            if (row[j] != 0) row[j] *= scale;
        }
        for (std::size_t i = 0; i < k; ++i) {
            Rational* other = &out.rows[i * cols];
            const Rational f = other[out.pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = out.pivots[k]; j < cols; ++j) {
                if (row[j] != 0) other[j] -= f * row[j];
            }
        }
    }
    return out;
}

std::size_t rank_generic(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Ffe> a;
    a.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a.push_back(m.at(i, j));
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c].is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
        }
        const Ffe inv = a[r * cols + c].inv();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i * cols + c].is_zero()) continue;
            const Ffe f = a[i * cols + c] * inv;
            for (std::size_t k = c; k < cols; ++k) a[i * cols + k] -= f * a[r * cols + k];
        }
        ++r;
    }
    return r;
}

} // namespace incmat::detail
