#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "incmat/field.hpp"

namespace incmat {

using FieldVector = std::vector<Ffe>;

/// Zero vector of the given length over field.
[[nodiscard]] FieldVector zero_vector(const Field& field, std::size_t length);
[[nodiscard]] bool is_zero(const FieldVector& v);
/// y += a * x
void add_scaled(FieldVector& y, const Ffe& a, const FieldVector& x);

/**
 * Dense row-major matrix with exact entries.
 *
 * Finite-field entries are held as element codes, rational entries as
 * reduced fractions; the Ffe accessors convert on the way in and out.
 */
class ExactMatrix {
public:
    ExactMatrix(Field field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(const Field& field, std::size_t n);
    /// Integer entries embedded into field (row-major, rows * cols values).
    static ExactMatrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                                 std::span<const long long> values);
    /// One row per vector; all vectors must share length and field.
    static ExactMatrix from_rows(const Field& field, std::size_t cols, std::span<const FieldVector> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const Field& field() const { return field_; }

    [[nodiscard]] Ffe at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Ffe& value);
    void set_int(std::size_t i, std::size_t j, long long value);
    [[nodiscard]] bool is_zero_at(std::size_t i, std::size_t j) const;

    [[nodiscard]] FieldVector row(std::size_t i) const;
    [[nodiscard]] FieldVector column(std::size_t j) const;
    void set_row(std::size_t i, const FieldVector& v);

    [[nodiscard]] ExactMatrix transpose() const;
    [[nodiscard]] ExactMatrix operator*(const ExactMatrix& other) const;
    /// M * v for a column vector v of length cols().
    [[nodiscard]] FieldVector apply(const FieldVector& v) const;
    [[nodiscard]] ExactMatrix select_rows(std::span<const std::size_t> which) const;
    [[nodiscard]] ExactMatrix select_cols(std::span<const std::size_t> which) const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t nonzero_count() const;

    static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);
    static ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right);

    // Raw storage, for the elimination kernels.
    [[nodiscard]] std::span<const std::uint32_t> codes() const { return codes_; }
    [[nodiscard]] std::span<std::uint32_t> codes() { return codes_; }
    [[nodiscard]] std::span<const Rational> rationals() const { return rationals_; }
    [[nodiscard]] std::span<Rational> rationals() { return rationals_; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    void check_index(std::size_t i, std::size_t j) const;

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> codes_;
    std::vector<Rational> rationals_;
};

} // namespace incmat
