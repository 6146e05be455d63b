#include "incmat/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace incmat {

FieldVector zero_vector(const Field& field, std::size_t length) { return FieldVector(length, field.zero()); }

bool is_zero(const FieldVector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

void add_scaled(FieldVector& y, const Ffe& a, const FieldVector& x) {
    if (y.size() != x.size()) throw std::invalid_argument("add_scaled: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
}

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (field_.is_rational()) {
        rationals_.assign(rows * cols, Rational(0));
    } else {
        codes_.assign(rows * cols, 0);
    }
}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                                   std::span<const long long> values) {
    if (values.size() != rows * cols) throw std::invalid_argument("from_ints: entry count mismatch");
    ExactMatrix m(field, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] != 0) m.set_int(k / cols, k % cols, values[k]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& field, std::size_t cols, std::span<const FieldVector> rows) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

void ExactMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
}

Ffe ExactMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    if (field_.is_rational()) return field_.from_rational(rationals_[i * cols_ + j]);
    return field_.from_code(codes_[i * cols_ + j]);
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Ffe& value) {
    check_index(i, j);
    field_.check_owner(value);
    if (field_.is_rational()) {
        rationals_[i * cols_ + j] = value.rational();
    } else {
        codes_[i * cols_ + j] = value.code();
    }
}

void ExactMatrix::set_int(std::size_t i, std::size_t j, long long value) {
    check_index(i, j);
    if (field_.is_rational()) {
        rationals_[i * cols_ + j] = Rational(static_cast<long>(value));
    } else {
        codes_[i * cols_ + j] = field_.code_of(value);
    }
}

bool ExactMatrix::is_zero_at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    if (field_.is_rational()) return rationals_[i * cols_ + j] == 0;
    return codes_[i * cols_ + j] == 0;
}

FieldVector ExactMatrix::row(std::size_t i) const {
    FieldVector v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

FieldVector ExactMatrix::column(std::size_t j) const {
    FieldVector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void ExactMatrix::set_row(std::size_t i, const FieldVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_rational()) {
                t.rationals_[j * rows_ + i] = rationals_[i * cols_ + j];
            } else {
                t.codes_[j * rows_ + i] = codes_[i * cols_ + j];
            }
        }
    }
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("matrix product: field mismatch");
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ExactMatrix out(field_, rows_, other.cols_);
    const std::size_t n = other.cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (field_.is_rational()) {
                const Rational& a = rationals_[i * cols_ + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < n; ++j) out.rationals_[i * n + j] += a * other.rationals_[k * n + j];
            } else {
                const std::uint32_t a = codes_[i * cols_ + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const std::uint32_t b = other.codes_[k * n + j];
                    if (b != 0) out.codes_[i * n + j] = field_.add(out.codes_[i * n + j], field_.mul(a, b));
                }
            }
        }
    }
    return out;
}

FieldVector ExactMatrix::apply(const FieldVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    FieldVector out = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!is_zero_at(i, j) && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> which) const {
    ExactMatrix out(field_, which.size(), cols_);
    for (std::size_t k = 0; k < which.size(); ++k) {
        if (which[k] >= rows_) throw std::out_of_range("select_rows: index out of range");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_rational()) {
                out.rationals_[k * cols_ + j] = rationals_[which[k] * cols_ + j];
            } else {
                out.codes_[k * cols_ + j] = codes_[which[k] * cols_ + j];
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::select_cols(std::span<const std::size_t> which) const {
    return transpose().select_rows(which).transpose();
}

bool ExactMatrix::is_zero() const { return nonzero_count() == 0; }

std::size_t ExactMatrix::nonzero_count() const {
    std::size_t n = 0;
    if (field_.is_rational()) {
        for (const auto& v : rationals_) n += v != 0;
    } else {
        for (auto c : codes_) n += c != 0;
    }
    return n;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (!(top.field_ == bottom.field_)) throw std::invalid_argument("vstack: field mismatch");
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column mismatch");
    ExactMatrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    if (top.field_.is_rational()) {
        std::copy(top.rationals_.begin(), top.rationals_.end(), out.rationals_.begin());
        std::copy(bottom.rationals_.begin(), bottom.rationals_.end(),
                  out.rationals_.begin() + static_cast<std::ptrdiff_t>(top.rationals_.size()));
    } else {
        std::copy(top.codes_.begin(), top.codes_.end(), out.codes_.begin());
        std::copy(bottom.codes_.begin(), bottom.codes_.end(),
                  out.codes_.begin() + static_cast<std::ptrdiff_t>(top.codes_.size()));
    }
    return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& left, const ExactMatrix& right) {
    return vstack(left.transpose(), right.transpose()).transpose();
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.codes_ == b.codes_ &&
           a.rationals_ == b.rationals_;
}

} // namespace incmat
