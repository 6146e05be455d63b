#include "incmat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "elimination.hpp"

namespace incmat {

namespace {

std::vector<std::uint32_t> copy_codes(const ExactMatrix& m) { return {m.codes().begin(), m.codes().end()}; }

} // namespace

std::size_t rank(const ExactMatrix& m, Engine engine) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Field& field = m.field();
    if (engine == Engine::Generic) return detail::rank_generic(m);
    if (field.is_rational()) return detail::rank_fraction_free(m);
    if (field.characteristic() == 2 && field.degree() == 1) return detail::rank_gf2_packed(m);
    return detail::eliminate_codes(field, copy_codes(m), m.rows(), m.cols(), false).pivots.size();
}

Echelon reduced_row_echelon(const ExactMatrix& m) {
    const Field& field = m.field();
    const std::size_t cols = m.cols();
    if (m.rows() == 0 || cols == 0) return {ExactMatrix(field, 0, cols), {}};
    if (field.is_rational()) {
        auto ech = detail::rational_echelon(m);
        ExactMatrix rows(field, ech.pivots.size(), cols);
        std::copy(ech.rows.begin(), ech.rows.end(), rows.rationals().begin());
        return {std::move(rows), std::move(ech.pivots)};
    }
    auto ech = detail::eliminate_codes(field, copy_codes(m), m.rows(), cols, true);
    ExactMatrix rows(field, ech.pivots.size(), cols);
    std::copy_n(ech.codes.begin(), ech.pivots.size() * cols, rows.codes().begin());
    return {std::move(rows), std::move(ech.pivots)};
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(ExactMatrix vectors) : vectors_(std::move(vectors)) {
    if (rank(vectors_) != vectors_.rows()) throw std::invalid_argument("basis vectors are linearly dependent");
}

SubspaceBasis::SubspaceBasis(ExactMatrix vectors, Unchecked) : vectors_(std::move(vectors)) {}

SubspaceBasis SubspaceBasis::span_of_rows(const ExactMatrix& spanning) {
    return SubspaceBasis(reduced_row_echelon(spanning).rows, Unchecked{});
}

SubspaceBasis SubspaceBasis::zero(const Field& field, std::size_t ambient_dim) {
    return SubspaceBasis(ExactMatrix(field, 0, ambient_dim), Unchecked{});
}

bool SubspaceBasis::contains(const FieldVector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
    ExactMatrix one(field(), 1, ambient_dim());
    one.set_row(0, v);
    return rank(ExactMatrix::vstack(vectors_, one)) == dim();
}

SubspaceBasis kernel_basis(const ExactMatrix& m) {
    const Field& field = m.field();
    const std::size_t cols = m.cols();
    const Echelon ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivots) is_pivot[c] = true;

    ExactMatrix basis(field, cols - ech.pivots.size(), cols);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set_int(k, f, 1);
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            if (field.is_rational()) {
                basis.rationals()[k * cols + ech.pivots[i]] = -ech.rows.rationals()[i * cols + f];
            } else {
                basis.codes()[k * cols + ech.pivots[i]] = field.neg(ech.rows.codes()[i * cols + f]);
            }
        }
        ++k;
    }
    // Free coordinates form an identity block, so the rows are independent.
    return SubspaceBasis(std::move(basis), SubspaceBasis::Unchecked{});
}

SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
    if (!(u.field() == v.field())) throw std::invalid_argument("intersect: field mismatch");
    const Field& field = u.field();
    const std::size_t n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0) return SubspaceBasis::zero(field, n);

    // (a, b) with a U + b V = 0  <=>  (a, b) in ker [U; V]^T.
    const ExactMatrix stacked = ExactMatrix::vstack(u.vectors(), v.vectors());
    const SubspaceBasis coeffs = kernel_basis(stacked.transpose());
    const std::size_t k = u.dim();
    ExactMatrix a = coeffs.vectors().select_cols([&] {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        return idx;
    }());
    // a -> aU is injective since U's rows are independent.
    return SubspaceBasis(a * u.vectors(), SubspaceBasis::Unchecked{});
}

bool in_column_space(const ExactMatrix& m, const FieldVector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("in_column_space: length mismatch");
    ExactMatrix col(m.field(), m.rows(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) col.set(i, 0, v[i]);
    return rank(ExactMatrix::hstack(m, col)) == rank(m);
}

} // namespace incmat
