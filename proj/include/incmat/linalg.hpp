#pragma once

#include <cstddef>
#include <vector>

#include "incmat/matrix.hpp"

namespace incmat {

/// Which elimination path rank() takes.
///   Auto    - packed words over GF(2), fraction-free integer elimination
///             over Q, dense code elimination over other finite fields.
///   Generic - plain field-operation elimination for every field; used to
///             cross-check the specialised paths.
enum class Engine { Auto, Generic };

[[nodiscard]] std::size_t rank(const ExactMatrix& m, Engine engine = Engine::Auto);

/// Reduced row echelon form. Pivoting takes the first nonzero entry in
/// column order, so the result is deterministic.
struct Echelon {
    ExactMatrix rows;                 ///< rank x cols, pivot entries 1
    std::vector<std::size_t> pivots;  ///< pivot column of each row
};
[[nodiscard]] Echelon reduced_row_echelon(const ExactMatrix& m);

/// A subspace of field^ambient_dim given by linearly independent rows.
class SubspaceBasis {
public:
    struct Unchecked {};

    /// Verifies that the rows of vectors are linearly independent.
    explicit SubspaceBasis(ExactMatrix vectors);
    /// Skips the independence check; callers guarantee it by construction.
    SubspaceBasis(ExactMatrix vectors, Unchecked);

    /// Basis of the row space of an arbitrary spanning matrix.
    static SubspaceBasis span_of_rows(const ExactMatrix& spanning);
    static SubspaceBasis zero(const Field& field, std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return vectors_.cols(); }
    [[nodiscard]] std::size_t dim() const { return vectors_.rows(); }
    [[nodiscard]] const ExactMatrix& vectors() const { return vectors_; }
    [[nodiscard]] const Field& field() const { return vectors_.field(); }
    [[nodiscard]] bool contains(const FieldVector& v) const;

private:
    ExactMatrix vectors_;
};

/// Basis of {v : M v = 0}; dim = cols - rank.
[[nodiscard]] SubspaceBasis kernel_basis(const ExactMatrix& m);

/// Basis of U ∩ V from the kernel of the stacked coefficient system.
[[nodiscard]] SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v);

/// True iff v lies in the span of the columns of m.
[[nodiscard]] bool in_column_space(const ExactMatrix& m, const FieldVector& v);

} // namespace incmat
