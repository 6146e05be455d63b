#pragma once

#include <iosfwd>

#include "incmat/matrix.hpp"

namespace incmat {

// Text exchange format:
//
//   incmat <rows> <cols> <field-string>
//   <i> <j> <value>        one line per nonzero entry, row-major order
//
// Indices are 0-based; values use Field::format(). Omitted entries are
// zero. Lines starting with '#' are ignored by the reader.

void write_matrix(std::ostream& out, const ExactMatrix& m);

/// Throws std::runtime_error with the offending line number on bad input.
[[nodiscard]] ExactMatrix read_matrix(std::istream& in);

} // namespace incmat
