#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "incmat/field.hpp"
#include "incmat/matrix.hpp"
#include "incmat/subset.hpp"

namespace incmat {

/// An element g of GL(n, q). Acts on row vectors: X -> X * g.
class GLCert {
public:
    /// Throws std::invalid_argument unless matrix is square and invertible.
    explicit GLCert(ExactMatrix matrix);

    [[nodiscard]] std::size_t n() const { return matrix_.rows(); }
    [[nodiscard]] std::uint64_t q() const { return matrix_.field().order(); }
    [[nodiscard]] const ExactMatrix& matrix() const { return matrix_; }

private:
    ExactMatrix matrix_;
};

enum class LatticeMode { Set, Subspace };

[[nodiscard]] inline const char* to_string(LatticeMode m) { return m == LatticeMode::Set ? "set" : "q"; }

using Certificate = std::variant<std::monostate, PermCert, GLCert>;

/// Outcome of one resilience check: rank of W^F against the formula.
struct ResilienceReport {
    LatticeMode mode = LatticeMode::Set;
    int n = 0;
    int r = 0;
    int s = 0;
    std::optional<std::uint64_t> q;
    std::string field;
    /// Canonical indices of the removed rows.
    std::vector<std::uint64_t> removed;
    std::size_t computed_rank = 0;
    BigInt formula_rank;
    /// Which formula produced formula_rank: "wilson" or "fy".
    std::string formula_source;
    bool equal = false;
    /// Whether |removed| is within the theorem's bound.
    bool within_bound = false;
    Certificate certificate;
    std::chrono::nanoseconds elapsed{0};

    [[nodiscard]] std::size_t removed_count() const { return removed.size(); }
    [[nodiscard]] bool has_certificate() const { return !std::holds_alternative<std::monostate>(certificate); }
    /// A cell inside the hypothesis region whose rank dropped.
    [[nodiscard]] bool is_counterexample() const { return within_bound && !equal; }
};

} // namespace incmat
