#pragma once

#include <optional>
#include <vector>

#include "incmat/field.hpp"
#include "incmat/matrix.hpp"
#include "incmat/report.hpp"
#include "incmat/subset.hpp"

namespace incmat {

/// C(n, k); zero when k < 0 or k > n.
[[nodiscard]] BigInt binomial(long n, long k);

struct FranklRank {
    int rank = 0;
    /// Largest excess of north over east steps on the walk, at least 0.
    int ell = 0;
};

/// Walk i = 1..n, north when i is in A and east otherwise.
[[nodiscard]] FranklRank frankl_rank(const Subset& a);

/// |A ∩ [i]| <= floor(i/2) for every i, i.e. the walk never rises above
/// the diagonal.
[[nodiscard]] bool has_full_frankl_rank(const Subset& a);

/// S(j): the j-subsets of [n] of full Frankl rank, canonical order.
[[nodiscard]] std::vector<Subset> full_rank_sets(int n, int j);

/// For A = {a_1 < ... < a_j}: the m with a_m < 2m and a_i >= 2i for all
/// i > m; 0 when A has full Frankl rank.
[[nodiscard]] int m_parameter(const Subset& a);

/// All s-subsets contained in some member of f.
[[nodiscard]] SetFamily shadow(const SetFamily& f, int s);

/// The real x >= r with x(x-1)...(x-r+1)/r! = size, by bisection.
[[nodiscard]] double lovasz_x(const BigInt& size, int r);

/// Rows: members of f (all r-subsets when absent); columns: all
/// s-subsets; entry 1 iff the column set is inside the row set.
[[nodiscard]] ExactMatrix build_w(int n, int r, int s, const Field& field,
                                  const std::optional<SetFamily>& f = std::nullopt);

/// Wilson's rank formula. Throws RefusedError when n < r + s.
[[nodiscard]] BigInt wilson_rank(int n, int r, int s, std::uint32_t characteristic);

/// <A>_r: the sum of all r-subsets containing A, as a coordinate vector.
[[nodiscard]] FieldVector bier_vector(const Subset& a, int r, const Field& field);

/// Rows <A>_r for A in S(0), S(1), ..., S(r).
[[nodiscard]] ExactMatrix bier_basis_matrix(int n, int r, const Field& field);

/// C(r-j, l) <A>_r + sum_{i=1}^{l} (-1)^i C(r-j-i, l-i) sum_{T ⊇ A, |T| = j+i} <T>_r
/// for |A| = j. Always the zero vector.
[[nodiscard]] FieldVector bier_identity_residual(const Subset& a, int r, int ell, const Field& field);

/// [U ∪ X] = sum over m-subsets J of [2m-1] with J ⊇ U of <J ∪ X>_r.
[[nodiscard]] FieldVector bracket(const Subset& u, const Subset& x, int m, int r, const Field& field);

/// sum_{U ⊆ I} (-1)^{|U|} [U ∪ X] for I ⊆ [2m-1], |I| = m. Always zero.
[[nodiscard]] FieldVector bracket_alternating_sum(const Subset& i, const Subset& x, int m, int r,
                                                  const Field& field);

/// Columns <A>_r for A in S(j), j <= t: spans the image of the up map
/// from t-subsets.
[[nodiscard]] ExactMatrix bier_span_columns(int n, int r, int t, const Field& field);

/// Checks W_{r,s} <A>_s = C(r-j, s-j) <A>_r for every A in S(j), j <= s.
[[nodiscard]] bool diagonal_form_check(int n, int r, int s, const Field& field);

/// A permutation sending every member of fc into S(r), by complete
/// backtracking search. nullopt only when none exists.
[[nodiscard]] std::optional<PermCert> find_sigma(const SetFamily& fc);

/// True iff cert maps every member of fc into S(r).
[[nodiscard]] bool sigma_certifies(const SetFamily& fc, const PermCert& cert);

/// Rank of W_{r,s} with the rows fc removed, against Wilson's formula.
[[nodiscard]] ResilienceReport verify_set_resilience(int n, int r, int s, const SetFamily& fc, const Field& field);

} // namespace incmat
