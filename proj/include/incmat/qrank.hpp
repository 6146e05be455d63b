#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "incmat/character.hpp"
#include "incmat/linalg.hpp"
#include "incmat/qlat.hpp"
#include "incmat/report.hpp"

namespace incmat {

/// All k-subspaces of F_q^n in canonical order, with their canonical
/// matrices over Field::of_order(q).
class SubspaceCatalog {
public:
    SubspaceCatalog(int n, int k, std::uint64_t q);

    [[nodiscard]] const SubspaceOrder& order() const { return order_; }
    [[nodiscard]] const Field& q_field() const { return field_; }
    [[nodiscard]] std::size_t size() const { return codes_.size(); }
    [[nodiscard]] const SubspaceCode& code(std::size_t i) const { return codes_.at(i); }
    [[nodiscard]] const ExactMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
    [[nodiscard]] std::uint64_t index_of(const SubspaceCode& code) const { return order_.index_of(code); }
    /// Index of the row space of b, which must have rank k.
    [[nodiscard]] std::uint64_t index_of_span(const ExactMatrix& b) const;

private:
    SubspaceOrder order_;
    Field field_;
    std::vector<SubspaceCode> codes_;
    std::vector<ExactMatrix> matrices_;
};

/// X ⊆ R, tested as rank of the stacked canonical matrices = dim R.
[[nodiscard]] bool subspace_contains(const SubspaceCode& big, const SubspaceCode& small);

/// For every r-subspace R (canonical index), the sorted canonical indices
/// of its s-subspaces. Cached per (n, r, s, q); safe to call concurrently.
[[nodiscard]] std::shared_ptr<const std::vector<std::vector<std::uint64_t>>> incidence_lists(int n, int r, int s,
                                                                                             std::uint64_t q);

/// The inclusion matrix of r-subspaces (rows: members of f, default all)
/// against all s-subspaces, entries in field.
[[nodiscard]] ExactMatrix build_wq(int n, int r, int s, std::uint64_t q, const Field& field,
                                   const std::optional<QFamily>& f = std::nullopt);

/**
 * Rank of the full subspace inclusion matrix over a field of
 * characteristic ell (0 or a prime other than p):
 * sum over i <= s with ell not dividing [r-i s-i]_q of [n i]_q - [n i-1]_q.
 * Throws RefusedError when ell = p or n < r + s.
 */
[[nodiscard]] BigInt fy_rank(int n, int r, int s, std::uint64_t q, std::uint32_t ell);

/// Coordinate vector in the span of r-subspaces of the sum of all
/// r-subspaces containing x.
[[nodiscard]] FieldVector up_vector(const SubspaceCode& x, int r, const Field& field);

/// Column space of [W_{r,0}(q) | ... | W_{r,r-1}(q)].
[[nodiscard]] SubspaceBasis u_subspace(int n, int r, std::uint64_t q, const Field& field);

/// Dimensions of the chain W_0 ⊂ ... ⊂ W_s, where W_j is spanned by the
/// up-vectors into s-subspaces of all subspaces of dimension at most j,
/// and the subspaces whose up-vectors extend a basis at each step.
struct WChain {
    std::vector<std::size_t> dims;
    /// representatives[j]: canonical indices of j-subspaces.
    std::vector<std::vector<std::uint64_t>> representatives;
};
[[nodiscard]] WChain w_chain(int n, int s, std::uint64_t q, const Field& field);

/// Dimension of the common kernel of the down maps from r-subspaces to
/// j-subspaces, j < r.
[[nodiscard]] BigInt specht_dimension(int n, int r, std::uint64_t q, const Field& field);

/// Checks W_{r,s}(q) * <X>_s = [r-j s-j]_q <X>_r for every j <= s and
/// every representative j-subspace X of w_chain(n, s, q, field).
[[nodiscard]] bool diagonal_action_check(int n, int r, int s, std::uint64_t q, const Field& field);

/// The vector sum over X with the path of l of chi_l(-X) X, in host
/// coordinates over all r-subspaces.
[[nodiscard]] FieldVector e_vector(const SubspaceCode& l, const CharacterCtx& ctx);

/// The c(pi) x c(pi) matrix whose rows are e_L restricted to the block of
/// path pi, for the L with that path in canonical order.
[[nodiscard]] ExactMatrix e_block_matrix(const LatticePath& pi, const CharacterCtx& ctx);

/// Dimension of U_{r-1} intersected with the coordinate span of the
/// r-subspaces whose path has leading term >= r, over ctx.host().
[[nodiscard]] std::size_t lemma18_intersection_dim(int n, int r, const CharacterCtx& ctx);
[[nodiscard]] bool lemma18_check(int n, int r, const CharacterCtx& ctx);

/**
 * Looks for g in GL(n, q) moving every member of fc to a subspace whose
 * path has leading term >= r. Succeeds when the pivot columns of fc cover
 * at most n - r positions. Returns the identity when fc already qualifies.
 */
[[nodiscard]] std::optional<GLCert> find_g(const QFamily& fc);

/// True iff every member of fc, moved by g, has leading term >= r.
[[nodiscard]] bool g_certifies(const GLCert& g, const QFamily& fc);

/// Rank of W^F_{r,s}(q) with F the complement of fc, against fy_rank.
/// Requires 0 <= s < r <= n/2 and char(field) != p.
[[nodiscard]] ResilienceReport verify_q_resilience(int n, int r, int s, std::uint64_t q, const QFamily& fc,
                                                   const Field& field);

} // namespace incmat
