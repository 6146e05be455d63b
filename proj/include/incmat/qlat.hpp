#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "incmat/field.hpp"
#include "incmat/matrix.hpp"
#include "incmat/subset.hpp"

namespace incmat {

/// [n k]_q, the number of k-dimensional subspaces of F_q^n; 0 when
/// k < 0 or k > n.
[[nodiscard]] BigInt gaussian_binomial(long n, long k, std::uint64_t q);

/**
 * A monotone lattice path through an r x (n-r) array of boxes: n steps,
 * r of them south (S), the rest east (E). Bit k-1 of the mask is set when
 * step k is S.
 *
 * Paths compare lexicographically on their step strings with S < E.
 */
class LatticePath {
public:
    LatticePath(int n, std::uint64_t south_mask);
    static LatticePath parse(std::string_view steps);
    /// S steps at the given 1-based positions.
    static LatticePath from_positions(int n, std::span<const int> south);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const;
    [[nodiscard]] std::uint64_t south_mask() const { return mask_; }
    /// 1-based positions of the S steps, increasing.
    [[nodiscard]] std::vector<int> south_positions() const;
    /// The r-subset of S positions.
    [[nodiscard]] Subset as_subset() const { return {n_, mask_}; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b);

private:
    int n_;
    std::uint64_t mask_;
};

/// All paths of P(n-r, r) in increasing order.
[[nodiscard]] std::vector<LatticePath> enumerate_paths(int n, int r);

/// Position of a path in enumerate_paths(n, r).
[[nodiscard]] std::uint64_t path_index(const LatticePath& pi);

/// Number of boxes below the path: sum over S steps of the E steps taken
/// before it. The number of subspaces with this path is q^box_count.
[[nodiscard]] int box_count(const LatticePath& pi);

/// Number of E steps before the first S step (n when there is none).
[[nodiscard]] int leading_term(const LatticePath& pi);

enum class PathClass { Plus, Minus, Outside };

[[nodiscard]] const char* to_string(PathClass c);

/// Plus: leading term >= r. Minus: the path stays weakly below the
/// diagonal but has leading term < r. Outside: the path crosses it.
[[nodiscard]] PathClass classify(const LatticePath& pi);

/**
 * Canonical form of an r-dimensional subspace of F_q^n.
 *
 * The canonical r x n matrix has, in row i, a 1 at column pivots[i] as
 * its last nonzero entry; pivot columns are zero in every other row.
 * filling[i] lists the entries of row i at the non-pivot columns left of
 * its pivot, in increasing column order, so it has pivots[i] - (i+1)
 * entries. Entries are element codes of Field::of_order(q).
 */
struct SubspaceCode {
    int n = 0;
    int r = 0;
    std::uint64_t q = 2;
    std::vector<int> pivots;  // 1-based, strictly increasing
    std::vector<std::vector<std::uint32_t>> filling;

    /// Throws std::invalid_argument unless the invariants hold.
    void validate() const;
    [[nodiscard]] LatticePath path() const;
    [[nodiscard]] int box_count() const;
    /// Text form `p1,...,pr|f1 f2 ... fb`, values row-major.
    [[nodiscard]] std::string to_string(const Field& field) const;
    static SubspaceCode parse(int n, const Field& field, std::string_view text);

    friend bool operator==(const SubspaceCode&, const SubspaceCode&) = default;
};

/// Canonical code of the row space of b. Throws std::invalid_argument
/// if rank(b) != r or b is not over a default-modulus finite field.
[[nodiscard]] SubspaceCode encode_subspace(const ExactMatrix& b, int r);

/// The canonical r x n matrix of a code, over field (of order code.q).
[[nodiscard]] ExactMatrix decode_subspace(const SubspaceCode& code, const Field& field);
[[nodiscard]] ExactMatrix decode_subspace(const SubspaceCode& code);

/**
 * The canonical enumeration of r-subspaces of F_q^n: by path in
 * enumerate_paths order, then by filling read row-major as a base-q
 * number whose first entry is the most significant digit.
 */
class SubspaceOrder {
public:
    SubspaceOrder(int n, int r, std::uint64_t q);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] std::uint64_t q() const { return q_; }
    [[nodiscard]] std::uint64_t size() const { return offsets_.back(); }
    [[nodiscard]] const std::vector<LatticePath>& paths() const { return paths_; }
    /// Index of the first subspace with path paths()[k]; offsets(size) = size().
    [[nodiscard]] std::uint64_t path_offset(std::size_t k) const { return offsets_.at(k); }

    [[nodiscard]] std::uint64_t index_of(const SubspaceCode& code) const;
    [[nodiscard]] SubspaceCode at(std::uint64_t index) const;

    /// Calls f(index, code) for every subspace in order.
    template <class F>
    void for_each(F&& f) const {
        std::uint64_t index = 0;
        for (const auto& pi : paths_) {
            SubspaceCode code = blank_code(pi);
            std::size_t boxes = 0;
            for (const auto& row : code.filling) boxes += row.size();
            while (true) {
                f(index++, static_cast<const SubspaceCode&>(code));
                if (!increment(code, boxes)) break;
            }
        }
    }

private:
    SubspaceCode blank_code(const LatticePath& pi) const;
    /// Odometer step on the filling, last entry fastest. False on wrap.
    bool increment(SubspaceCode& code, std::size_t boxes) const;

    int n_;
    int r_;
    std::uint64_t q_;
    std::vector<LatticePath> paths_;
    std::vector<std::uint64_t> offsets_;
};

/// A family of r-subspaces of F_q^n as sorted distinct indices into
/// SubspaceOrder(n, r, q).
class QFamily {
public:
    QFamily(int n, int r, std::uint64_t q, std::vector<std::uint64_t> members);
    static QFamily from_codes(int n, int r, std::uint64_t q, std::span<const SubspaceCode> codes);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] std::uint64_t q() const { return q_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<std::uint64_t>& members() const { return members_; }
    [[nodiscard]] std::vector<SubspaceCode> codes() const;
    [[nodiscard]] QFamily complement() const;

    friend bool operator==(const QFamily&, const QFamily&) = default;

private:
    int n_;
    int r_;
    std::uint64_t q_;
    std::vector<std::uint64_t> members_;
};

/// Definition of a good filling: at every corner (i, j) the path passes
/// through, the filling block with rows i..r and array columns 1..j-1
/// has rank at most j - i.
[[nodiscard]] bool is_good(const SubspaceCode& code, const Field& field);
[[nodiscard]] bool is_good(const SubspaceCode& code);

/// Number of good r-subspaces of F_q^n, by exhaustive enumeration.
[[nodiscard]] BigInt count_good(int n, int r, std::uint64_t q);

} // namespace incmat
