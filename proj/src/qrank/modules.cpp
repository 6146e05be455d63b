#include <stdexcept>

#include "cache.hpp"

namespace incmat {

namespace {

void refuse_defining_characteristic(const Field& field, std::uint64_t q, const char* what) {
    if (field.characteristic() == prime_power(q).p) {
        throw RefusedError(std::string(what) + ": characteristic of the field equals that of F_q");
    }
}


} // namespace

SubspaceBasis u_subspace(int n, int r, std::uint64_t q, const Field& field) {
    refuse_defining_characteristic(field, q, "u_subspace");
    if (r < 0 || r > n) throw std::invalid_argument("u_subspace requires 0 <= r <= n");
    const std::size_t ambient = detail::shared_catalog(n, r, q)->size();
    if (r == 0) return SubspaceBasis::zero(field, ambient);
    ExactMatrix block = build_wq(n, r, 0, q, field);
    for (int j = 1; j < r; ++j) block = ExactMatrix::hstack(block, build_wq(n, r, j, q, field));
    return SubspaceBasis::span_of_rows(block.transpose());
}

WChain w_chain(int n, int s, std::uint64_t q, const Field& field) {
    refuse_defining_characteristic(field, q, "w_chain");
    if (s < 0 || s > n) throw std::invalid_argument("w_chain requires 0 <= s <= n");
    const std::size_t ambient = detail::shared_catalog(n, s, q)->size();
    WChain chain;
    // Rows of `basis` span the current W_j.
    ExactMatrix basis(field, 0, ambient);
    for (int j = 0; j <= s; ++j) {
        std::vector<std::uint64_t> chosen;
        if (j < s) {
            const ExactMatrix block = build_wq(n, s, j, q, field);
            const std::size_t d = basis.rows();
            const Echelon ech = reduced_row_echelon(ExactMatrix::hstack(basis.transpose(), block));
            for (auto p : ech.pivots) {
                if (p >= d) chosen.push_back(p - d);
            }
            for (auto c : chosen) {
                std::vector<std::size_t> one = {static_cast<std::size_t>(c)};
                basis = ExactMatrix::vstack(basis, block.select_cols(one).transpose());
            }
        } else {
            // The last block is the identity. Unit vectors extending W_{s-1},
            // taken greedily from the front, are the complement of the
            // back-to-front pivot columns of W_{s-1}.
            std::vector<std::size_t> reversed(ambient);
            for (std::size_t i = 0; i < ambient; ++i) reversed[i] = ambient - 1 - i;
            const Echelon ech = reduced_row_echelon(basis.select_cols(reversed));
            std::vector<bool> taken(ambient, false);
            for (auto p : ech.pivots) taken[ambient - 1 - p] = true;
            for (std::size_t i = 0; i < ambient; ++i) {
                if (!taken[i]) chosen.push_back(i);
            }
        }
        const std::size_t prev = chain.dims.empty() ? 0 : chain.dims.back();
        chain.dims.push_back(prev + chosen.size());
        chain.representatives.push_back(std::move(chosen));
    }
    return chain;
}

BigInt specht_dimension(int n, int r, std::uint64_t q, const Field& field) {
    refuse_defining_characteristic(field, q, "specht_dimension");
    if (r < 0 || 2 * r > n) throw std::invalid_argument("specht_dimension requires 0 <= r <= n/2");
    const std::size_t ambient = detail::shared_catalog(n, r, q)->size();
    if (r == 0) return BigInt(static_cast<unsigned long>(ambient));
    ExactMatrix down = build_wq(n, r, 0, q, field).transpose();
    for (int j = 1; j < r; ++j) down = ExactMatrix::vstack(down, build_wq(n, r, j, q, field).transpose());
    return BigInt(static_cast<unsigned long>(ambient - rank(down)));
}

bool diagonal_action_check(int n, int r, int s, std::uint64_t q, const Field& field) {
    if (s < 0 || s > r || r > n) throw std::invalid_argument("diagonal_action_check requires 0 <= s <= r <= n");
    const WChain chain = w_chain(n, s, q, field);
    const ExactMatrix w_rs = build_wq(n, r, s, q, field);
    for (int j = 0; j <= s; ++j) {
        const auto& reps = chain.representatives[j];
        std::vector<std::size_t> cols(reps.begin(), reps.end());
        // Columns of W_{s,j} and W_{r,j} are the up-vectors of j-subspaces.
        const ExactMatrix lhs = w_rs * build_wq(n, s, j, q, field).select_cols(cols);
        const ExactMatrix up_r = build_wq(n, r, j, q, field).select_cols(cols);
        const Ffe c = field.embed(gaussian_binomial(r - j, s - j, q));
        ExactMatrix rhs(field, up_r.rows(), up_r.cols());
        for (std::size_t a = 0; a < rhs.rows(); ++a) {
            for (std::size_t b = 0; b < rhs.cols(); ++b) rhs.set(a, b, c * up_r.at(a, b));
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace incmat
