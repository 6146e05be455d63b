#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cache.hpp"

namespace incmat {

SubspaceCatalog::SubspaceCatalog(int n, int k, std::uint64_t q)
    : order_(n, k, q), field_(Field::of_order(q)) {
    codes_.reserve(order_.size());
    matrices_.reserve(order_.size());
    order_.for_each([&](std::uint64_t, const SubspaceCode& code) {
        codes_.push_back(code);
        matrices_.push_back(decode_subspace(code, field_));
    });
}

std::uint64_t SubspaceCatalog::index_of_span(const ExactMatrix& b) const {
    if (b.cols() != static_cast<std::size_t>(order_.n())) throw std::invalid_argument("index_of_span: wrong width");
    return order_.index_of(encode_subspace(b, order_.r()));
}

bool subspace_contains(const SubspaceCode& big, const SubspaceCode& small) {
    if (big.n != small.n || big.q != small.q) throw std::invalid_argument("subspace_contains: mismatched ambient spaces");
    if (small.r > big.r) return false;
    const Field f = Field::of_order(big.q);
    return rank(ExactMatrix::vstack(decode_subspace(big, f), decode_subspace(small, f))) ==
           static_cast<std::size_t>(big.r);
}

namespace detail {

std::shared_ptr<const SubspaceCatalog> shared_catalog(int n, int k, std::uint64_t q) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::uint64_t>, std::shared_ptr<const SubspaceCatalog>> cache;
    const std::lock_guard lock(mu);
    auto& slot = cache[{n, k, q}];
    if (!slot) slot = std::make_shared<const SubspaceCatalog>(n, k, q);
    return slot;
}

} // namespace detail

std::shared_ptr<const std::vector<std::vector<std::uint64_t>>> incidence_lists(int n, int r, int s, std::uint64_t q) {
    if (s < 0 || s > r || r > n) throw std::invalid_argument("incidence_lists requires 0 <= s <= r <= n");
    using Lists = std::vector<std::vector<std::uint64_t>>;
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, std::uint64_t>, std::shared_ptr<const Lists>> cache;
    {
        const std::lock_guard lock(mu);
        auto it = cache.find({n, r, s, q});
        if (it != cache.end()) return it->second;
    }
    const auto rows = detail::shared_catalog(n, r, q);
    const auto local = detail::shared_catalog(r, s, q);
    const auto cols = detail::shared_catalog(n, s, q);
    auto lists = std::make_shared<Lists>(rows->size());
    for (std::size_t i = 0; i < rows->size(); ++i) {
        auto& out = (*lists)[i];
        out.reserve(local->size());
        // The s-subspaces of R are the images of the s-subspaces of F_q^r
        // under the coordinate map given by R's canonical basis.
        for (std::size_t c = 0; c < local->size(); ++c) {
            if (s == 0) {
                out.push_back(0);
                continue;
            }
            out.push_back(cols->index_of_span(local->matrix(c) * rows->matrix(i)));
        }
        std::sort(out.begin(), out.end());
    }
    const std::lock_guard lock(mu);
    auto& slot = cache[{n, r, s, q}];
    if (!slot) slot = std::move(lists);
    return slot;
}

} // namespace incmat
