#include <algorithm>
#include <limits>
#include <stdexcept>

#include "incmat/qlat.hpp"

namespace incmat {

SubspaceOrder::SubspaceOrder(int n, int r, std::uint64_t q) : n_(n), r_(r), q_(q), paths_(enumerate_paths(n, r)) {
    (void)prime_power(q);
    offsets_.reserve(paths_.size() + 1);
    offsets_.push_back(0);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 2;
    for (const auto& pi : paths_) {
        std::uint64_t c = 1;
        for (int b = box_count(pi); b > 0; --b) {
            if (c > limit / q_) throw std::overflow_error("too many subspaces to index");
            c *= q_;
        }
        if (offsets_.back() > limit - c) throw std::overflow_error("too many subspaces to index");
        offsets_.push_back(offsets_.back() + c);
    }
}

std::uint64_t SubspaceOrder::index_of(const SubspaceCode& code) const {
    if (code.n != n_ || code.r != r_ || code.q != q_) throw std::invalid_argument("index_of: code has wrong n, r or q");
    code.validate();
    std::uint64_t idx = 0;
    for (const auto& row : code.filling) {
        for (auto v : row) idx = idx * q_ + v;
    }
    return offsets_[path_index(code.path())] + idx;
}

SubspaceCode SubspaceOrder::at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("subspace index out of range");
    const auto k = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1);
    SubspaceCode code = blank_code(paths_[k]);
    std::uint64_t rem = index - offsets_[k];
    for (auto row = code.filling.rbegin(); row != code.filling.rend(); ++row) {
        for (auto v = row->rbegin(); v != row->rend(); ++v) {
            *v = static_cast<std::uint32_t>(rem % q_);
            rem /= q_;
        }
    }
    return code;
}

SubspaceCode SubspaceOrder::blank_code(const LatticePath& pi) const {
    SubspaceCode code;
    code.n = n_;
    code.r = r_;
    code.q = q_;
    code.pivots = pi.south_positions();
    for (int i = 0; i < r_; ++i) code.filling.emplace_back(static_cast<std::size_t>(code.pivots[i] - (i + 1)), 0);
    return code;
}

bool SubspaceOrder::increment(SubspaceCode& code, std::size_t boxes) const {
    if (boxes == 0) return false;
    for (auto row = code.filling.rbegin(); row != code.filling.rend(); ++row) {
        for (auto v = row->rbegin(); v != row->rend(); ++v) {
            if (++*v < q_) return true;
            *v = 0;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

QFamily::QFamily(int n, int r, std::uint64_t q, std::vector<std::uint64_t> members)
    : n_(n), r_(r), q_(q), members_(std::move(members)) {
    if (r < 0 || r > n || n > kMaxGround) throw std::invalid_argument("QFamily requires 0 <= r <= n");
    (void)prime_power(q);
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("family has repeated members");
    }
    if (!members_.empty() && gaussian_binomial(n, r, q) <= members_.back()) {
        throw std::invalid_argument("family index out of range");
    }
}

QFamily QFamily::from_codes(int n, int r, std::uint64_t q, std::span<const SubspaceCode> codes) {
    const SubspaceOrder order(n, r, q);
    std::vector<std::uint64_t> idx;
    for (const auto& c : codes) idx.push_back(order.index_of(c));
    return {n, r, q, std::move(idx)};
}

std::vector<SubspaceCode> QFamily::codes() const {
    const SubspaceOrder order(n_, r_, q_);
    std::vector<SubspaceCode> out;
    out.reserve(members_.size());
    for (auto i : members_) out.push_back(order.at(i));
    return out;
}

QFamily QFamily::complement() const {
    const std::uint64_t total = SubspaceOrder(n_, r_, q_).size();
    std::vector<std::uint64_t> out;
    std::size_t k = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (k < members_.size() && members_[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return {n_, r_, q_, std::move(out)};
}

} // namespace incmat
