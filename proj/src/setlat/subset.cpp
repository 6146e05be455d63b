#include "incmat/subset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace incmat {

namespace {

const std::array<std::array<std::uint64_t, 64>, 64>& pascal() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 64>, 64> t{};
        for (int n = 0; n < 64; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

void check_ground(int n) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [0, 63]");
}

} // namespace

std::uint64_t binom64(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    check_ground(n);
    return pascal()[n][k];
}

Subset::Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    check_ground(n);
    const std::uint64_t allowed = n == 64 ? ~0ULL : ((std::uint64_t{1} << n) - 1);
    if (mask & ~allowed) throw std::invalid_argument("subset has elements outside [n]");
}

Subset Subset::of(int n, std::span<const int> elements) {
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [n]");
        mask |= std::uint64_t{1} << (e - 1);
    }
    return {n, mask};
}

int Subset::size() const { return std::popcount(mask_); }

bool Subset::contains(int element) const {
    return element >= 1 && element <= n_ && ((mask_ >> (element - 1)) & 1);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string Subset::to_string() const {
    std::string s;
    for (int e : elements()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e);
    }
    return s;
}

Subset Subset::parse(int n, const std::string& text) {
    std::vector<int> elems;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        std::size_t used = 0;
        const int v = std::stoi(item.substr(first), &used);
        if (item.find_first_not_of(" \t", first + used) != std::string::npos) {
            throw std::invalid_argument("invalid subset element '" + item + "'");
        }
        elems.push_back(v);
    }
    const Subset s = of(n, elems);
    if (s.size() != static_cast<int>(elems.size())) throw std::invalid_argument("repeated subset element");
    return s;
}

std::vector<Subset> k_subsets(int n, int k) {
    check_ground(n);
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    out.reserve(binom64(n, k));
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        out.push_back(Subset::of(n, c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::uint64_t subset_index(const Subset& s) {
    const int n = s.n();
    const int k = s.size();
    std::uint64_t rank = 0;
    int prev = 0;
    int i = 1;
    for (int a : s.elements()) {
        for (int v = prev + 1; v < a; ++v) rank += binom64(n - v, k - i);
        prev = a;
        ++i;
    }
    return rank;
}

Subset subset_at(int n, int k, std::uint64_t index) {
    if (k < 0 || k > n || index >= binom64(n, k)) throw std::out_of_range("subset index out of range");
    std::vector<int> elems;
    int v = 1;
    for (int i = 1; i <= k; ++i) {
        while (true) {
            const std::uint64_t block = binom64(n - v, k - i);
            if (index < block) break;
            index -= block;
            ++v;
        }
        elems.push_back(v);
        ++v;
    }
    return Subset::of(n, elems);
}

// ---------------------------------------------------------------------------

SetFamily::SetFamily(int n, int r, std::vector<std::uint64_t> members)
    : n_(n), r_(r), members_(std::move(members)) {
    check_ground(n);
    if (r < 0 || r > n) throw std::invalid_argument("family rank r must be in [0, n]");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("family has repeated members");
    }
    if (!members_.empty() && members_.back() >= binom64(n, r)) {
        throw std::invalid_argument("family index out of range");
    }
}

SetFamily SetFamily::from_subsets(int n, int r, std::span<const Subset> subsets) {
    std::vector<std::uint64_t> idx;
    idx.reserve(subsets.size());
    for (const auto& s : subsets) {
        if (s.n() != n || s.size() != r) throw std::invalid_argument("family member has wrong size or ground set");
        idx.push_back(subset_index(s));
    }
    return {n, r, std::move(idx)};
}

SetFamily SetFamily::all(int n, int r) {
    std::vector<std::uint64_t> idx(binom64(n, r));
    for (std::uint64_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return {n, r, std::move(idx)};
}

std::vector<Subset> SetFamily::subsets() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (auto i : members_) out.push_back(subset_at(n_, r_, i));
    return out;
}

bool SetFamily::contains(std::uint64_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

SetFamily SetFamily::complement() const {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = binom64(n_, r_);
    std::size_t k = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (k < members_.size() && members_[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return {n_, r_, std::move(out)};
}

// ---------------------------------------------------------------------------

PermCert::PermCert(int n, std::vector<int> image) : n_(n), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("permutation image is not a bijection of [n]");
        seen[v] = true;
    }
}

PermCert PermCert::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[i] = i + 1;
    return {n, std::move(image)};
}

Subset PermCert::apply(const Subset& s) const {
    if (s.n() != n_) throw std::invalid_argument("permutation and subset disagree on n");
    std::vector<int> out;
    for (int e : s.elements()) out.push_back((*this)(e));
    return Subset::of(n_, out);
}

} // namespace incmat
