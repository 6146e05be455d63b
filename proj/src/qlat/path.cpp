#include <bit>
#include <stdexcept>

#include "incmat/qlat.hpp"

namespace incmat {

LatticePath::LatticePath(int n, std::uint64_t south_mask) : n_(n), mask_(south_mask) {
    (void)Subset(n, south_mask);  // range check
}

LatticePath LatticePath::parse(std::string_view steps) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (steps[k] == 'S') {
            mask |= std::uint64_t{1} << k;
        } else if (steps[k] != 'E') {
            throw std::invalid_argument("path steps must be S or E: '" + std::string(steps) + "'");
        }
    }
    return {static_cast<int>(steps.size()), mask};
}

LatticePath LatticePath::from_positions(int n, std::span<const int> south) {
    return {n, Subset::of(n, south).mask()};
}

int LatticePath::r() const { return std::popcount(mask_); }

std::vector<int> LatticePath::south_positions() const { return as_subset().elements(); }

std::string LatticePath::to_string() const {
    std::string s(static_cast<std::size_t>(n_), 'E');
    for (int k = 0; k < n_; ++k) {
        if ((mask_ >> k) & 1) s[k] = 'S';
    }
    return s;
}

std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (!diff) return std::strong_ordering::equal;
    // At the first differing step, the path going south is smaller.
    return (a.mask_ & diff & -diff) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<LatticePath> enumerate_paths(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("enumerate_paths requires 0 <= r <= n");
    // S < E on step strings is the same as lexicographic order on the
    // sorted S positions.
    std::vector<LatticePath> out;
    for (const auto& s : k_subsets(n, r)) out.emplace_back(n, s.mask());
    return out;
}

std::uint64_t path_index(const LatticePath& pi) { return subset_index(pi.as_subset()); }

int box_count(const LatticePath& pi) {
    int total = 0, i = 1;
    for (int p : pi.south_positions()) total += p - i++;
    return total;
}

int leading_term(const LatticePath& pi) {
    return pi.south_mask() ? std::countr_zero(pi.south_mask()) : pi.n();
}

const char* to_string(PathClass c) {
    switch (c) {
    case PathClass::Plus: return "PLUS";
    case PathClass::Minus: return "MINUS";
    case PathClass::Outside: return "OUTSIDE";
    }
    return "?";
}

PathClass classify(const LatticePath& pi) {
    const Subset a = pi.as_subset();
    int count = 0;
    for (int i = 1; i <= pi.n(); ++i) {
        count += a.contains(i);
        if (2 * count > i) return PathClass::Outside;
    }
    return leading_term(pi) >= pi.r() ? PathClass::Plus : PathClass::Minus;
}

} // namespace incmat
