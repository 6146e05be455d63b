#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace incmat {

/// Maximum ground-set size supported by the bitmask representation.
inline constexpr int kMaxGround = 63;

/// C(n, k) for 0 <= n <= 63 as a machine integer (0 outside 0 <= k <= n).
[[nodiscard]] std::uint64_t binom64(int n, int k);

/// A subset of [n] = {1, ..., n}; element i is bit i-1 of the mask.
class Subset {
public:
    Subset() = default;
    Subset(int n, std::uint64_t mask);
    static Subset of(int n, std::span<const int> elements);
    static Subset of(int n, std::initializer_list<int> elements) {
        return of(n, std::span<const int>(elements.begin(), elements.size()));
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::uint64_t mask() const { return mask_; }
    [[nodiscard]] int size() const;
    [[nodiscard]] bool contains(int element) const;
    [[nodiscard]] bool is_subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }
    [[nodiscard]] bool is_disjoint(const Subset& other) const { return (mask_ & other.mask_) == 0; }
    /// Elements in increasing order.
    [[nodiscard]] std::vector<int> elements() const;
    /// Comma-separated elements, e.g. "1,3,7"; empty string for the empty set.
    [[nodiscard]] std::string to_string() const;
    /// Parses the comma-separated form.
    static Subset parse(int n, const std::string& text);

    Subset operator|(const Subset& o) const { return {n_, mask_ | o.mask_}; }
    Subset operator&(const Subset& o) const { return {n_, mask_ & o.mask_}; }

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// All k-subsets of [n] in the canonical order: lexicographic on the
/// sorted element tuples.
[[nodiscard]] std::vector<Subset> k_subsets(int n, int k);
/// Position of a subset in the canonical order of its size class.
[[nodiscard]] std::uint64_t subset_index(const Subset& s);
[[nodiscard]] Subset subset_at(int n, int k, std::uint64_t index);

/// A family of r-subsets of [n], stored as sorted distinct indices into
/// the canonical enumeration.
class SetFamily {
public:
    SetFamily(int n, int r, std::vector<std::uint64_t> members);
    static SetFamily from_subsets(int n, int r, std::span<const Subset> subsets);
    static SetFamily all(int n, int r);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<std::uint64_t>& members() const { return members_; }
    [[nodiscard]] std::vector<Subset> subsets() const;
    [[nodiscard]] bool contains(std::uint64_t index) const;
    /// Complement inside all r-subsets of [n].
    [[nodiscard]] SetFamily complement() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int n_;
    int r_;
    std::vector<std::uint64_t> members_;
};

/// A permutation sigma of [n]; image[i-1] = sigma(i).
class PermCert {
public:
    PermCert(int n, std::vector<int> image);
    static PermCert identity(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<int>& image() const { return image_; }
    [[nodiscard]] int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] Subset apply(const Subset& s) const;

    friend bool operator==(const PermCert&, const PermCert&) = default;

private:
    int n_;
    std::vector<int> image_;
};

} // namespace incmat
