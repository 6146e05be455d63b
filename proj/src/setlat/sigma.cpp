#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "incmat/linalg.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

namespace {

// Sorted image values b_1 < b_2 < ... must satisfy b_k >= 2k. A partial
// image is a subset of the final one, so its k-th value can only be
// larger; the test is a sound prune.
bool prefix_ok(std::vector<int>& images) {
    std::sort(images.begin(), images.end());
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (images[k] < 2 * static_cast<int>(k + 1)) return false;
    }
    return true;
}

class SigmaSearch {
public:
    explicit SigmaSearch(const SetFamily& fc) : n_(fc.n()), sets_(fc.subsets()) {
        std::vector<int> freq(static_cast<std::size_t>(n_) + 1, 0);
        for (const auto& a : sets_) {
            for (int e : a.elements()) ++freq[e];
        }
        for (int e = 1; e <= n_; ++e) {
            if (freq[e] > 0) order_.push_back(e);
        }
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return freq[a] > freq[b]; });
        containing_.resize(static_cast<std::size_t>(n_) + 1);
        for (std::size_t k = 0; k < sets_.size(); ++k) {
            for (int e : sets_[k].elements()) containing_[e].push_back(k);
        }
        image_.assign(static_cast<std::size_t>(n_) + 1, 0);
        used_.assign(static_cast<std::size_t>(n_) + 1, false);
    }

    std::optional<PermCert> run() {
        if (!assign(0)) return std::nullopt;
        int next = 1;
        for (int e = 1; e <= n_; ++e) {
            if (image_[e] != 0) continue;
            while (used_[next]) ++next;
            image_[e] = next;
            used_[next] = true;
        }
        return PermCert(n_, std::vector<int>(image_.begin() + 1, image_.end()));
    }

private:
    bool consistent(int element) const {
        std::vector<int> images;
        for (auto k : containing_[element]) {
            images.clear();
            for (int e : sets_[k].elements()) {
                if (image_[e] != 0) images.push_back(image_[e]);
            }
            if (!prefix_ok(images)) return false;
        }
        return true;
    }

    bool assign(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int element = order_[depth];
        // Large targets satisfy the prefix condition most easily.
        for (int target = n_; target >= 1; --target) {
            if (used_[target]) continue;
            image_[element] = target;
            used_[target] = true;
            if (consistent(element) && assign(depth + 1)) return true;
            used_[target] = false;
            image_[element] = 0;
        }
        return false;
    }

    int n_;
    std::vector<Subset> sets_;
    std::vector<int> order_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<int> image_;
    std::vector<bool> used_;
};

} // namespace

bool sigma_certifies(const SetFamily& fc, const PermCert& cert) {
    if (cert.n() != fc.n()) return false;
    for (const auto& a : fc.subsets()) {
        if (!has_full_frankl_rank(cert.apply(a))) return false;
    }
    return true;
}

std::optional<PermCert> find_sigma(const SetFamily& fc) {
    if (2 * fc.r() > fc.n()) throw std::invalid_argument("find_sigma requires r <= n/2");
    const PermCert id = PermCert::identity(fc.n());
    if (sigma_certifies(fc, id)) return id;
    return SigmaSearch(fc).run();
}

ResilienceReport verify_set_resilience(int n, int r, int s, const SetFamily& fc, const Field& field) {
    if (s < 0 || s >= r) throw std::invalid_argument("verify_set_resilience requires 0 <= s < r");
    if (2 * r > n) throw std::invalid_argument("verify_set_resilience requires r <= n/2");
    if (fc.n() != n || fc.r() != r) throw std::invalid_argument("verify_set_resilience: family has wrong n or r");
    const auto start = std::chrono::steady_clock::now();

    ResilienceReport report;
    report.mode = LatticeMode::Set;
    report.n = n;
    report.r = r;
    report.s = s;
    report.field = field.to_string();
    report.removed = fc.members();
    report.computed_rank = rank(build_w(n, r, s, field, fc.complement()));
    // s < r <= n/2 gives n >= r + s, so Wilson's formula always applies.
    report.formula_rank = wilson_rank(n, r, s, field.characteristic());
    report.formula_source = "wilson";
    report.equal = report.formula_rank == report.computed_rank;
    report.within_bound = static_cast<long>(fc.size()) * r <= n - 1;
    if (auto sigma = find_sigma(fc)) report.certificate = std::move(*sigma);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace incmat
