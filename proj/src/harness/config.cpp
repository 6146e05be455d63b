#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "incmat/harness.hpp"

namespace incmat {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("INCMAT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::size_t kMaxFamilies = 20'000'000;

void exhaustive(std::uint64_t total, int max_size, std::vector<std::vector<std::uint64_t>>& out) {
    for (int k = 0; k <= max_size && static_cast<std::uint64_t>(k) <= total; ++k) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[i] = static_cast<std::uint64_t>(i);
        while (true) {
            out.push_back(c);
            if (out.size() > kMaxFamilies) throw std::length_error("removal policy yields too many families");
            int i = k - 1;
            while (i >= 0 && c[i] == total - static_cast<std::uint64_t>(k - i)) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

} // namespace

std::vector<std::vector<std::uint64_t>> removal_families(std::uint64_t total, const RemovalPolicy& policy) {
    std::vector<std::vector<std::uint64_t>> out;
    switch (policy.kind) {
    case RemovalKind::Exhaustive:
        if (policy.max_size < 0) throw std::invalid_argument("exhaustive removal size must be >= 0");
        exhaustive(total, policy.max_size, out);
        break;
    case RemovalKind::Sampled: {
        if (policy.max_size < 1) throw std::invalid_argument("sampled removal size must be >= 1");
        if (policy.samples > kMaxFamilies) throw std::length_error("too many samples");
        const std::uint64_t cap = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(policy.max_size));
        for (std::size_t i = 0; i < policy.samples; ++i) {
            // Each sample has its own generator so any subset of samples can
            // be regenerated on its own.
            std::mt19937_64 rng(splitmix64(policy.seed ^ splitmix64(i)));
            std::set<std::uint64_t> fam;
            const std::uint64_t size = cap ? 1 + rng() % cap : 0;
            while (fam.size() < size) fam.insert(rng() % total);
            out.emplace_back(fam.begin(), fam.end());
        }
        break;
    }
    case RemovalKind::Explicit:
        for (const auto& f : policy.families) {
            for (auto i : f) {
                if (i >= total) throw std::out_of_range("removed index " + std::to_string(i) + " out of range");
            }
            out.push_back(f);
        }
        break;
    }
    return out;
}

} // namespace incmat
