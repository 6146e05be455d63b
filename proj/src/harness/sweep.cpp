#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "incmat/harness.hpp"
#include "incmat/qrank.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

namespace {

struct GridPoint {
    int n, r, s;
    std::uint64_t q;  // 0 in set mode
    Field field;
    std::uint64_t rows;
    std::vector<std::vector<std::uint64_t>> families;
};

std::string describe(LatticeMode mode, int n, int r, int s, std::uint64_t q, const std::string& field) {
    std::ostringstream os;
    os << "n=" << n << " r=" << r << " s=" << s;
    if (mode == LatticeMode::Subspace) os << " q=" << q;
    os << " field=" << field;
    return os.str();
}

// Number of rows and columns of the full matrix, or nullopt if either
// does not fit in 64 bits.
std::optional<std::pair<std::uint64_t, std::uint64_t>> shape(LatticeMode mode, int n, int r, int s, std::uint64_t q) {
    if (mode == LatticeMode::Set) return std::make_pair(binom64(n, r), binom64(n, s));
    const BigInt rows = gaussian_binomial(n, r, q);
    const BigInt cols = gaussian_binomial(n, s, q);
    if (!rows.fits_ulong_p() || !cols.fits_ulong_p()) return std::nullopt;
    return std::make_pair(static_cast<std::uint64_t>(rows.get_ui()), static_cast<std::uint64_t>(cols.get_ui()));
}

// Returns a reason when the point violates the verifier's preconditions.
std::optional<std::string> check_point(const ExperimentConfig& cfg, int n, int r, int s, std::uint64_t q,
                                       const Field& field) {
    if (n < 0 || n > kMaxGround) return "n out of range";
    if (s < 0 || s >= r) return "needs 0 <= s < r";
    if (2 * r > n) return "needs r <= n/2";
    if (cfg.mode == LatticeMode::Subspace) {
        if (field.characteristic() == prime_power(q).p) return "field characteristic equals that of F_q";
    }
    const auto dims = shape(cfg.mode, n, r, s, q);
    if (!dims) return "matrix dimensions overflow";
    const auto [rows, cols] = *dims;
    if (cols != 0 && rows > cfg.entry_budget / cols) return "matrix exceeds the entry budget";
    return std::nullopt;
}

} // namespace

RunSummary run_sweep(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunSummary summary;
    if (cfg.fields.empty()) throw std::invalid_argument("run_sweep: no fields given");
    std::vector<std::uint64_t> qs = cfg.q;
    if (cfg.mode == LatticeMode::Set) {
        qs = {0};
    } else if (qs.empty()) {
        throw std::invalid_argument("run_sweep: subspace mode needs q values");
    }

    std::vector<GridPoint> points;
    for (int n : cfg.n) {
        for (int r : cfg.r) {
            for (int s : cfg.s) {
                for (auto q : qs) {
                    for (const auto& fs : cfg.fields) {
                        const Field field{std::string_view(fs)};
                        if (auto why = check_point(cfg, n, r, s, q, field)) {
                            summary.skipped.push_back({describe(cfg.mode, n, r, s, q, field.to_string()), *why});
                            continue;
                        }
                        const std::uint64_t rows = shape(cfg.mode, n, r, s, q)->first;
                        points.push_back({n, r, s, q, field, rows, removal_families(rows, cfg.removal)});
                    }
                }
            }
        }
    }

    struct Task {
        std::size_t point;
        std::size_t family;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t f = 0; f < points[p].families.size(); ++f) tasks.push_back({p, f});
    }

    std::vector<std::optional<ResilienceReport>> results(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const GridPoint& pt = points[tasks[i].point];
            const auto& removed = pt.families[tasks[i].family];
            try {
                if (cfg.mode == LatticeMode::Set) {
                    results[i] = verify_set_resilience(pt.n, pt.r, pt.s, SetFamily(pt.n, pt.r, removed), pt.field);
                } else {
                    results[i] = verify_q_resilience(pt.n, pt.r, pt.s, pt.q, QFamily(pt.n, pt.r, pt.q, removed), pt.field);
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(resolve_threads(cfg.threads), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!results[i]) {
            const GridPoint& pt = points[tasks[i].point];
            summary.skipped.push_back({describe(cfg.mode, pt.n, pt.r, pt.s, pt.q, pt.field.to_string()), errors[i]});
            continue;
        }
        ResilienceReport& rep = *results[i];
        (rep.equal ? summary.equal_count : summary.unequal_count)++;
        if (rep.is_counterexample() && !summary.first_counterexample) summary.first_counterexample = summary.cells.size();
        summary.cells.push_back(std::move(rep));
    }
    summary.wall = std::chrono::steady_clock::now() - start;
    return summary;
}

} // namespace incmat
