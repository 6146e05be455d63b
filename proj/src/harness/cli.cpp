#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "incmat/harness.hpp"
#include "incmat/linalg.hpp"
#include "incmat/matrix_io.hpp"
#include "incmat/qrank.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LatticeMode parse_mode(const std::string& m) {
    if (m == "set") return LatticeMode::Set;
    if (m == "q") return LatticeMode::Subspace;
    throw UsageError("--mode must be 'set' or 'q'");
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw UsageError("bad index '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// --remove: a family file (subsets like `1,3,7`, or subspace codes like
// `2,3,5|1 2 3 4`), else an inline comma-separated index list.
std::vector<std::uint64_t> read_removed(const std::string& arg, LatticeMode mode, int n, int r, std::uint64_t q) {
    if (arg.empty()) return {};
    if (!std::filesystem::is_regular_file(arg)) return parse_index_list(arg);
    std::ifstream in(arg);
    std::vector<std::uint64_t> out;
    std::string line;
    const Field qf = mode == LatticeMode::Subspace ? Field::of_order(q) : Field::rationals();
    std::optional<SubspaceOrder> order;
    if (mode == LatticeMode::Subspace) order.emplace(n, r, q);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (mode == LatticeMode::Set) {
            const Subset a = Subset::parse(n, line);
            if (a.size() != r) throw UsageError("family file: '" + line + "' does not have r elements");
            out.push_back(subset_index(a));
        } else {
            const SubspaceCode c = SubspaceCode::parse(n, qf, line);
            if (c.r != r) throw UsageError("family file: '" + line + "' does not have dimension r");
            out.push_back(order->index_of(c));
        }
    }
    return out;
}

Field parse_field(const std::string& s) {
    try {
        return Field{std::string_view(s)};
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --field: ") + e.what());
    }
}

std::string matrix_text(const ExactMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

ExactMatrix build_for(LatticeMode mode, int n, int r, int s, std::uint64_t q, const Field& field,
                      const std::string& remove) {
    const auto removed = read_removed(remove, mode, n, r, q);
    if (mode == LatticeMode::Set) {
        std::optional<SetFamily> rows;
        if (!remove.empty()) rows = SetFamily(n, r, removed).complement();
        return build_w(n, r, s, field, rows);
    }
    std::optional<QFamily> rows;
    if (!remove.empty()) rows = QFamily(n, r, q, removed).complement();
    return build_wq(n, r, s, q, field, rows);
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Exact ranks of inclusion matrices of subsets and subspaces"};
    app.require_subcommand(1);

    std::string mode = "set", field = "q0", remove, out, json, csv;
    int n = 0, r = 0, s = 0;
    std::uint64_t q = 2;
    std::uint32_t ell = 0;

    auto add_shape = [&](CLI::App* sub, bool with_s) {
        sub->add_option("--n", n, "ambient size")->required();
        sub->add_option("--r", r, "row dimension")->required();
        if (with_s) sub->add_option("--s", s, "column dimension")->required();
    };

    auto* build = app.add_subcommand("build", "write an inclusion matrix");
    auto* rank_cmd = app.add_subcommand("rank", "rank of an inclusion matrix");
    for (auto* sub : {build, rank_cmd}) {
        add_shape(sub, true);
        sub->add_option("--mode", mode, "set or q");
        sub->add_option("--q", q, "field order for subspaces");
        sub->add_option("--field", field, "entry field: q0, gf<p>, gf<p>^<t>");
        sub->add_option("--remove", remove, "family file or index list of removed rows");
    }
    build->add_option("--out", out, "output file (default stdout)");

    auto* wilson = app.add_subcommand("wilson", "rank formula for subsets");
    add_shape(wilson, true);
    wilson->add_option("--char", ell, "characteristic (0 or a prime)");

    auto* fy = app.add_subcommand("fy", "rank formula for subspaces");
    add_shape(fy, true);
    fy->add_option("--q", q)->required();
    fy->add_option("--char", ell, "characteristic (0 or a prime other than p)");

    auto* bier = app.add_subcommand("bier", "Bier basis matrix and its rank");
    add_shape(bier, false);
    bier->add_option("--field", field);
    bier->add_option("--out", out, "write the basis matrix here");

    auto* paths = app.add_subcommand("paths", "lattice paths in canonical order");
    add_shape(paths, false);
    std::optional<std::uint64_t> paths_q;
    paths->add_option("--q", paths_q, "also print q^boxes");

    auto* good = app.add_subcommand("good-count", "number of good subspaces");
    add_shape(good, false);
    good->add_option("--q", q)->required();

    auto* specht = app.add_subcommand("specht-dim", "common kernel dimension of the down maps");
    add_shape(specht, false);
    specht->add_option("--q", q)->required();
    specht->add_option("--field", field);

    auto* sigma = app.add_subcommand("sigma", "permutation certificate for removed subsets");
    add_shape(sigma, false);
    sigma->add_option("--remove", remove)->required();

    auto* gfind = app.add_subcommand("gfind", "GL(n, q) certificate for removed subspaces");
    add_shape(gfind, false);
    gfind->add_option("--q", q)->required();
    gfind->add_option("--remove", remove)->required();

    auto* shadow_cmd = app.add_subcommand("shadow", "shadow size and rank of a restricted matrix");
    add_shape(shadow_cmd, true);
    shadow_cmd->add_option("--remove", remove, "rows kept are given here (set mode)")->required();

    ExperimentConfig cfg;
    std::vector<int> ns, rs, ss;
    std::vector<std::uint64_t> qs;
    std::vector<std::string> fields;
    std::optional<int> exhaustive;
    std::optional<std::size_t> samples;
    int max_size = 1;
    std::uint64_t seed = 1;
    auto* res = app.add_subcommand("resilience", "rank resilience sweep");
    res->add_option("--mode", mode);
    res->add_option("--n", ns)->required()->delimiter(',');
    res->add_option("--r", rs)->required()->delimiter(',');
    res->add_option("--s", ss)->required()->delimiter(',');
    res->add_option("--q", qs)->delimiter(',');
    res->add_option("--field", fields)->required()->delimiter(',');
    auto* ex_opt = res->add_option("--exhaustive", exhaustive, "all families of size <= k");
    auto* sample_opt = res->add_option("--sample", samples, "number of sampled families");
    auto* remove_opt = res->add_option("--remove", remove, "one explicit family (file or indices)");
    ex_opt->excludes(sample_opt)->excludes(remove_opt);
    sample_opt->excludes(remove_opt);
    res->add_option("--max-size", max_size, "largest sampled family");
    res->add_option("--seed", seed);
    res->add_option("--json", json, "JSON report path");
    res->add_option("--csv", csv, "CSV report path");
    res->add_option("--threads", cfg.threads);
    res->add_option("--budget", cfg.entry_budget, "largest matrix, in entries");
    res->add_flag("--timings", cfg.timings, "include wall-clock times in reports");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed() || rank_cmd->parsed()) {
            const LatticeMode m = parse_mode(mode);
            const ExactMatrix w = build_for(m, n, r, s, q, parse_field(field), remove);
            if (build->parsed()) {
                emit(matrix_text(w), out);
            } else {
                std::cout << rank(w) << '\n';
            }
            return kOk;
        }
        if (wilson->parsed()) {
            std::cout << wilson_rank(n, r, s, ell) << '\n';
            return kOk;
        }
        if (fy->parsed()) {
            std::cout << fy_rank(n, r, s, q, ell) << '\n';
            return kOk;
        }
        if (bier->parsed()) {
            const ExactMatrix b = bier_basis_matrix(n, r, parse_field(field));
            if (!out.empty()) emit(matrix_text(b), out);
            const std::size_t rk = rank(b);
            const bool full = rk == binom64(n, r);
            std::cout << "rank " << rk << " of " << binom64(n, r) << (full ? " invertible" : " singular") << '\n';
            return full ? kOk : kViolation;
        }
        if (paths->parsed()) {
            std::uint64_t i = 0;
            for (const auto& pi : enumerate_paths(n, r)) {
                std::cout << i++ << ' ' << pi.to_string() << " boxes=" << box_count(pi) << " lead=" << leading_term(pi)
                          << ' ' << to_string(classify(pi));
                if (paths_q) {
                    BigInt c;
                    mpz_ui_pow_ui(c.get_mpz_t(), *paths_q, static_cast<unsigned long>(box_count(pi)));
                    std::cout << " c=" << c;
                }
                std::cout << '\n';
            }
            return kOk;
        }
        if (good->parsed()) {
            std::cout << count_good(n, r, q) << '\n';
            return kOk;
        }
        if (specht->parsed()) {
            const BigInt d = specht_dimension(n, r, q, parse_field(field));
            std::cout << d << '\n';
            return d == gaussian_binomial(n, r, q) - gaussian_binomial(n, r - 1, q) ? kOk : kViolation;
        }
        if (sigma->parsed()) {
            const SetFamily fc(n, r, read_removed(remove, LatticeMode::Set, n, r, 0));
            const auto cert = find_sigma(fc);
            if (!cert) {
                std::cout << "none\n";
                return static_cast<long>(fc.size()) * r <= n - 1 ? kViolation : kOk;
            }
            for (std::size_t i = 0; i < cert->image().size(); ++i) std::cout << (i ? " " : "") << cert->image()[i];
            std::cout << '\n';
            return kOk;
        }
        if (gfind->parsed()) {
            const QFamily fc(n, r, q, read_removed(remove, LatticeMode::Subspace, n, r, q));
            const auto cert = find_g(fc);
            if (!cert) {
                std::cout << "none\n";
                return static_cast<long>(fc.size()) * r <= n - r ? kViolation : kOk;
            }
            std::cout << matrix_text(cert->matrix());
            return kOk;
        }
        if (shadow_cmd->parsed()) {
            const SetFamily f(n, r, read_removed(remove, LatticeMode::Set, n, r, 0));
            std::cout << "size " << f.size() << '\n';
            std::cout << "shadow " << shadow(f, s).size() << '\n';
            std::cout << "rank " << rank(build_w(n, r, s, Field::rationals(), f)) << '\n';
            if (!f.empty() && r >= 1) std::cout << "lovasz_x " << lovasz_x(BigInt(static_cast<unsigned long>(f.size())), r) << '\n';
            return kOk;
        }
        if (res->parsed()) {
            cfg.mode = parse_mode(mode);
            cfg.n = ns;
            cfg.r = rs;
            cfg.s = ss;
            cfg.q = qs;
            cfg.fields = fields;
            cfg.json_path = json;
            cfg.csv_path = csv;
            if (samples) {
                cfg.removal.kind = RemovalKind::Sampled;
                cfg.removal.samples = *samples;
                cfg.removal.max_size = max_size;
                cfg.removal.seed = seed;
            } else if (!remove.empty()) {
                if (ns.size() != 1 || rs.size() != 1 || (cfg.mode == LatticeMode::Subspace && qs.size() != 1)) {
                    throw UsageError("--remove needs a single n, r and q");
                }
                cfg.removal.kind = RemovalKind::Explicit;
                cfg.removal.families = {read_removed(remove, cfg.mode, ns[0], rs[0], qs.empty() ? 0 : qs[0])};
            } else {
                cfg.removal.kind = RemovalKind::Exhaustive;
                cfg.removal.max_size = exhaustive.value_or(0);
            }
            const RunSummary summary = run_sweep(cfg);
            if (!cfg.json_path.empty()) emit(report_json(cfg, summary), cfg.json_path);
            if (!cfg.csv_path.empty()) emit(report_csv(cfg, summary), cfg.csv_path);
            for (const auto& sk : summary.skipped) std::cerr << "skipped " << sk.params << ": " << sk.reason << '\n';
            std::cout << "cells " << summary.total() << " equal " << summary.equal_count << " unequal "
                      << summary.unequal_count << " skipped " << summary.skipped.size() << '\n';
            if (summary.first_counterexample) {
                const auto& c = summary.cells[*summary.first_counterexample];
                std::cout << "counterexample n=" << c.n << " r=" << c.r << " s=" << c.s << " field=" << c.field
                          << " removed=" << c.removed.size() << " rank=" << c.computed_rank << " formula=" << c.formula_rank
                          << '\n';
                return kViolation;
            }
            return kOk;
        }
        if (verify->parsed()) {
            bool all = true;
            (void)run_invariants([&](const InvariantResult& res) {
                all = all && res.passed;
                std::cout << (res.passed ? "PASS " : "FAIL ") << res.name;
                if (!res.passed) std::cout << " (" << res.detail << ')';
                std::cout << '\n' << std::flush;
            });
            return all ? kOk : kViolation;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const RefusedError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace incmat
