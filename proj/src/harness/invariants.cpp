#include <cmath>
#include <set>
#include <sstream>

#include "incmat/harness.hpp"
#include "incmat/linalg.hpp"
#include "incmat/qrank.hpp"
#include "incmat/setlat.hpp"

namespace incmat {

namespace {

// A check returns an empty string on success, else a description of the
// first violation.
using Check = std::function<std::string()>;

template <class... Args>
std::string fail(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

Field field_of(std::uint32_t ell) { return ell ? Field::prime(ell) : Field::rationals(); }

std::string wilson_agreement() {
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (int s = 0; s <= r && r + s <= n; ++s) {
                for (std::uint32_t ell : {0u, 2u, 3u, 5u}) {
                    const std::size_t got = rank(build_w(n, r, s, field_of(ell)));
                    if (got != wilson_rank(n, r, s, ell)) return fail("n=", n, " r=", r, " s=", s, " char=", ell, " rank=", got);
                }
            }
        }
    }
    return {};
}

struct QPoint {
    int n;
    std::uint64_t q;
};
const std::vector<QPoint> kQGrid = {{4, 2}, {4, 3}, {5, 2}};

std::string q_formula_agreement() {
    for (const auto& g : kQGrid) {
        for (int r = 1; 2 * r <= g.n; ++r) {
            for (int s = 0; s < r; ++s) {
                for (std::uint32_t ell : {0u, 2u, 3u, 5u, 7u}) {
                    if (ell == prime_power(g.q).p) continue;
                    const std::size_t got = rank(build_wq(g.n, r, s, g.q, field_of(ell)));
                    if (got != fy_rank(g.n, r, s, g.q, ell)) {
                        return fail("n=", g.n, " r=", r, " s=", s, " q=", g.q, " char=", ell, " rank=", got);
                    }
                }
            }
        }
    }
    return {};
}

std::string rational_rank_q() {
    for (const auto& g : kQGrid) {
        for (int r = 0; r <= g.n; ++r) {
            for (int s = 0; s <= std::min(r, g.n - r); ++s) {
                if (rank(build_wq(g.n, r, s, g.q, Field::rationals())) != gaussian_binomial(g.n, s, g.q)) {
                    return fail("n=", g.n, " r=", r, " s=", s, " q=", g.q);
                }
            }
        }
    }
    return {};
}

std::string full_rank_set_counts() {
    for (int n = 0; n <= 12; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            if (full_rank_sets(n, j).size() != binomial(n, j) - binomial(n, j - 1)) return fail("n=", n, " j=", j);
        }
    }
    return {};
}

std::string bier_basis_rank() {
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (std::uint32_t ell : {0u, 2u, 3u}) {
                if (rank(bier_basis_matrix(n, r, field_of(ell))) != binom64(n, r)) return fail("n=", n, " r=", r, " char=", ell);
            }
        }
    }
    return {};
}

std::string bier_identity() {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const Subset a(n, mask);
            for (int r = a.size() + 1; r <= n; ++r) {
                for (int ell = 1; ell <= r - a.size(); ++ell) {
                    for (std::uint32_t c : {0u, 2u}) {
                        if (!is_zero(bier_identity_residual(a, r, ell, field_of(c)))) {
                            return fail("A=", a.to_string(), " r=", r, " l=", ell, " char=", c);
                        }
                    }
                }
            }
        }
    }
    return {};
}

std::string bier_diagonal() {
    for (int n = 0; n <= 7; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (int s = 0; s <= r; ++s) {
                if (!diagonal_form_check(n, r, s, Field::prime(2))) return fail("n=", n, " r=", r, " s=", s);
            }
        }
    }
    return {};
}

std::string codec_roundtrip() {
    for (std::uint64_t q : {2, 3}) {
        const Field f = Field::of_order(q);
        for (int n = 0; n <= 4; ++n) {
            for (int r = 0; r <= n; ++r) {
                std::string bad;
                const SubspaceOrder order(n, r, q);
                order.for_each([&](std::uint64_t i, const SubspaceCode& code) {
                    if (!bad.empty()) return;
                    if (encode_subspace(decode_subspace(code, f), r) != code || order.at(i) != code) {
                        bad = fail("n=", n, " r=", r, " q=", q, " index=", i);
                    }
                });
                if (!bad.empty()) return bad;
            }
        }
    }
    for (std::uint64_t q : {2, 3, 4}) {
        for (int n = 0; n <= 8; ++n) {
            for (int r = 0; r <= n; ++r) {
                BigInt sum = 0;
                for (const auto& pi : enumerate_paths(n, r)) {
                    BigInt c;
                    mpz_ui_pow_ui(c.get_mpz_t(), q, static_cast<unsigned long>(box_count(pi)));
                    sum += c;
                }
                if (sum != gaussian_binomial(n, r, q)) return fail("path sum n=", n, " r=", r, " q=", q);
            }
        }
    }
    return {};
}

std::string good_count_specht() {
    for (std::uint64_t q : {2, 3}) {
        const Field host = Field::prime(default_host_prime(prime_power(q).p));
        for (int n = 1; n <= (q == 2 ? 5 : 4); ++n) {
            for (int r = 0; 2 * r <= n; ++r) {
                const BigInt expect = gaussian_binomial(n, r, q) - gaussian_binomial(n, r - 1, q);
                if (count_good(n, r, q) != expect || specht_dimension(n, r, q, host) != expect) {
                    return fail("n=", n, " r=", r, " q=", q);
                }
            }
        }
    }
    return {};
}

std::string module_dimensions() {
    for (std::uint64_t q : {2, 3}) {
        const Field host = Field::prime(default_host_prime(prime_power(q).p));
        for (int n = 1; n <= (q == 2 ? 5 : 4); ++n) {
            for (int r = 0; 2 * r <= n; ++r) {
                if (u_subspace(n, r, q, host).dim() != gaussian_binomial(n, r - 1, q)) return fail("U n=", n, " r=", r, " q=", q);
                const WChain chain = w_chain(n, r, q, host);
                for (int j = 0; j <= r; ++j) {
                    if (chain.dims[j] != gaussian_binomial(n, j, q)) return fail("W n=", n, " s=", r, " j=", j, " q=", q);
                }
            }
        }
    }
    return {};
}

std::string q_diagonal_action() {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; 2 * r <= n; ++r) {
            for (int s = 0; s <= r; ++s) {
                if (!diagonal_action_check(n, r, s, 2, Field::prime(3))) return fail("n=", n, " r=", r, " s=", s);
            }
        }
    }
    return {};
}

std::string character_blocks() {
    for (std::uint64_t q : {2, 3}) {
        const CharacterCtx ctx(Field::prime(static_cast<std::uint32_t>(q)));
        for (int n = 0; n <= 4; ++n) {
            for (int r = 0; r <= n; ++r) {
                for (const auto& pi : enumerate_paths(n, r)) {
                    const ExactMatrix b = e_block_matrix(pi, ctx);
                    if (rank(b) != b.rows()) return fail("path ", pi.to_string(), " q=", q);
                }
            }
        }
    }
    return {};
}

std::string leading_block_intersection() {
    struct Case {
        int n, r;
        std::uint32_t q, host;
    };
    for (const Case& c : {Case{4, 2, 2, 3}, Case{5, 2, 2, 3}, Case{4, 2, 3, 7}}) {
        const std::size_t d = lemma18_intersection_dim(c.n, c.r, CharacterCtx(Field::prime(c.q), Field::prime(c.host)));
        if (d != 0) return fail("n=", c.n, " r=", c.r, " q=", c.q, " dim=", d);
    }
    return {};
}

std::string sigma_certificates() {
    for (int n = 1; n <= 7; ++n) {
        for (int r = 1; 2 * r <= n; ++r) {
            RemovalPolicy p;
            p.max_size = (n - 1) / r;
            for (const auto& fam : removal_families(binom64(n, r), p)) {
                const SetFamily fc(n, r, fam);
                const auto sigma = find_sigma(fc);
                if (!sigma || !sigma_certifies(fc, *sigma)) return fail("n=", n, " r=", r, " family size ", fam.size());
            }
        }
    }
    return {};
}

std::string g_certificates() {
    struct Case {
        int n, r;
        std::uint64_t q;
    };
    for (const Case& c : {Case{4, 2, 2}, Case{4, 2, 3}, Case{5, 2, 2}, Case{4, 1, 3}}) {
        RemovalPolicy p;
        p.max_size = 2;
        const SubspaceCatalog cat(c.n, c.r, c.q);
        for (const auto& fam : removal_families(cat.size(), p)) {
            std::set<int> pivots;
            for (auto i : fam) pivots.insert(cat.code(i).pivots.begin(), cat.code(i).pivots.end());
            if (static_cast<int>(pivots.size()) > c.n - c.r) continue;
            const QFamily fc(c.n, c.r, c.q, fam);
            const auto g = find_g(fc);
            if (!g || !g_certifies(*g, fc)) return fail("n=", c.n, " r=", c.r, " q=", c.q);
        }
    }
    return {};
}

std::string set_resilience() {
    RemovalPolicy p;
    p.max_size = 2;
    for (const auto& fam : removal_families(binom64(7, 3), p)) {
        const auto rep = verify_set_resilience(7, 3, 1, SetFamily(7, 3, fam), Field::prime(2));
        if (rep.is_counterexample()) return fail("family size ", fam.size(), " rank ", rep.computed_rank);
    }
    return {};
}

std::string q_resilience() {
    for (std::uint64_t a = 0; a < 35; ++a) {
        const auto rep = verify_q_resilience(4, 2, 1, 2, QFamily(4, 2, 2, {a}), Field::prime(3));
        if (!rep.equal) return fail("removed ", a, " rank ", rep.computed_rank);
    }
    return {};
}

std::string shadow_spot_checks() {
    for (int x = 0; x <= 8; ++x) {
        for (int r = 0; r <= x; ++r) {
            std::vector<std::uint64_t> members;
            for (const auto& a : k_subsets(x, r)) members.push_back(subset_index(Subset(8, a.mask())));
            const SetFamily f(8, r, members);
            for (int s = 0; s <= r; ++s) {
                if (shadow(f, s).size() != binom64(x, s)) return fail("shadow x=", x, " r=", r, " s=", s);
                // Full column rank needs r + s <= x; beyond that the x - r
                // complements take over.
                if (rank(build_w(8, r, s, Field::rationals(), f)) != binom64(x, std::min(s, x - r))) {
                    return fail("rank x=", x, " r=", r, " s=", s);
                }
            }
            if (r >= 1 && x >= r && std::abs(lovasz_x(binomial(x, r), r) - x) > 1e-9) return fail("lovasz x=", x, " r=", r);
        }
    }
    return {};
}

} // namespace

std::vector<InvariantResult> run_invariants(const std::function<void(const InvariantResult&)>& progress) {
    const std::vector<std::pair<const char*, Check>> checks = {
        {"wilson rank formula", wilson_agreement},
        {"subspace rank formula", q_formula_agreement},
        {"subspace rank over Q", rational_rank_q},
        {"full rank set counts", full_rank_set_counts},
        {"bier basis rank", bier_basis_rank},
        {"bier identity residual", bier_identity},
        {"bier diagonal form", bier_diagonal},
        {"subspace codec", codec_roundtrip},
        {"good count and specht dimension", good_count_specht},
        {"module dimensions", module_dimensions},
        {"subspace up-map diagonal action", q_diagonal_action},
        {"character block rank", character_blocks},
        {"lower span meets leading block trivially", leading_block_intersection},
        {"sigma certificates", sigma_certificates},
        {"g certificates", g_certificates},
        {"set resilience", set_resilience},
        {"subspace resilience", q_resilience},
        {"shadow spot checks", shadow_spot_checks},
    };
    std::vector<InvariantResult> out;
    for (const auto& [name, check] : checks) {
        const auto start = std::chrono::steady_clock::now();
        InvariantResult res{name, false, {}, {}};
        try {
            res.detail = check();
            res.passed = res.detail.empty();
        } catch (const std::exception& e) {
            res.detail = std::string("exception: ") + e.what();
        }
        res.elapsed = std::chrono::steady_clock::now() - start;
        if (progress) progress(res);
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace incmat
