#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "cache.hpp"

namespace incmat {

GLCert::GLCert(ExactMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.field().is_finite()) throw std::invalid_argument("GLCert: matrix must be over a finite field");
    if (matrix_.rows() != matrix_.cols() || rank(matrix_) != matrix_.rows()) {
        throw std::invalid_argument("GLCert: matrix must be square and invertible");
    }
}

namespace {

std::set<int> pivot_union(const std::vector<SubspaceCode>& codes) {
    std::set<int> out;
    for (const auto& c : codes) out.insert(c.pivots.begin(), c.pivots.end());
    return out;
}

} // namespace

bool g_certifies(const GLCert& g, const QFamily& fc) {
    if (g.n() != static_cast<std::size_t>(fc.n()) || g.q() != fc.q()) {
        throw std::invalid_argument("g_certifies: certificate does not match the family");
    }
    const Field f = Field::of_order(fc.q());
    for (const auto& code : fc.codes()) {
        const SubspaceCode moved = encode_subspace(decode_subspace(code, f) * g.matrix(), fc.r());
        if (classify(moved.path()) != PathClass::Plus) return false;
    }
    return true;
}

std::optional<GLCert> find_g(const QFamily& fc) {
    const int n = fc.n();
    const int r = fc.r();
    const Field f = Field::of_order(fc.q());
    const auto codes = fc.codes();
    const bool already = std::all_of(codes.begin(), codes.end(),
                                     [](const SubspaceCode& c) { return classify(c.path()) == PathClass::Plus; });
    if (already) return GLCert(ExactMatrix::identity(f, static_cast<std::size_t>(n)));

    const std::set<int> pivots = pivot_union(codes);
    const int l = static_cast<int>(pivots.size());
    if (l > n - r) return std::nullopt;
    // Pivot columns go, in order, to the last l positions; the others fill
    // the first n - l positions in order.
    ExactMatrix g(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    int next_pivot = n - l;
    int next_free = 0;
    for (int c = 1; c <= n; ++c) {
        const int target = pivots.count(c) ? next_pivot++ : next_free++;
        g.set_int(static_cast<std::size_t>(c - 1), static_cast<std::size_t>(target), 1);
    }
    GLCert cert(std::move(g));
    if (!g_certifies(cert, fc)) throw std::logic_error("find_g: constructed permutation does not certify the family");
    return cert;
}

ResilienceReport verify_q_resilience(int n, int r, int s, std::uint64_t q, const QFamily& fc, const Field& field) {
    if (s < 0 || s >= r) throw std::invalid_argument("verify_q_resilience requires 0 <= s < r");
    if (2 * r > n) throw std::invalid_argument("verify_q_resilience requires r <= n/2");
    if (fc.n() != n || fc.r() != r || fc.q() != q) {
        throw std::invalid_argument("verify_q_resilience: family has wrong n, r or q");
    }
    if (field.characteristic() == prime_power(q).p) {
        throw RefusedError("verify_q_resilience: characteristic of the field equals that of F_q");
    }
    const auto start = std::chrono::steady_clock::now();

    ResilienceReport report;
    report.mode = LatticeMode::Subspace;
    report.n = n;
    report.r = r;
    report.s = s;
    report.q = q;
    report.field = field.to_string();
    report.removed = fc.members();
    report.computed_rank = rank(build_wq(n, r, s, q, field, fc.complement()));
    // s < r <= n/2 gives n >= r + s, so the formula always applies.
    report.formula_rank = fy_rank(n, r, s, q, field.characteristic());
    report.formula_source = "fy";
    report.equal = report.formula_rank == report.computed_rank;
    report.within_bound = static_cast<long>(fc.size()) * r <= n - r;
    if (auto g = find_g(fc)) report.certificate = std::move(*g);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace incmat
