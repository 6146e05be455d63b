#include <stdexcept>

#include "cache.hpp"

namespace incmat {

namespace {

void check_ctx(const SubspaceCatalog& cat, const CharacterCtx& ctx) {
    if (!(ctx.q_field() == cat.q_field())) throw std::invalid_argument("character context is over a different F_q");
}

// theta(-<l, x>) with the pairing taken entrywise over the boxes.
std::uint32_t character_code(const SubspaceCode& l, const SubspaceCode& x, const CharacterCtx& ctx) {
    const Field& f = ctx.q_field();
    std::uint32_t inner = 0;
    for (std::size_t i = 0; i < l.filling.size(); ++i) {
        for (std::size_t j = 0; j < l.filling[i].size(); ++j) inner = f.add(inner, f.mul(l.filling[i][j], x.filling[i][j]));
    }
    return ctx.theta_code(f.neg(inner));
}

} // namespace

FieldVector e_vector(const SubspaceCode& l, const CharacterCtx& ctx) {
    l.validate();
    const auto cat = detail::shared_catalog(l.n, l.r, l.q);
    check_ctx(*cat, ctx);
    const auto& order = cat->order();
    const std::size_t k = path_index(l.path());
    FieldVector v = zero_vector(ctx.host(), cat->size());
    for (std::uint64_t x = order.path_offset(k); x < order.path_offset(k + 1); ++x) {
        v[x] = ctx.host().from_code(character_code(l, cat->code(x), ctx));
    }
    return v;
}

ExactMatrix e_block_matrix(const LatticePath& pi, const CharacterCtx& ctx) {
    const auto cat = detail::shared_catalog(pi.n(), pi.r(), ctx.q_field().order());
    check_ctx(*cat, ctx);
    const auto& order = cat->order();
    const std::size_t k = path_index(pi);
    const std::uint64_t begin = order.path_offset(k);
    const std::uint64_t size = order.path_offset(k + 1) - begin;
    ExactMatrix m(ctx.host(), size, size);
    for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b) {
            m.set(a, b, ctx.host().from_code(character_code(cat->code(begin + a), cat->code(begin + b), ctx)));
        }
    }
    return m;
}

std::size_t lemma18_intersection_dim(int n, int r, const CharacterCtx& ctx) {
    if (r < 0 || 2 * r > n) throw std::invalid_argument("lemma18 check requires 0 <= r <= n/2");
    const std::uint64_t q = ctx.q_field().order();
    const auto cat = detail::shared_catalog(n, r, q);
    check_ctx(*cat, ctx);
    const SubspaceBasis u = u_subspace(n, r, q, ctx.host());
    std::vector<std::size_t> plus;
    for (std::size_t i = 0; i < cat->size(); ++i) {
        if (classify(cat->code(i).path()) == PathClass::Plus) plus.push_back(i);
    }
    ExactMatrix units(ctx.host(), plus.size(), cat->size());
    for (std::size_t k = 0; k < plus.size(); ++k) units.set_int(k, plus[k], 1);
    return intersect(u, SubspaceBasis(std::move(units), SubspaceBasis::Unchecked{})).dim();
}

bool lemma18_check(int n, int r, const CharacterCtx& ctx) { return lemma18_intersection_dim(n, r, ctx) == 0; }

} // namespace incmat
