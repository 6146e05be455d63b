#include "incmat/character.hpp"

namespace incmat {

Ffe find_root_of_unity(std::uint32_t p, const Field& host) {
    if (!is_prime(p)) throw std::invalid_argument("root of unity order must be prime");
    if (!host.is_prime_field()) throw std::invalid_argument("character host must be a prime field");
    const std::uint32_t ell = host.characteristic();
    if ((ell - 1) % p != 0) {
        throw RefusedError("F_" + std::to_string(ell) + " has no primitive " + std::to_string(p) +
                           "-th root of unity");
    }
    const std::uint64_t cofactor = (ell - 1) / p;
    for (std::uint32_t g = 2; g < ell; ++g) {
        const Ffe z = host.embed(g).pow(cofactor);
        // z^p = 1 always; z != 1 forces order exactly p since p is prime.
        if (!z.is_one()) return z;
    }
    throw std::logic_error("no root of unity found");
}

std::uint32_t default_host_prime(std::uint32_t p) {
    for (std::uint64_t ell = p + 1;; ell += 1) {
        if (ell % p == 1 && is_prime(ell)) return static_cast<std::uint32_t>(ell);
    }
}

CharacterCtx::CharacterCtx(Field q_field)
    : CharacterCtx(q_field, Field::prime(default_host_prime(q_field.characteristic()))) {}

CharacterCtx::CharacterCtx(Field q_field, Field host)
    : q_field_(std::move(q_field)),
      host_(std::move(host)),
      prime_field_(Field::prime(q_field_.is_finite() ? q_field_.characteristic() : 2)) {
    if (!q_field_.is_finite()) throw std::invalid_argument("characters need a finite field F_q");
    const std::uint32_t p = q_field_.characteristic();
    if (host_.characteristic() == p) throw RefusedError("character host must have characteristic != p");
    zeta_ = find_root_of_unity(p, host_);

    const auto q = static_cast<std::uint32_t>(q_field_.order());
    trace_table_.resize(q);
    for (std::uint32_t c = 0; c < q; ++c) {
        const Ffe x = q_field_.from_code(c);
        Ffe sum = x;
        Ffe frob = x;
        for (std::uint32_t i = 1; i < q_field_.degree(); ++i) {
            frob = frob.pow(p);
            sum += frob;
        }
        if (sum.code() >= p) throw std::logic_error("trace left the prime subfield");
        trace_table_[c] = sum.code();
    }
    zeta_powers_.resize(p);
    Ffe power = host_.one();
    for (std::uint32_t k = 0; k < p; ++k) {
        zeta_powers_[k] = power.code();
        power *= zeta_;
    }
}

Ffe trace(const CharacterCtx& ctx, const Ffe& x) {
    ctx.q_field().check_owner(x);
    return ctx.prime_field().from_code(ctx.trace_code(x.code()));
}

Ffe additive_character(const CharacterCtx& ctx, const Ffe& x) {
    ctx.q_field().check_owner(x);
    return ctx.host().from_code(ctx.theta_code(x.code()));
}

} // namespace incmat
