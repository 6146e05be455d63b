#pragma once

#include <cstdint>
#include <vector>

#include "incmat/field.hpp"

namespace incmat {

/// An element of multiplicative order exactly p in the prime field host.
/// Throws RefusedError when host is not F_l with l = 1 (mod p).
[[nodiscard]] Ffe find_root_of_unity(std::uint32_t p, const Field& host);

/// Smallest prime l with l = 1 (mod p).
[[nodiscard]] std::uint32_t default_host_prime(std::uint32_t p);

/**
 * Additive character machinery for F_q, q = p^t.
 *
 * The character is theta(x) = zeta^{Tr(x)}, evaluated in a prime host
 * field F_l that contains a primitive p-th root of unity zeta.
 */
class CharacterCtx {
public:
    /// Uses the smallest admissible host prime.
    explicit CharacterCtx(Field q_field);
    CharacterCtx(Field q_field, Field host);

    [[nodiscard]] const Field& q_field() const { return q_field_; }
    [[nodiscard]] const Field& host() const { return host_; }
    [[nodiscard]] const Field& prime_field() const { return prime_field_; }
    [[nodiscard]] const Ffe& zeta() const { return zeta_; }

    /// Trace value (in [0, p)) of the element with the given code.
    [[nodiscard]] std::uint32_t trace_code(std::uint32_t code) const { return trace_table_[code]; }
    /// Host-field code of theta(element with the given code).
    [[nodiscard]] std::uint32_t theta_code(std::uint32_t code) const { return zeta_powers_[trace_table_[code]]; }

private:
    Field q_field_;
    Field host_;
    Field prime_field_;
    Ffe zeta_;
    std::vector<std::uint32_t> trace_table_;
    std::vector<std::uint32_t> zeta_powers_;
};

/// x + x^p + ... + x^{p^{t-1}}, as an element of F_p.
[[nodiscard]] Ffe trace(const CharacterCtx& ctx, const Ffe& x);

/// theta(x) = zeta^{trace(x)} in the host field.
[[nodiscard]] Ffe additive_character(const CharacterCtx& ctx, const Ffe& x);

} // namespace incmat
