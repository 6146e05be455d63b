#include "incmat/qlat.hpp"

#include <stdexcept>

namespace incmat {

BigInt gaussian_binomial(long n, long k, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial requires q >= 2");
    if (n < 0 || k < 0 || k > n) return 0;
    const BigInt base(static_cast<unsigned long>(q));
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        BigInt a, b;
        mpz_pow_ui(a.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i + 1));
        num *= a - 1;
        den *= b - 1;
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace incmat
