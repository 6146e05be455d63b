#include <stdexcept>

#include "incmat/linalg.hpp"
#include "incmat/qlat.hpp"

namespace incmat {

bool is_good(const SubspaceCode& code, const Field& field) {
    const int r = code.r;
    const int width = code.n - r;
    // The r x (n-r) box array; boxes above the path stay zero.
    std::vector<std::uint32_t> boxes(static_cast<std::size_t>(r) * static_cast<std::size_t>(std::max(width, 0)), 0);
    for (int i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < code.filling[i].size(); ++j) boxes[static_cast<std::size_t>(i * width) + j] = code.filling[i][j];
    }

    // Block with rows i..r and columns 1..j-1 of the array (1-based).
    auto corner_ok = [&](int i, int j) {
        const int bound = j - i;
        if (bound < 0) return false;
        const int rows = r - i + 1, cols = j - 1;
        if (rows <= bound || cols <= bound) return true;
        ExactMatrix block(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        auto out = block.codes();
        for (int a = 0; a < rows; ++a) {
            for (int b = 0; b < cols; ++b) {
                out[static_cast<std::size_t>(a * cols + b)] = boxes[static_cast<std::size_t>((i - 1 + a) * width + b)];
            }
        }
        return rank(block) <= static_cast<std::size_t>(bound);
    };

    int i = 1, j = 1;
    if (!corner_ok(i, j)) return false;
    const std::uint64_t south = code.path().south_mask();
    for (int k = 0; k < code.n; ++k) {
        ((south >> k) & 1 ? i : j) += 1;
        if (!corner_ok(i, j)) return false;
    }
    return true;
}

bool is_good(const SubspaceCode& code) {
    code.validate();
    return is_good(code, Field::of_order(code.q));
}

BigInt count_good(int n, int r, std::uint64_t q) {
    if (r < 0 || 2 * r > n) throw std::invalid_argument("count_good requires 0 <= r <= n/2");
    const Field field = Field::of_order(q);
    BigInt count = 0;
    SubspaceOrder(n, r, q).for_each([&](std::uint64_t, const SubspaceCode& code) {
        if (is_good(code, field)) ++count;
    });
    return count;
}

} // namespace incmat
