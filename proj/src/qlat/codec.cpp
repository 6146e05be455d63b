#include <sstream>
#include <stdexcept>

#include "incmat/linalg.hpp"
#include "incmat/qlat.hpp"

namespace incmat {

namespace {

bool is_default_finite(const Field& f) {
    return f.is_finite() && f.spec() == FieldSpec::of_order(f.order());
}

// Non-pivot columns (1-based) left of column `limit`, increasing.
std::vector<int> free_columns_before(const std::vector<int>& pivots, int limit) {
    std::vector<int> out;
    std::size_t k = 0;
    for (int c = 1; c < limit; ++c) {
        while (k < pivots.size() && pivots[k] < c) ++k;
        if (k < pivots.size() && pivots[k] == c) continue;
        out.push_back(c);
    }
    return out;
}

} // namespace

void SubspaceCode::validate() const {
    if (n < 0 || n > kMaxGround || r < 0 || r > n) throw std::invalid_argument("subspace code: need 0 <= r <= n <= 63");
    (void)prime_power(q);
    if (pivots.size() != static_cast<std::size_t>(r) || filling.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("subspace code: expected r pivots and r filling rows");
    }
    for (int i = 0; i < r; ++i) {
        if (pivots[i] < 1 || pivots[i] > n || (i && pivots[i] <= pivots[i - 1])) {
            throw std::invalid_argument("subspace code: pivots must increase within [1, n]");
        }
        if (filling[i].size() != static_cast<std::size_t>(pivots[i] - (i + 1))) {
            throw std::invalid_argument("subspace code: filling row " + std::to_string(i + 1) + " has wrong length");
        }
        for (auto v : filling[i]) {
            if (v >= q) throw std::invalid_argument("subspace code: filling value out of range");
        }
    }
}

LatticePath SubspaceCode::path() const { return LatticePath::from_positions(n, pivots); }

int SubspaceCode::box_count() const {
    int total = 0;
    for (const auto& row : filling) total += static_cast<int>(row.size());
    return total;
}

std::string SubspaceCode::to_string(const Field& field) const {
    std::string s;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pivots[i]);
    }
    s += '|';
    bool first = true;
    for (const auto& row : filling) {
        for (auto v : row) {
            if (!first) s += ' ';
            s += field.format(field.from_code(v));
            first = false;
        }
    }
    return s;
}

SubspaceCode SubspaceCode::parse(int n, const Field& field, std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("subspace line needs 'pivots|filling'");
    SubspaceCode code;
    code.n = n;
    code.q = field.order();
    code.pivots = Subset::parse(n, std::string(text.substr(0, bar))).elements();
    code.r = static_cast<int>(code.pivots.size());
    std::istringstream values{std::string(text.substr(bar + 1))};
    std::string token;
    std::vector<std::uint32_t> flat;
    while (values >> token) flat.push_back(field.parse(token).code());
    std::size_t k = 0;
    for (int i = 0; i < code.r; ++i) {
        const std::size_t len = static_cast<std::size_t>(code.pivots[i] - (i + 1));
        if (k + len > flat.size()) throw std::invalid_argument("subspace line has too few filling values");
        code.filling.emplace_back(flat.begin() + static_cast<long>(k), flat.begin() + static_cast<long>(k + len));
        k += len;
    }
    if (k != flat.size()) throw std::invalid_argument("subspace line has too many filling values");
    code.validate();
    return code;
}

SubspaceCode encode_subspace(const ExactMatrix& b, int r) {
    const Field& field = b.field();
    if (!is_default_finite(field)) throw std::invalid_argument("encode_subspace needs F_q with the default modulus");
    const std::size_t n = b.cols();
    // With the columns reversed, ordinary reduced echelon form puts each
    // row's pivot at its last nonzero original column.
    std::vector<std::size_t> reversed(n);
    for (std::size_t c = 0; c < n; ++c) reversed[c] = n - 1 - c;
    const Echelon e = reduced_row_echelon(b.select_cols(reversed));
    if (e.pivots.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("encode_subspace: rank is " + std::to_string(e.pivots.size()) + ", expected " +
                                    std::to_string(r));
    }

    SubspaceCode code;
    code.n = static_cast<int>(n);
    code.r = r;
    code.q = field.order();
    for (int i = 0; i < r; ++i) code.pivots.push_back(static_cast<int>(n - e.pivots[r - 1 - i]));
    const auto codes = e.rows.codes();
    for (int i = 0; i < r; ++i) {
        const std::size_t row = static_cast<std::size_t>(r - 1 - i);
        std::vector<std::uint32_t> fill;
        for (int c : free_columns_before(code.pivots, code.pivots[i])) {
            fill.push_back(codes[row * n + (n - static_cast<std::size_t>(c))]);
        }
        code.filling.push_back(std::move(fill));
    }
    return code;
}

ExactMatrix decode_subspace(const SubspaceCode& code, const Field& field) {
    code.validate();
    if (field.order() != code.q || !is_default_finite(field)) {
        throw std::invalid_argument("decode_subspace: field does not match the code");
    }
    const std::size_t n = static_cast<std::size_t>(code.n);
    ExactMatrix m(field, static_cast<std::size_t>(code.r), n);
    auto codes = m.codes();
    for (int i = 0; i < code.r; ++i) {
        const std::size_t row = static_cast<std::size_t>(i);
        codes[row * n + static_cast<std::size_t>(code.pivots[i] - 1)] = 1;
        const auto cols = free_columns_before(code.pivots, code.pivots[i]);
        for (std::size_t k = 0; k < cols.size(); ++k) codes[row * n + static_cast<std::size_t>(cols[k] - 1)] = code.filling[i][k];
    }
    return m;
}

ExactMatrix decode_subspace(const SubspaceCode& code) { return decode_subspace(code, Field::of_order(code.q)); }

} // namespace incmat
