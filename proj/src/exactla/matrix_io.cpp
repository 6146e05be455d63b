#include "incmat/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace incmat {

void write_matrix(std::ostream& out, const ExactMatrix& m) {
    const Field& field = m.field();
    out << "incmat " << m.rows() << ' ' << m.cols() << ' ' << field.to_string() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.is_zero_at(i, j)) continue;
            out << i << ' ' << j << ' ' << field.format(m.at(i, j)) << '\n';
        }
    }
}

ExactMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error("matrix file line " + std::to_string(lineno) + ": " + why);
    };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line()) throw fail("missing header");
    std::istringstream header(line);
    std::string magic, field_text;
    std::size_t rows = 0, cols = 0;
    if (!(header >> magic >> rows >> cols >> field_text) || magic != "incmat") {
        throw fail("expected 'incmat <rows> <cols> <field>'");
    }
    Field field = [&] {
        try {
            return Field(field_text);
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }();
    ExactMatrix m(field, rows, cols);
    std::size_t last = 0;
    bool any = false;
    while (next_line()) {
        std::istringstream entry(line);
        std::size_t i = 0, j = 0;
        std::string value, extra;
        if (!(entry >> i >> j >> value) || (entry >> extra)) throw fail("expected '<i> <j> <value>'");
        if (i >= rows || j >= cols) throw fail("entry index out of range");
        const std::size_t pos = i * cols + j;
        if (any && pos <= last) throw fail("entries must be in strictly row-major order");
        last = pos;
        any = true;
        try {
            m.set(i, j, field.parse(value));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    return m;
}

} // namespace incmat
