#include "incmat/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace incmat {

namespace detail {

struct FieldData {
    FieldSpec spec;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    // Extension fields only: full operation tables indexed by code.
    std::vector<std::uint32_t> add_table;
    std::vector<std::uint32_t> mul_table;
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> inv_table;
};

} // namespace detail

namespace {

constexpr std::uint64_t kMaxExtensionOrder = 1024;
constexpr std::uint64_t kMaxCharacteristic = (1ULL << 31) - 1;

// Default moduli for the extension fields used in the experiments; each
// is least_irreducible(p, t) (checked by the test suite).
const std::map<std::uint64_t, std::vector<std::uint32_t>>& default_moduli() {
    static const std::map<std::uint64_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {1, 0, 1}},        // x^2 + 1
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {2, 0, 1}},       // x^2 + 2
        {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
    };
    return table;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Polynomial helpers over F_p, coefficient vectors low-order first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(lead, b[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint32_t> decode_code(std::uint32_t code, std::uint32_t p, std::uint32_t t) {
    std::vector<std::uint32_t> c(t, 0);
    for (std::uint32_t i = 0; i < t; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

std::uint32_t encode_coeffs(const std::vector<std::uint32_t>& c, std::uint32_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return static_cast<std::uint32_t>(code);
}

std::shared_ptr<const detail::FieldData> build_field(const FieldSpec& spec) {
    auto data = std::make_shared<detail::FieldData>();
    data->spec = spec;
    if (spec.characteristic == 0) {
        if (spec.degree != 1 || !spec.modulus.empty()) {
            throw std::invalid_argument("rational field takes no degree or modulus");
        }
        return data;
    }
    const std::uint32_t p = spec.characteristic;
    if (p > kMaxCharacteristic || !is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a supported prime");
    }
    data->p = p;
    if (spec.degree == 0) throw std::invalid_argument("field degree must be at least 1");
    if (spec.degree == 1) {
        if (!spec.modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
        data->q = p;
        return data;
    }
    const std::uint32_t t = spec.degree;
    if (spec.modulus.size() != t + 1 || spec.modulus.back() != 1) {
        throw std::invalid_argument("modulus must be monic of the field degree");
    }
    for (auto c : spec.modulus) {
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    const std::uint64_t q = ipow(p, t);
    if (q > kMaxExtensionOrder) {
        throw std::invalid_argument("extension field order " + std::to_string(q) + " exceeds table limit");
    }
    if (!is_irreducible(spec.modulus, p)) {
        throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    }
    data->q = q;
    const auto qq = static_cast<std::uint32_t>(q);
    std::vector<Poly> elems(qq);
    for (std::uint32_t c = 0; c < qq; ++c) elems[c] = decode_code(c, p, t);

    data->add_table.resize(q * q);
    data->mul_table.resize(q * q);
    data->neg_table.resize(q);
    data->inv_table.assign(q, 0);
    for (std::uint32_t a = 0; a < qq; ++a) {
        Poly neg(t);
        for (std::uint32_t i = 0; i < t; ++i) neg[i] = (p - elems[a][i]) % p;
        data->neg_table[a] = encode_coeffs(neg, p);
        for (std::uint32_t b = 0; b < qq; ++b) {
            Poly sum(t);
            for (std::uint32_t i = 0; i < t; ++i) sum[i] = (elems[a][i] + elems[b][i]) % p;
            data->add_table[a * q + b] = encode_coeffs(sum, p);

            Poly prod(2 * t - 1, 0);
            for (std::uint32_t i = 0; i < t; ++i) {
                for (std::uint32_t j = 0; j < t; ++j) {
                    prod[i + j] = (prod[i + j] + mulmod(elems[a][i], elems[b][j], p)) % p;
                }
            }
            Poly rem = poly_mod(prod, spec.modulus, p);
            rem.resize(t, 0);
            data->mul_table[a * q + b] = encode_coeffs(rem, p);
        }
    }
    for (std::uint32_t a = 1; a < qq; ++a) {
        for (std::uint32_t b = 1; b < qq; ++b) {
            if (data->mul_table[a * q + b] == 1) {
                data->inv_table[a] = b;
                break;
            }
        }
    }
    return data;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimePower prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t t = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++t;
    }
    if (rest != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {static_cast<std::uint32_t>(p), t};
}

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(monic.size() - 1);
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly divisor = decode_code(static_cast<std::uint32_t>(c), p, d);
            divisor.push_back(1);
            if (poly_mod(monic, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t t) {
    if (!is_prime(p) || t < 2) throw std::invalid_argument("least_irreducible needs prime p and t >= 2");
    const std::uint64_t count = ipow(p, t);
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly cand = decode_code(static_cast<std::uint32_t>(c), p, t);
        cand.push_back(1);
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::uint32_t p) { return FieldSpec{p, 1, {}}; }

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t t) {
    if (t == 1) return prime(p);
    const std::uint64_t q = ipow(p, t);
    const auto& table = default_moduli();
    if (auto it = table.find(q); it != table.end()) return FieldSpec{p, t, it->second};
    return FieldSpec{p, t, least_irreducible(p, t)};
}

FieldSpec FieldSpec::of_order(std::uint64_t q) {
    const auto [p, t] = prime_power(q);
    return extension(p, t);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q0") return rationals();
    if (!text.starts_with("gf")) {
        throw std::invalid_argument("field string must be q0, gf<p> or gf<p>^<t>: '" + std::string(text) + "'");
    }
    text.remove_prefix(2);
    const auto caret = text.find('^');
    const std::uint32_t p = parse_uint(text.substr(0, caret), "field characteristic");
    const std::uint32_t t = caret == std::string_view::npos ? 1 : parse_uint(text.substr(caret + 1), "field degree");
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (t == 0) throw std::invalid_argument("field degree must be at least 1");
    return extension(p, t);
}

std::uint64_t FieldSpec::order() const { return characteristic == 0 ? 0 : ipow(characteristic, degree); }

std::string FieldSpec::to_string() const {
    if (characteristic == 0) return "q0";
    std::string s = "gf" + std::to_string(characteristic);
    if (degree > 1) {
        s += "^" + std::to_string(degree);
        if (extension(characteristic, degree).modulus != modulus) {
            s += "[";
            for (std::size_t i = 0; i < modulus.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(modulus[i]);
            }
            s += "]";
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(const FieldSpec& spec) : data_(build_field(spec)) {}

const FieldSpec& Field::spec() const { return data_->spec; }

std::uint64_t Field::order() const { return data_->q; }

bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ || a.data_->spec == b.data_->spec;
}

Ffe Field::zero() const {
    if (is_rational()) return Ffe(data_, Rational(0));
    return Ffe(data_, std::uint32_t{0});
}

Ffe Field::one() const {
    if (is_rational()) return Ffe(data_, Rational(1));
    return Ffe(data_, std::uint32_t{1});
}

std::uint32_t Field::code_of(long long n) const {
    const long long p = data_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

Ffe Field::embed(long long n) const {
    if (is_rational()) return Ffe(data_, Rational(static_cast<long>(n)));
    return Ffe(data_, code_of(n));
}

Ffe Field::embed(const BigInt& n) const {
    if (is_rational()) return Ffe(data_, Rational(n));
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), data_->p);
    return Ffe(data_, static_cast<std::uint32_t>(r.get_ui()));
}

Ffe Field::from_rational(const Rational& v) const {
    if (is_rational()) {
        Rational c = v;
        c.canonicalize();
        return Ffe(data_, c);
    }
    return embed(v.get_num()) / embed(v.get_den());
}

Ffe Field::from_code(std::uint32_t code) const {
    if (!is_finite()) throw std::invalid_argument("element codes exist only in finite fields");
    if (code >= data_->q) throw std::invalid_argument("element code out of range");
    return Ffe(data_, code);
}

Ffe Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
    if (!is_finite() || coeffs.size() != degree()) {
        throw std::invalid_argument("coefficient vector does not match field degree");
    }
    for (auto c : coeffs) {
        if (c >= data_->p) throw std::invalid_argument("coefficient out of range");
    }
    return Ffe(data_, encode_coeffs(coeffs, data_->p));
}

Ffe Field::generator() const {
    if (!is_finite() || degree() < 2) throw std::invalid_argument("generator() needs an extension field");
    return Ffe(data_, data_->p);
}

std::vector<Ffe> Field::elements() const {
    if (!is_finite()) throw std::invalid_argument("cannot enumerate an infinite field");
    std::vector<Ffe> out;
    out.reserve(data_->q);
    for (std::uint64_t c = 0; c < data_->q; ++c) out.push_back(Ffe(data_, static_cast<std::uint32_t>(c)));
    return out;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (degree() == 1) {
        const std::uint32_t s = a + b;
        return s >= data_->p ? s - data_->p : s;
    }
    return data_->add_table[a * data_->q + b];
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (degree() == 1) return mulmod(a, b, data_->p);
    return data_->mul_table[a * data_->q + b];
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (degree() == 1) return a == 0 ? 0 : data_->p - a;
    return data_->neg_table[a];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    if (degree() == 1) return invmod(a, data_->p);
    return data_->inv_table[a];
}

void Field::check_owner(const Ffe& x) const {
    if (!x.owner_ || !(x.owner_ == data_ || x.owner_->spec == data_->spec)) {
        throw std::invalid_argument("element does not belong to field " + to_string());
    }
}

std::string Field::format(const Ffe& x) const {
    check_owner(x);
    if (is_rational()) return x.rational().get_str();
    if (degree() == 1) return std::to_string(x.code());
    const auto c = x.coefficients();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Ffe Field::parse(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("empty field value");
    if (is_rational()) {
        Rational v;
        if (v.set_str(std::string(text), 10) != 0) {
            throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
        }
        v.canonicalize();
        return Ffe(data_, v);
    }
    if (degree() == 1) {
        const std::uint32_t v = parse_uint(text, "field value");
        if (v >= data_->p) throw std::invalid_argument("field value out of range: " + std::string(text));
        return Ffe(data_, v);
    }
    std::vector<std::uint32_t> coeffs(degree(), 0);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto plus = text.find('+', pos);
        const auto term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
        const auto xpos = term.find('x');
        std::uint32_t coef = 1;
        std::uint32_t power = 0;
        if (xpos == std::string_view::npos) {
            coef = parse_uint(term, "field value");
        } else {
            if (xpos > 0) coef = parse_uint(term.substr(0, xpos), "coefficient");
            power = 1;
            auto rest = term.substr(xpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw std::invalid_argument("invalid term '" + std::string(term) + "'");
                power = parse_uint(rest.substr(1), "exponent");
            }
        }
        if (coef >= data_->p || power >= degree()) {
            throw std::invalid_argument("non-canonical field value '" + std::string(text) + "'");
        }
        coeffs[power] = (coeffs[power] + coef) % data_->p;
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return from_coefficients(coeffs);
}

// ---------------------------------------------------------------------------
// Ffe

Ffe::Ffe(std::shared_ptr<const detail::FieldData> owner, std::uint32_t code)
    : owner_(std::move(owner)), value_(code) {}

Ffe::Ffe(std::shared_ptr<const detail::FieldData> owner, Rational value)
    : owner_(std::move(owner)), value_(std::move(value)) {}

Field Ffe::field() const {
    if (!owner_) throw std::logic_error("unbound field element");
    return Field(owner_);
}

bool Ffe::is_zero() const {
    if (auto* c = std::get_if<std::uint32_t>(&value_)) return *c == 0;
    return std::get<Rational>(value_) == 0;
}

bool Ffe::is_one() const {
    if (auto* c = std::get_if<std::uint32_t>(&value_)) return *c == 1;
    return std::get<Rational>(value_) == 1;
}

std::uint32_t Ffe::code() const {
    if (auto* c = std::get_if<std::uint32_t>(&value_)) return *c;
    throw std::invalid_argument("rational elements have no code");
}

const Rational& Ffe::rational() const {
    if (auto* v = std::get_if<Rational>(&value_)) return *v;
    throw std::invalid_argument("finite-field element is not rational");
}

std::vector<std::uint32_t> Ffe::coefficients() const {
    const auto& s = field().spec();
    return decode_code(code(), s.characteristic, s.degree);
}

std::string Ffe::to_string() const { return field().format(*this); }

Ffe Ffe::operator+(const Ffe& o) const {
    const Field f = field();
    f.check_owner(o);
    if (f.is_rational()) return Ffe(owner_, Rational(rational() + o.rational()));
    return Ffe(owner_, f.add(code(), o.code()));
}

Ffe Ffe::operator-(const Ffe& o) const {
    const Field f = field();
    f.check_owner(o);
    if (f.is_rational()) return Ffe(owner_, Rational(rational() - o.rational()));
    return Ffe(owner_, f.sub(code(), o.code()));
}

Ffe Ffe::operator*(const Ffe& o) const {
    const Field f = field();
    f.check_owner(o);
    if (f.is_rational()) return Ffe(owner_, Rational(rational() * o.rational()));
    return Ffe(owner_, f.mul(code(), o.code()));
}

Ffe Ffe::operator/(const Ffe& o) const { return *this * o.inv(); }

Ffe Ffe::operator-() const {
    const Field f = field();
    if (f.is_rational()) return Ffe(owner_, Rational(-rational()));
    return Ffe(owner_, f.neg(code()));
}

Ffe Ffe::inv() const {
    const Field f = field();
    if (f.is_rational()) {
        if (rational() == 0) throw std::domain_error("division by zero in Q");
        return Ffe(owner_, Rational(1 / rational()));
    }
    return Ffe(owner_, f.inv(code()));
}

Ffe Ffe::pow(std::uint64_t e) const {
    Ffe result = field().one();
    Ffe base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Ffe& a, const Ffe& b) {
    if (!a.owner_ || !b.owner_) return !a.owner_ && !b.owner_;
    if (a.owner_ != b.owner_ && !(a.owner_->spec == b.owner_->spec)) return false;
    return a.value_ == b.value_;
}

} // namespace incmat
