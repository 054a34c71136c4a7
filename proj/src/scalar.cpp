#include "leavitt/scalar.hpp"

namespace leavitt {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

Field Field::gf(std::uint64_t p) {
    if (p >= (1ull << 31)) throw error("prime modulus too large (must be < 2^31)");
    if (!is_prime(p)) throw error("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw error("unrecognized field '" + text + "' (expected q or gf:<p>)");
        return gf(std::stoull(digits));
    }
    throw error("unrecognized field '" + text + "' (expected q or gf:<p>)");
}

Scalar Scalar::zero(const Field& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const Field& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1 % f.prime()});
}

Scalar Scalar::of_int(const Field& f, long n) {
    if (f.is_rationals()) return Scalar(f, mpq_class(n));
    const std::uint64_t p = f.prime();
    long m = n % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return Scalar(f, static_cast<std::uint64_t>(m));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);

    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        return s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    if (!valid_int(num) || (slash != std::string::npos && !valid_int(den)))
        throw error("bad scalar literal '" + text + "'");

    if (f.is_rationals()) {
        mpq_class q;
        if (q.set_str(slash == std::string::npos ? num : num + "/" + den, 10) != 0)
            throw error("bad scalar literal '" + text + "'");
        if (q.get_den() == 0) throw division_by_zero();
        q.canonicalize();
        return Scalar(f, q);
    }

    // GF(p): reduce numerator and (optional) denominator separately.
    auto residue = [&](const std::string& s) {
        mpz_class z(s);
        mpz_class p(static_cast<unsigned long>(f.prime()));
        mpz_class m = z % p;
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m.get_ui());
    };
    Scalar out(f, residue(num));
    if (slash != std::string::npos) out = out / Scalar(f, residue(den));
    return out;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? q() == 0 : r() == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? q() == 1 : r() == 1 % field_.prime();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(q() + o.q()));
    return Scalar(field_, (r() + o.r()) % field_.prime());
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(q() - o.q()));
    const std::uint64_t p = field_.prime();
    return Scalar(field_, (r() + p - o.r()) % p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(q() * o.q()));
    return Scalar(field_, r() * o.r() % field_.prime());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-q()));
    const std::uint64_t p = field_.prime();
    return Scalar(field_, (p - r()) % p);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / q()));
    return Scalar(field_, mod_pow(r(), field_.prime() - 2, field_.prime()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rationals() ? q() == o.q() : r() == o.r();
}

bool Scalar::is_negative() const {
    return field_.is_rationals() && q() < 0;
}

std::string Scalar::str() const {
    return field_.is_rationals() ? q().get_str() : std::to_string(r());
}

}  // namespace leavitt
