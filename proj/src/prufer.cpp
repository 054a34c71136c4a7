#include "leavitt/prufer.hpp"

#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

Poly poly_mod(const Poly& a, const Poly& m) {
    auto [q, r] = Poly::divmod(a, m);
    (void)q;
    return r;
}

}  // namespace

PruferElement PruferElement::make(const Poly& f, long level, const Poly& residue,
                                  bool acknowledge_unverified) {
    if (!(f.field() == residue.field())) throw field_mismatch();
    if (f.degree() < 1) throw error("modulus must have degree at least 1");
    if (!f.unit_constant_term()) throw error("modulus must have constant term 1");
    if (level < 1) throw error("level must be at least 1");
    FactorOutcome out = factor_check(f);
    if (out.verdict == FactorVerdict::FactorFound)
        throw error("modulus is reducible: factor " + out.factor->str("x"));
    if (out.verdict == FactorVerdict::Unverified && !acknowledge_unverified)
        throw error("irreducibility unverified at this degree; pass the acknowledgement flag");
    bool ack = out.verdict == FactorVerdict::Unverified;
    return canonical(f, level, residue, ack);
}

PruferElement PruferElement::canonical(const Poly& f, long level, const Poly& residue, bool ack) {
    Poly fn = f.pow(static_cast<std::uint32_t>(level));
    Poly r = poly_mod(residue, fn);
    // Minimal level: strip factors of f while the residue allows it. The
    // residue of the zero element lives at level 1 by convention.
    while (level > 1 && Poly::divides(f, r)) {
        r = Poly::exact_div(r, f);
        --level;
    }
    if (r.is_zero()) level = 1;
    return PruferElement(f, level, r, ack);
}

PruferElement PruferElement::operator+(const PruferElement& o) const {
    if (!(f_ == o.f_)) throw error("elements live over different moduli");
    // Align both at the higher level; climbing a level multiplies by f.
    long n = std::max(level_, o.level_);
    Poly a = residue_ * f_.pow(static_cast<std::uint32_t>(n - level_));
    Poly b = o.residue_ * f_.pow(static_cast<std::uint32_t>(n - o.level_));
    return canonical(f_, n, a + b, ack_unverified_ || o.ack_unverified_);
}

PruferElement PruferElement::operator-() const {
    return PruferElement(f_, level_, -residue_, ack_unverified_);
}

PruferElement PruferElement::scaled(const Scalar& k) const {
    return canonical(f_, level_, residue_.scaled(k), ack_unverified_);
}

bool PruferElement::operator==(const PruferElement& o) const {
    return f_ == o.f_ && level_ == o.level_ && residue_ == o.residue_;
}

PruferElement PruferElement::act_laurent(const LaurentPoly& p) const {
    if (!(p.field() == field())) throw field_mismatch();
    const Field& k = field();
    Poly fn = f_.pow(static_cast<std::uint32_t>(level_));
    // x is invertible modulo f^n: with f(0) = 1, f^n - 1 is divisible by x
    // and x * (-(f^n - 1)/x) = 1 - f^n.
    Poly xinv = -Poly::exact_div(fn - Poly::one(k), Poly::x(k));
    Poly acc = Poly::zero(k);
    for (const auto& [e, co] : p.terms()) {
        Poly power = e >= 0 ? Poly::x(k).pow(static_cast<std::uint32_t>(e))
                            : xinv.pow(static_cast<std::uint32_t>(-e));
        acc = acc + poly_mod(power * residue_, fn).scaled(co);
    }
    return canonical(f_, level_, acc, ack_unverified_);
}

PruferElement PruferElement::act(const AlgebraElement& a) const {
    return act_laurent(quotient_map(a));
}

PruferElement PruferElement::act_poly(const Poly& p) const {
    return act_laurent(LaurentPoly::from_poly(p));
}

PruferElement PruferElement::divisibility_witness() const {
    if (is_zero()) return *this;
    return PruferElement(f_, level_ + 1, residue_, ack_unverified_);
}

std::string PruferElement::str() const {
    std::ostringstream os;
    os << "[" << residue_.str("x") << "] at level " << level_ << " over " << f_.str("x");
    return os.str();
}

}  // namespace leavitt
