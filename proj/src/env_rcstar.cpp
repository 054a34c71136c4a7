#include "leavitt/env_rcstar.hpp"

#include <limits>
#include <sstream>

#include "leavitt/error.hpp"
#include "leavitt/laurent.hpp"

namespace leavitt {

namespace {

long effective_order(const EnvRcstarElement& t) {
    return t.exact() ? std::numeric_limits<long>::max() : t.order();
}

void check_bound(const std::optional<long>& bound, const Poly& p) {
    if (bound && p.degree() > *bound) throw error("component degree exceeds the declared bound");
}

}  // namespace

void EnvRcstarElement::set_q_minus1(const Poly& q) {
    if (!(field_ == q.field())) throw field_mismatch();
    check_bound(bound_, q);
    q_minus1_ = q;
}

Poly EnvRcstarElement::q(long i) const {
    if (i < 0) throw error("series index must be nonnegative");
    auto it = series_.find(i);
    if (it != series_.end()) return it->second;
    if (exact_ || i <= order_) return Poly::zero(field_);
    throw precision_error("series component beyond valid order");
}

void EnvRcstarElement::set_q(long i, const Poly& p) {
    if (i < 0) throw error("series index must be nonnegative");
    if (!(field_ == p.field())) throw field_mismatch();
    if (!exact_ && i > order_) throw precision_error("series component beyond valid order");
    check_bound(bound_, p);
    if (p.is_zero())
        series_.erase(i);
    else
        series_.insert_or_assign(i, p);
}

EnvRcstarElement EnvRcstarElement::with_bound(long bound) const {
    if (bound < 0) throw error("degree bound must be nonnegative");
    if (q_minus1_.degree() > bound) throw error("component degree exceeds the declared bound");
    for (const auto& [i, p] : series_)
        if (p.degree() > bound) throw error("component degree exceeds the declared bound");
    EnvRcstarElement r = *this;
    r.bound_ = bound;
    return r;
}

EnvRcstarElement EnvRcstarElement::operator+(const EnvRcstarElement& o) const {
    if (!(field_ == o.field_)) throw field_mismatch();
    bool ex = exact_ && o.exact_;
    long ord;
    if (ex)
        ord = std::max(order_, o.order_);
    else if (exact_)
        ord = o.order_;
    else if (o.exact_)
        ord = order_;
    else
        ord = std::min(order_, o.order_);
    std::optional<long> bd;
    if (bound_ && o.bound_) bd = std::max(*bound_, *o.bound_);
    EnvRcstarElement r(field_, ord, ex, bd);
    r.q_minus1_ = q_minus1_ + o.q_minus1_;
    for (const auto& [i, p] : series_)
        if (ex || i <= ord) r.set_q(i, p);
    for (const auto& [i, p] : o.series_)
        if (ex || i <= ord) r.set_q(i, r.q(i) + p);
    return r;
}

EnvRcstarElement EnvRcstarElement::operator-() const {
    return scaled(-Scalar::one(field_));
}

EnvRcstarElement EnvRcstarElement::scaled(const Scalar& k) const {
    EnvRcstarElement r(field_, order_, exact_, bound_);
    if (k.is_zero()) return r;
    r.q_minus1_ = q_minus1_.scaled(k);
    for (const auto& [i, p] : series_) r.series_.emplace(i, p.scaled(k));
    return r;
}

EnvRcstarElement EnvRcstarElement::act_gen(Gen g) const {
    switch (g) {
        case Gen::V: {
            EnvRcstarElement r = *this;
            r.q_minus1_ = Poly::zero(field_);
            return r;
        }
        case Gen::W: {
            // w keeps the d* c* component and kills the whole series, so
            // the result is exact even when we started truncated.
            EnvRcstarElement r(field_, order_, true, bound_);
            r.q_minus1_ = q_minus1_;
            return r;
        }
        case Gen::C: {
            EnvRcstarElement r(field_, exact_ ? order_ : order_ + 1, exact_, bound_);
            for (const auto& [i, p] : series_) r.series_.emplace(i + 1, p);
            return r;
        }
        case Gen::Cstar: {
            if (!exact_ && order_ < 0)
                throw precision_error("c* action needs at least one known series component");
            std::optional<long> bd;
            if (bound_) bd = *bound_ + 1;
            EnvRcstarElement r(field_, exact_ ? order_ : order_ - 1, exact_, bd);
            // Index 0 folds as c* c* q_0(c*) = c* (x q_0)(c*), everything
            // else shifts one slot down.
            for (const auto& [i, p] : series_)
                if (i >= 1) r.series_.emplace(i - 1, p);
            if (exact_ || r.order_ >= 0) {
                Poly merged = r.q(0);
                auto it0 = series_.find(0);
                if (it0 != series_.end()) merged = merged + it0->second.times_x();
                r.series_.erase(0);
                if (!merged.is_zero()) r.series_.emplace(0, merged);
            } else {
                // The shifted slot 0 is beyond the new valid order; drop it.
                r.series_.erase(0);
            }
            return r;
        }
        case Gen::D: {
            // Only the d* c* component survives: d d* = v - c c* turns it
            // into an exact two-slot element.
            std::optional<long> bd;
            if (bound_) bd = *bound_ + 1;
            EnvRcstarElement r(field_, std::max(order_, 1L), true, bd);
            if (!q_minus1_.is_zero()) {
                r.series_.emplace(0, q_minus1_);
                r.series_.emplace(1, -q_minus1_.times_x());
            }
            return r;
        }
        case Gen::Dstar: {
            if (!exact_ && order_ < 0)
                throw precision_error("d* action needs the series component at index 0");
            EnvRcstarElement r(field_, order_, true, bound_);
            r.q_minus1_ = q(0);
            return r;
        }
    }
    throw error("unknown generator");
}

EnvRcstarElement EnvRcstarElement::act(const AlgebraElement& a) const {
    if (!(field_ == a.field())) throw field_mismatch();
    EnvRcstarElement acc = EnvRcstarElement::zero(field_);
    for (const auto& [word, coeff] : a.terms()) {
        EnvRcstarElement cur = *this;
        auto letters = word.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = cur.act_gen(*it);
        acc = acc + cur.scaled(coeff);
    }
    return acc;
}

std::string EnvRcstarElement::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& prefix, const Poly& p) {
        if (!first) os << " + ";
        first = false;
        os << prefix << " (" << p.str("c*") << ")";
    };
    if (!q_minus1_.is_zero()) emit("d* c*", q_minus1_);
    for (const auto& [i, p] : series_) {
        if (i == 0)
            emit("c*", p);
        else
            emit("c^" + std::to_string(i) + " c*", p);
    }
    if (first) os << "0";
    if (!exact_) os << " + O(" << (order_ + 1) << ")";
    return os.str();
}

bool agree(const EnvRcstarElement& a, const EnvRcstarElement& b) {
    if (!(a.field() == b.field())) throw field_mismatch();
    if (!(a.q_minus1() == b.q_minus1())) return false;
    long cut = std::min(effective_order(a), effective_order(b));
    for (const auto& [i, p] : a.series())
        if (i <= cut && !(b.q(i) == p)) return false;
    for (const auto& [i, p] : b.series())
        if (i <= cut && !(a.q(i) == p)) return false;
    return true;
}

bool agree_to_order(const EnvRcstarElement& a, const EnvRcstarElement& b, long order) {
    if (!(a.field() == b.field())) throw field_mismatch();
    if (order > effective_order(a) || order > effective_order(b))
        throw precision_error("agreement order exceeds a valid order");
    if (!(a.q_minus1() == b.q_minus1())) return false;
    for (const auto& [i, p] : a.series())
        if (i <= order && !(b.q(i) == p)) return false;
    for (const auto& [i, p] : b.series())
        if (i <= order && !(a.q(i) == p)) return false;
    return true;
}

EnvRcstarElement theta_embed(const AlgebraElement& a) {
    const Field& f = a.field();
    EnvRcstarElement r = EnvRcstarElement::zero(f);
    Poly qm1 = Poly::zero(f);
    std::map<long, Poly> comps;
    auto accumulate = [&](long i, const Poly& mono) {
        auto it = comps.find(i);
        if (it == comps.end())
            comps.emplace(i, mono);
        else
            it->second = it->second + mono;
    };
    for (const auto& [word, coeff] : a.terms()) {
        // Each word ending in at least one c* contributes its coefficient
        // at x-degree (number of trailing c* minus one).
        Poly mono = Poly::x(f).pow(word.cstar_exp() == 0 ? 0 : word.cstar_exp() - 1).scaled(coeff);
        switch (word.shape()) {
            case Shape::Cstar:
                accumulate(0, mono);
                break;
            case Shape::CCstar:
                accumulate(word.c_exp(), mono);
                break;
            case Shape::DstarCstar:
                qm1 = qm1 + mono;
                break;
            default:
                throw error("element does not lie in the ideal generated by c*");
        }
    }
    r.set_q_minus1(qm1);
    for (const auto& [i, p] : comps)
        if (!p.is_zero()) r.set_q(i, p);
    return r;
}

AlgebraElement theta_project(const EnvRcstarElement& t) {
    if (!t.exact()) throw precision_error("only exact elements embed back into the ring");
    const Field& f = t.field();
    AlgebraElement a = AlgebraElement::zero(f);
    for (long k = 0; k <= t.q_minus1().degree(); ++k) {
        Scalar co = t.q_minus1().coeff(k);
        if (!co.is_zero())
            a.add_term(BasisWord::dstar_cstar(static_cast<std::uint32_t>(k + 1)), co);
    }
    for (const auto& [i, p] : t.series())
        for (long k = 0; k <= p.degree(); ++k) {
            Scalar co = p.coeff(k);
            if (!co.is_zero())
                a.add_term(BasisWord::c_cstar(static_cast<std::uint32_t>(i),
                                              static_cast<std::uint32_t>(k + 1)),
                           co);
        }
    return a;
}

ThetaWitness essential_witness(const EnvRcstarElement& t) {
    if (t.is_zero()) throw error("zero element has no essential witness");
    if (t.is_zero_within_order())
        throw inconclusive_error("element vanishes within its valid order");
    const Field& f = t.field();
    if (!t.q_minus1().is_zero()) {
        EnvRcstarElement image(f, t.order(), true, t.bound());
        image.set_q_minus1(t.q_minus1());
        return ThetaWitness{AlgebraElement::word(f, BasisWord::w()), image};
    }
    long ibar = t.series().begin()->first;
    EnvRcstarElement image(f, t.order(), true, t.bound());
    image.set_q_minus1(t.series().begin()->second);
    return ThetaWitness{
        AlgebraElement::word(f, BasisWord::dstar_cstar(static_cast<std::uint32_t>(ibar))), image};
}

EnvRcstarElement baer_extend(const Poly& p, const EnvRcstarElement& image, long order) {
    if (!(p.field() == image.field())) throw field_mismatch();
    if (!p.unit_constant_term()) throw error("divisor must have constant term 1");
    if (order < 0) throw error("requested order must be nonnegative");
    if (p.degree() == 0) return image;
    if (!image.exact() && image.order() < order + p.degree())
        throw precision_error("image order too small for the requested extension order");
    SeriesPrefix b = series_inverse(p, static_cast<unsigned>(order));
    EnvRcstarElement beta(image.field(), order, false, image.bound());
    beta.set_q_minus1(image.q_minus1());
    for (long i = 0; i <= order; ++i) {
        Poly acc = Poly::zero(image.field());
        for (long j = 0; j <= i; ++j) acc = acc + image.q(i - j).scaled(b.coeff(static_cast<std::size_t>(j)));
        beta.set_q(i, acc);
    }
    return beta;
}

LaurentSeriesElement reduce(const EnvRcstarElement& t) {
    if (!t.bound()) throw error("reduction requires a declared degree bound");
    long nbar = *t.bound();
    if (!t.exact() && t.order() < nbar)
        throw precision_error("reduction needs the series known to at least the degree bound");
    long out_order;
    if (t.exact()) {
        long maxidx = t.series().empty() ? -1 : t.series().rbegin()->first;
        out_order = maxidx;
    } else {
        out_order = t.order() - nbar;
    }
    LaurentSeriesElement r(t.field(), out_order, t.exact());
    std::map<long, Scalar> sums;
    for (const auto& [i, p] : t.series())
        for (long k = 0; k <= p.degree(); ++k) {
            Scalar co = p.coeff(k);
            if (co.is_zero()) continue;
            long s = i - k;
            auto it = sums.find(s);
            if (it == sums.end())
                sums.emplace(s, co);
            else
                it->second = it->second + co;
        }
    for (const auto& [s, k] : sums)
        if (t.exact() || s <= out_order) r.set_coeff(s, k);
    return r;
}

EnvRcstarElement theta_from_reduction(const LaurentSeriesElement& s, long bound) {
    if (bound < 0) throw error("degree bound must be nonnegative");
    if (s.principal_length() > bound)
        throw error("principal part is longer than the degree bound allows");
    if (!s.exact() && s.order() < 0)
        throw precision_error("representative needs the series known to order 0");
    long ord = s.exact() ? std::max(0L, s.coeffs().empty() ? 0L : s.coeffs().rbegin()->first)
                         : s.order();
    EnvRcstarElement t(s.field(), ord, s.exact());
    Poly q0 = Poly::zero(s.field());
    for (const auto& [e, k] : s.coeffs()) {
        if (e <= 0)
            q0 = q0 + Poly::x(s.field()).pow(static_cast<std::uint32_t>(-e)).scaled(k);
        else
            t.set_q(e, Poly::constant(k));
    }
    t.set_q(0, q0);
    return t.with_bound(bound);
}

bool torsion_probe(const Poly& p, const EnvRcstarElement& t) {
    if (!(p.field() == t.field())) throw field_mismatch();
    if (!p.unit_constant_term()) throw error("torsion probe requires constant term 1");
    AlgebraElement pc = AlgebraElement::one(t.field());
    for (long k = 1; k <= p.degree(); ++k) {
        Scalar co = p.coeff(k);
        if (!co.is_zero())
            pc.add_term(BasisWord::c_pow(static_cast<std::uint32_t>(k)), co);
    }
    return t.act(pc).is_zero_within_order();
}

}  // namespace leavitt
