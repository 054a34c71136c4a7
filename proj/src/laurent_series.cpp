#include "leavitt/laurent_series.hpp"

#include <limits>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

long effective_order(const LaurentSeriesElement& s) {
    return s.exact() ? std::numeric_limits<long>::max() : s.order();
}

}  // namespace

Scalar LaurentSeriesElement::coeff(long e) const {
    auto it = coeffs_.find(e);
    if (it != coeffs_.end()) return it->second;
    if (exact_ || e <= order_) return Scalar::zero(field_);
    throw precision_error("coefficient beyond valid order");
}

void LaurentSeriesElement::set_coeff(long e, const Scalar& k) {
    if (!exact_ && e > order_) throw precision_error("coefficient beyond valid order");
    if (k.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = k;
}

long LaurentSeriesElement::principal_length() const {
    long m = 0;
    for (const auto& [e, k] : coeffs_)
        if (e < 0) m = std::max(m, -e);
    return m;
}

LaurentSeriesElement LaurentSeriesElement::operator+(const LaurentSeriesElement& o) const {
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
    LaurentSeriesElement r(field_, ord, ex);
    for (const auto& [e, k] : coeffs_)
        if (ex || e <= ord) r.set_coeff(e, k);
    for (const auto& [e, k] : o.coeffs_)
        if (ex || e <= ord) r.set_coeff(e, r.coeff(e) + k);
    return r;
}

LaurentSeriesElement LaurentSeriesElement::operator-() const {
    return scaled(-Scalar::one(field_));
}

LaurentSeriesElement LaurentSeriesElement::scaled(const Scalar& k) const {
    LaurentSeriesElement r(field_, order_, exact_);
    if (k.is_zero()) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * k;
    return r;
}

LaurentSeriesElement LaurentSeriesElement::times(const LaurentPoly& p) const {
    if (!(field_ == p.field())) throw field_mismatch();
    if (p.is_zero()) {
        // Annihilation is exact regardless of our own truncation.
        return LaurentSeriesElement(field_, order_, true);
    }
    LaurentSeriesElement r(field_, order_ + p.min_exp(), exact_);
    for (const auto& [m, k] : p.terms())
        for (const auto& [e, c] : coeffs_) {
            long out = e + m;
            if (exact_ || out <= r.order_) r.set_coeff(out, r.coeff(out) + c * k);
        }
    return r;
}

std::string LaurentSeriesElement::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, k] : coeffs_) {
        Scalar a = k;
        if (first) {
            if (a.is_negative()) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.is_negative() ? " - " : " + ");
            if (a.is_negative()) a = -a;
        }
        first = false;
        std::string ks = a.str();
        if (e == 0) {
            os << ks;
        } else {
            if (ks != "1") os << ks;
            os << var << "^" << e;
        }
    }
    if (first) os << "0";
    if (!exact_) os << " + O(" << var << "^" << (order_ + 1) << ")";
    return os.str();
}

bool agree(const LaurentSeriesElement& a, const LaurentSeriesElement& b) {
    if (!(a.field() == b.field())) throw field_mismatch();
    long cut = std::min(effective_order(a), effective_order(b));
    for (const auto& [e, k] : a.coeffs())
        if (e <= cut && !(b.coeff(e) == k)) return false;
    for (const auto& [e, k] : b.coeffs())
        if (e <= cut && !(a.coeff(e) == k)) return false;
    return true;
}

bool agree_to_order(const LaurentSeriesElement& a, const LaurentSeriesElement& b, long order) {
    if (!(a.field() == b.field())) throw field_mismatch();
    if (order > effective_order(a) || order > effective_order(b))
        throw precision_error("agreement order exceeds a valid order");
    for (const auto& [e, k] : a.coeffs())
        if (e <= order && !(b.coeff(e) == k)) return false;
    for (const auto& [e, k] : b.coeffs())
        if (e <= order && !(a.coeff(e) == k)) return false;
    return true;
}

bool torsion_probe(const Poly& p, const LaurentSeriesElement& t) {
    if (!p.unit_constant_term()) throw error("torsion probe requires constant term 1");
    return t.times(LaurentPoly::from_poly(p)).is_zero_within_order();
}

}  // namespace leavitt
