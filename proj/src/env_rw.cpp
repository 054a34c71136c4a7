#include "leavitt/env_rw.hpp"

#include <limits>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

long effective_order(const EnvRwElement& m) {
    return m.exact() ? std::numeric_limits<long>::max() : m.order();
}

}  // namespace

Scalar EnvRwElement::tail_coeff(long i) const {
    if (i < 0) throw error("tail index must be nonnegative");
    auto it = tail_.find(i);
    if (it != tail_.end()) return it->second;
    if (exact_ || i <= order_) return Scalar::zero(field_);
    throw precision_error("tail coefficient beyond valid order");
}

void EnvRwElement::set_tail_coeff(long i, const Scalar& k) {
    if (i < 0) throw error("tail index must be nonnegative");
    if (!exact_ && i > order_) throw precision_error("tail coefficient beyond valid order");
    if (k.is_zero())
        tail_.erase(i);
    else
        tail_[i] = k;
}

EnvRwElement EnvRwElement::operator+(const EnvRwElement& o) const {
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
    EnvRwElement r(field_, ord, ex);
    r.k_minus1_ = k_minus1_ + o.k_minus1_;
    for (const auto& [i, k] : tail_)
        if (ex || i <= ord) r.set_tail_coeff(i, k);
    for (const auto& [i, k] : o.tail_)
        if (ex || i <= ord) r.set_tail_coeff(i, r.tail_coeff(i) + k);
    return r;
}

EnvRwElement EnvRwElement::operator-() const {
    return scaled(-Scalar::one(field_));
}

EnvRwElement EnvRwElement::scaled(const Scalar& k) const {
    EnvRwElement r(field_, order_, exact_);
    if (k.is_zero()) return r;
    r.k_minus1_ = k_minus1_ * k;
    for (const auto& [i, c] : tail_) r.tail_[i] = c * k;
    return r;
}

EnvRwElement EnvRwElement::act_gen(Gen g) const {
    switch (g) {
        case Gen::V: {
            // v kills w and fixes every c^i d.
            EnvRwElement r = *this;
            r.k_minus1_ = Scalar::zero(field_);
            return r;
        }
        case Gen::W: {
            // w fixes itself and kills the whole tail, so the result is
            // exact even when we started truncated.
            EnvRwElement r(field_, order_, true);
            r.k_minus1_ = k_minus1_;
            return r;
        }
        case Gen::C: {
            // c shifts the tail up one slot and kills w. The new slot 0 is
            // exactly zero, so a truncated element gains one known order.
            EnvRwElement r(field_, exact_ ? order_ : order_ + 1, exact_);
            for (const auto& [i, k] : tail_) r.tail_[i + 1] = k;
            return r;
        }
        case Gen::Cstar: {
            // c* shifts the tail down one slot (slot 0 dies) and kills w.
            if (!exact_ && order_ < 0)
                throw precision_error("c* action needs at least one known tail coefficient");
            EnvRwElement r(field_, exact_ ? order_ : order_ - 1, exact_);
            for (const auto& [i, k] : tail_)
                if (i >= 1) r.tail_[i - 1] = k;
            return r;
        }
        case Gen::D: {
            // d sends w to the tail slot 0 and kills every c^i d, so the
            // result is exact.
            EnvRwElement r(field_, std::max(order_, 0L), true);
            if (!k_minus1_.is_zero()) r.tail_[0] = k_minus1_;
            return r;
        }
        case Gen::Dstar: {
            // d* sends the tail slot 0 to w and kills everything else.
            if (!exact_ && order_ < 0)
                throw precision_error("d* action needs the tail coefficient at index 0");
            EnvRwElement r(field_, order_, true);
            r.k_minus1_ = tail_coeff(0);
            return r;
        }
    }
    throw error("unknown generator");
}

EnvRwElement EnvRwElement::act(const AlgebraElement& a) const {
    if (!(field_ == a.field())) throw field_mismatch();
    EnvRwElement acc = EnvRwElement::zero(field_);
    for (const auto& [word, coeff] : a.terms()) {
        EnvRwElement cur = *this;
        auto letters = word.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = cur.act_gen(*it);
        acc = acc + cur.scaled(coeff);
    }
    return acc;
}

std::string EnvRwElement::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](Scalar a, const std::string& unit) {
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
        if (ks == "1")
            os << unit;
        else
            os << ks << " " << unit;
    };
    if (!k_minus1_.is_zero()) emit(k_minus1_, "w");
    for (const auto& [i, k] : tail_) {
        if (i == 0)
            emit(k, "d");
        else
            emit(k, "c^" + std::to_string(i) + " d");
    }
    if (first) os << "0";
    if (!exact_) os << " + O(" << (order_ + 1) << ")";
    return os.str();
}

bool agree(const EnvRwElement& a, const EnvRwElement& b) {
    if (!(a.field() == b.field())) throw field_mismatch();
    if (!(a.k_minus1() == b.k_minus1())) return false;
    long cut = std::min(effective_order(a), effective_order(b));
    for (const auto& [i, k] : a.tail())
        if (i <= cut && !(b.tail_coeff(i) == k)) return false;
    for (const auto& [i, k] : b.tail())
        if (i <= cut && !(a.tail_coeff(i) == k)) return false;
    return true;
}

bool agree_to_order(const EnvRwElement& a, const EnvRwElement& b, long order) {
    if (!(a.field() == b.field())) throw field_mismatch();
    if (order > effective_order(a) || order > effective_order(b))
        throw precision_error("agreement order exceeds a valid order");
    if (!(a.k_minus1() == b.k_minus1())) return false;
    for (const auto& [i, k] : a.tail())
        if (i <= order && !(b.tail_coeff(i) == k)) return false;
    for (const auto& [i, k] : b.tail())
        if (i <= order && !(a.tail_coeff(i) == k)) return false;
    return true;
}

EnvRwElement ew_embed(const AlgebraElement& a) {
    EnvRwElement r = EnvRwElement::zero(a.field());
    for (const auto& [word, coeff] : a.terms()) {
        if (word.shape() == Shape::W)
            r.set_k_minus1(coeff);
        else if (word.shape() == Shape::D || word.shape() == Shape::CD)
            r.set_tail_coeff(word.c_exp(), coeff);
        else
            throw error("element does not lie in the ideal generated by w");
    }
    return r;
}

AlgebraElement ew_project(const EnvRwElement& m) {
    if (!m.exact()) throw precision_error("only exact elements embed back into the ring");
    AlgebraElement a = AlgebraElement::zero(m.field());
    if (!m.k_minus1().is_zero()) a = a + AlgebraElement::word(m.field(), BasisWord::w()).scaled(m.k_minus1());
    for (const auto& [i, k] : m.tail())
        a = a + AlgebraElement::word(m.field(), BasisWord::c_d(static_cast<std::uint32_t>(i)), k);
    return a;
}

EwWitness essential_witness(const EnvRwElement& m) {
    if (m.is_zero()) throw error("zero element has no essential witness");
    if (m.is_zero_within_order())
        throw inconclusive_error("element vanishes within its valid order");
    const Field& f = m.field();
    if (!m.k_minus1().is_zero()) {
        EnvRwElement image(f, m.order(), true);
        image.set_k_minus1(m.k_minus1());
        return EwWitness{AlgebraElement::word(f, BasisWord::w()), image};
    }
    long ell = m.tail().begin()->first;
    EnvRwElement image(f, m.order(), true);
    image.set_k_minus1(m.tail().begin()->second);
    return EwWitness{
        AlgebraElement::word(f, BasisWord::dstar_cstar(static_cast<std::uint32_t>(ell))), image};
}

}  // namespace leavitt
