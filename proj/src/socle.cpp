#include "leavitt/socle.hpp"

#include "leavitt/error.hpp"
#include "leavitt/laurent.hpp"

namespace leavitt {

AlgebraElement SocleVector::actual(std::size_t i) const {
    AlgebraElement r = ew_project(components_[i]);
    return r * AlgebraElement::word(field(), BasisWord::dstar_cstar(static_cast<std::uint32_t>(i)));
}

AlgebraElement SocleVector::reassemble() const {
    AlgebraElement acc = ew_project(w_part_);
    for (std::size_t i = 0; i < components_.size(); ++i) acc = acc + actual(i);
    return acc;
}

AlgebraElement socle_idempotent(const Field& f, std::uint32_t i) {
    return AlgebraElement::word(f, BasisWord::c_d(i)) *
           AlgebraElement::word(f, BasisWord::dstar_cstar(i));
}

namespace {

SocleVector decompose_components(const AlgebraElement& x) {
    const Field& f = x.field();
    EnvRwElement w_part = ew_embed(x * AlgebraElement::generator(f, Gen::W));
    std::vector<EnvRwElement> comps;
    std::uint32_t top = x.max_exp();
    for (std::uint32_t i = 0; i <= top; ++i)
        comps.push_back(ew_embed(x * AlgebraElement::word(f, BasisWord::c_d(i))));
    return SocleVector(std::move(w_part), std::move(comps));
}

}  // namespace

std::optional<SocleVector> try_socle_decompose(const AlgebraElement& x) {
    // Right multiplication by w or c^i d can land outside the ideal
    // generated by w only when x itself is not in the socle.
    try {
        SocleVector d = decompose_components(x);
        if (d.reassemble() != x) return std::nullopt;
        return d;
    } catch (const error&) {
        return std::nullopt;
    }
}

SocleVector socle_decompose(const AlgebraElement& x) {
    if (!is_in_socle(x)) throw error("element is not in the socle");
    SocleVector d = decompose_components(x);
    if (d.reassemble() != x)
        throw error("socle decomposition failed to reassemble");
    return d;
}

}  // namespace leavitt
