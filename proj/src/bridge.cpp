#include "leavitt/bridge.hpp"

#include <vector>

namespace leavitt {

namespace {

// Memoized powers of a fixed base, index 0 the identity.
template <class E>
const E& power(std::vector<E>& cache, const E& base, std::uint32_t n) {
    while (cache.size() <= n) cache.push_back(cache.back() * base);
    return cache[n];
}

}  // namespace

AlgebraElement to_leavitt(const JacobsonElement& e) {
    const Field f = e.field();
    const AlgebraElement ximg = AlgebraElement::generator(f, Gen::Cstar) +
                                AlgebraElement::generator(f, Gen::Dstar);
    const AlgebraElement yimg = AlgebraElement::generator(f, Gen::C) +
                                AlgebraElement::generator(f, Gen::D);
    std::vector<AlgebraElement> xp{AlgebraElement::one(f)}, yp{AlgebraElement::one(f)};

    AlgebraElement out(f);
    for (const auto& [m, k] : e.terms())
        out = out + (power(yp, yimg, m.y) * power(xp, ximg, m.x)).scaled(k);
    return out;
}

JacobsonElement to_jacobson(const AlgebraElement& e) {
    const Field f = e.field();
    const JacobsonElement yx = JacobsonElement::mono(f, {1, 1});
    const JacobsonElement v_img = yx;
    const JacobsonElement w_img = JacobsonElement::one(f) - yx;
    const JacobsonElement c_img = JacobsonElement::mono(f, {2, 1});
    const JacobsonElement cstar_img = JacobsonElement::mono(f, {1, 2});
    const JacobsonElement d_img = JacobsonElement::y(f) - c_img;
    const JacobsonElement dstar_img = JacobsonElement::x(f) - cstar_img;
    std::vector<JacobsonElement> cp{JacobsonElement::one(f)}, sp{JacobsonElement::one(f)};

    JacobsonElement out(f);
    for (const auto& [w, k] : e.terms()) {
        JacobsonElement img(f);
        switch (w.shape()) {
            case Shape::V: img = v_img; break;
            case Shape::W: img = w_img; break;
            case Shape::C: img = power(cp, c_img, w.c_exp()); break;
            case Shape::Cstar: img = power(sp, cstar_img, w.cstar_exp()); break;
            case Shape::CCstar:
                img = power(cp, c_img, w.c_exp()) * power(sp, cstar_img, w.cstar_exp());
                break;
            case Shape::D: img = d_img; break;
            case Shape::CD: img = power(cp, c_img, w.c_exp()) * d_img; break;
            case Shape::Dstar: img = dstar_img; break;
            case Shape::DstarCstar:
                img = dstar_img * power(sp, cstar_img, w.cstar_exp());
                break;
        }
        out = out + img.scaled(k);
    }
    return out;
}

JacobsonElement env_rw_basis_to_jacobson(const Field& f, long i) {
    if (i < -1) throw error("basis index must be >= -1");
    if (i == -1) return JacobsonElement::one(f) - JacobsonElement::mono(f, {1, 1});
    const auto n = static_cast<std::uint32_t>(i);
    return JacobsonElement::mono(f, {n + 1, 0}) - JacobsonElement::mono(f, {n + 2, 1});
}

}  // namespace leavitt
