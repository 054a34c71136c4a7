#include "leavitt/random_gen.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t RandomGen::mix(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return splitmix64(h ^ seed);
}

long RandomGen::uniform(long lo, long hi) {
    if (hi < lo) throw error("empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
}

Scalar RandomGen::scalar(const Field& f) {
    if (f.is_rationals()) {
        long num = uniform(-4, 4);
        long den = uniform(1, 4);
        return Scalar::of_int(f, num) / Scalar::of_int(f, den);
    }
    return Scalar::of_int(f, uniform(0, static_cast<long>(f.prime()) - 1));
}

Scalar RandomGen::nonzero_scalar(const Field& f) {
    for (;;) {
        Scalar k = scalar(f);
        if (!k.is_zero()) return k;
    }
}

BasisWord RandomGen::basis_word(std::uint32_t max_exp) {
    auto e = [&](std::uint32_t lo) {
        return static_cast<std::uint32_t>(uniform(lo, static_cast<long>(max_exp)));
    };
    switch (uniform(0, 8)) {
        case 0: return BasisWord::v();
        case 1: return BasisWord::w();
        case 2: return BasisWord::c_pow(e(1));
        case 3: return BasisWord::cstar_pow(e(1));
        case 4: return BasisWord::c_cstar(e(1), e(1));
        case 5: return BasisWord::d();
        case 6: return BasisWord::c_d(e(1));
        case 7: return BasisWord::dstar();
        default: return BasisWord::dstar_cstar(e(1));
    }
}

std::vector<Gen> RandomGen::free_word(std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
    std::vector<Gen> w;
    w.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
        w.push_back(static_cast<Gen>(uniform(0, 5)));
    return w;
}

AlgebraElement RandomGen::algebra_element(const Field& f, int max_terms, std::uint32_t max_exp) {
    AlgebraElement a = AlgebraElement::zero(f);
    int n = static_cast<int>(uniform(0, max_terms));
    for (int k = 0; k < n; ++k) a.add_term(basis_word(max_exp), scalar(f));
    return a;
}

JacobsonElement RandomGen::jacobson_element(const Field& f, int max_terms,
                                            std::uint32_t max_exp) {
    JacobsonElement a = JacobsonElement::zero(f);
    int n = static_cast<int>(uniform(0, max_terms));
    for (int k = 0; k < n; ++k) {
        YXMono m{static_cast<std::uint32_t>(uniform(0, static_cast<long>(max_exp))),
                 static_cast<std::uint32_t>(uniform(0, static_cast<long>(max_exp)))};
        a = a + JacobsonElement::mono(f, m, scalar(f));
    }
    return a;
}

Poly RandomGen::poly(const Field& f, long max_deg) {
    Poly p = Poly::zero(f);
    for (long k = 0; k <= max_deg; ++k)
        if (uniform(0, 2) == 0) {
            Scalar co = scalar(f);
            if (!co.is_zero()) p = p + Poly::x(f).pow(static_cast<std::uint32_t>(k)).scaled(co);
        }
    return p;
}

Poly RandomGen::nonzero_poly(const Field& f, long max_deg) {
    for (;;) {
        Poly p = poly(f, max_deg);
        if (!p.is_zero()) return p;
    }
}

Poly RandomGen::unit_poly(const Field& f, long max_deg) {
    Poly p = poly(f, max_deg);
    return p - Poly::constant(p.constant_term()) + Poly::one(f);
}

EnvRwElement RandomGen::ew_element(const Field& f, long order, bool allow_exact) {
    bool exact = allow_exact && coin();
    EnvRwElement m(f, order, exact);
    m.set_k_minus1(scalar(f));
    for (long i = 0; i <= order; ++i)
        if (uniform(0, 2) == 0) m.set_tail_coeff(i, scalar(f));
    return m;
}

EnvRcstarElement RandomGen::theta(const Field& f, long order, long bound, bool allow_exact) {
    bool exact = allow_exact && coin();
    EnvRcstarElement t(f, order, exact, bound);
    t.set_q_minus1(poly(f, bound));
    for (long i = 0; i <= order; ++i)
        if (uniform(0, 2) == 0) t.set_q(i, poly(f, bound));
    return t;
}

EnvRcstarElement RandomGen::kernel_theta(const Field& f, long order, long bound) {
    bool exact = coin();
    EnvRcstarElement t(f, order, exact, bound);
    t.set_q_minus1(poly(f, bound));
    if (bound >= 1 && order >= 1) {
        int pairs = static_cast<int>(uniform(0, 3));
        for (int k = 0; k < pairs; ++k) {
            long a = uniform(0, bound - 1);
            long i = uniform(0, order - 1);
            Scalar co = nonzero_scalar(f);
            Poly lo = Poly::x(f).pow(static_cast<std::uint32_t>(a)).scaled(co);
            Poly hi = Poly::x(f).pow(static_cast<std::uint32_t>(a + 1)).scaled(-co);
            t.set_q(i, t.q(i) + lo);
            t.set_q(i + 1, t.q(i + 1) + hi);
        }
    }
    return t;
}

AlgebraElement RandomGen::socle_element(const Field& f, std::uint32_t max_exp, int max_terms) {
    AlgebraElement a = AlgebraElement::zero(f);
    int n = static_cast<int>(uniform(0, max_terms));
    auto e = [&] { return static_cast<std::uint32_t>(uniform(0, static_cast<long>(max_exp))); };
    for (int t = 0; t < n; ++t) {
        Scalar co = scalar(f);
        switch (uniform(0, 3)) {
            case 0: a.add_term(BasisWord::w(), co); break;
            case 1: a.add_term(BasisWord::c_d(e()), co); break;
            case 2: a.add_term(BasisWord::dstar_cstar(e()), co); break;
            default: {
                std::uint32_t k = e(), i = e();
                a.add_term(BasisWord::c_cstar(k, i), co);
                a.add_term(BasisWord::c_cstar(k + 1, i + 1), -co);
                break;
            }
        }
    }
    return a;
}

PruferElement RandomGen::prufer_element(const Poly& modulus, long max_level) {
    long level = uniform(1, max_level);
    long cap = level * modulus.degree() - 1;
    return PruferElement::make(modulus, level, poly(modulus.field(), cap));
}

}  // namespace leavitt
