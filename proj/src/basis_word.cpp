#include "leavitt/basis_word.hpp"

#include <stdexcept>

namespace leavitt {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::V: return "v";
        case Gen::W: return "w";
        case Gen::C: return "c";
        case Gen::Cstar: return "c*";
        case Gen::D: return "d";
        case Gen::Dstar: return "d*";
    }
    throw std::logic_error("bad generator");
}

BasisWord BasisWord::c_pow(std::uint32_t i) {
    return i == 0 ? v() : BasisWord{Shape::C, i, 0};
}

BasisWord BasisWord::cstar_pow(std::uint32_t j) {
    return j == 0 ? v() : BasisWord{Shape::Cstar, 0, j};
}

BasisWord BasisWord::c_cstar(std::uint32_t i, std::uint32_t j) {
    if (i == 0) return cstar_pow(j);
    if (j == 0) return c_pow(i);
    return BasisWord{Shape::CCstar, i, j};
}

BasisWord BasisWord::c_d(std::uint32_t i) {
    return i == 0 ? d() : BasisWord{Shape::CD, i, 0};
}

BasisWord BasisWord::dstar_cstar(std::uint32_t j) {
    return j == 0 ? dstar() : BasisWord{Shape::DstarCstar, 0, j};
}

std::vector<Gen> BasisWord::letters() const {
    std::vector<Gen> out;
    switch (shape_) {
        case Shape::V: return {Gen::V};
        case Shape::W: return {Gen::W};
        case Shape::D: return {Gen::D};
        case Shape::Dstar: return {Gen::Dstar};
        case Shape::C:
        case Shape::CCstar:
        case Shape::CD:
            out.assign(i_, Gen::C);
            break;
        case Shape::Cstar:
        case Shape::DstarCstar:
            break;
    }
    if (shape_ == Shape::CD) {
        out.push_back(Gen::D);
        return out;
    }
    if (shape_ == Shape::DstarCstar) out.push_back(Gen::Dstar);
    for (std::uint32_t k = 0; k < j_; ++k) out.push_back(Gen::Cstar);
    return out;
}

std::string BasisWord::str() const {
    switch (shape_) {
        case Shape::V: return "v";
        case Shape::W: return "w";
        case Shape::C: return "c^" + std::to_string(i_);
        case Shape::Cstar: return "c*^" + std::to_string(j_);
        case Shape::CCstar: return "c^" + std::to_string(i_) + " c*^" + std::to_string(j_);
        case Shape::D: return "d";
        case Shape::CD: return "c^" + std::to_string(i_) + " d";
        case Shape::Dstar: return "d*";
        case Shape::DstarCstar: return "d* c*^" + std::to_string(j_);
    }
    throw std::logic_error("bad shape");
}

namespace {

// Internal uniform view of the basis: every word is one of
//   A(i,j) = c^i (c*)^j   (i, j >= 0; A(0,0) = v)
//   B(i)   = c^i d        (i >= 0)
//   E(j)   = d* (c*)^j    (j >= 0)
//   W      = w
// which collapses the product table to a handful of cases.
enum class Cls : std::uint8_t { A, B, E, W };

struct View {
    Cls cls;
    std::uint32_t i, j;
};

View view_of(const BasisWord& w) {
    switch (w.shape()) {
        case Shape::V: return {Cls::A, 0, 0};
        case Shape::C: return {Cls::A, w.c_exp(), 0};
        case Shape::Cstar: return {Cls::A, 0, w.cstar_exp()};
        case Shape::CCstar: return {Cls::A, w.c_exp(), w.cstar_exp()};
        case Shape::D: return {Cls::B, 0, 0};
        case Shape::CD: return {Cls::B, w.c_exp(), 0};
        case Shape::Dstar: return {Cls::E, 0, 0};
        case Shape::DstarCstar: return {Cls::E, 0, w.cstar_exp()};
        case Shape::W: return {Cls::W, 0, 0};
    }
    throw std::logic_error("bad shape");
}

BasisWord word_of(Cls cls, std::uint32_t i, std::uint32_t j) {
    switch (cls) {
        case Cls::A: return BasisWord::c_cstar(i, j);
        case Cls::B: return BasisWord::c_d(i);
        case Cls::E: return BasisWord::dstar_cstar(j);
        case Cls::W: return BasisWord::w();
    }
    throw std::logic_error("bad class");
}

}  // namespace

std::vector<WordProductTerm> word_mul_terms(const BasisWord& a, const BasisWord& b) {
    const View x = view_of(a), y = view_of(b);

    switch (x.cls) {
        case Cls::A:
            // (c*)^j c^k collapses by c*c = v from the middle outward.
            if (y.cls == Cls::A) {
                const std::uint32_t m = x.j < y.i ? x.j : y.i;
                return {{word_of(Cls::A, x.i + y.i - m, x.j + y.j - m), +1}};
            }
            if (y.cls == Cls::B) {
                if (x.j <= y.i) return {{word_of(Cls::B, x.i + y.i - x.j, 0), +1}};
                return {};  // leftover c* meets d: c*d = 0
            }
            return {};  // A ends at v, E and w start at w
        case Cls::B:
            if (y.cls == Cls::W) return {{word_of(Cls::B, x.i, 0), +1}};
            if (y.cls == Cls::E)
                // c^i d d* (c*)^j = c^i (v - cc*) (c*)^j
                return {{word_of(Cls::A, x.i, y.j), +1},
                        {word_of(Cls::A, x.i + 1, y.j + 1), -1}};
            return {};  // B ends at w, A and B start at v
        case Cls::E:
            if (y.cls == Cls::A) {
                if (y.i <= x.j) return {{word_of(Cls::E, 0, x.j - y.i + y.j), +1}};
                return {};  // leftover c after d*: d*c = 0
            }
            if (y.cls == Cls::B) {
                if (y.i == x.j) return {{word_of(Cls::W, 0, 0), +1}};
                return {};  // either d*c = 0 or c*d = 0
            }
            return {};  // E ends at v, E and w start at w
        case Cls::W:
            if (y.cls == Cls::W) return {{word_of(Cls::W, 0, 0), +1}};
            if (y.cls == Cls::E) return {{word_of(Cls::E, 0, y.j), +1}};
            return {};
    }
    throw std::logic_error("bad class");
}

}  // namespace leavitt
