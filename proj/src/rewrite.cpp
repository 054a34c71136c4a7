#include "leavitt/rewrite.hpp"

#include <map>
#include <optional>

namespace leavitt {

namespace {

struct Replacement {
    FreeWord letters;
    int sign;
};

// The two-letter reduction table. Reducible pairs map to 0, 1, or 2
// replacement words; the five irreducible pairs (cc, cd, cc*, c*c*, d*c*)
// return nothing. Everything here is a consequence of the eleven defining
// relations; in particular all the "range meets wrong source" zeros follow
// from the vertex absorptions and vw = wv = 0.
std::optional<std::vector<Replacement>> reduce_pair(Gen a, Gen b) {
    using enum Gen;
    auto zero = [] { return std::vector<Replacement>{}; };
    auto to = [](FreeWord w) { return std::vector<Replacement>{{std::move(w), +1}}; };

    switch (a) {
        case V:
            switch (b) {
                case V: return to({V});
                case W: return zero();
                case C: return to({C});
                case Cstar: return to({Cstar});
                case D: return to({D});
                case Dstar: return zero();
            }
            break;
        case W:
            switch (b) {
                case V: return zero();
                case W: return to({W});
                case C: return zero();
                case Cstar: return zero();
                case D: return zero();
                case Dstar: return to({Dstar});
            }
            break;
        case C:
            switch (b) {
                case V: return to({C});
                case W: return zero();
                case Dstar: return zero();
                default: return std::nullopt;  // cc, cc*, cd stay
            }
            break;
        case Cstar:
            switch (b) {
                case V: return to({Cstar});
                case W: return zero();
                case C: return to({V});
                case D: return zero();
                case Dstar: return zero();
                default: return std::nullopt;  // c*c* stays
            }
            break;
        case D:
            switch (b) {
                case W: return to({D});
                case Dstar:
                    return std::vector<Replacement>{{{V}, +1}, {{C, Cstar}, -1}};
                default: return zero();  // dv, dc, dc*, dd all vanish
            }
            break;
        case Dstar:
            switch (b) {
                case V: return to({Dstar});
                case D: return to({W});
                case Cstar: return std::nullopt;  // d*c* stays
                default: return zero();  // d*w, d*c, d*d* all vanish
            }
            break;
    }
    throw std::logic_error("bad generator pair");
}

// Converts a fully reduced word to basis terms. The empty word is the
// identity; every other irreducible word matches one of the nine shapes.
void add_normal_word(AlgebraElement& out, const FreeWord& w, const Scalar& coeff) {
    if (w.empty()) {
        out.add_term(BasisWord::v(), coeff);
        out.add_term(BasisWord::w(), coeff);
        return;
    }
    if (w.size() == 1) {
        switch (w[0]) {
            case Gen::V: out.add_term(BasisWord::v(), coeff); return;
            case Gen::W: out.add_term(BasisWord::w(), coeff); return;
            default: break;
        }
    }
    std::size_t pos = 0;
    const bool leading_dstar = w[0] == Gen::Dstar;
    if (leading_dstar) pos = 1;
    std::uint32_t cs = 0;
    while (pos < w.size() && w[pos] == Gen::C) ++cs, ++pos;
    const bool mid_d = pos < w.size() && w[pos] == Gen::D;
    if (mid_d) ++pos;
    std::uint32_t stars = 0;
    while (pos < w.size() && w[pos] == Gen::Cstar) ++stars, ++pos;

    const bool ok = pos == w.size() && !(leading_dstar && (cs > 0 || mid_d)) && !(mid_d && stars > 0);
    if (!ok) throw std::logic_error("word not in normal form");

    if (leading_dstar) {
        out.add_term(BasisWord::dstar_cstar(stars), coeff);
    } else if (mid_d) {
        out.add_term(BasisWord::c_d(cs), coeff);
    } else {
        out.add_term(BasisWord::c_cstar(cs, stars), coeff);
    }
}

}  // namespace

AlgebraElement rewrite_oracle(const FreeWord& word, const Field& f) {
    const std::size_t n = word.size();
    return rewrite_oracle(word, f, n < 2 ? 10 : 10 * n * n);
}

AlgebraElement rewrite_oracle(const FreeWord& word, const Field& f, std::size_t step_budget) {
    std::map<FreeWord, Scalar> active;
    active.emplace(word, Scalar::one(f));
    std::size_t steps = 0;

    for (;;) {
        // Find a word with a reducible window, leftmost window first.
        auto hit = active.end();
        std::size_t at = 0;
        std::vector<Replacement> repl;
        for (auto it = active.begin(); it != active.end(); ++it) {
            const FreeWord& cur = it->first;
            bool found = false;
            for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
                if (auto r = reduce_pair(cur[k], cur[k + 1])) {
                    hit = it;
                    at = k;
                    repl = std::move(*r);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (hit == active.end()) break;

        if (++steps > step_budget)
            throw error("rewriting exceeded its step budget of " + std::to_string(step_budget));

        const FreeWord cur = hit->first;
        const Scalar coeff = hit->second;
        active.erase(hit);
        for (const auto& r : repl) {
            FreeWord next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(at));
            next.insert(next.end(), r.letters.begin(), r.letters.end());
            next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(at) + 2, cur.end());
            const Scalar add = r.sign > 0 ? coeff : -coeff;
            auto [it, fresh] = active.emplace(std::move(next), add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) active.erase(it);
            }
        }
    }

    AlgebraElement out(f);
    for (const auto& [w, k] : active) add_normal_word(out, w, k);
    return out;
}

}  // namespace leavitt
