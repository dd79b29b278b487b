#pragma once

#include <random>
#include <set>
#include <string>

#include "tenscross/bigalois.hpp"
#include "tenscross/hopf.hpp"

namespace tenscross::oracle {

// Closed form Delta(v_S g) = sum over subsets T of S of sign(T, S\T) v_T u^{|S\T|} g (x) v_{S\T} g.
inline SVec closed_form_coproduct(const HopfAlgebraData& h, unsigned s, int g) {
    SparseAccumulator acc;
    const int u = 1;
    auto idx = [&](unsigned mask, int grp) {
        std::string lab;
        for (int i = 0; mask >> i; ++i)
            if ((mask >> i) & 1u) lab += "v" + std::to_string(i + 1);
        std::string gl = grp == 0 ? "1" : "u";
        if (lab.empty()) return h.label_index(gl);
        return h.label_index(grp == 0 ? lab : lab + gl);
    };
    for (unsigned t = s;; t = (t - 1) & s) {
        unsigned rest = s & ~t;
        int inv = 0;
        for (int i = 0; rest >> i; ++i)
            if ((rest >> i) & 1u) inv += __builtin_popcount(t & ~((2u << i) - 1u));
        int upow = __builtin_popcount(rest) % 2;
        int left_g = upow ? (g ^ u) : g;
        acc.add(static_cast<std::int64_t>(idx(t, left_g)) * h.dim + idx(rest, g), Rational(inv % 2 ? -1 : 1));
        if (t == 0) break;
    }
    return acc.take();
}

// Basis index of v_S g from its label.
inline int monomial_index(const HopfAlgebraData& h, unsigned s, int g) {
    std::string lab;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1u) lab += "v" + std::to_string(i + 1);
    if (lab.empty()) return h.label_index(g ? "u" : "1");
    return h.label_index(g ? lab + "u" : lab);
}

// Strictly increasing words in w1..wn times the labels of F.
inline std::set<std::string> normal_words(int n, const std::vector<std::string>& f_labels,
                                          const std::string& symbol = "w") {
    std::set<std::string> words;
    for (int m = 0; m < (1 << n); ++m)
        for (const auto& f : f_labels) {
            std::string w;
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1) w += symbol + std::to_string(i + 1);
            words.insert(w.empty() && f.empty() ? "1" : w + f);
        }
    return words;
}

// T entries in [-3,3], beta symmetric with entries in [-2,2]. psi(u,u) = -1 only
// on request: the normalised cocycles on C2 are trivial.
inline CompatibleData random_compatible(std::mt19937_64& rng, const SupergroupPresentation& p,
                                        bool allow_psi = false) {
    std::uniform_int_distribution<int> t(-3, 3), b(-2, 2), coin(0, 1);
    CompatibleData d = identity_data(p);
    do {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) d.T(i, j) = t(rng);
    } while (!is_invertible(d.T));
    d.beta = Matrix(2, 2);
    d.beta(0, 0) = b(rng);
    d.beta(1, 1) = b(rng);
    d.beta(0, 1) = d.beta(1, 0) = b(rng);
    if (allow_psi && coin(rng)) d.psi = GroupTwoCocycle::bicharacter(d.psi.group(), Matrix{{-1}});
    return d;
}

}  // namespace tenscross::oracle
