#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "tenscross/bigalois.hpp"
#include "tenscross/hopf.hpp"

namespace tenscross::tools {

// A = A(V, u, C2), Acop, B = A (x) Acop, Btwist = B twisted by the cocycle
// psi((a1,a2),(b1,b2)) = (-1)^{a1 b2}.
inline HopfAlgebraData build_variant(const std::string& variant, int vdim) {
    auto a = build_supergroup_algebra(SupergroupPresentation::standard(vdim));
    if (variant == "A") return a;
    if (variant == "Acop") return co_opposite(a);
    auto b = std::make_shared<HopfAlgebraData>(tensor_hopf(a, co_opposite(a)));
    if (variant == "B") return *b;
    if (variant == "Btwist") {
        auto d = FiniteAbelianGroup::product(a.group, a.group);
        auto psi = GroupTwoCocycle::bicharacter(d, Matrix{{1, -1}, {1, 1}});
        return twist_hopf(*b, hopf_cocycle_from_group_cocycle(b, psi));
    }
    throw std::invalid_argument("unknown variant '" + variant + "'");
}

// Random data with invertible T (entries in [-t, t]) and symmetric beta (entries in [-b, b]).
inline CompatibleData sample_compatible_data(std::mt19937_64& rng, const SupergroupPresentation& p, int t, int b) {
    std::uniform_int_distribution<int> td(-t, t), bd(-b, b);
    const int k = p.v_dim;
    CompatibleData d = identity_data(p);
    do {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) d.T(i, j) = td(rng);
    } while (!is_invertible(d.T));
    d.beta = Matrix(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) d.beta(i, j) = d.beta(j, i) = bd(rng);
    return d;
}

}  // namespace tenscross::tools
