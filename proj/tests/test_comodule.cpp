#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "tenscross/comodule.hpp"

using namespace tenscross;

namespace {

HopfPtr host(int k) { return std::make_shared<HopfAlgebraData>(build_supergroup_algebra(SupergroupPresentation::standard(k))); }

}  // namespace

TEST_CASE("projective covers are comodules of dimension 2^dim V with the expected head") {
    for (int k = 1; k <= 3; ++k) {
        auto h = host(k);
        for (int g = 0; g < 2; ++g) {
            auto p = projective_cover(h, g);
            CHECK(p.dim == (1 << k));
            CHECK(is_comodule(p));
            auto hd = head(p);
            CHECK(hd[g] == 1);
            CHECK(hd[1 - g] == 0);
        }
    }
}

TEST_CASE("composition factors of P_g: 2^(k-1) copies of each simple") {
    auto h = host(2);
    for (int g = 0; g < 2; ++g) {
        auto p = projective_cover(h, g);
        CHECK(grothendieck_vector(p) == std::vector<int>{2, 2});
        CHECK(fp_dim_object(p) == Rational(4));
    }
}

TEST_CASE("composition series multiset is independent of the extraction order") {
    auto h = host(2);
    auto p = projective_cover(h, 0);
    auto x = tensor_comodules(p, projective_cover(h, 1));
    auto base = composition_series(x);
    std::sort(base.begin(), base.end());
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto s = composition_series(x, &rng);
        std::sort(s.begin(), s.end());
        CHECK(s == base);
    }
}

TEST_CASE("tensor and dual comodules") {
    auto h = host(2);
    auto p = projective_cover(h, 1);
    auto q = tensor_comodules(p, simple_comodule(h, 1));
    CHECK(is_comodule(q));
    auto pd = dual_comodule(p);
    CHECK(is_comodule(pd));
    // ev: P* (x) P -> k is a comodule map
    Matrix ev(1, p.dim * p.dim);
    for (int i = 0; i < p.dim; ++i) ev(0, i * p.dim + i) = 1;
    CHECK(is_comodule_map(ev, tensor_comodules(pd, p), trivial_comodule(h)));
    Matrix coev(p.dim * p.dim, 1);
    for (int i = 0; i < p.dim; ++i) coev(i * p.dim + i, 0) = 1;
    CHECK(is_comodule_map(coev, trivial_comodule(h), tensor_comodules(p, pd)));
}

TEST_CASE("hom spaces between simples and projectives") {
    auto h = host(2);
    CHECK(comodule_hom_space(simple_comodule(h, 0), simple_comodule(h, 0)).size() == 1);
    CHECK(comodule_hom_space(simple_comodule(h, 0), simple_comodule(h, 1)).empty());
    auto p = projective_cover(h, 0);
    auto endo = comodule_hom_space(p, p);
    for (const auto& f : endo) CHECK(is_comodule_map(f, p, p));
    CHECK(endo.size() == 2);
}
