#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "support/oracles.hpp"
#include "tenscross/hopf.hpp"

using namespace tenscross;

using oracle::closed_form_coproduct;

TEST_CASE("supergroup algebra satisfies the Hopf axioms") {
    for (int k = 0; k <= 3; ++k) {
        auto h = build_supergroup_algebra(SupergroupPresentation::standard(k));
        CHECK(h.dim == (1 << k) * 2);
        CHECK(verify_hopf_axioms(h).empty());
    }
}

TEST_CASE("multiplicative coproduct matches the closed formula") {
    for (int k = 1; k <= 3; ++k) {
        auto h = build_supergroup_algebra(SupergroupPresentation::standard(k));
        for (unsigned s = 0; s < (1u << k); ++s)
            for (int g = 0; g < 2; ++g) {
                std::string lab;
                for (int i = 0; s >> i; ++i)
                    if ((s >> i) & 1u) lab += "v" + std::to_string(i + 1);
                int a = lab.empty() ? g : h.label_index(g ? lab + "u" : lab);
                CHECK(h.coproducts[a] == closed_form_coproduct(h, s, g));
            }
    }
}

TEST_CASE("labels and grading of A(V) with dim V = 2") {
    auto h = build_supergroup_algebra(SupergroupPresentation::standard(2));
    std::vector<std::string> want{"1", "u", "v1", "v1u", "v2", "v2u", "v1v2", "v1v2u"};
    CHECK(h.labels == want);
    CHECK(h.grading == std::vector<int>{0, 0, 1, 1, 1, 1, 2, 2});
}

TEST_CASE("co-opposite and tensor products are Hopf algebras") {
    auto a = build_supergroup_algebra(SupergroupPresentation::standard(1));
    CHECK(verify_hopf_axioms(co_opposite(a)).empty());
    auto b = tensor_hopf(a, a);
    CHECK(verify_hopf_axioms(b).empty());
    CHECK(verify_hopf_axioms(tensor_hopf(a, co_opposite(a))).empty());
}

TEST_CASE("phi is a Hopf isomorphism onto the co-opposite") {
    for (int k = 1; k <= 3; ++k) {
        auto a = build_supergroup_algebra(SupergroupPresentation::standard(k));
        Matrix phi = iso_phi(a);
        CHECK(is_invertible(phi));
        CHECK(is_bialgebra_map(phi, a, co_opposite(a)));
        CHECK(!is_bialgebra_map(Matrix::identity(a.dim), a, co_opposite(a)));
    }
}

TEST_CASE("invalid presentations are rejected") {
    auto p = SupergroupPresentation::standard(2);
    p.action[1] = Matrix::identity(2);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("twisting the tensor square by a group cocycle") {
    auto a = build_supergroup_algebra(SupergroupPresentation::standard(2));
    auto b = std::make_shared<HopfAlgebraData>(tensor_hopf(a, a));
    auto d = FiniteAbelianGroup::product(a.group, a.group);
    // psi((a1,a2),(b1,b2)) = (-1)^{a1 b2}: xi = -1
    auto odd = GroupTwoCocycle::bicharacter(d, Matrix{{1, -1}, {1, 1}});
    // symmetric version: xi = 1
    auto even = GroupTwoCocycle::bicharacter(d, Matrix{{1, -1}, {-1, 1}});
    for (const auto& [psi, xi] : {std::pair{odd, -1}, std::pair{even, 1}}) {
        auto sigma = hopf_cocycle_from_group_cocycle(b, psi);
        CHECK(verify_hopf_cocycle(sigma).empty());
        auto t = twist_hopf(*b, sigma);
        CHECK(verify_hopf_axioms(t).empty());
        CHECK(check_twist_presentation(t, xi));
        CHECK(!check_twist_presentation(t, -xi));
    }
    CHECK(check_twist_presentation(*b, 1));
}
