#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tenscross/crossed.hpp"

using namespace tenscross;

namespace {

std::shared_ptr<const SupergroupContext> ctx2() {
    static const auto c = std::make_shared<const SupergroupContext>(SupergroupContext::standard(2));
    return c;
}

int U() { return ctx2()->p.u; }

const std::vector<CrossedSystem>& eight() {
    static const auto e = build_the_eight(ctx2());
    return e;
}

const std::vector<CrossedSystem>& eight_coherent() {
    static const auto e = build_the_eight_coherent(ctx2());
    return e;
}

const CrossedSystem& find(const std::vector<CrossedSystem>& v, const std::string& name) {
    auto it = std::find_if(v.begin(), v.end(), [&](const CrossedSystem& s) { return s.name == name; });
    REQUIRE(it != v.end());
    return *it;
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// x -> sum_h theta(h) (x) lambda^h(x) as a map X -> L (x) X, theta the identity on basis positions.
Matrix theta_embedding(const Comodule& x) {
    auto comps = coaction_components(x);
    const int n = static_cast<int>(comps.size());
    Matrix out(n * x.dim, x.dim);
    for (int h = 0; h < n; ++h) {
        Matrix c = comps[h].to_dense();
        for (int i = 0; i < x.dim; ++i)
            for (int j = 0; j < x.dim; ++j) out(h * x.dim + i, j) = c(i, j);
    }
    return out;
}

}  // namespace

TEST_CASE("the eight systems: names and count") {
    const auto& e = eight();
    REQUIRE(e.size() == 8);
    std::set<std::string> names;
    for (const auto& s : e) names.insert(s.name);
    CHECK(names.size() == 8);
    CHECK(names.count("C0(1,id,+1)") == 1);
    CHECK(names.count("D(u,iota,-1)") == 1);
}

TEST_CASE("validation: trivial-group-like systems are valid") {
    for (const auto& s : eight()) {
        if (s.g != 0) continue;
        auto r = validate_crossed_system(s);
        INFO(s.name);
        CHECK(r.ok());
        CHECK(coherent_gamma_square(s) == Rational(1));
    }
}

TEST_CASE("validation: g = u with gamma = +-1 fails only the gamma cocycle") {
    for (const auto& s : eight()) {
        if (s.g != U()) continue;
        auto r = validate_crossed_system(s);
        INFO(s.name);
        CHECK(r.failed == std::vector<std::string>{"gamma-cocycle"});
        CHECK(coherent_gamma_square(s) == Rational(-1));
        // sigma on k_u is forced to be -1
        CHECK(pseudonat_matrix(s, U(), U(), simple_comodule(ctx2()->a, U())).to_dense() == Matrix{{Rational(-1)}});
    }
}

TEST_CASE("validation: coherent variants are valid") {
    for (const auto& s : eight_coherent()) {
        INFO(s.name);
        CHECK(validate_crossed_system(s).ok());
    }
    CHECK(find(eight_coherent(), "D(u,iota,+i)").gamma.square == Rational(-1));
}

TEST_CASE("validation: invalid systems") {
    auto bad_gamma = make_crossed_system(ctx2(), identity_data(ctx2()->p), 0, Gamma::rational(Rational(2)), "bad");
    CHECK(has(validate_crossed_system(bad_gamma).failed, "gamma-cocycle"));

    auto bad_f = make_crossed_system(ctx2(), identity_data(ctx2()->p), 0, Gamma::rational(Rational(1)), "bad-f",
                                     Rational(2) * Matrix::identity(8));
    CHECK(has(validate_crossed_system(bad_f).failed, "f-isomorphism"));
}

TEST_CASE("Gamma arithmetic") {
    Gamma i = Gamma::root(Rational(-1), 1);
    CHECK(!i.value());
    CHECK(i.str() == "i");
    CHECK(Gamma::root(Rational(-1), -1).str() == "-i");
    CHECK(Gamma::root(Rational(4), -1).value() == Rational(-2));
    GammaScalar g3 = normalize(i, {Rational(1), 3});
    CHECK(g3.coeff == Rational(-1));
    CHECK(g3.power == 1);
    CHECK(gamma_equal(i, {Rational(1), 2}, {Rational(-1), 0}));
    CHECK(!gamma_equal(i, {Rational(1), 1}, {Rational(1), 0}));
}

TEST_CASE("tensor products of graded objects") {
    const auto& d = find(eight(), "D(u,iota,+1)");
    auto k1u = graded_simple(d, 0, U());
    auto t = tensor_objects(d, k1u, k1u);
    CHECK(t.grade == 0);
    CHECK(t.v.dim == 1);
    CHECK(composition_series(t.v) == std::vector<int>{U()});

    const auto& c = find(eight(), "C0(1,id,+1)");
    auto p1u = graded_projective(c, 0, U());
    auto pp = tensor_objects(c, p1u, p1u);
    CHECK(pp.v.dim == 16);
    CHECK(pp.grade == 0);

    auto unit = graded_simple(c, 0, 0);
    auto w = tensor_objects(c, unit, p1u);
    CHECK(w.grade == U());
    CHECK(w.v.coaction == p1u.v.coaction);
}

TEST_CASE("associator examples") {
    const auto& dm = find(eight(), "D(1,id,-1)");
    auto k1u = graded_simple(dm, 0, U());
    CHECK(associator(dm, k1u, k1u, k1u).to_dense() == Matrix{{Rational(-1)}});

    const auto& c = find(eight(), "C0(1,id,+1)");
    auto p1u = graded_projective(c, 0, U());
    Matrix a = associator(c, p1u, p1u, p1u).to_dense();
    CHECK(a.rows() == 64);
    CHECK(a.cols() == 64);
    CHECK(is_invertible(a));
    CHECK(associator_is_comodule_iso(c, p1u, p1u, p1u));

    // grade-1 slot: identity
    auto p11 = graded_projective(c, 0, 0);
    CHECK(associator(c, p11, p1u, p1u).is_identity());

    const auto& coh = find(eight_coherent(), "C0(u,iota,+i)");
    auto x = graded_simple(coh, 0, U());
    CHECK_THROWS_AS(associator(coh, x, x, x), std::domain_error);
    CHECK(associator_scaled(coh, x, x, x).gamma_power == 1);
}

TEST_CASE("associator components are comodule isomorphisms") {
    for (const auto& s : eight()) {
        auto gens = generating_set(s);
        for (const auto& x : gens)
            for (const auto& y : gens)
                for (const auto& z : gens) {
                    INFO(s.name << " " << x.name << y.name << z.name);
                    CHECK(associator_is_comodule_iso(s, x, y, z));
                }
    }
}

TEST_CASE("pentagon: named quadruples") {
    const auto& c = find(eight(), "C0(u,iota,-1)");
    auto q = std::vector<GradedObject>{graded_projective(c, 0, U()), graded_simple(c, U(), U()),
                                       graded_simple(c, 0, U()), graded_projective(c, 0, U())};
    // gamma = -1 is not coherent for g = u; gamma = -i is
    CHECK(!pentagon_check(c, q[0], q[1], q[2], q[3]));
    const auto& ci = find(eight_coherent(), "C0(u,iota,-i)");
    CHECK(pentagon_check(ci, q[0], q[1], q[2], q[3]));

    for (const auto& s : eight()) {
        auto k = graded_simple(s, 0, U());
        INFO(s.name);
        CHECK(pentagon_check(s, k, k, k, k) == (s.g == 0));
    }
}

TEST_CASE("pentagon sweep") {
    for (const auto& s : eight_coherent()) {
        auto r = pentagon_sweep(s, generating_set(s), 2);
        INFO(s.name);
        CHECK(r.pentagons == 1296);
        CHECK(r.ok());
    }
    for (const auto& s : eight()) {
        auto r = pentagon_sweep(s, generating_set(s), 2);
        INFO(s.name);
        CHECK(r.triangle_failures == 0);
        CHECK(r.pentagon_failures == (s.g == 0 ? 0 : 81));
    }
}

TEST_CASE("duals") {
    for (const auto& s : eight()) {
        auto d = dual_of(s, graded_simple(s, 0, U()));
        INFO(s.name);
        CHECK(d.grade == U());
        CHECK(composition_series(d.v) == std::vector<int>{s.g});
        auto unit = dual_object(s, graded_simple(s, 0, 0));
        CHECK(unit.ok());
        CHECK(unit.dual.v.dim == 1);
    }
    for (const auto& s : eight_coherent())
        for (const auto& x : generating_set(s)) {
            INFO(s.name << " " << x.name);
            CHECK(dual_object(s, x).ok());
        }
    // gamma = +-1 with g = u: the zig-zag on [k_1,u] fails
    const auto& d = find(eight(), "D(u,iota,+1)");
    auto dd = dual_object(d, graded_simple(d, 0, U()));
    CHECK(dd.ev_colinear);
    CHECK(!dd.ok());
}

TEST_CASE("FP dimensions") {
    for (const auto& s : eight()) {
        auto r = fp_dim_category(s);
        INFO(s.name);
        CHECK(r.total == Rational(16));
        CHECK(r.simples.size() == 4);
        CHECK(r.simples_invertible);
        for (const auto& p : r.projective_dims) CHECK(p == Rational(4));
    }
}

TEST_CASE("fingerprints are pairwise distinct") {
    std::vector<Fingerprint> fps;
    for (const auto& s : eight()) fps.push_back(invariant_fingerprint(s));
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j) CHECK(!(fps[i] == fps[j]));
    auto d = invariant_fingerprint(find(eight(), "D(1,id,+1)"));
    CHECK(d.g == 0);
    CHECK(!d.outer);
    auto c = invariant_fingerprint(find(eight(), "C0(u,iota,-1)"));
    CHECK(c.g == U());
    CHECK(c.outer);
    CHECK(c.gamma == Gamma::rational(Rational(-1)));
}

TEST_CASE("equivalence search") {
    const auto& c0 = find(eight(), "C0(1,id,+1)");
    for (int xi : {1, 2}) {
        auto cx = make_family_c(ctx2(), Rational(xi), 0, Gamma::rational(Rational(1)));
        CHECK(validate_crossed_system(cx).ok());
        auto r = equivalence_search(cx, c0);
        REQUIRE(r.data);
        CHECK(r.data->m.T == Matrix{{Rational(1), Rational(xi, 2)}, {Rational(0), Rational(1)}});
        CHECK(verify_equivalence(cx, c0, *r.data).ok());
        CHECK(fp_dim_category(cx).total == fp_dim_category(c0).total);
    }
    for (const auto& s : eight()) {
        auto r = equivalence_search(s, s);
        REQUIRE(r.data);
        CHECK(r.data->m.T == Matrix::identity(2));
    }
    auto alpha = equivalence_search(find(eight(), "D(1,id,+1)"), find(eight(), "D(u,iota,+1)"));
    CHECK(!alpha.data);
    CHECK(has(alpha.obstructions, "alpha"));
    auto tsol = equivalence_search(find(eight(), "D(1,id,+1)"), c0);
    CHECK(!tsol.data);
    CHECK(has(tsol.obstructions, "T-solvability"));
    auto gam = equivalence_search(c0, find(eight(), "C0(1,id,-1)"));
    CHECK(has(gam.obstructions, "gamma"));
}

TEST_CASE("verify_equivalence rejects perturbed data") {
    auto cx = make_family_c(ctx2(), Rational(2), 0, Gamma::rational(Rational(1)));
    const auto& c0 = find(eight(), "C0(1,id,+1)");
    auto r = equivalence_search(cx, c0);
    REQUIRE(r.data);
    EquivalenceData bad = *r.data;
    bad.hu = Rational(2) * bad.hu;
    CHECK(!verify_equivalence(cx, c0, bad).ok());
    EquivalenceData bad_h = *r.data;
    bad_h.h = U();
    CHECK(!verify_equivalence(cx, c0, bad_h).ok());
}

TEST_CASE("oracle: coordinates agree with the concrete cotensor comodule") {
    for (const auto& s : {find(eight(), "C0(u,iota,+1)"), find(eight(), "D(u,iota,+1)"),
                          make_family_c(ctx2(), Rational(3), 0, Gamma::rational(Rational(1)))}) {
        for (const auto& x : generating_set(s)) {
            INFO(s.name << " " << x.name);
            CotensorComodule concrete = cotensor_comodule(*s.L, x.v);
            REQUIRE(concrete.comodule.dim == x.v.dim);
            Matrix iota = theta_embedding(x.v);
            bool inside = true;
            for (int j = 0; j < iota.cols(); ++j) inside = inside && concrete.space.contains(iota.col(j));
            CHECK(inside);
            Matrix coords = concrete.space.coords(iota);
            CHECK(is_invertible(coords));
            CHECK(is_comodule_map(coords, functor_apply(s, U(), x.v), concrete.comodule));
        }
    }
}

TEST_CASE("oracle: splitting is a comodule map into the concrete tensor") {
    const auto& s = find(eight(), "C0(u,iota,+1)");
    auto gens = generating_set(s);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Comodule fxy = functor_apply(s, U(), tensor_comodules(x.v, y.v));
            Comodule fxfy = tensor_comodules(functor_apply(s, U(), x.v), functor_apply(s, U(), y.v));
            CHECK(is_comodule_map(split_matrix(s, U(), x.v, y.v).to_dense(), fxy, fxfy));
        }
}
