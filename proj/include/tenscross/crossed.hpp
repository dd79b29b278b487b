#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tenscross/bigalois.hpp"
#include "tenscross/comodule.hpp"

namespace tenscross {

/*
 * gamma = sign * sqrt(square). When square is not a rational square the root
 * is kept formal and scalars are tracked as r * gamma^k.
 */
struct Gamma {
    Rational square{1};
    int sign = 1;
    static Gamma rational(const Rational& r);
    static Gamma root(const Rational& square, int sign);
    // "1", "-1", "1/2", "i", "-i".
    static Gamma parse(const std::string& text);
    std::optional<Rational> value() const;
    std::string str() const;
    bool operator==(const Gamma& o) const { return square == o.square && sign == o.sign; }
    bool operator!=(const Gamma& o) const { return !(*this == o); }
};

/* r * gamma^power. */
struct GammaScalar {
    Rational coeff{1};
    int power = 0;
};
// Reduces the power to 0 or 1 (to 0 when gamma is rational).
GammaScalar normalize(const Gamma& gamma, GammaScalar x);
bool gamma_equal(const Gamma& gamma, const GammaScalar& a, const GammaScalar& b);

/*
 * C2-graded crossed system over H = A(V, u, G): L_1 = H, L_u = L, the
 * group-like g = g(u, u), the bicomodule algebra isomorphism
 * f: (L box L)^g -> H and the scalar gamma = gamma(u, u, u).
 *
 * Functors L box - are handled in coordinates where L box X is identified
 * with X through x -> theta(x_-1) (x) x_0, theta: H -> L the right colinear
 * relabelling of monomials. In these coordinates L box X is X with the
 * coaction pushed forward along K, the splitting L box (X (x) Y) -> (L box X)
 * (x) (L box Y) is the action of tau_bar in (H (x) H)*, and the component of
 * the pseudo-natural isomorphism is the action of nu in H*.
 */
struct CrossedSystem {
    std::string name;
    std::shared_ptr<const SupergroupContext> ctx;
    CompatibleData ldata;
    AlgebraPtr L;
    AlgebraPtr H;  // H as a bicomodule algebra over itself
    std::shared_ptr<const CotensorProduct> box;  // L box L
    int g = 0;
    Matrix f;  // box coordinates -> H
    Gamma gamma;

    Matrix K;                    // H -> H
    std::vector<Rational> tau;   // tau[h * dim + k]
    std::vector<Rational> tau_bar;
    std::vector<Rational> nu;    // per basis element of H
    bool trivial_split = false;  // tau_bar = eps (x) eps
    bool coordinates_ok = false;

    int u() const { return ctx->p.u; }
};

// f defaults to the group law identification L box L = H, composed with the
// sign map when g = u. Throws std::invalid_argument when L box L is not H.
CrossedSystem make_crossed_system(std::shared_ptr<const SupergroupContext> ctx, const CompatibleData& ldata, int g,
                                  const Gamma& gamma, const std::string& name,
                                  std::optional<Matrix> f = std::nullopt);

struct ValidationReport {
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    bool ok() const { return failed.empty(); }
};
ValidationReport validate_crossed_system(const CrossedSystem& s);
// The value c such that the coherence of gamma with the pseudo-natural
// isomorphism on the invertible objects k_g(b,c) holds iff gamma^2 = c.
Rational coherent_gamma_square(const CrossedSystem& s);

// C_0(1, id, +-1), C_0(u, iota, +-1), D(1, id, +-1), D(u, iota, +-1).
std::vector<CrossedSystem> build_the_eight(std::shared_ptr<const SupergroupContext> ctx);
// The same eight with gamma = +-sqrt(coherent_gamma_square) for g = u.
std::vector<CrossedSystem> build_the_eight_coherent(std::shared_ptr<const SupergroupContext> ctx);
// The same family with L = L(T_xi) for T_xi = [[1, xi], [0, -1]] (dim V = 2).
CrossedSystem make_family_c(std::shared_ptr<const SupergroupContext> ctx, const Rational& xi, int g,
                            const Gamma& gamma);
// D(g, gamma): L = H.
CrossedSystem make_family_d(std::shared_ptr<const SupergroupContext> ctx, int g, const Gamma& gamma);
CompatibleData t_xi_data(const SupergroupContext& ctx, const Rational& xi);

struct GradedObject {
    Comodule v;
    int grade = 0;  // 0 or u
    std::string name;
};

GradedObject graded_simple(const CrossedSystem& s, int g, int grade);
GradedObject graded_projective(const CrossedSystem& s, int g, int grade);
// [k_1,1], [k_u,1], [k_1,u], [k_u,u], [P_1,1], [P_1,u].
std::vector<GradedObject> generating_set(const CrossedSystem& s);

// L_a box W in coordinates.
Comodule functor_apply(const CrossedSystem& s, int a, const Comodule& w);
// [V,a] (x) [W,b] = [V (x) (L_a box W) (x) k_g(a,b), ab].
GradedObject tensor_objects(const CrossedSystem& s, const GradedObject& x, const GradedObject& y);
// Tensor product of morphisms f: X -> X', k: Y -> Y' where X has grade a.
SparseMatrix tensor_morphisms(const SparseMatrix& f, const SparseMatrix& k);

// Building blocks of the associator, all in coordinates.
SparseMatrix split_matrix(const CrossedSystem& s, int a, const Comodule& x, const Comodule& y);
SparseMatrix pseudonat_matrix(const CrossedSystem& s, int a, int b, const Comodule& x);
// gamma_(a,b,c) as a power of gamma: 1 at (u,u,u), else 0.
int gamma_power(int a, int b, int c);

struct ScaledMatrix {
    SparseMatrix m;
    int gamma_power = 0;  // the map is gamma^gamma_power * m
};
// X (x) (Y (x) Z) -> (X (x) Y) (x) Z.
ScaledMatrix associator_scaled(const CrossedSystem& s, const GradedObject& x, const GradedObject& y,
                               const GradedObject& z);
// Throws std::domain_error when gamma is formal and enters the component.
SparseMatrix associator(const CrossedSystem& s, const GradedObject& x, const GradedObject& y, const GradedObject& z);
bool associator_is_comodule_iso(const CrossedSystem& s, const GradedObject& x, const GradedObject& y,
                                const GradedObject& z);

bool pentagon_check(const CrossedSystem& s, const GradedObject& w, const GradedObject& x, const GradedObject& y,
                    const GradedObject& z);
// Unit constraints are identities; checks alpha(X,1,Y), alpha(1,X,Y), alpha(X,Y,1) are identities.
bool triangle_check(const CrossedSystem& s, const GradedObject& x, const GradedObject& y);

struct SweepResult {
    long pentagons = 0;
    long pentagon_failures = 0;
    long triangles = 0;
    long triangle_failures = 0;
    bool ok() const { return pentagon_failures == 0 && triangle_failures == 0; }
};
// Threads: TENSCROSS_THREADS, else hardware concurrency.
int worker_threads();
SweepResult pentagon_sweep(const CrossedSystem& s, const std::vector<GradedObject>& objects, int threads = 0);

struct DualData {
    GradedObject dual;
    Matrix ev;    // 1 x dim(X* (x) X)
    Matrix coev;  // dim(X (x) X*) x 1, times gamma^coev_gamma_power
    int coev_gamma_power = 0;
    bool ev_colinear = false;
    bool coev_colinear = false;
    bool zigzag_left = false;   // (id (x) ev) alpha^-1 (coev (x) id) = id_X
    bool zigzag_right = false;  // (ev (x) id) alpha (id (x) coev) = id_X*
    bool ok() const { return ev_colinear && coev_colinear && zigzag_left && zigzag_right; }
};
// [V,1]* = [V*,1]; [V,u]* = [k_{g^-1} (x) (L box V*), u].
GradedObject dual_of(const CrossedSystem& s, const GradedObject& x);
DualData dual_object(const CrossedSystem& s, const GradedObject& x);

struct FpDimReport {
    std::vector<std::string> simples;
    std::vector<Rational> simple_dims;
    std::vector<Rational> projective_dims;
    Rational total{0};
    bool simples_invertible = true;
};
FpDimReport fp_dim_category(const CrossedSystem& s);

struct Fingerprint {
    int g = 0;
    bool outer = false;             // L box - is not an inner action
    std::vector<int> simple_action;  // k_x -> L box k_x on group elements
    Gamma gamma;
    bool operator==(const Fingerprint& o) const {
        return g == o.g && outer == o.outer && simple_action == o.simple_action && gamma == o.gamma;
    }
    std::string str(const SupergroupContext& ctx) const;
};
Fingerprint invariant_fingerprint(const CrossedSystem& s);

/*
 * Data for an equivalence C(s) -> C(s') with lambda = id on C2: the
 * bigalois object M = L(T, 0, id, 1), h = h(u), the isomorphism
 * h^u: (M box L_u)^h -> L'_u box M and the scalar tau.
 */
struct EquivalenceData {
    CompatibleData m;
    int h = 0;
    Matrix hu;  // cotensor coordinates
    Rational tau{1};
};

struct EquivalenceCheck {
    bool grouplike = false;  // alpha(g) h^2 = g'
    bool hu_iso = false;
    bool f_compatible = false;
    bool gamma = false;
    std::optional<Rational> ratio;  // LHS = ratio * RHS in the f compatibility
    bool ok() const { return grouplike && hu_iso && f_compatible && gamma; }
};
EquivalenceCheck verify_equivalence(const CrossedSystem& s, const CrossedSystem& t, const EquivalenceData& d);

struct SearchBox {
    int bound = 2;        // |entries| <= bound
    int denominator = 2;  // denominators up to this
};

struct EquivalenceResult {
    std::optional<EquivalenceData> data;
    std::vector<std::string> obstructions;  // "gamma", "alpha", "T-solvability", "box-exhausted"
    long candidates_tried = 0;
};
EquivalenceResult equivalence_search(const CrossedSystem& s, const CrossedSystem& t, const SearchBox& box = {});

// 2 x 2 similarity over Q; nullopt for other sizes.
std::optional<bool> similar_2x2(const Matrix& a, const Matrix& b);

}  // namespace tenscross
