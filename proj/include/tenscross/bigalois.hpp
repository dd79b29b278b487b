#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tenscross/comodule.hpp"
#include "tenscross/hopf.hpp"

namespace tenscross {

/* Basis w_S e_f of a normal-form algebra: mask S of generators, position of f in the group list. */
struct MonomialBasis {
    std::vector<unsigned> mask;
    std::vector<int> group_pos;
    std::vector<int> elements;  // the group elements f, as indices of the acting group
    int generators = 0;
    int index(unsigned mask, int pos) const;
};

/*
 * Algebra with optional left and right coactions. Left: rows h * dim + i;
 * right: rows i * dim H + h (A (x) H indexing).
 */
struct ComoduleAlgebra {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SVec> products;
    SVec unit;
    HopfPtr left_host;
    SparseMatrix left;
    HopfPtr right_host;
    SparseMatrix right;
    std::optional<MonomialBasis> mono;

    const SVec& product(int a, int b) const { return products[static_cast<std::size_t>(a) * dim + b]; }
    SVec multiply(const SVec& x, const SVec& y) const;
    // Matrix of left multiplication by x.
    Matrix left_mult(const SVec& x) const;
    std::optional<SVec> inverse(const SVec& x) const;
};

using AlgebraPtr = std::shared_ptr<const ComoduleAlgebra>;

// Empty when associativity, unit, coassociativity, counit, multiplicativity of
// the coactions and (when both exist) bicomodule compatibility all hold.
std::vector<std::string> verify_comodule_algebra(const ComoduleAlgebra& a);

struct CompatibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/*
 * Data for the normal-form algebra with generators W = W1 + W2 + W3 and group
 * part F inside G x G. W1, W2 are subspaces of V, W3 of V + V (columns).
 * beta is the form on W in the concatenated basis; psi is an |F| x |F| table
 * in the order of F (empty means trivial).
 */
struct KData {
    Matrix w1, w2, w3;
    Matrix beta;
    std::vector<int> F;
    std::vector<Rational> psi;
};

// Host of the coaction is tensor_hopf(A, A) for A = A(V, u, G).
ComoduleAlgebra build_K(const SupergroupPresentation& p, const HopfPtr& b_host, const KData& data);

/* (T, beta, alpha, psi) with T compatible with the G-action through alpha. */
struct CompatibleData {
    Matrix T;
    Matrix beta;
    std::vector<int> alpha;
    GroupTwoCocycle psi;

    bool operator==(const CompatibleData& o) const {
        return T == o.T && beta == o.beta && alpha == o.alpha && psi == o.psi;
    }
};

CompatibleData identity_data(const SupergroupPresentation& p);
// Throws CompatibilityError naming the failing condition.
void validate_data(const CompatibleData& d, const SupergroupPresentation& p);
CompatibleData data_product(const CompatibleData& d, const CompatibleData& e);
CompatibleData data_inverse(const CompatibleData& d);

struct SupergroupContext {
    SupergroupPresentation p;
    HopfPtr a;  // A(V, u, G)
    HopfPtr b;  // A (x) A
    static SupergroupContext standard(int v_dim);
};

// Bicomodule algebra over A; left coaction (id (x) eps) delta, right coaction through phi.
ComoduleAlgebra build_L(const CompatibleData& d, const SupergroupContext& ctx);

struct GaloisReport {
    bool left_bijective = false;
    bool right_bijective = false;
    bool left_coinvariants_trivial = false;
    bool right_coinvariants_trivial = false;
    bool bicomodule = false;
    bool ok() const {
        return left_bijective && right_bijective && left_coinvariants_trivial && right_coinvariants_trivial && bicomodule;
    }
};

// a (x) b -> a_-1 (x) a_0 b, as a (dim H * dim A) x dim A^2 matrix.
Matrix canonical_map_left(const ComoduleAlgebra& a);
// a (x) b -> a b_0 (x) b_1, as a (dim A * dim H) x dim A^2 matrix.
Matrix canonical_map_right(const ComoduleAlgebra& a);
int coinvariant_dim_left(const ComoduleAlgebra& a);
int coinvariant_dim_right(const ComoduleAlgebra& a);
GaloisReport is_bigalois(const ComoduleAlgebra& a);

struct CotensorProduct {
    ComoduleAlgebra algebra;  // basis = columns of space.basis
    Subspace space;           // inside A (x) B
    int dim_a = 0, dim_b = 0;
};

// Kernel of rho_A (x) id - id (x) lambda_B with the induced algebra and coactions.
CotensorProduct cotensor(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

struct CotensorComodule {
    Comodule comodule;
    Subspace space;  // inside A (x) M
};
CotensorComodule cotensor_comodule(const ComoduleAlgebra& a, const Comodule& m);

// The group element x with A box k_g isomorphic to k_x.
int box_grouplike(const ComoduleAlgebra& a, int g);

struct GroupLawReport {
    bool in_kernel = false;
    bool algebra_map = false;
    bool bijective = false;
    bool left_colinear = false;
    bool right_colinear = false;
    bool ok() const { return in_kernel && algebra_map && bijective && left_colinear && right_colinear; }
};

// The map L(d d') -> L(d) box L(d'), in cotensor coordinates (columns).
Matrix group_law_map(const CompatibleData& d, const CompatibleData& e, const SupergroupContext& ctx,
                     const ComoduleAlgebra& ld, const ComoduleAlgebra& le, const ComoduleAlgebra& lde,
                     const CotensorProduct& box);
GroupLawReport verify_group_law(const CompatibleData& d, const CompatibleData& e, const SupergroupContext& ctx);

// f: A -> B (columns) is an algebra isomorphism intertwining both coactions,
// the left one conjugated by the group element g: lambda_B f = (g^-1 (.) g (x) f) lambda_A.
bool is_bicomodule_algebra_iso(const Matrix& f, const ComoduleAlgebra& a, const ComoduleAlgebra& b, int g = 0);

enum class IsoClass { Equal, EqualUpToTu, NotIsomorphic };
std::string to_string(IsoClass c);

struct IsoResult {
    IsoClass cls = IsoClass::NotIsomorphic;
    std::optional<Matrix> iso;  // verified bicomodule algebra isomorphism L(d) -> L(d')
};
IsoResult bigalois_iso_test(const CompatibleData& d, const CompatibleData& e, const SupergroupContext& ctx);

// w_S e_(ag,g) -> (-1)^|S| chi(g) w_S e_(ag,g) with chi(u) = -1; L(T) -> L(T_u T).
Matrix sign_twist_map(const ComoduleAlgebra& l, const SupergroupContext& ctx);

bool is_inner(const CompatibleData& d, const SupergroupContext& ctx);
// Canonical representative of d modulo left multiplication by (T_g, 0, id, 1).
CompatibleData out_class(const CompatibleData& d, const SupergroupContext& ctx);

/*
 * Pseudo-natural isomorphism F_A => F_B given by a group-like g and a
 * bicomodule algebra isomorphism A^g -> B.
 */
struct PseudoNatData {
    int g = 0;
    Matrix iso;
    AlgebraPtr src;
    AlgebraPtr dst;
};

bool verify_pseudonat(const PseudoNatData& p);
// Vertical composite: first p (A -> B), then q (B -> C).
PseudoNatData pseudonat_compose(const PseudoNatData& p, const PseudoNatData& q);

struct PseudoNatTensor {
    PseudoNatData data;  // between the cotensor algebras
    std::shared_ptr<const CotensorProduct> src_box;
    std::shared_ptr<const CotensorProduct> dst_box;
};
// Horizontal composite: group-like g phi(B, h), map a (x) c -> b^-1 f(a) b (x) k(c), rho(b) = b (x) h.
PseudoNatTensor pseudonat_tensor(const PseudoNatData& p, const PseudoNatData& q);

// Element b of A with rho(b) = b (x) h, normalised so the leading coefficient is 1.
SVec right_grouplike_element(const ComoduleAlgebra& a, int h);

}  // namespace tenscross
