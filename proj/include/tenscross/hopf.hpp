#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tenscross/group.hpp"
#include "tenscross/matrix.hpp"
#include "tenscross/sparse_vec.hpp"

namespace tenscross {

/* An odd generator v with coproduct v (x) 1 + c (x) v, c = group element `grading`. */
struct Generator {
    int basis = 0;
    int grading = 0;
    int block = 0;  // tensor factor the generator came from
};

/*
 * Finite-dimensional Hopf algebra given by structure constants on a fixed basis.
 * H (x) H is indexed a * dim + b.
 */
struct HopfAlgebraData {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SVec> products;    // products[a * dim + b] = e_a e_b
    int unit = 0;                  // basis index of 1
    std::vector<SVec> coproducts;  // coproducts[a] = Delta(e_a), indices into H (x) H
    Vec counit;
    Matrix antipode;  // column j is S(e_j)
    std::vector<int> grading;

    // Group-like part: group_basis[g] is the basis index of the group element g.
    FiniteAbelianGroup group;
    std::vector<int> group_basis;
    std::vector<int> basis_group;  // group part of a monomial basis element, -1 if none
    std::vector<Generator> generators;
    std::vector<Matrix> gen_action;  // per group element, action on the span of the generators

    const std::vector<int>& grouplikes() const { return group_basis; }
    const SVec& product(int a, int b) const { return products[static_cast<std::size_t>(a) * dim + b]; }

    SVec multiply(const SVec& x, const SVec& y) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    // Product in H (x) H.
    SVec multiply_tensor(const SVec& x, const SVec& y) const;
    SVec comultiply(const SVec& x) const;
    Rational counit_of(const SVec& x) const;
    SVec apply_antipode(const SVec& x) const;
    int grouplike_inverse(int basis_index) const;
    int label_index(const std::string& label) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

/* The data (V, u, G): dim V, the group, the central involution u and the action of G on V. */
struct SupergroupPresentation {
    int v_dim = 0;
    FiniteAbelianGroup group;
    int u = 1;
    std::vector<Matrix> action;  // action[g] is v_dim x v_dim

    // G = C2 acting through u = -1.
    static SupergroupPresentation standard(int v_dim);
    void validate() const;
};

// Subsets of {0..k-1} as bit masks, ordered by size and then lexicographically.
std::vector<unsigned> graded_subsets(int k);

HopfAlgebraData build_supergroup_algebra(const SupergroupPresentation& p);
HopfAlgebraData build_group_algebra(const FiniteAbelianGroup& g);
HopfAlgebraData co_opposite(const HopfAlgebraData& h);
HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b);

// Empty when all checks pass; otherwise one message per failing family.
std::vector<std::string> verify_hopf_axioms(const HopfAlgebraData& h);

// v -> vu, g -> g; a Hopf isomorphism from a supergroup algebra onto its co-opposite.
Matrix iso_phi(const HopfAlgebraData& h);
// Checks that f (columns = images of basis vectors) is a unital algebra and coalgebra map H -> K.
bool is_bialgebra_map(const Matrix& f, const HopfAlgebraData& h, const HopfAlgebraData& k);

struct HopfTwoCocycle {
    HopfPtr host;
    Matrix sigma;      // sigma(i, j) = sigma(e_i, e_j)
    Matrix sigma_inv;  // convolution inverse
};

// sigma(x, y) = psi(g, h) on group elements and 0 in positive degree.
HopfTwoCocycle hopf_cocycle_from_group_cocycle(const HopfPtr& h, const GroupTwoCocycle& psi);
std::vector<std::string> verify_hopf_cocycle(const HopfTwoCocycle& c);

struct AntipodeSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Product x.y = sigma(x1,y1) x2 y2 sigma^-1(x3,y3); coproduct unchanged; antipode re-solved.
HopfAlgebraData twist_hopf(const HopfAlgebraData& h, const HopfTwoCocycle& sigma);

// xi = 1: relations of the untwisted tensor product (blocks commute).
// xi = -1: blocks anticommute and each block's grading element acts by -1 on the other block.
bool check_twist_presentation(const HopfAlgebraData& twisted, int xi);

}  // namespace tenscross
