#pragma once

#include <random>
#include <vector>

#include "tenscross/hopf.hpp"

namespace tenscross {

/*
 * Finite-dimensional left H-comodule. The coaction is stored as a
 * (dim H * dim M) x dim M matrix; row h * dim M + i, column j holds the
 * coefficient of e_h (x) m_i in lambda(m_j).
 */
struct Comodule {
    HopfPtr host;
    int dim = 0;
    SparseMatrix coaction;
};

struct CoactionTerm {
    int h;  // basis element of H
    int i;  // basis element of M
    Rational c;
};
// Per basis vector m_j, the terms of lambda(m_j).
std::vector<std::vector<CoactionTerm>> coaction_terms(const Comodule& m);
// Component maps: lambda(m) = sum_h e_h (x) lambda^h(m).
std::vector<SparseMatrix> coaction_components(const Comodule& m);

Comodule comodule_from_terms(const HopfPtr& host, const std::vector<std::vector<CoactionTerm>>& cols);

Comodule trivial_comodule(const HopfPtr& host);
// One-dimensional comodule k_g, g a group element index.
Comodule simple_comodule(const HopfPtr& host, int g);
// Projective cover of k_g: the span of v_S g' inside H with g' = u^{dim V} g, coaction Delta.
Comodule projective_cover(const HopfPtr& host, int g);
Comodule tensor_comodules(const Comodule& x, const Comodule& y);
// Left dual: ev(e^a (x) e_j) = delta_aj is colinear.
Comodule dual_comodule(const Comodule& x);
// (K (x) id) lambda for a linear map K: H -> H.
Comodule pushforward(const Comodule& x, const Matrix& k);

bool is_comodule(const Comodule& x);
bool is_comodule_map(const Matrix& f, const Comodule& x, const Comodule& y);
bool same_host(const HopfPtr& a, const HopfPtr& b);

// Basis of Hom^H(x, y) as dim y x dim x matrices.
std::vector<Matrix> comodule_hom_space(const Comodule& x, const Comodule& y);

// Group elements g of the composition factors k_g, bottom to top. With an rng
// the extraction order (group element tried first and vector chosen) is randomized.
std::vector<int> composition_series(const Comodule& x, std::mt19937_64* rng = nullptr);
// Multiplicity of k_g for every group element g.
std::vector<int> grothendieck_vector(const Comodule& x);
// Multiplicity of k_g in the head, i.e. dim Hom(x, k_g).
std::vector<int> head(const Comodule& x);
// Sum of FP dimensions of the composition factors; each k_g is checked to be invertible.
Rational fp_dim_object(const Comodule& x);

// Quotient by a one-dimensional subcomodule spanned by v.
Comodule quotient_by_line(const Comodule& x, const Vec& v, int pivot);

}  // namespace tenscross
