#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tenscross/bigalois.hpp"
#include "tenscross/crossed.hpp"

namespace tenscross {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "num/den".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
// Rows of "num/den" strings.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/*
 * {name, dim, labels, unit, group, mult, comult, counit, antipode, grouplikes, grading}.
 * mult: [i, j, k, num, den] for e_i e_j = sum c e_k; comult: [a, i, j, num, den]
 * for Delta(e_a) = sum c e_i (x) e_j; antipode: [i, j, num, den] for S(e_j) = sum c e_i.
 */
Json to_json(const HopfAlgebraData& h);
HopfAlgebraData hopf_from_json(const Json& j);

// {host_ref, dim, coaction: [row, col, num, den]} with rows h * dim + i.
Json to_json(const Comodule& m, const std::string& host_ref);
Comodule comodule_from_json(const Json& j, const HopfPtr& host);

// {name, dim, labels, unit, mult, left, right}; coactions as [row, col, num, den].
Json to_json(const ComoduleAlgebra& a);

// {T, beta, alpha, psi}; psi as rows of "num/den".
Json to_json(const CompatibleData& d);
CompatibleData compatible_data_from_json(const Json& j, const SupergroupPresentation& p);

Json to_json(const ValidationReport& r);
Json to_json(const SweepResult& r);
Json to_json(const Fingerprint& f, const SupergroupContext& ctx);

// Category report: {name, system, validation, simples, projectives, fpdim, dual_table,
// associator_scalars, fingerprint, pentagon_sweep}.
Json category_report(const CrossedSystem& s, int threads = 0);

}  // namespace tenscross
