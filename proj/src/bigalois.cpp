#include "tenscross/bigalois.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>

namespace tenscross {

// ---------------------------------------------------------------------------
// Algebra helpers

int MonomialBasis::index(unsigned m, int pos) const {
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i] == m && group_pos[i] == pos) return static_cast<int>(i);
    throw std::invalid_argument("monomial not in basis");
}

SVec ComoduleAlgebra::multiply(const SVec& x, const SVec& y) const {
    SparseAccumulator acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) acc.add(product(a, b), ca * cb);
    return acc.take();
}

Matrix ComoduleAlgebra::left_mult(const SVec& x) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [i, c] : multiply(x, sv_unit(j))) m(i, j) = c;
    return m;
}

std::optional<SVec> ComoduleAlgebra::inverse(const SVec& x) const {
    auto y = solve(left_mult(x), sv_to_dense(unit, dim));
    if (!y) return std::nullopt;
    SVec inv = sv_from_dense(*y);
    if (multiply(inv, x) != unit) return std::nullopt;
    return inv;
}

namespace {

struct Term {
    int h, i;
    Rational c;
};

// Left coaction terms per basis vector.
std::vector<std::vector<Term>> left_terms(const ComoduleAlgebra& a) {
    std::vector<std::vector<Term>> cols(a.dim);
    for (int r = 0; r < a.left.rows(); ++r)
        for (const auto& [j, c] : a.left.row(r)) cols[j].push_back({r / a.dim, r % a.dim, c});
    return cols;
}

// Right coaction terms per basis vector (h is the H index, i the algebra index).
std::vector<std::vector<Term>> right_terms(const ComoduleAlgebra& a) {
    const int n = a.right_host->dim;
    std::vector<std::vector<Term>> cols(a.dim);
    for (int r = 0; r < a.right.rows(); ++r)
        for (const auto& [j, c] : a.right.row(r)) cols[j].push_back({r % n, r / n, c});
    return cols;
}

SparseMatrix matrix_from_columns(int rows, int cols, const std::vector<SVec>& columns) {
    std::vector<std::vector<std::pair<int, Rational>>> r(rows);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, c] : columns[j]) r[i].emplace_back(j, c);
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, c] : r[i]) m.push(i, j, c);
    return m;
}

// Columns of a left coaction as SVecs over H (x) A (index h * dim + i).
std::vector<SVec> left_columns(const ComoduleAlgebra& a) {
    std::vector<SparseAccumulator> acc(a.dim);
    for (int r = 0; r < a.left.rows(); ++r)
        for (const auto& [j, c] : a.left.row(r)) acc[j].add(r, c);
    std::vector<SVec> out(a.dim);
    for (int j = 0; j < a.dim; ++j) out[j] = acc[j].take();
    return out;
}

std::vector<SVec> right_columns(const ComoduleAlgebra& a) {
    std::vector<SparseAccumulator> acc(a.dim);
    for (int r = 0; r < a.right.rows(); ++r)
        for (const auto& [j, c] : a.right.row(r)) acc[j].add(r, c);
    std::vector<SVec> out(a.dim);
    for (int j = 0; j < a.dim; ++j) out[j] = acc[j].take();
    return out;
}

Comodule left_comodule(const ComoduleAlgebra& a) { return Comodule{a.left_host, a.dim, a.left}; }


}  // namespace

std::vector<std::string> verify_comodule_algebra(const ComoduleAlgebra& a) {
    std::vector<std::string> out;
    const int d = a.dim;
    for (int x = 0; x < d && out.empty(); ++x)
        for (int y = 0; y < d && out.empty(); ++y)
            for (int z = 0; z < d; ++z)
                if (a.multiply(a.product(x, y), sv_unit(z)) != a.multiply(sv_unit(x), a.product(y, z))) {
                    out.push_back("associativity at (" + a.labels[x] + "," + a.labels[y] + "," + a.labels[z] + ")");
                    break;
                }
    for (int x = 0; x < d; ++x)
        if (a.multiply(a.unit, sv_unit(x)) != sv_unit(x) || a.multiply(sv_unit(x), a.unit) != sv_unit(x)) {
            out.push_back("unit at " + a.labels[x]);
            break;
        }
    if (a.left_host) {
        const auto& h = *a.left_host;
        if (!is_comodule(left_comodule(a))) out.push_back("left coaction is not coassociative and counital");
        auto lc = left_columns(a);
        // lambda(xy) = lambda(x) lambda(y) in H (x) A
        auto mult_ha = [&](const SVec& p, const SVec& q) {
            SparseAccumulator acc;
            for (const auto& [i, ci] : p)
                for (const auto& [j, cj] : q)
                    for (const auto& [hh, ch] : h.product(i / d, j / d))
                        for (const auto& [aa, ca] : a.product(i % d, j % d))
                            acc.add(static_cast<std::int64_t>(hh) * d + aa, ci * cj * ch * ca);
            return acc.take();
        };
        bool ok = true;
        for (int x = 0; x < d && ok; ++x)
            for (int y = 0; y < d && ok; ++y) {
                SparseAccumulator lhs;
                for (const auto& [k, c] : a.product(x, y)) lhs.add(lc[k], c);
                if (lhs.take() != mult_ha(lc[x], lc[y])) {
                    out.push_back("left coaction not multiplicative at (" + a.labels[x] + "," + a.labels[y] + ")");
                    ok = false;
                }
            }
        SparseAccumulator lu;
        for (const auto& [k, c] : a.unit) lu.add(lc[k], c);
        SparseAccumulator want;
        for (const auto& [k, c] : a.unit) want.add(static_cast<std::int64_t>(h.unit) * d + k, c);
        if (lu.take() != want.take()) out.push_back("left coaction does not fix 1");
    }
    if (a.right_host) {
        const auto& h = *a.right_host;
        const int n = h.dim;
        auto rt = right_terms(a);
        for (int j = 0; j < d; ++j) {
            SparseAccumulator l, r, e;
            for (const auto& t : rt[j]) {
                for (const auto& s : rt[t.i]) l.add((static_cast<std::int64_t>(s.i) * n + s.h) * n + t.h, t.c * s.c);
                for (const auto& [idx, c] : h.coproducts[t.h]) r.add(static_cast<std::int64_t>(t.i) * n * n + idx, t.c * c);
                e.add(t.i, t.c * h.counit[t.h]);
            }
            if (l.take() != r.take() || e.take() != sv_unit(j)) {
                out.push_back("right coaction is not coassociative and counital at " + a.labels[j]);
                break;
            }
        }
        auto rc = right_columns(a);
        auto mult_ah = [&](const SVec& p, const SVec& q) {
            SparseAccumulator acc;
            for (const auto& [i, ci] : p)
                for (const auto& [j, cj] : q)
                    for (const auto& [aa, ca] : a.product(i / n, j / n))
                        for (const auto& [hh, ch] : h.product(i % n, j % n))
                            acc.add(static_cast<std::int64_t>(aa) * n + hh, ci * cj * ch * ca);
            return acc.take();
        };
        bool ok = true;
        for (int x = 0; x < d && ok; ++x)
            for (int y = 0; y < d && ok; ++y) {
                SparseAccumulator lhs;
                for (const auto& [k, c] : a.product(x, y)) lhs.add(rc[k], c);
                if (lhs.take() != mult_ah(rc[x], rc[y])) {
                    out.push_back("right coaction not multiplicative at (" + a.labels[x] + "," + a.labels[y] + ")");
                    ok = false;
                }
            }
    }
    if (a.left_host && a.right_host) {
        const int n = a.right_host->dim, m = a.left_host->dim;
        auto lt = left_terms(a);
        auto rt = right_terms(a);
        for (int j = 0; j < d; ++j) {
            SparseAccumulator l, r;
            for (const auto& t : rt[j])
                for (const auto& s : lt[t.i]) l.add((static_cast<std::int64_t>(s.h) * d + s.i) * n + t.h, t.c * s.c);
            for (const auto& t : lt[j])
                for (const auto& s : rt[t.i]) r.add((static_cast<std::int64_t>(t.h) * d + s.i) * n + s.h, t.c * s.c);
            if (l.take() != r.take()) {
                out.push_back("left and right coactions do not commute at " + a.labels[j]);
                break;
            }
        }
        (void)m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal-form algebras

namespace {

using Word = std::vector<int>;

struct NormalForm {
    int r = 0;
    std::vector<int> block;  // 1, 2 or 3
    Matrix beta;
    std::vector<int> F;
    std::vector<int> fpos;  // element of the acting group -> position in F, or -1
    std::vector<Matrix> act;  // per F position, on W coordinates
    std::vector<Rational> psi;
    int c_pos = -1;  // position of (u,u)
    const FiniteAbelianGroup* D = nullptr;

    bool commuting(int i, int j) const {
        int a = std::min(block[i], block[j]), b = std::max(block[i], block[j]);
        return (a == 1 && b == 2) || (a == 2 && b == 3);
    }
    Rational psi_at(int p, int q) const { return psi.empty() ? Rational(1) : psi[static_cast<std::size_t>(p) * F.size() + q]; }
    int fmul(int p, int q) const { return fpos[D->mul(F[p], F[q])]; }

    // f . (w_{l1} ... w_{lm}) as a combination of words
    std::vector<std::pair<Word, Rational>> act_on_word(int p, const Word& w) const {
        std::vector<std::pair<Word, Rational>> cur{{Word{}, Rational(1)}};
        for (int l : w) {
            std::vector<std::pair<Word, Rational>> next;
            for (const auto& [word, c] : cur)
                for (int m = 0; m < r; ++m) {
                    const Rational& a = act[p](m, l);
                    if (a.is_zero()) continue;
                    Word nw = word;
                    nw.push_back(m);
                    next.emplace_back(std::move(nw), c * a);
                }
            cur = std::move(next);
        }
        return cur;
    }

    // Adds coef * w e_f (w any word) to out in normal form (mask, F position).
    void normalize(const Word& w, int f, const Rational& coef, std::map<std::pair<unsigned, int>, Rational>& out) const {
        if (coef.is_zero()) return;
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
        if (i + 1 >= w.size()) {
            unsigned m = 0;
            for (int l : w) m |= 1u << l;
            auto& slot = out[{m, f}];
            slot += coef;
            if (slot.is_zero()) out.erase({m, f});
            return;
        }
        int a = w[i], b = w[i + 1];
        Word rest(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        Word tail(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        if (a == b) {
            // w_a^2 = beta(a,a) / 2
            Word nw = rest;
            nw.insert(nw.end(), tail.begin(), tail.end());
            normalize(nw, f, coef * beta(a, a) / Rational(2), out);
            return;
        }
        // a > b: w_a w_b = s w_b w_a + correction
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        const Rational bb = beta(b, a);
        if (!commuting(a, b)) {
            normalize(swapped, f, -coef, out);
            Word nw = rest;
            nw.insert(nw.end(), tail.begin(), tail.end());
            normalize(nw, f, coef * bb, out);
        } else {
            normalize(swapped, f, coef, out);
            if (!bb.is_zero()) {
                if (c_pos < 0) throw CompatibilityError("beta-null-without-uu: commutator needs e_(u,u)");
                // - beta(b,a) e_c tail e_f = - beta(b,a) (c . tail) e_c e_f
                for (const auto& [tw, tc] : act_on_word(c_pos, tail)) {
                    Word nw = rest;
                    nw.insert(nw.end(), tw.begin(), tw.end());
                    normalize(nw, fmul(c_pos, f), -coef * bb * tc * psi_at(c_pos, f), out);
                }
            }
        }
    }
};

Word mask_word(unsigned m) {
    Word w;
    for (int i = 0; m >> i; ++i)
        if ((m >> i) & 1u) w.push_back(i);
    return w;
}

std::string group_pair_label(const FiniteAbelianGroup& g, int d_elem) {
    return "e(" + g.label(d_elem / g.size()) + "," + g.label(d_elem % g.size()) + ")";
}

}  // namespace

ComoduleAlgebra build_K(const SupergroupPresentation& p, const HopfPtr& b_host, const KData& data) {
    const int k = p.v_dim;
    const auto& G = p.group;
    const FiniteAbelianGroup D = FiniteAbelianGroup::product(G, G);
    const int r1 = data.w1.cols(), r2 = data.w2.cols(), r3 = data.w3.cols(), r = r1 + r2 + r3;
    if ((r1 && data.w1.rows() != k) || (r2 && data.w2.rows() != k) || (r3 && data.w3.rows() != 2 * k))
        throw CompatibilityError("independent-bases: W1, W2 lie in V and W3 in V + V");
    if (r > 12) throw CompatibilityError("independent-bases: too many generators");

    // Embed everything in V + V.
    Matrix wcat(2 * k, r);
    for (int j = 0; j < r1; ++j)
        for (int i = 0; i < k; ++i) wcat(i, j) = data.w1(i, j);
    for (int j = 0; j < r2; ++j)
        for (int i = 0; i < k; ++i) wcat(k + i, r1 + j) = data.w2(i, j);
    for (int j = 0; j < r3; ++j)
        for (int i = 0; i < 2 * k; ++i) wcat(i, r1 + r2 + j) = data.w3(i, j);
    if (rank(wcat) != r) throw CompatibilityError("independent-bases: W3 must meet W1 + W2 trivially and all bases be independent");
    if (r3) {
        Matrix left(2 * k, k), right(2 * k, k);
        for (int i = 0; i < k; ++i) {
            left(i, i) = 1;
            right(k + i, i) = 1;
        }
        if (rank(Matrix::hstack(left, data.w3)) != k + r3) throw CompatibilityError("W3-transversal: W3 meets V + 0");
        if (rank(Matrix::hstack(right, data.w3)) != k + r3) throw CompatibilityError("W3-transversal: W3 meets 0 + V");
    }

    NormalForm nf;
    nf.r = r;
    nf.D = &D;
    for (int j = 0; j < r; ++j) nf.block.push_back(j < r1 ? 1 : (j < r1 + r2 ? 2 : 3));
    nf.F = data.F;
    nf.fpos.assign(D.size(), -1);
    for (int i = 0; i < static_cast<int>(data.F.size()); ++i) {
        if (data.F[i] < 0 || data.F[i] >= D.size() || nf.fpos[data.F[i]] != -1) throw CompatibilityError("F-subgroup: bad element list");
        nf.fpos[data.F[i]] = i;
    }
    if (nf.fpos[0] != 0) throw CompatibilityError("F-subgroup: the identity must come first");
    for (int f : data.F)
        for (int h : data.F)
            if (nf.fpos[D.mul(f, h)] < 0) throw CompatibilityError("F-subgroup: not closed under multiplication");
    const int uu = D.index({G.exponents(p.u)[0], G.exponents(p.u)[0]});
    nf.c_pos = nf.fpos[uu];
    if (r3 && nf.c_pos < 0) throw CompatibilityError("uu-in-F: W3 is nonzero but (u,u) is not in F");
    if (data.beta.rows() != r || data.beta.cols() != r) throw CompatibilityError("beta-symmetry: beta must be a form on W");
    nf.beta = data.beta;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            bool comm = nf.commuting(i, j);
            if (!comm && data.beta(i, j) != data.beta(j, i))
                throw CompatibilityError("beta-symmetry: beta must be symmetric on anticommuting pairs");
            if (comm && data.beta(i, j) != -data.beta(j, i))
                throw CompatibilityError("beta-symmetry: beta must be antisymmetric on the W1 x W2 and W2 x W3 pairs");
            if (comm && nf.c_pos < 0 && !data.beta(i, j).is_zero())
                throw CompatibilityError("beta-null-without-uu: beta must vanish on W1 x W2 and W2 x W3 when (u,u) is not in F");
        }
    // action of F on W coordinates
    for (int f : data.F) {
        int g = f / G.size(), h = f % G.size();
        Matrix m(2 * k, 2 * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                m(i, j) = p.action[g](i, j);
                m(k + i, k + j) = p.action[h](i, j);
            }
        Matrix moved = m * wcat;
        Matrix a(r, r);
        // blocks are preserved separately
        auto solve_block = [&](int c0, int nc) {
            if (!nc) return;
            Matrix basis = wcat.select_cols([&] {
                std::vector<int> idx;
                for (int j = c0; j < c0 + nc; ++j) idx.push_back(j);
                return idx;
            }());
            Matrix target = moved.select_cols([&] {
                std::vector<int> idx;
                for (int j = c0; j < c0 + nc; ++j) idx.push_back(j);
                return idx;
            }());
            auto x = solve(basis, target);
            if (!x) throw CompatibilityError("F-invariance: F does not preserve W1, W2 and W3");
            for (int i = 0; i < nc; ++i)
                for (int j = 0; j < nc; ++j) a(c0 + i, c0 + j) = (*x)(i, j);
        };
        solve_block(0, r1);
        solve_block(r1, r2);
        solve_block(r1 + r2, r3);
        if (a.transpose() * data.beta * a != data.beta) throw CompatibilityError("beta-invariance: beta is not F-invariant");
        nf.act.push_back(a);
    }
    const int nF = static_cast<int>(data.F.size());
    if (!data.psi.empty()) {
        if (static_cast<int>(data.psi.size()) != nF * nF) throw CompatibilityError("psi-cocycle: table size");
        nf.psi = data.psi;
        for (int a = 0; a < nF; ++a)
            for (int b = 0; b < nF; ++b)
                for (int c = 0; c < nF; ++c)
                    if (nf.psi_at(a, b) * nf.psi_at(nf.fmul(a, b), c) != nf.psi_at(b, c) * nf.psi_at(a, nf.fmul(b, c)))
                        throw CompatibilityError("psi-cocycle: psi is not a 2-cocycle on F");
    }

    ComoduleAlgebra out;
    MonomialBasis mb;
    mb.generators = r;
    mb.elements = data.F;
    const auto masks = graded_subsets(r);
    for (unsigned m : masks)
        for (int f = 0; f < nF; ++f) {
            mb.mask.push_back(m);
            mb.group_pos.push_back(f);
        }
    const int dim = static_cast<int>(mb.mask.size());
    std::map<std::pair<unsigned, int>, int> index;
    for (int i = 0; i < dim; ++i) index[{mb.mask[i], mb.group_pos[i]}] = i;
    out.dim = dim;
    for (int i = 0; i < dim; ++i) {
        std::string w;
        for (int l : mask_word(mb.mask[i])) w += "w" + std::to_string(l + 1);
        const int f = data.F[mb.group_pos[i]];
        std::string e = f == 0 ? "" : group_pair_label(G, f);
        out.labels.push_back(w.empty() && e.empty() ? "1" : w + e);
    }
    out.unit = sv_unit(index.at({0u, 0}));
    out.products.resize(static_cast<std::size_t>(dim) * dim);
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
            // w_S e_f w_T e_h = psi(f,h) w_S (f . w_T) e_fh
            const int f = mb.group_pos[x], h = mb.group_pos[y];
            std::map<std::pair<unsigned, int>, Rational> acc;
            Word s = mask_word(mb.mask[x]);
            for (const auto& [tw, tc] : nf.act_on_word(f, mask_word(mb.mask[y]))) {
                Word w = s;
                w.insert(w.end(), tw.begin(), tw.end());
                nf.normalize(w, nf.fmul(f, h), tc * nf.psi_at(f, h), acc);
            }
            SVec v;
            for (const auto& [key, c] : acc) v.emplace_back(index.at(key), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.products[static_cast<std::size_t>(x) * dim + y] = v;
        }
    out.mono = mb;

    // Coaction into B (x) K with B = A (x) A.
    const auto& B = *b_host;
    const int nA = static_cast<int>(std::lround(std::sqrt(static_cast<double>(B.dim))));
    if (nA * nA != B.dim) throw std::invalid_argument("build_K: host must be A (x) A");
    const int a_unit = B.unit / nA;
    const int a_u = B.group_basis[D.index({G.exponents(p.u)[0], 0})] / nA;
    auto b_idx = [&](int a, int b) { return a * nA + b; };
    // basis index of v_i and v_i u in A
    std::vector<int> v_basis(k), vu_basis(k);
    {
        // generators of the left factor are (v_i, 1); read the A index off
        std::vector<int> left_gens;
        for (const auto& g : B.generators)
            if (g.block == 0) left_gens.push_back(g.basis / nA);
        if (static_cast<int>(left_gens.size()) != k) throw std::invalid_argument("build_K: host generator mismatch");
        for (int i = 0; i < k; ++i) {
            v_basis[i] = left_gens[i];
            // v_i u = product in the left factor: (v_i,1)(u,1)
            const SVec& pr = B.product(b_idx(v_basis[i], a_unit), b_idx(a_u, a_unit));
            if (pr.size() != 1 || !pr[0].second.is_one()) throw std::logic_error("build_K: v u is not a basis element");
            vu_basis[i] = pr[0].first / nA;
        }
    }
    const int unitK = index.at({0u, 0});
    auto bk = [&](int b, int kk) { return static_cast<std::int64_t>(b) * dim + kk; };
    std::vector<SVec> gen_delta(r);
    for (int j = 0; j < r; ++j) {
        SparseAccumulator acc;
        const int wj = index.at({1u << j, 0});
        if (nf.block[j] == 1) {
            for (int i = 0; i < k; ++i) acc.add(bk(b_idx(v_basis[i], a_unit), unitK), wcat(i, j));
            acc.add(bk(b_idx(a_u, a_unit), wj), 1);
        } else if (nf.block[j] == 2) {
            for (int i = 0; i < k; ++i) acc.add(bk(b_idx(a_unit, v_basis[i]), unitK), wcat(k + i, j));
            acc.add(bk(b_idx(a_unit, a_u), wj), 1);
        } else {
            const int e_uu = index.at({0u, nf.c_pos});
            for (int i = 0; i < k; ++i) {
                acc.add(bk(b_idx(v_basis[i], a_unit), unitK), wcat(i, j));
                acc.add(bk(b_idx(a_u, vu_basis[i]), e_uu), wcat(k + i, j));
            }
            acc.add(bk(b_idx(a_u, a_unit), wj), 1);
        }
        gen_delta[j] = acc.take();
    }
    auto mult_bk = [&](const SVec& x, const SVec& y) {
        SparseAccumulator acc;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y)
                for (const auto& [bb, cb] : B.product(i / dim, j / dim))
                    for (const auto& [kk, ck] : out.product(i % dim, j % dim)) acc.add(bk(bb, kk), ci * cj * cb * ck);
        return acc.take();
    };
    std::vector<SVec> cols(dim);
    for (int x = 0; x < dim; ++x) {
        SVec d{{static_cast<int>(bk(B.unit, unitK)), Rational(1)}};
        for (int l : mask_word(mb.mask[x])) d = mult_bk(d, gen_delta[l]);
        const int f = mb.group_pos[x];
        d = mult_bk(d, SVec{{static_cast<int>(bk(B.group_basis[data.F[f]], index.at({0u, f}))), Rational(1)}});
        cols[x] = d;
    }
    out.left_host = b_host;
    out.left = matrix_from_columns(B.dim * dim, dim, cols);
    out.name = "K";
    auto bad = verify_comodule_algebra(out);
    if (!bad.empty()) throw CompatibilityError("pbw: " + bad.front());
    return out;
}

// ---------------------------------------------------------------------------
// Compatible data

SupergroupContext SupergroupContext::standard(int v_dim) {
    SupergroupContext c;
    c.p = SupergroupPresentation::standard(v_dim);
    auto a = std::make_shared<HopfAlgebraData>(build_supergroup_algebra(c.p));
    c.a = a;
    c.b = std::make_shared<HopfAlgebraData>(tensor_hopf(*a, *a));
    return c;
}

CompatibleData identity_data(const SupergroupPresentation& p) {
    std::vector<int> alpha(p.group.size());
    for (int g = 0; g < p.group.size(); ++g) alpha[g] = g;
    return {Matrix::identity(p.v_dim), Matrix(p.v_dim, p.v_dim), alpha, GroupTwoCocycle::trivial(p.group)};
}

void validate_data(const CompatibleData& d, const SupergroupPresentation& p) {
    const int k = p.v_dim;
    const auto& G = p.group;
    if (d.T.rows() != k || d.T.cols() != k || !is_invertible(d.T)) throw CompatibilityError("T-invertible: T must be an invertible map of V");
    if (d.beta.rows() != k || d.beta.cols() != k || d.beta != d.beta.transpose())
        throw CompatibilityError("beta-symmetric: beta must be a symmetric form on V");
    if (static_cast<int>(d.alpha.size()) != G.size()) throw CompatibilityError("alpha-automorphism: wrong size");
    std::vector<bool> hit(G.size(), false);
    for (int g = 0; g < G.size(); ++g) {
        if (d.alpha[g] < 0 || d.alpha[g] >= G.size() || hit[d.alpha[g]]) throw CompatibilityError("alpha-automorphism: not a bijection");
        hit[d.alpha[g]] = true;
        for (int h = 0; h < G.size(); ++h)
            if (d.alpha[G.mul(g, h)] != G.mul(d.alpha[g], d.alpha[h])) throw CompatibilityError("alpha-automorphism: not a homomorphism");
    }
    if (d.alpha[p.u] != p.u) throw CompatibilityError("alpha-fixes-u: alpha(u) must equal u");
    for (int g = 0; g < G.size(); ++g) {
        if (d.T * p.action[g] != p.action[d.alpha[g]] * d.T) throw CompatibilityError("T-compatible: T(g.v) must equal alpha(g).T(v)");
        if (p.action[g].transpose() * d.beta * p.action[g] != d.beta) throw CompatibilityError("beta-invariant: beta must be G-invariant");
    }
    if (d.psi.group() != G || !is_2cocycle(d.psi)) throw CompatibilityError("psi-cocycle: psi must be a 2-cocycle on G");
}

CompatibleData data_product(const CompatibleData& d, const CompatibleData& e) {
    const auto& G = d.psi.group();
    CompatibleData out;
    out.T = d.T * e.T;
    out.beta = e.T.transpose() * d.beta * e.T + e.beta;
    out.alpha.resize(d.alpha.size());
    for (std::size_t g = 0; g < d.alpha.size(); ++g) out.alpha[g] = d.alpha[e.alpha[g]];
    std::vector<Rational> v(static_cast<std::size_t>(G.size()) * G.size());
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h) v[static_cast<std::size_t>(g) * G.size() + h] = d.psi(e.alpha[g], e.alpha[h]) * e.psi(g, h);
    out.psi = GroupTwoCocycle(G, v);
    return out;
}

CompatibleData data_inverse(const CompatibleData& d) {
    const auto& G = d.psi.group();
    CompatibleData out;
    out.T = invert(d.T);
    out.beta = Rational(-1) * (out.T.transpose() * d.beta * out.T);
    out.alpha.resize(d.alpha.size());
    for (std::size_t g = 0; g < d.alpha.size(); ++g) out.alpha[d.alpha[g]] = static_cast<int>(g);
    std::vector<Rational> v(static_cast<std::size_t>(G.size()) * G.size());
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            v[static_cast<std::size_t>(g) * G.size() + h] = d.psi(out.alpha[g], out.alpha[h]).inverse();
    out.psi = GroupTwoCocycle(G, v);
    return out;
}

ComoduleAlgebra build_L(const CompatibleData& d, const SupergroupContext& ctx) {
    validate_data(d, ctx.p);
    const auto& p = ctx.p;
    const auto& G = p.group;
    const int k = p.v_dim;
    KData kd;
    kd.w1 = Matrix(k, 0);
    kd.w2 = Matrix(k, 0);
    kd.w3 = Matrix(2 * k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            kd.w3(i, j) = d.T(i, j);
            kd.w3(k + i, j) = i == j ? 1 : 0;
        }
    kd.beta = d.beta;
    for (int g = 0; g < G.size(); ++g) kd.F.push_back(d.alpha[g] * G.size() + g);
    kd.psi.resize(static_cast<std::size_t>(G.size()) * G.size());
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h) kd.psi[static_cast<std::size_t>(g) * G.size() + h] = d.psi(g, h);
    ComoduleAlgebra l = build_K(p, ctx.b, kd);

    const auto& A = *ctx.a;
    const int nA = A.dim, dim = l.dim;
    const Matrix phi = iso_phi(A);
    // Relabel generators as x_i.
    for (auto& lab : l.labels) {
        for (std::size_t pos = 0; (pos = lab.find('w', pos)) != std::string::npos;) lab[pos] = 'x';
    }
    std::vector<SparseAccumulator> lam(dim), rho(dim);
    for (int r = 0; r < l.left.rows(); ++r)
        for (const auto& [j, c] : l.left.row(r)) {
            const int b = r / dim, i = r % dim;
            const int a1 = b / nA, a2 = b % nA;
            // lambda = (id (x) eps (x) id) delta
            if (!A.counit[a2].is_zero()) lam[j].add(static_cast<std::int64_t>(a1) * dim + i, c * A.counit[a2]);
            // rho = flip (phi (x) id)(eps (x) id (x) id) delta
            if (!A.counit[a1].is_zero())
                for (int y = 0; y < nA; ++y)
                    if (!phi(y, a2).is_zero()) rho[j].add(static_cast<std::int64_t>(i) * nA + y, c * A.counit[a1] * phi(y, a2));
        }
    std::vector<SVec> lc(dim), rc(dim);
    for (int j = 0; j < dim; ++j) {
        lc[j] = lam[j].take();
        rc[j] = rho[j].take();
    }
    l.left_host = ctx.a;
    l.left = matrix_from_columns(nA * dim, dim, lc);
    l.right_host = ctx.a;
    l.right = matrix_from_columns(dim * nA, dim, rc);
    l.name = "L";
    return l;
}

// ---------------------------------------------------------------------------
// Galois maps

Matrix canonical_map_left(const ComoduleAlgebra& a) {
    const int d = a.dim, n = a.left_host->dim;
    Matrix m(n * d, d * d);
    auto lt = left_terms(a);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (const auto& t : lt[x])
                for (const auto& [z, c] : a.product(t.i, y)) m(t.h * d + z, x * d + y) += t.c * c;
    return m;
}

Matrix canonical_map_right(const ComoduleAlgebra& a) {
    const int d = a.dim, n = a.right_host->dim;
    Matrix m(d * n, d * d);
    auto rt = right_terms(a);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (const auto& t : rt[y])
                for (const auto& [z, c] : a.product(x, t.i)) m(z * n + t.h, x * d + y) += t.c * c;
    return m;
}

int coinvariant_dim_left(const ComoduleAlgebra& a) {
    const int d = a.dim;
    const int unit = a.left_host->unit;
    SparseEliminator el(d);
    for (int r = 0; r < a.left.rows(); ++r) {
        SVec row(a.left.row(r).begin(), a.left.row(r).end());
        if (r / d == unit) row = sv_sub(row, sv_unit(r % d));
        if (!row.empty()) el.add_row(row);
    }
    return d - el.rank();
}

int coinvariant_dim_right(const ComoduleAlgebra& a) {
    const int d = a.dim, n = a.right_host->dim;
    const int unit = a.right_host->unit;
    SparseEliminator el(d);
    for (int r = 0; r < a.right.rows(); ++r) {
        SVec row(a.right.row(r).begin(), a.right.row(r).end());
        if (r % n == unit) row = sv_sub(row, sv_unit(r / n));
        if (!row.empty()) el.add_row(row);
    }
    return d - el.rank();
}

GaloisReport is_bigalois(const ComoduleAlgebra& a) {
    GaloisReport rep;
    if (!a.left_host || !a.right_host) return rep;
    Matrix cl = canonical_map_left(a), cr = canonical_map_right(a);
    rep.left_bijective = cl.is_square() && rank(cl) == cl.rows();
    rep.right_bijective = cr.is_square() && rank(cr) == cr.rows();
    rep.left_coinvariants_trivial = coinvariant_dim_left(a) == 1;
    rep.right_coinvariants_trivial = coinvariant_dim_right(a) == 1;
    auto problems = verify_comodule_algebra(a);
    rep.bicomodule = problems.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Cotensor products

namespace {

Vec coords_at_pivots(const Subspace& s, const SVec& v, const char* what) {
    Vec c(s.dim());
    Vec dense = sv_to_dense(v, s.ambient());
    for (int k = 0; k < s.dim(); ++k) c[k] = dense[s.pivots[k]];
    if (s.basis * c != dense) throw std::logic_error(std::string(what) + ": element left the cotensor product");
    return c;
}

std::vector<SVec> basis_columns(const Subspace& s) {
    std::vector<SVec> out(s.dim());
    for (int j = 0; j < s.dim(); ++j) out[j] = sv_from_dense(s.basis.col(j));
    return out;
}

}  // namespace

CotensorProduct cotensor(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
    if (!a.right_host || !b.left_host || !same_host(a.right_host, b.left_host))
        throw std::invalid_argument("cotensor: needs a right comodule and a left comodule over the same Hopf algebra");
    const int da = a.dim, db = b.dim, n = a.right_host->dim;
    std::map<std::int64_t, SparseAccumulator> eqs;
    auto key = [&](int x, int h, int y) { return (static_cast<std::int64_t>(x) * n + h) * db + y; };
    for (int r = 0; r < a.right.rows(); ++r)
        for (const auto& [x2, c] : a.right.row(r))
            for (int y = 0; y < db; ++y) eqs[key(r / n, r % n, y)].add(x2 * db + y, c);
    for (int r = 0; r < b.left.rows(); ++r)
        for (const auto& [y2, c] : b.left.row(r))
            for (int x = 0; x < da; ++x) eqs[key(x, r / db, r % db)].add(x * db + y2, -c);
    SparseEliminator el(da * db);
    for (auto& [k, acc] : eqs) el.add_row(acc.take());
    CotensorProduct out;
    out.dim_a = da;
    out.dim_b = db;
    out.space = el.kernel_subspace();
    const int dc = out.space.dim();
    auto z = basis_columns(out.space);
    ComoduleAlgebra& c = out.algebra;
    c.name = a.name + " box " + b.name;
    c.dim = dc;
    for (int i = 0; i < dc; ++i) c.labels.push_back("z" + std::to_string(i));
    c.products.resize(static_cast<std::size_t>(dc) * dc);
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dc; ++j) {
            SparseAccumulator acc;
            for (const auto& [p, cp] : z[i])
                for (const auto& [q, cq] : z[j])
                    for (const auto& [x, cx] : a.product(p / db, q / db))
                        for (const auto& [y, cy] : b.product(p % db, q % db)) acc.add(static_cast<std::int64_t>(x) * db + y, cp * cq * cx * cy);
            c.products[static_cast<std::size_t>(i) * dc + j] = sv_from_dense(coords_at_pivots(out.space, acc.take(), "cotensor product"));
        }
    {
        SparseAccumulator acc;
        for (const auto& [x, cx] : a.unit)
            for (const auto& [y, cy] : b.unit) acc.add(static_cast<std::int64_t>(x) * db + y, cx * cy);
        c.unit = sv_from_dense(coords_at_pivots(out.space, acc.take(), "cotensor unit"));
    }
    if (a.left_host) {
        const int m = a.left_host->dim;
        auto lt = left_terms(a);
        std::vector<SVec> cols(dc);
        for (int i = 0; i < dc; ++i) {
            std::vector<SparseAccumulator> slices(m);
            for (const auto& [p, cp] : z[i])
                for (const auto& t : lt[p / db]) slices[t.h].add(static_cast<std::int64_t>(t.i) * db + p % db, cp * t.c);
            SparseAccumulator col;
            for (int h = 0; h < m; ++h) {
                if (slices[h].empty()) continue;
                Vec cc = coords_at_pivots(out.space, slices[h].take(), "cotensor left coaction");
                for (int k = 0; k < dc; ++k) col.add(static_cast<std::int64_t>(h) * dc + k, cc[k]);
            }
            cols[i] = col.take();
        }
        c.left_host = a.left_host;
        c.left = matrix_from_columns(m * dc, dc, cols);
    }
    if (b.right_host) {
        const int m = b.right_host->dim;
        auto rt = right_terms(b);
        std::vector<SVec> cols(dc);
        for (int i = 0; i < dc; ++i) {
            std::vector<SparseAccumulator> slices(m);
            for (const auto& [p, cp] : z[i])
                for (const auto& t : rt[p % db]) slices[t.h].add(static_cast<std::int64_t>(p / db) * db + t.i, cp * t.c);
            SparseAccumulator col;
            for (int h = 0; h < m; ++h) {
                if (slices[h].empty()) continue;
                Vec cc = coords_at_pivots(out.space, slices[h].take(), "cotensor right coaction");
                for (int k = 0; k < dc; ++k) col.add(static_cast<std::int64_t>(k) * m + h, cc[k]);
            }
            cols[i] = col.take();
        }
        c.right_host = b.right_host;
        c.right = matrix_from_columns(dc * m, dc, cols);
    }
    return out;
}

CotensorComodule cotensor_comodule(const ComoduleAlgebra& a, const Comodule& mod) {
    if (!a.right_host || !same_host(a.right_host, mod.host))
        throw std::invalid_argument("cotensor_comodule: host mismatch");
    const int da = a.dim, db = mod.dim, n = a.right_host->dim;
    std::map<std::int64_t, SparseAccumulator> eqs;
    auto key = [&](int x, int h, int y) { return (static_cast<std::int64_t>(x) * n + h) * db + y; };
    for (int r = 0; r < a.right.rows(); ++r)
        for (const auto& [x2, c] : a.right.row(r))
            for (int y = 0; y < db; ++y) eqs[key(r / n, r % n, y)].add(x2 * db + y, c);
    for (int r = 0; r < mod.coaction.rows(); ++r)
        for (const auto& [y2, c] : mod.coaction.row(r))
            for (int x = 0; x < da; ++x) eqs[key(x, r / db, r % db)].add(x * db + y2, -c);
    SparseEliminator el(da * db);
    for (auto& [k, acc] : eqs) el.add_row(acc.take());
    CotensorComodule out;
    out.space = el.kernel_subspace();
    const int dc = out.space.dim();
    auto z = basis_columns(out.space);
    const int m = a.left_host->dim;
    auto lt = left_terms(a);
    std::vector<std::vector<CoactionTerm>> cols(dc);
    for (int i = 0; i < dc; ++i) {
        std::vector<SparseAccumulator> slices(m);
        for (const auto& [p, cp] : z[i])
            for (const auto& t : lt[p / db]) slices[t.h].add(static_cast<std::int64_t>(t.i) * db + p % db, cp * t.c);
        for (int h = 0; h < m; ++h) {
            if (slices[h].empty()) continue;
            Vec cc = coords_at_pivots(out.space, slices[h].take(), "cotensor comodule coaction");
            for (int k = 0; k < dc; ++k)
                if (!cc[k].is_zero()) cols[i].push_back({h, k, cc[k]});
        }
    }
    out.comodule = comodule_from_terms(a.left_host, cols);
    return out;
}

int box_grouplike(const ComoduleAlgebra& a, int g) {
    auto c = cotensor_comodule(a, simple_comodule(a.right_host, g));
    if (c.comodule.dim != 1) throw std::logic_error("box_grouplike: cotensor with k_g is not one-dimensional");
    const auto row_terms = coaction_terms(c.comodule)[0];
    if (row_terms.size() != 1 || !row_terms[0].c.is_one()) throw std::logic_error("box_grouplike: coaction is not group-like");
    const auto& gb = a.left_host->group_basis;
    auto it = std::find(gb.begin(), gb.end(), row_terms[0].h);
    if (it == gb.end()) throw std::logic_error("box_grouplike: coaction is not group-like");
    return static_cast<int>(it - gb.begin());
}

// ---------------------------------------------------------------------------
// Group law

Matrix group_law_map(const CompatibleData& /*d*/, const CompatibleData& e, const SupergroupContext& ctx,
                     const ComoduleAlgebra& ld, const ComoduleAlgebra& le, const ComoduleAlgebra& lde,
                     const CotensorProduct& box) {
    const auto& G = ctx.p.group;
    const int k = ctx.p.v_dim;
    const int db = le.dim;
    const auto& m1 = *ld.mono;
    const auto& m2 = *le.mono;
    const auto& m12 = *lde.mono;
    auto tensor_mult = [&](const SVec& x, const SVec& y) {
        SparseAccumulator acc;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y)
                for (const auto& [p, cp] : ld.product(i / db, j / db))
                    for (const auto& [q, cq] : le.product(i % db, j % db)) acc.add(static_cast<std::int64_t>(p) * db + q, ci * cj * cp * cq);
        return acc.take();
    };
    // F positions are indexed by the second component g, so position == g.
    const int e_uu = m1.index(0u, ctx.p.u);
    const int one1 = m1.index(0u, 0), one2 = m2.index(0u, 0);
    std::vector<SVec> gen(k);
    for (int j = 0; j < k; ++j) {
        SparseAccumulator acc;
        // (T T' v_j, T' v_j) = sum_i (T' e_j)_i x_i in L(d)
        for (int i = 0; i < k; ++i)
            if (!e.T(i, j).is_zero()) acc.add(static_cast<std::int64_t>(m1.index(1u << i, 0)) * db + one2, e.T(i, j));
        acc.add(static_cast<std::int64_t>(e_uu) * db + m2.index(1u << j, 0), 1);
        gen[j] = acc.take();
    }
    Matrix out(box.space.dim(), lde.dim);
    for (int x = 0; x < lde.dim; ++x) {
        SVec v{{one1 * db + one2, Rational(1)}};
        for (int j = 0; j < k; ++j)
            if ((m12.mask[x] >> j) & 1u) v = tensor_mult(v, gen[j]);
        const int g = m12.group_pos[x];
        v = tensor_mult(v, SVec{{m1.index(0u, e.alpha[g]) * db + m2.index(0u, g), Rational(1)}});
        Vec dense = sv_to_dense(v, box.space.ambient());
        Vec c(box.space.dim());
        for (int i = 0; i < box.space.dim(); ++i) c[i] = dense[box.space.pivots[i]];
        if (box.space.basis * c != dense) throw std::logic_error("group_law_map: image is not in the cotensor product");
        out.set_col(x, c);
    }
    (void)G;
    return out;
}

bool is_bicomodule_algebra_iso(const Matrix& f, const ComoduleAlgebra& a, const ComoduleAlgebra& b, int g) {
    if (f.rows() != b.dim || f.cols() != a.dim || !is_invertible(f)) return false;
    std::vector<SVec> img(a.dim);
    for (int j = 0; j < a.dim; ++j) img[j] = sv_from_dense(f.col(j));
    auto apply = [&](const SVec& v) {
        SparseAccumulator acc;
        for (const auto& [i, c] : v) acc.add(img[i], c);
        return acc.take();
    };
    if (apply(a.unit) != b.unit) return false;
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            if (apply(a.product(x, y)) != b.multiply(img[x], img[y])) return false;
    if (a.right_host && b.right_host) {
        if (!same_host(a.right_host, b.right_host)) return false;
        const int n = a.right_host->dim;
        auto ra = right_terms(a);
        auto rb = right_terms(b);
        for (int x = 0; x < a.dim; ++x) {
            SparseAccumulator l, r;
            for (const auto& [i, c] : img[x])
                for (const auto& t : rb[i]) l.add(static_cast<std::int64_t>(t.i) * n + t.h, c * t.c);
            for (const auto& t : ra[x])
                for (const auto& [i, c] : img[t.i]) r.add(static_cast<std::int64_t>(i) * n + t.h, c * t.c);
            if (l.take() != r.take()) return false;
        }
    } else if (a.right_host || b.right_host) {
        return false;
    }
    if (a.left_host && b.left_host) {
        if (!same_host(a.left_host, b.left_host)) return false;
        const auto& H = *a.left_host;
        const int gb = H.group_basis[g], gi = H.group_basis[H.group.inv(g)];
        auto la = left_terms(a);
        auto lb = left_terms(b);
        for (int x = 0; x < a.dim; ++x) {
            SparseAccumulator l, r;
            for (const auto& [i, c] : img[x])
                for (const auto& t : lb[i]) l.add(static_cast<std::int64_t>(t.h) * b.dim + t.i, c * t.c);
            for (const auto& t : la[x]) {
                SVec conj = H.multiply(H.multiply(sv_unit(gi), sv_unit(t.h)), sv_unit(gb));
                for (const auto& [hh, ch] : conj)
                    for (const auto& [i, c] : img[t.i]) r.add(static_cast<std::int64_t>(hh) * b.dim + i, t.c * ch * c);
            }
            if (l.take() != r.take()) return false;
        }
    } else if (a.left_host || b.left_host) {
        return false;
    }
    return true;
}

GroupLawReport verify_group_law(const CompatibleData& d, const CompatibleData& e, const SupergroupContext& ctx) {
    GroupLawReport rep;
    auto ld = build_L(d, ctx), le = build_L(e, ctx), lde = build_L(data_product(d, e), ctx);
    auto box = cotensor(ld, le);
    Matrix th;
    try {
        th = group_law_map(d, e, ctx, ld, le, lde, box);
        rep.in_kernel = true;
    } catch (const std::logic_error&) {
        return rep;
    }
    rep.bijective = th.is_square() && is_invertible(th);
    // algebra map
    {
        std::vector<SVec> img(lde.dim);
        for (int j = 0; j < lde.dim; ++j) img[j] = sv_from_dense(th.col(j));
        auto apply = [&](const SVec& v) {
            SparseAccumulator acc;
            for (const auto& [i, c] : v) acc.add(img[i], c);
            return acc.take();
        };
        bool ok = apply(lde.unit) == box.algebra.unit;
        for (int x = 0; x < lde.dim && ok; ++x)
            for (int y = 0; y < lde.dim && ok; ++y) ok = apply(lde.product(x, y)) == box.algebra.multiply(img[x], img[y]);
        rep.algebra_map = ok;
    }
    // colinearity: compare (id (x) theta) lambda with lambda theta as matrices
    {
        auto lt = left_terms(lde);
        auto lb = left_terms(box.algebra);
        bool ok = true;
        for (int x = 0; x < lde.dim && ok; ++x) {
            SparseAccumulator l, r;
            for (const auto& t : lt[x])
                for (int i = 0; i < th.rows(); ++i)
                    if (!th(i, t.i).is_zero()) l.add(static_cast<std::int64_t>(t.h) * th.rows() + i, t.c * th(i, t.i));
            for (int i = 0; i < th.rows(); ++i)
                if (!th(i, x).is_zero())
                    for (const auto& t : lb[i]) r.add(static_cast<std::int64_t>(t.h) * th.rows() + t.i, th(i, x) * t.c);
            ok = l.take() == r.take();
        }
        rep.left_colinear = ok;
    }
    {
        const int n = ctx.a->dim;
        auto rt = right_terms(lde);
        auto rb = right_terms(box.algebra);
        bool ok = true;
        for (int x = 0; x < lde.dim && ok; ++x) {
            SparseAccumulator l, r;
            for (const auto& t : rt[x])
                for (int i = 0; i < th.rows(); ++i)
                    if (!th(i, t.i).is_zero()) l.add(static_cast<std::int64_t>(i) * n + t.h, t.c * th(i, t.i));
            for (int i = 0; i < th.rows(); ++i)
                if (!th(i, x).is_zero())
                    for (const auto& t : rb[i]) r.add(static_cast<std::int64_t>(t.i) * n + t.h, th(i, x) * t.c);
            ok = l.take() == r.take();
        }
        rep.right_colinear = ok;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Isomorphism classes

std::string to_string(IsoClass c) {
    switch (c) {
        case IsoClass::Equal: return "Equal";
        case IsoClass::EqualUpToTu: return "EqualUpToTu";
        case IsoClass::NotIsomorphic: return "NotIsomorphic";
    }
    return "?";
}

namespace {

// A character chi of G with chi(u) = -1 and values +-1, as a vector over G.
std::vector<int> sign_character(const SupergroupPresentation& p) {
    const auto& G = p.group;
    auto eu = G.exponents(p.u);
    for (std::size_t i = 0; i < G.orders().size(); ++i) {
        int n = G.orders()[i];
        if (n % 2 == 0 && eu[i] % 2 == 1) {
            std::vector<int> chi(G.size());
            for (int g = 0; g < G.size(); ++g) chi[g] = G.exponents(g)[i] % 2 ? -1 : 1;
            return chi;
        }
    }
    throw std::invalid_argument("no sign character with chi(u) = -1 on this group");
}

}  // namespace

Matrix sign_twist_map(const ComoduleAlgebra& l, const SupergroupContext& ctx) {
    const auto chi = sign_character(ctx.p);
    const auto& mb = *l.mono;
    const int gs = ctx.p.group.size();
    Matrix m(l.dim, l.dim);
    for (int i = 0; i < l.dim; ++i) {
        int g = mb.elements[mb.group_pos[i]] % gs;
        int s = (std::popcount(mb.mask[i]) % 2 ? -1 : 1) * chi[g];
        m(i, i) = s;
    }
    return m;
}

IsoResult bigalois_iso_test(const CompatibleData& d, const CompatibleData& e, const SupergroupContext& ctx) {
    IsoResult res;
    const Matrix tu = ctx.p.action[ctx.p.u];
    if (d == e) {
        res.cls = IsoClass::Equal;
        auto l = build_L(d, ctx);
        Matrix id = Matrix::identity(l.dim);
        if (!is_bicomodule_algebra_iso(id, l, l)) throw std::logic_error("identity is not an isomorphism");
        res.iso = id;
        return res;
    }
    CompatibleData twisted = d;
    twisted.T = tu * d.T;
    if (twisted == e) {
        res.cls = IsoClass::EqualUpToTu;
        auto l = build_L(d, ctx), l2 = build_L(e, ctx);
        Matrix s = sign_twist_map(l, ctx);
        if (!is_bicomodule_algebra_iso(s, l, l2)) throw std::logic_error("sign twist is not an isomorphism");
        res.iso = s;
        return res;
    }
    return res;
}

bool is_inner(const CompatibleData& d, const SupergroupContext& ctx) {
    const auto& p = ctx.p;
    if (!d.beta.is_zero() || !d.psi.is_trivial()) return false;
    for (int g = 0; g < p.group.size(); ++g)
        if (d.alpha[g] != g) return false;
    for (int g = 0; g < p.group.size(); ++g)
        if (d.T == p.action[g]) return true;
    return false;
}

CompatibleData out_class(const CompatibleData& d, const SupergroupContext& ctx) {
    const auto& p = ctx.p;
    auto key = [](const Matrix& m) {
        std::vector<Rational> v;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
        return v;
    };
    CompatibleData best = d;
    best.T = p.action[0] * d.T;
    for (int g = 1; g < p.group.size(); ++g) {
        Matrix t = p.action[g] * d.T;
        if (key(t) < key(best.T)) best.T = t;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Pseudo-natural isomorphisms

bool verify_pseudonat(const PseudoNatData& p) { return is_bicomodule_algebra_iso(p.iso, *p.src, *p.dst, p.g); }

PseudoNatData pseudonat_compose(const PseudoNatData& p, const PseudoNatData& q) {
    if (p.dst->dim != q.src->dim) throw std::invalid_argument("pseudonat_compose: codomain and domain differ");
    const auto& G = p.src->left_host->group;
    return PseudoNatData{G.mul(p.g, q.g), q.iso * p.iso, p.src, q.dst};
}

SVec right_grouplike_element(const ComoduleAlgebra& a, int h) {
    const int d = a.dim, n = a.right_host->dim;
    const int hb = a.right_host->group_basis[h];
    SparseEliminator el(d);
    for (int r = 0; r < a.right.rows(); ++r) {
        SVec row(a.right.row(r).begin(), a.right.row(r).end());
        if (r % n == hb) row = sv_sub(row, sv_unit(r / n));
        if (!row.empty()) el.add_row(row);
    }
    auto ker = el.kernel();
    if (ker.size() != 1) throw std::logic_error("right_grouplike_element: eigenspace is not one-dimensional");
    SVec v = sv_from_dense(ker.front());
    return sv_scale(v.front().second.inverse(), v);
}

PseudoNatTensor pseudonat_tensor(const PseudoNatData& p, const PseudoNatData& q) {
    auto src_box = std::make_shared<CotensorProduct>(cotensor(*p.src, *q.src));
    auto dst_box = std::make_shared<CotensorProduct>(cotensor(*p.dst, *q.dst));
    const auto& B = *p.dst;
    SVec b = right_grouplike_element(B, q.g);
    auto binv = B.inverse(b);
    if (!binv) throw std::logic_error("pseudonat_tensor: group-like element is not invertible");
    Matrix conj(B.dim, B.dim);
    for (int j = 0; j < B.dim; ++j)
        for (const auto& [i, c] : B.multiply(B.multiply(*binv, sv_unit(j)), b)) conj(i, j) = c;
    Matrix ambient = kronecker(conj * p.iso, q.iso);
    Matrix img = ambient * src_box->space.basis;
    Matrix coords = dst_box->space.coords(img);
    if (dst_box->space.basis * coords != img) throw std::logic_error("pseudonat_tensor: image leaves the cotensor product");
    const auto& G = B.left_host->group;
    PseudoNatTensor out;
    out.data.g = G.mul(p.g, box_grouplike(B, q.g));
    out.data.iso = coords;
    out.data.src = std::shared_ptr<const ComoduleAlgebra>(src_box, &src_box->algebra);
    out.data.dst = std::shared_ptr<const ComoduleAlgebra>(dst_box, &dst_box->algebra);
    out.src_box = src_box;
    out.dst_box = dst_box;
    return out;
}

}  // namespace tenscross
