#include "tenscross/hopf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace tenscross {

// ---------------------------------------------------------------------------
// Elementwise operations

SVec HopfAlgebraData::multiply(const SVec& x, const SVec& y) const {
    SparseAccumulator acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) acc.add(product(a, b), ca * cb);
    return acc.take();
}

Vec HopfAlgebraData::multiply(const Vec& x, const Vec& y) const {
    return sv_to_dense(multiply(sv_from_dense(x), sv_from_dense(y)), dim);
}

SVec HopfAlgebraData::multiply_tensor(const SVec& x, const SVec& y) const {
    SparseAccumulator acc;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            const SVec& l = product(i / dim, j / dim);
            const SVec& r = product(i % dim, j % dim);
            for (const auto& [p, cp] : l)
                for (const auto& [q, cq] : r)
                    acc.add(static_cast<std::int64_t>(p) * dim + q, ci * cj * cp * cq);
        }
    return acc.take();
}

SVec HopfAlgebraData::comultiply(const SVec& x) const {
    SparseAccumulator acc;
    for (const auto& [a, c] : x) acc.add(coproducts[a], c);
    return acc.take();
}

Rational HopfAlgebraData::counit_of(const SVec& x) const {
    Rational s = 0;
    for (const auto& [a, c] : x) s += c * counit[a];
    return s;
}

SVec HopfAlgebraData::apply_antipode(const SVec& x) const {
    SparseAccumulator acc;
    for (const auto& [a, c] : x)
        for (int i = 0; i < dim; ++i) acc.add(i, c * antipode(i, a));
    return acc.take();
}

int HopfAlgebraData::grouplike_inverse(int b) const {
    for (int g : group_basis) {
        const SVec& p = product(b, g);
        if (p.size() == 1 && p[0].first == unit && p[0].second.is_one()) return g;
    }
    throw std::invalid_argument("grouplike_inverse: " + labels[b] + " has no group-like inverse");
}

int HopfAlgebraData::label_index(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("unknown basis label '" + label + "' in " + name);
}

// ---------------------------------------------------------------------------
// Supergroup algebras

std::vector<unsigned> graded_subsets(int k) {
    std::vector<unsigned> masks(1u << k);
    for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
    auto elems = [](unsigned m) {
        std::vector<int> e;
        for (int i = 0; m >> i; ++i)
            if ((m >> i) & 1u) e.push_back(i);
        return e;
    };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return elems(a) < elems(b);
    });
    return masks;
}

SupergroupPresentation SupergroupPresentation::standard(int v_dim) {
    SupergroupPresentation p;
    p.v_dim = v_dim;
    p.group = FiniteAbelianGroup::cyclic(2);
    p.u = 1;
    p.action = {Matrix::identity(v_dim), Rational(-1) * Matrix::identity(v_dim)};
    return p;
}

void SupergroupPresentation::validate() const {
    if (v_dim < 0 || v_dim > 12) throw std::invalid_argument("supergroup: dim V must lie in [0, 12]");
    if (u <= 0 || u >= group.size()) throw std::invalid_argument("supergroup: u must be a nontrivial group element");
    if (group.mul(u, u) != 0) throw std::invalid_argument("supergroup: u must be an involution");
    if (static_cast<int>(action.size()) != group.size()) throw std::invalid_argument("supergroup: one action matrix per group element");
    for (const auto& a : action)
        if (a.rows() != v_dim || a.cols() != v_dim) throw std::invalid_argument("supergroup: action matrix shape");
    if (action[0] != Matrix::identity(v_dim)) throw std::invalid_argument("supergroup: identity must act trivially");
    if (action[u] != Rational(-1) * Matrix::identity(v_dim)) throw std::invalid_argument("supergroup: u must act by -1");
    for (int g = 0; g < group.size(); ++g)
        for (int h = 0; h < group.size(); ++h)
            if (action[g] * action[h] != action[group.mul(g, h)])
                throw std::invalid_argument("supergroup: action is not a representation");
}

namespace {

// Sign of v_S v_T rewritten in increasing order (0 if S and T overlap).
int wedge_sign(unsigned s, unsigned t) {
    if (s & t) return 0;
    int inv = 0;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1u) inv += std::popcount(t & ((1u << i) - 1u));
    return (inv % 2) ? -1 : 1;
}

// g acting on v_T: product over t in T of sum_j A(j,t) v_j, as mask -> coefficient.
std::map<unsigned, Rational> act_on_monomial(const Matrix& a, unsigned t) {
    std::map<unsigned, Rational> cur{{0u, Rational(1)}};
    for (int i = 0; t >> i; ++i) {
        if (!((t >> i) & 1u)) continue;
        std::map<unsigned, Rational> next;
        for (const auto& [m, c] : cur)
            for (int j = 0; j < a.rows(); ++j) {
                if (a(j, i).is_zero()) continue;
                int s = wedge_sign(m, 1u << j);
                if (s == 0) continue;
                Rational v = c * a(j, i) * Rational(s);
                auto& slot = next[m | (1u << j)];
                slot += v;
            }
        cur.clear();
        for (auto& [m, c] : next)
            if (!c.is_zero()) cur.emplace(m, c);
    }
    return cur;
}

std::string monomial_label(unsigned s, const std::string& glabel, bool identity) {
    std::string out;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1u) out += "v" + std::to_string(i + 1);
    if (out.empty()) return glabel;
    if (!identity) out += glabel;
    return out;
}

// Delta(x) as a list of (left, right, coefficient).
struct Term2 {
    int a, b;
    Rational c;
};

std::vector<Term2> terms2(const HopfAlgebraData& h, int x) {
    std::vector<Term2> out;
    for (const auto& [i, c] : h.coproducts[x]) out.push_back({i / h.dim, i % h.dim, c});
    return out;
}

struct Term3 {
    int a, b, c;
    Rational k;
};

std::vector<Term3> terms3(const HopfAlgebraData& h, int x) {
    std::vector<Term3> out;
    for (const auto& t : terms2(h, x))
        for (const auto& s : terms2(h, t.a)) out.push_back({s.a, s.b, t.b, t.c * s.c});
    return out;
}

bool is_unit_vector(const SVec& v, int i) { return v.size() == 1 && v[0].first == i && v[0].second.is_one(); }

/*
 * Degree by degree: the top component of Delta(x) in the first factor is
 * x (x) g for a group-like g, so S(x) = (eps(x) 1 - sum_lower S(x1) x2) g^-1.
 */
Matrix solve_antipode(const HopfAlgebraData& h) {
    const int n = h.dim;
    if (static_cast<int>(h.grading.size()) != n) throw AntipodeSolveError("antipode solve needs a grading");
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.grading[a] < h.grading[b]; });
    std::vector<SVec> s(n);
    std::vector<bool> done(n, false);
    for (int x : order) {
        int top = -1;
        SparseAccumulator acc;
        acc.add(h.unit, h.counit[x]);
        for (const auto& t : terms2(h, x)) {
            if (h.grading[t.a] == h.grading[x]) {
                if (t.a != x || !t.c.is_one() || top != -1 ||
                    std::find(h.group_basis.begin(), h.group_basis.end(), t.b) == h.group_basis.end())
                    throw AntipodeSolveError("coproduct of " + h.labels[x] + " has no x (x) g leading term");
                top = t.b;
                continue;
            }
            if (!done[t.a]) throw AntipodeSolveError("antipode solve order violated at " + h.labels[x]);
            acc.add(h.multiply(s[t.a], sv_unit(t.b)), -t.c);
        }
        if (top == -1) throw AntipodeSolveError("coproduct of " + h.labels[x] + " has no leading term");
        s[x] = h.multiply(acc.take(), sv_unit(h.grouplike_inverse(top)));
        done[x] = true;
    }
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [i, c] : s[j]) m(i, j) = c;
    return m;
}

}  // namespace

HopfAlgebraData build_supergroup_algebra(const SupergroupPresentation& p) {
    p.validate();
    const int k = p.v_dim, gs = p.group.size();
    const auto masks = graded_subsets(k);
    std::vector<int> mask_pos(1u << k);
    for (int i = 0; i < static_cast<int>(masks.size()); ++i) mask_pos[masks[i]] = i;
    auto idx = [&](unsigned mask, int g) { return mask_pos[mask] * gs + g; };

    HopfAlgebraData h;
    h.name = "A(V=" + std::to_string(k) + ")";
    h.dim = static_cast<int>(masks.size()) * gs;
    h.group = p.group;
    h.labels.resize(h.dim);
    h.grading.resize(h.dim);
    h.basis_group.resize(h.dim);
    h.counit.assign(h.dim, Rational(0));
    for (unsigned m : masks)
        for (int g = 0; g < gs; ++g) {
            int i = idx(m, g);
            h.labels[i] = monomial_label(m, p.group.label(g), g == 0);
            h.grading[i] = std::popcount(m);
            h.basis_group[i] = g;
            if (m == 0) h.counit[i] = 1;
        }
    h.unit = idx(0, 0);
    for (int g = 0; g < gs; ++g) h.group_basis.push_back(idx(0, g));
    for (int i = 0; i < k; ++i) h.generators.push_back({idx(1u << i, 0), p.u, 0});
    h.gen_action = p.action;

    // v_S g v_T h = v_S (g . v_T) gh
    std::vector<std::vector<std::map<unsigned, Rational>>> acted(gs, std::vector<std::map<unsigned, Rational>>(masks.size()));
    for (int g = 0; g < gs; ++g)
        for (unsigned m : masks) acted[g][mask_pos[m]] = act_on_monomial(p.action[g], m);
    h.products.resize(static_cast<std::size_t>(h.dim) * h.dim);
    for (unsigned s : masks)
        for (int g = 0; g < gs; ++g)
            for (unsigned t : masks)
                for (int f = 0; f < gs; ++f) {
                    SparseAccumulator acc;
                    for (const auto& [m, c] : acted[g][mask_pos[t]]) {
                        int sg = wedge_sign(s, m);
                        if (sg) acc.add(idx(s | m, p.group.mul(g, f)), c * Rational(sg));
                    }
                    h.products[static_cast<std::size_t>(idx(s, g)) * h.dim + idx(t, f)] = acc.take();
                }

    // Delta is multiplicative: Delta(v) = v (x) 1 + u (x) v, Delta(g) = g (x) g.
    auto tensor_index = [&](int a, int b) { return static_cast<std::int64_t>(a) * h.dim + b; };
    std::vector<SVec> gen_delta(k);
    for (int i = 0; i < k; ++i) {
        SparseAccumulator acc;
        acc.add(tensor_index(idx(1u << i, 0), h.unit), 1);
        acc.add(tensor_index(idx(0, p.u), idx(1u << i, 0)), 1);
        gen_delta[i] = acc.take();
    }
    h.coproducts.resize(h.dim);
    for (unsigned m : masks)
        for (int g = 0; g < gs; ++g) {
            SVec d{{static_cast<int>(tensor_index(h.unit, h.unit)), Rational(1)}};
            for (int i = 0; i < k; ++i)
                if ((m >> i) & 1u) d = h.multiply_tensor(d, gen_delta[i]);
            int gi = idx(0, g);
            d = h.multiply_tensor(d, SVec{{static_cast<int>(tensor_index(gi, gi)), Rational(1)}});
            h.coproducts[idx(m, g)] = d;
        }

    // S(v) = -uv, S(g) = g^-1, extended as an anti-homomorphism.
    h.antipode = Matrix(h.dim, h.dim);
    for (unsigned m : masks)
        for (int g = 0; g < gs; ++g) {
            SVec s = sv_unit(idx(0, p.group.inv(g)));
            for (int i = k - 1; i >= 0; --i)
                if ((m >> i) & 1u) {
                    SVec sv = sv_scale(Rational(-1), h.product(idx(0, p.u), idx(1u << i, 0)));
                    s = h.multiply(s, sv);
                }
            for (const auto& [r, c] : s) h.antipode(r, idx(m, g)) = c;
        }
    return h;
}

HopfAlgebraData build_group_algebra(const FiniteAbelianGroup& g) {
    HopfAlgebraData h;
    h.name = "kG";
    h.dim = g.size();
    h.group = g;
    h.unit = 0;
    h.antipode = Matrix(h.dim, h.dim);
    h.products.resize(static_cast<std::size_t>(h.dim) * h.dim);
    for (int a = 0; a < h.dim; ++a) {
        h.labels.push_back(g.label(a));
        h.grading.push_back(0);
        h.group_basis.push_back(a);
        h.basis_group.push_back(a);
        h.counit.push_back(1);
        h.coproducts.push_back(sv_unit(a * h.dim + a));
        h.antipode(g.inv(a), a) = 1;
        for (int b = 0; b < h.dim; ++b) h.products[static_cast<std::size_t>(a) * h.dim + b] = sv_unit(g.mul(a, b));
    }
    h.gen_action.assign(h.dim, Matrix(0, 0));
    return h;
}

HopfAlgebraData co_opposite(const HopfAlgebraData& h) {
    HopfAlgebraData c = h;
    c.name = h.name + "^cop";
    for (int a = 0; a < h.dim; ++a) {
        SparseAccumulator acc;
        for (const auto& [i, v] : h.coproducts[a]) acc.add(static_cast<std::int64_t>(i % h.dim) * h.dim + i / h.dim, v);
        c.coproducts[a] = acc.take();
    }
    c.antipode = invert(h.antipode);
    return c;
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    HopfAlgebraData t;
    const int na = a.dim, nb = b.dim, n = na * nb;
    t.name = a.name + "(x)" + b.name;
    t.dim = n;
    t.unit = a.unit * nb + b.unit;
    t.group = FiniteAbelianGroup::product(a.group, b.group);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            t.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
            t.grading.push_back(a.grading[i] + b.grading[j]);
            t.counit.push_back(a.counit[i] * b.counit[j]);
            int ga = a.basis_group.empty() ? -1 : a.basis_group[i];
            int gb = b.basis_group.empty() ? -1 : b.basis_group[j];
            t.basis_group.push_back(ga < 0 || gb < 0 ? -1 : ga * b.group.size() + gb);
        }
    for (int g = 0; g < a.group.size(); ++g)
        for (int f = 0; f < b.group.size(); ++f) t.group_basis.push_back(a.group_basis[g] * nb + b.group_basis[f]);
    int blocks_a = 0;
    for (const auto& gen : a.generators) {
        t.generators.push_back({gen.basis * nb + b.unit, gen.grading * b.group.size(), gen.block});
        blocks_a = std::max(blocks_a, gen.block + 1);
    }
    for (const auto& gen : b.generators) t.generators.push_back({a.unit * nb + gen.basis, gen.grading, gen.block + blocks_a});
    for (int g = 0; g < a.group.size(); ++g)
        for (int f = 0; f < b.group.size(); ++f) {
            const Matrix& ma = a.gen_action[g];
            const Matrix& mb = b.gen_action[f];
            Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
            for (int i = 0; i < ma.rows(); ++i)
                for (int j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
            for (int i = 0; i < mb.rows(); ++i)
                for (int j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
            t.gen_action.push_back(m);
        }

    t.products.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    SVec out;
                    for (const auto& [p, cp] : a.product(i, k))
                        for (const auto& [q, cq] : b.product(j, l)) out.emplace_back(p * nb + q, cp * cq);
                    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                    t.products[static_cast<std::size_t>(i * nb + j) * n + (k * nb + l)] = out;
                }
    t.coproducts.resize(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            SparseAccumulator acc;
            for (const auto& [p, cp] : a.coproducts[i])
                for (const auto& [q, cq] : b.coproducts[j]) {
                    int a1 = p / na, a2 = p % na, b1 = q / nb, b2 = q % nb;
                    acc.add(static_cast<std::int64_t>(a1 * nb + b1) * n + (a2 * nb + b2), cp * cq);
                }
            t.coproducts[i * nb + j] = acc.take();
        }
    t.antipode = kronecker(a.antipode, b.antipode);
    return t;
}

// ---------------------------------------------------------------------------
// Verification

std::vector<std::string> verify_hopf_axioms(const HopfAlgebraData& h) {
    std::vector<std::string> out;
    const int n = h.dim;
    auto fail = [&](const std::string& family, const std::string& detail) {
        out.push_back(family + ": " + detail);
    };

    // associativity and unit
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
            const SVec& ab = h.product(a, b);
            for (int c = 0; c < n && ok; ++c) {
                if (h.multiply(ab, sv_unit(c)) != h.multiply(sv_unit(a), h.product(b, c))) {
                    fail("associativity", "(" + h.labels[a] + " " + h.labels[b] + ") " + h.labels[c]);
                    ok = false;
                }
            }
        }
    for (int a = 0; a < n; ++a)
        if (!is_unit_vector(h.product(h.unit, a), a) || !is_unit_vector(h.product(a, h.unit), a)) {
            fail("associativity", "unit fails on " + h.labels[a]);
            break;
        }

    // coassociativity and counit
    for (int a = 0; a < n; ++a) {
        SparseAccumulator l, r;
        for (const auto& t : terms2(h, a)) {
            for (const auto& s : terms2(h, t.a))
                l.add((static_cast<std::int64_t>(s.a) * n + s.b) * n + t.b, t.c * s.c);
            for (const auto& s : terms2(h, t.b))
                r.add((static_cast<std::int64_t>(t.a) * n + s.a) * n + s.b, t.c * s.c);
        }
        if (l.take() != r.take()) {
            fail("coassociativity", "on " + h.labels[a]);
            break;
        }
    }
    for (int a = 0; a < n; ++a) {
        SparseAccumulator l, r;
        for (const auto& t : terms2(h, a)) {
            l.add(t.b, t.c * h.counit[t.a]);
            r.add(t.a, t.c * h.counit[t.b]);
        }
        if (!is_unit_vector(l.take(), a) || !is_unit_vector(r.take(), a)) {
            fail("coassociativity", "counit fails on " + h.labels[a]);
            break;
        }
    }

    // bialgebra compatibility
    ok = is_unit_vector(h.coproducts[h.unit], h.unit * n + h.unit) && h.counit[h.unit].is_one();
    if (!ok) fail("bialgebra", "Delta(1) or eps(1)");
    for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
            const SVec& ab = h.product(a, b);
            if (h.comultiply(ab) != h.multiply_tensor(h.coproducts[a], h.coproducts[b])) {
                fail("bialgebra", "Delta(" + h.labels[a] + " " + h.labels[b] + ")");
                ok = false;
            } else if (h.counit_of(ab) != h.counit[a] * h.counit[b]) {
                fail("bialgebra", "eps(" + h.labels[a] + " " + h.labels[b] + ")");
                ok = false;
            }
        }

    // antipode
    for (int a = 0; a < n; ++a) {
        SparseAccumulator l, r;
        for (const auto& t : terms2(h, a)) {
            l.add(h.multiply(h.apply_antipode(sv_unit(t.a)), sv_unit(t.b)), t.c);
            r.add(h.multiply(sv_unit(t.a), h.apply_antipode(sv_unit(t.b))), t.c);
        }
        SVec expect = h.counit[a].is_zero() ? SVec{} : SVec{{h.unit, h.counit[a]}};
        if (l.take() != expect || r.take() != expect) {
            fail("antipode", "on " + h.labels[a]);
            break;
        }
    }

    // grading
    if (static_cast<int>(h.grading.size()) != n) {
        fail("grading", "missing");
    } else {
        ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (const auto& [c, v] : h.product(a, b))
                    if (h.grading[c] != h.grading[a] + h.grading[b]) {
                        fail("grading", "product " + h.labels[a] + " " + h.labels[b]);
                        ok = false;
                        break;
                    }
        for (int a = 0; a < n && ok; ++a)
            for (const auto& t : terms2(h, a))
                if (h.grading[t.a] + h.grading[t.b] != h.grading[a]) {
                    fail("grading", "coproduct of " + h.labels[a]);
                    ok = false;
                    break;
                }
        for (int a = 0; a < n && ok; ++a)
            for (int i = 0; i < n; ++i)
                if (!h.antipode(i, a).is_zero() && h.grading[i] != h.grading[a]) {
                    fail("grading", "antipode of " + h.labels[a]);
                    ok = false;
                    break;
                }
        for (int g : h.group_basis)
            if (!is_unit_vector(h.coproducts[g], g * n + g) || !h.counit[g].is_one()) {
                fail("grading", "group-like " + h.labels[g]);
                break;
            }
    }
    return out;
}

Matrix iso_phi(const HopfAlgebraData& h) {
    if (h.generators.empty()) throw std::invalid_argument("iso_phi: not a supergroup algebra");
    const int n = h.dim;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.grading[a] < h.grading[b]; });
    // phi(v_S g) = (v_s1 u) ... (v_sm u) g: peel one generator off the left and recurse.
    std::vector<SVec> image(n);
    for (int a : order) {
        if (h.grading[a] == 0) {
            image[a] = sv_unit(a);
            continue;
        }
        bool found = false;
        for (std::size_t gi = 0; gi < h.generators.size() && !found; ++gi) {
            int v = h.generators[gi].basis;
            for (int r = 0; r < n && !found; ++r) {
                if (h.grading[r] != h.grading[a] - 1) continue;
                const SVec& p = h.product(v, r);
                if (p.size() != 1 || p[0].first != a) continue;
                SVec vu = h.product(v, h.group_basis[h.generators[gi].grading]);
                image[a] = sv_scale(p[0].second.inverse(), h.multiply(vu, image[r]));
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("iso_phi: cannot factor " + h.labels[a]);
    }
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [i, c] : image[j]) m(i, j) = c;
    return m;
}

bool is_bialgebra_map(const Matrix& f, const HopfAlgebraData& h, const HopfAlgebraData& k) {
    if (f.rows() != k.dim || f.cols() != h.dim) return false;
    std::vector<SVec> img(h.dim);
    for (int j = 0; j < h.dim; ++j) img[j] = sv_from_dense(f.col(j));
    if (!is_unit_vector(img[h.unit], k.unit)) return false;
    for (int a = 0; a < h.dim; ++a) {
        for (int b = 0; b < h.dim; ++b) {
            SparseAccumulator acc;
            for (const auto& [c, v] : h.product(a, b)) acc.add(img[c], v);
            if (acc.take() != k.multiply(img[a], img[b])) return false;
        }
        SparseAccumulator lhs;
        for (const auto& t : terms2(h, a))
            for (const auto& [p, cp] : img[t.a])
                for (const auto& [q, cq] : img[t.b]) lhs.add(static_cast<std::int64_t>(p) * k.dim + q, t.c * cp * cq);
        if (lhs.take() != k.comultiply(img[a])) return false;
        if (k.counit_of(img[a]) != h.counit[a]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Cocycles and twisting

HopfTwoCocycle hopf_cocycle_from_group_cocycle(const HopfPtr& h, const GroupTwoCocycle& psi) {
    if (h->group != psi.group()) throw std::invalid_argument("cocycle group does not match the group-likes of " + h->name);
    for (int a = 0; a < h->dim; ++a)
        if (h->grading[a] == 0 &&
            std::find(h->group_basis.begin(), h->group_basis.end(), a) == h->group_basis.end())
            throw std::invalid_argument("degree-0 part of " + h->name + " is not the group algebra");
    HopfTwoCocycle c{h, Matrix(h->dim, h->dim), Matrix(h->dim, h->dim)};
    const int gs = psi.group().size();
    for (int g = 0; g < gs; ++g)
        for (int f = 0; f < gs; ++f) {
            c.sigma(h->group_basis[g], h->group_basis[f]) = psi(g, f);
            c.sigma_inv(h->group_basis[g], h->group_basis[f]) = psi(g, f).inverse();
        }
    return c;
}

std::vector<std::string> verify_hopf_cocycle(const HopfTwoCocycle& c) {
    std::vector<std::string> out;
    const auto& h = *c.host;
    const int n = h.dim;
    // normalization
    for (int a = 0; a < n; ++a)
        if (c.sigma(h.unit, a) != h.counit[a] || c.sigma(a, h.unit) != h.counit[a]) {
            out.push_back("normalization at " + h.labels[a]);
            break;
        }
    // convolution inverse on both sides
    for (int x = 0; x < n && out.empty(); ++x)
        for (int y = 0; y < n; ++y) {
            Rational l = 0, r = 0;
            for (const auto& s : terms2(h, x))
                for (const auto& t : terms2(h, y)) {
                    l += s.c * t.c * c.sigma(s.a, t.a) * c.sigma_inv(s.b, t.b);
                    r += s.c * t.c * c.sigma_inv(s.a, t.a) * c.sigma(s.b, t.b);
                }
            Rational e = h.counit[x] * h.counit[y];
            if (l != e || r != e) {
                out.push_back("convolution inverse at (" + h.labels[x] + "," + h.labels[y] + ")");
                break;
            }
        }
    // sigma(x1,y1) sigma(x2 y2, z) = sigma(y1,z1) sigma(x, y2 z2)
    std::vector<std::vector<std::pair<int, Rational>>> sig_rows(n), sig_cols(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!c.sigma(i, j).is_zero()) {
                sig_rows[i].emplace_back(j, c.sigma(i, j));
                sig_cols[j].emplace_back(i, c.sigma(i, j));
            }
    // L[x,y] = sum sigma(x1,y1) x2 y2, R[y,z] = sum sigma(y1,z1) y2 z2
    auto half = [&](int x, int y) {
        SparseAccumulator acc;
        for (const auto& s : terms2(h, x))
            for (const auto& t : terms2(h, y)) {
                Rational k = c.sigma(s.a, t.a);
                if (!k.is_zero()) acc.add(h.product(s.b, t.b), s.c * t.c * k);
            }
        return acc.take();
    };
    std::vector<Vec> lhs(static_cast<std::size_t>(n) * n), rhs(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            SVec v = half(x, y);
            Vec lz(n), rx(n);
            for (const auto& [w, cw] : v) {
                for (const auto& [z, s] : sig_rows[w]) lz[z] += cw * s;
                for (const auto& [xx, s] : sig_cols[w]) rx[xx] += cw * s;
            }
            lhs[static_cast<std::size_t>(x) * n + y] = lz;  // indexed by z
            rhs[static_cast<std::size_t>(x) * n + y] = rx;  // pair (y,z) -> indexed by x
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (lhs[static_cast<std::size_t>(x) * n + y][z] != rhs[static_cast<std::size_t>(y) * n + z][x]) {
                    out.push_back("cocycle identity at (" + h.labels[x] + "," + h.labels[y] + "," + h.labels[z] + ")");
                    return out;
                }
    return out;
}

HopfAlgebraData twist_hopf(const HopfAlgebraData& h, const HopfTwoCocycle& c) {
    if (c.host->dim != h.dim) throw std::invalid_argument("twist_hopf: cocycle host mismatch");
    const int n = h.dim;
    std::vector<bool> row_s(n, false), row_si(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!c.sigma(i, j).is_zero()) row_s[i] = true;
            if (!c.sigma_inv(i, j).is_zero()) row_si[i] = true;
        }
    std::vector<std::vector<Term3>> t3(n);
    for (int x = 0; x < n; ++x)
        for (const auto& t : terms3(h, x))
            if (row_s[t.a] && row_si[t.c]) t3[x].push_back(t);

    HopfAlgebraData out = h;
    out.name = h.name + "^sigma";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            SparseAccumulator acc;
            for (const auto& s : t3[x])
                for (const auto& t : t3[y]) {
                    Rational k = c.sigma(s.a, t.a);
                    if (k.is_zero()) continue;
                    Rational ki = c.sigma_inv(s.c, t.c);
                    if (ki.is_zero()) continue;
                    acc.add(h.product(s.b, t.b), s.k * t.k * k * ki);
                }
            out.products[static_cast<std::size_t>(x) * n + y] = acc.take();
        }
    out.antipode = solve_antipode(out);
    return out;
}

bool check_twist_presentation(const HopfAlgebraData& t, int xi) {
    if (xi != 1 && xi != -1) throw std::invalid_argument("check_twist_presentation: xi must be 1 or -1");
    const auto& gens = t.generators;
    auto prod = [&](int a, int b) { return t.product(a, b); };
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            int a = gens[i].basis, b = gens[j].basis;
            Rational s = gens[i].block == gens[j].block ? Rational(1) : Rational(-xi);
            if (!sv_add(prod(a, b), sv_scale(s, prod(b, a))).empty()) return false;
        }
    // grading elements c_j of the blocks: c v c^-1 = -v in the same block, xi v across blocks
    std::map<int, int> block_grading;
    for (const auto& g : gens) block_grading[g.block] = g.grading;
    for (const auto& [blk, cg] : block_grading) {
        int c = t.group_basis[cg];
        for (const auto& g : gens) {
            Rational s = g.block == blk ? Rational(-1) : Rational(xi);
            if (prod(c, g.basis) != sv_scale(s, prod(g.basis, c))) return false;
        }
    }
    const auto& G = t.group;
    for (int g = 0; g < G.size(); ++g)
        for (int f = 0; f < G.size(); ++f)
            if (!is_unit_vector(prod(t.group_basis[g], t.group_basis[f]), t.group_basis[G.mul(g, f)])) return false;
    return true;
}

}  // namespace tenscross
