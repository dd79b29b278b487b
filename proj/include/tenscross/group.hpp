#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tenscross/matrix.hpp"
#include "tenscross/rational.hpp"

namespace tenscross {

/*
 * Finite abelian group C_{n_1} x ... x C_{n_r}. Elements are indexed by the
 * mixed-radix number of their exponent tuple, first factor slowest, so the
 * identity is index 0 and G x H indexes (g, h) as g * |H| + h.
 */
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

    static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }
    static FiniteAbelianGroup product(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

    const std::vector<int>& orders() const { return orders_; }
    int size() const { return size_; }
    int identity() const { return 0; }

    std::vector<int> exponents(int g) const;
    int index(const std::vector<int>& exps) const;
    int mul(int g, int h) const;
    int inv(int g) const;
    int pow(int g, int k) const;
    int order_of(int g) const;

    // "1", "u" for C2; otherwise "g(e1,e2,...)".
    std::string label(int g) const;
    int parse_label(const std::string& s) const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<int> orders_;
    int size_ = 1;
};

struct NeedsFieldExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A table (g,h) -> psi(g,h) of nonzero rationals. */
class GroupTwoCocycle {
public:
    GroupTwoCocycle() = default;
    GroupTwoCocycle(FiniteAbelianGroup g, std::vector<Rational> values);

    static GroupTwoCocycle trivial(const FiniteAbelianGroup& g);
    // psi(x,y) = prod_{i,j} q(i,j)^{x_i y_j}; q entries must be +-1.
    static GroupTwoCocycle bicharacter(const FiniteAbelianGroup& g, const Matrix& q);

    const FiniteAbelianGroup& group() const { return group_; }
    const Rational& operator()(int g, int h) const { return values_[static_cast<std::size_t>(g) * group_.size() + h]; }
    Rational& at(int g, int h) { return values_[static_cast<std::size_t>(g) * group_.size() + h]; }
    const std::vector<Rational>& values() const { return values_; }

    GroupTwoCocycle operator*(const GroupTwoCocycle& o) const;
    GroupTwoCocycle inverse() const;
    bool is_trivial() const;
    bool operator==(const GroupTwoCocycle& o) const { return group_ == o.group_ && values_ == o.values_; }
    bool operator!=(const GroupTwoCocycle& o) const { return !(*this == o); }

private:
    FiniteAbelianGroup group_;
    std::vector<Rational> values_;
};

bool is_2cocycle(const GroupTwoCocycle& psi);

// The four identities psi(g,1)=psi(1,g)=1, psi(g,g^-1)=1, psi(g,h)^-1=psi(h^-1,g^-1).
bool is_normalized(const GroupTwoCocycle& psi);

struct NormalizedCocycle {
    GroupTwoCocycle psi;
    std::vector<Rational> coboundary;  // b with psi'(g,h) = psi(g,h) b(g) b(h) / b(gh)
};

// Throws NeedsFieldExtension when the required b(g) for an involution g is not a rational square root.
NormalizedCocycle normalize_2cocycle(const GroupTwoCocycle& psi);

GroupTwoCocycle apply_coboundary(const GroupTwoCocycle& psi, const std::vector<Rational>& b);

// On C2 every 2-cocycle is a coboundary over the algebraic closure. Throws
// std::invalid_argument when the group is not C2.
bool is_trivial_class_c2(const GroupTwoCocycle& psi);

}  // namespace tenscross
