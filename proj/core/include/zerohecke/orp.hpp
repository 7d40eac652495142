#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zerohecke/algebra.hpp"
#include "zerohecke/finite_monoid.hpp"
#include "zerohecke/poset.hpp"

namespace zerohecke {

struct not_idempotent_error : std::runtime_error {
    explicit not_idempotent_error(const std::string& what) : std::runtime_error(what) {}
};

// A regressive order-preserving function on a poset, acting on the right.
struct OrpFunction {
    std::vector<int> values;  // x.f = values[x]

    int operator()(int x) const { return values[static_cast<size_t>(x)]; }
    auto operator<=>(const OrpFunction&) const = default;
    // Labels in index order, e.g. "[1,1,3]".
    std::string to_string(const Poset& p) const;
};

OrpFunction orp_identity(const Poset& p);
bool is_orp(const Poset& p, const OrpFunction& f);
// x.(f g) = (x.f).g.
OrpFunction orp_compose(const OrpFunction& f, const OrpFunction& g);

// All regressive order-preserving functions, sorted by value vector; the
// poset size is capped at 8.
std::vector<OrpFunction> generate_orp(const Poset& p);

// Image sets of idempotents: contain the minimals and are closed under
// pairwise joins.
bool is_valid_image_set(const Poset& p, const std::vector<int>& image);
// x -> the unique maximal element of the image below x.
OrpFunction sup_function(const Poset& p, const std::vector<int>& image);
// (image set, sup idempotent) pairs, sorted by image set.
std::vector<std::pair<std::vector<int>, OrpFunction>> orp_idempotents(const Poset& p);

std::vector<int> image_of(const OrpFunction& f);
// Union over fibers of the fiber's minimal elements.
std::vector<int> fiber_minimals(const Poset& p, const OrpFunction& f);

// lfix = sup over the join closure of the fiber minimals, rfix = sup over the
// join closure of the image: lfix . f = f = f . rfix, each the pointwise-least
// idempotent with its law.
std::pair<OrpFunction, OrpFunction> lfix_rfix(const Poset& p, const OrpFunction& f);

// For every f, the image of lfix f is lexicographically <= the image of
// rfix f as indicator vectors along the extension, equal exactly when f is
// idempotent; this orders the Cartan matrix triangularly.
bool cartan_triangularity_check(const Poset& p, const std::vector<int>& extension);

// x.e = x meet b for x <= a, else x; requires b <= a and pairwise meets.
OrpFunction e_ab(const Poset& p, int a, int b);

// Writes an idempotent as a product of e_{a,b} over cover pairs (a covers b),
// multiplying left to right; peels the extension from the top, refining each
// step along a saturated chain. Throws not_idempotent_error otherwise.
std::vector<std::pair<int, int>> factor_idempotent(const Poset& p, const OrpFunction& f,
                                                   const std::vector<int>& extension);

// All of OR(P) with products by index lookup.
class OrpMonoid {
public:
    explicit OrpMonoid(const Poset& p);

    const Poset& poset() const { return p_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const OrpFunction& element(int i) const { return elems_[static_cast<size_t>(i)]; }
    int index_of(const OrpFunction& f) const;
    int identity_index() const { return identity_; }
    int product(int a, int b) const {
        return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    FiniteMonoid to_finite_monoid() const { return FiniteMonoid::from_table(table_, identity_); }

private:
    Poset p_;
    std::vector<OrpFunction> elems_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
};

// An element of the monoid algebra of OR(P) over the rationals.
class OrpAlgebraElement {
public:
    static OrpAlgebraElement zero(std::shared_ptr<const OrpMonoid> m);
    static OrpAlgebraElement one(std::shared_ptr<const OrpMonoid> m);
    static OrpAlgebraElement monomial(std::shared_ptr<const OrpMonoid> m, int x, Rational coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int x) const;
    // Sorted by element index.
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    const std::shared_ptr<const OrpMonoid>& monoid() const { return m_; }

    OrpAlgebraElement operator+(const OrpAlgebraElement& o) const;
    OrpAlgebraElement operator-(const OrpAlgebraElement& o) const;
    OrpAlgebraElement operator*(const OrpAlgebraElement& o) const;
    OrpAlgebraElement scaled(const Rational& c) const;
    bool operator==(const OrpAlgebraElement& o) const { return terms_ == o.terms_; }

private:
    explicit OrpAlgebraElement(std::shared_ptr<const OrpMonoid> m) : m_(std::move(m)) {}

    std::shared_ptr<const OrpMonoid> m_;
    std::vector<std::pair<int, Rational>> terms_;
};

// One demipotent per valid signed diagram on the elements in extension order.
struct SemilatticeDemipotent {
    std::string diagram;  // '+'/'-' along the extension
    std::vector<int> image;
    OrpAlgebraElement demipotent;  // C_D = L_D * R_D
    OrpAlgebraElement idempotent;  // stabilized power
    int degree = 0;                // least k with C^k = C^{k+1}
    bool demipotent_ok = false;
    bool idempotent_first_power = false;
};

struct SemilatticeDemipotentReport {
    std::shared_ptr<const OrpMonoid> monoid;
    std::vector<SemilatticeDemipotent> entries;
    bool sum_is_identity = false;
    bool orthogonal = false;              // stabilized pairwise products vanish
    bool orthogonal_first_power = false;  // raw pairwise products vanish
};

// Builds C_D for every valid diagram of a meet semilattice along the
// extension: minimal elements and prefix joins contribute no factor, every
// other '+' node contributes 1 - e_{x,b} and every '-' node e_{x,b}, with b
// the unique maximal earlier image element below x.
SemilatticeDemipotentReport semilattice_demipotents(const Poset& p,
                                                    const std::vector<int>& extension);

}  // namespace zerohecke
