#include "zerohecke/finite_monoid.hpp"

#include <set>

namespace zerohecke {

FiniteMonoid FiniteMonoid::from_table(std::vector<std::vector<int>> table, int identity) {
    const int m = static_cast<int>(table.size());
    if (m == 0) throw std::invalid_argument("empty multiplication table");
    if (identity < 0 || identity >= m) throw std::invalid_argument("identity index out of range");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("table is not square");
        for (int v : row)
            if (v < 0 || v >= m) throw std::invalid_argument("table entry out of range");
    }
    FiniteMonoid monoid(std::move(table), identity);
    for (int a = 0; a < m; ++a)
        if (monoid.product(identity, a) != a || monoid.product(a, identity) != a)
            throw std::invalid_argument("identity laws fail");
    if (m <= 200) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (monoid.product(monoid.product(a, b), c) !=
                        monoid.product(a, monoid.product(b, c)))
                        throw std::invalid_argument("multiplication table is not associative");
    }
    return monoid;
}

std::vector<int> FiniteMonoid::idempotents() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (is_idempotent(x)) out.push_back(x);
    return out;
}

int FiniteMonoid::omega(int x) const {
    int cur = x;
    for (int step = 0; step <= size(); ++step) {
        const int next = product(cur, x);
        if (next == cur) return cur;
        cur = next;
    }
    throw non_aperiodic_error("powers cycle without stabilizing");
}

int FiniteMonoid::star(int e, int f) const { return omega(product(e, f)); }

std::vector<bool> FiniteMonoid::ideal_of(int x) const {
    const int m = size();
    std::vector<int> left;
    left.reserve(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) left.push_back(product(a, x));
    std::vector<bool> in(static_cast<size_t>(m), false);
    for (int l : left)
        for (int b = 0; b < m; ++b) in[static_cast<size_t>(product(l, b))] = true;
    return in;
}

bool FiniteMonoid::j_leq(int x, int y) const { return ideal_of(y)[static_cast<size_t>(x)]; }

bool FiniteMonoid::is_j_trivial() const {
    std::set<std::vector<bool>> ideals;
    for (int x = 0; x < size(); ++x)
        if (!ideals.insert(ideal_of(x)).second) return false;
    return true;
}

std::vector<std::pair<int, int>> FiniteMonoid::radical_basis() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        if (!is_idempotent(x)) out.emplace_back(x, omega(x));
    return out;
}

}  // namespace zerohecke
