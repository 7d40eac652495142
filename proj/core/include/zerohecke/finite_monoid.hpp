#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zerohecke {

// Thrown when an omega power cycles without stabilizing.
struct non_aperiodic_error : std::runtime_error {
    explicit non_aperiodic_error(const std::string& what) : std::runtime_error(what) {}
};

// A finite monoid presented by its full multiplication table over indices
// 0..size-1.
class FiniteMonoid {
public:
    // Verifies the identity laws always, associativity when size <= 200.
    static FiniteMonoid from_table(std::vector<std::vector<int>> table, int identity);

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int product(int a, int b) const {
        return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    bool is_idempotent(int x) const { return product(x, x) == x; }
    std::vector<int> idempotents() const;

    // x^omega: the stabilized power x^k = x^{k+1}; throws non_aperiodic_error
    // if the powers cycle instead.
    int omega(int x) const;

    // e * f = (ef)^omega; the meet of e and f in the idempotent lattice when
    // the monoid is J-trivial.
    int star(int e, int f) const;

    // x <=_J y: x lies in the principal two-sided ideal M y M.
    bool j_leq(int x, int y) const;
    // J-trivial: all principal two-sided ideals are distinct.
    bool is_j_trivial() const;

    // One (x, x^omega) pair per non-idempotent x; together with the
    // idempotents these index a basis compatible with the radical filtration.
    std::vector<std::pair<int, int>> radical_basis() const;

private:
    FiniteMonoid(std::vector<std::vector<int>> table, int identity)
        : table_(std::move(table)), identity_(identity) {}

    std::vector<bool> ideal_of(int x) const;

    std::vector<std::vector<int>> table_;
    int identity_;
};

// Closes the generators under mult starting from the identity; returns the
// elements in discovery order (identity first) and their multiplication table
// as a FiniteMonoid.
template <typename T, typename Mult>
std::pair<std::vector<T>, FiniteMonoid> generate_monoid(const T& id, const std::vector<T>& gens,
                                                        Mult mult, std::size_t bound = 100000) {
    std::vector<T> elems{id};
    std::map<T, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            T next = mult(elems[i], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (elems.size() > bound)
                    throw std::runtime_error("monoid generation exceeded element bound");
            }
        }
    }
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                index.at(mult(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
    return {std::move(elems), FiniteMonoid::from_table(std::move(table), 0)};
}

}  // namespace zerohecke
