#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "zerohecke/finite_monoid.hpp"
#include "zerohecke/hecke_monoid.hpp"
#include "zerohecke/permutation.hpp"

using namespace zerohecke;

namespace {

// The five-element J-trivial monoid {1, x, y, z, 0} with x^2 = x, y^2 = y,
// xz = z, zy = z, and all other non-identity products 0.
// Indices: 1 -> 0, x -> 1, y -> 2, z -> 3, 0 -> 4.
FiniteMonoid five_element_monoid() {
    const int one = 0, x = 1, y = 2, z = 3, zero = 4;
    std::vector<std::vector<int>> t(5, std::vector<int>(5, zero));
    for (int a = 0; a < 5; ++a) {
        t[static_cast<size_t>(one)][static_cast<size_t>(a)] = a;
        t[static_cast<size_t>(a)][static_cast<size_t>(one)] = a;
    }
    t[x][x] = x;
    t[y][y] = y;
    t[x][z] = z;
    t[z][y] = z;
    return FiniteMonoid::from_table(t, one);
}

// The free left regular band on two letters {1, a, b, ab, ba}: concatenate
// and keep the first two distinct letters.
// Indices: 1 -> 0, a -> 1, b -> 2, ab -> 3, ba -> 4.
FiniteMonoid left_regular_band() {
    const std::vector<std::string> words{"", "a", "b", "ab", "ba"};
    std::map<std::string, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            std::string seen;
            for (char c : words[static_cast<size_t>(i)] + words[static_cast<size_t>(j)])
                if (seen.find(c) == std::string::npos && seen.size() < 2) seen += c;
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = index.at(seen);
        }
    return FiniteMonoid::from_table(t, 0);
}

std::pair<std::vector<Permutation>, FiniteMonoid> hecke_monoid(int n) {
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i) gens.push_back(pi_right(Permutation::identity(n), i));
    return generate_monoid(Permutation::identity(n), gens,
                           [](const Permutation& a, const Permutation& b) {
                               return hecke_product(a, b);
                           });
}

}  // namespace

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteMonoid::from_table({{0, 1}, {1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteMonoid::from_table({{0, 1}, {1, 0}, {0, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteMonoid::from_table({{0, 5}, {1, 0}}, 0), std::invalid_argument);
    // Right zeros adjoined to an identity break associativity when tampered.
    std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 1}};
    CHECK_THROWS_AS(FiniteMonoid::from_table(bad, 0), std::invalid_argument);
}

TEST_CASE("five element monoid is J-trivial") {
    const FiniteMonoid m = five_element_monoid();
    const int x = 1, y = 2, z = 3, zero = 4;
    CHECK(m.size() == 5);
    CHECK(m.is_j_trivial());
    CHECK(m.idempotents() == std::vector<int>{0, x, y, zero});

    // Principal ideal containments: M z M = {z, 0} sits below both M x M and
    // M y M, which are incomparable.
    CHECK(m.j_leq(z, x));
    CHECK(m.j_leq(z, y));
    CHECK(m.j_leq(zero, z));
    CHECK_FALSE(m.j_leq(x, y));
    CHECK_FALSE(m.j_leq(y, x));
    CHECK_FALSE(m.j_leq(x, z));

    CHECK(m.omega(z) == zero);
    CHECK(m.omega(x) == x);
    CHECK(m.radical_basis() == std::vector<std::pair<int, int>>{{z, zero}});

    // x * y = (xy)^omega = 0: incomparable idempotents meet at the bottom.
    CHECK(m.star(x, y) == zero);
    CHECK(m.star(x, x) == x);
    CHECK(m.star(0, x) == x);
}

TEST_CASE("left regular band is not J-trivial") {
    const FiniteMonoid m = left_regular_band();
    const int ab = 3, ba = 4;
    CHECK(m.size() == 5);
    CHECK_FALSE(m.is_j_trivial());
    // Every element is idempotent, so the radical pairs are empty.
    CHECK(m.idempotents().size() == 5);
    CHECK(m.radical_basis().empty());
    // {ab, ba} is a single J-class: each lies in the other's ideal.
    CHECK(m.product(2, ab) == ba);
    CHECK(m.product(1, ba) == ab);
    CHECK(m.j_leq(ab, ba));
    CHECK(m.j_leq(ba, ab));
}

TEST_CASE("omega throws on a nontrivial group") {
    const FiniteMonoid z2 = FiniteMonoid::from_table({{0, 1}, {1, 0}}, 0);
    CHECK(z2.omega(0) == 0);
    CHECK_THROWS_AS(z2.omega(1), non_aperiodic_error);
    CHECK_FALSE(z2.is_j_trivial());
}

TEST_CASE("generated zero-Hecke monoid") {
    const auto [elems, m] = hecke_monoid(3);
    CHECK(m.size() == 6);
    CHECK(m.is_j_trivial());
    CHECK(m.idempotents().size() == 4);
    CHECK(m.radical_basis().size() == 2);

    std::map<Permutation, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const Permutation id = Permutation::identity(3);
    const int p1 = index.at(pi_right(id, 1));
    const int p2 = index.at(pi_right(id, 2));
    const int w0 = index.at(parabolic_longest({1, 2}, 3));

    // pi_1 * pi_2 = (pi_1 pi_2)^omega is the longest element.
    CHECK(m.star(p1, p2) == w0);
    CHECK(m.star(p2, p1) == w0);

    // The two non-idempotents both stabilize at the longest element.
    for (const auto& [x, xo] : m.radical_basis()) {
        CHECK(xo == w0);
        CHECK(support(elems[static_cast<size_t>(x)]) == std::set<int>{1, 2});
    }
}

TEST_CASE("omega matches the parabolic longest element") {
    for (int n = 2; n <= 4; ++n) {
        const auto [elems, m] = hecke_monoid(n);
        CHECK(m.size() == [&] {
            int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }());
        CHECK(m.is_j_trivial());
        CHECK(m.idempotents().size() == (1 << (n - 1)));
        CHECK(m.radical_basis().size() == m.size() - (1 << (n - 1)));
        for (int x = 0; x < m.size(); ++x) {
            const Permutation w = elems[static_cast<size_t>(x)];
            CHECK(elems[static_cast<size_t>(m.omega(x))] == hecke_omega(w));
        }
    }
}

TEST_CASE("star is the idempotent meet") {
    for (int n = 2; n <= 4; ++n) {
        const auto [elems, m] = hecke_monoid(n);
        const std::vector<int> idem = m.idempotents();
        for (int e : idem)
            for (int f : idem) {
                const int g = m.star(e, f);
                CHECK(m.is_idempotent(g));
                CHECK(g == m.star(f, e));
                CHECK(m.j_leq(g, e));
                CHECK(m.j_leq(g, f));
                for (int h : idem)
                    if (m.j_leq(h, e) && m.j_leq(h, f)) CHECK(m.j_leq(h, g));
            }
    }
}

TEST_CASE("generate_monoid bound") {
    const auto [elems, m] = hecke_monoid(4);
    CHECK(elems.size() == 24);
    std::vector<Permutation> gens;
    for (int i = 1; i < 5; ++i) gens.push_back(pi_right(Permutation::identity(5), i));
    CHECK_THROWS_AS(generate_monoid(Permutation::identity(5), gens,
                                    [](const Permutation& a, const Permutation& b) {
                                        return hecke_product(a, b);
                                    },
                                    100),
                    std::runtime_error);
}
