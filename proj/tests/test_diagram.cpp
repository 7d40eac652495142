#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "zerohecke/diagram.hpp"

using namespace zerohecke;

namespace {

AlgebraElement m(std::vector<int> oneline, Rational c = 1) {
    return AlgebraElement::monomial(Permutation(std::move(oneline)), std::move(c));
}

std::map<std::string, AlgebraElement> family_by_string(int n) {
    std::map<std::string, AlgebraElement> out;
    for (auto& [d, e] : idempotent_family(n)) out.emplace(d.to_string(), std::move(e));
    return out;
}

// Orbit of start under left multiplication by the monoid.
std::set<std::uint64_t> left_closure(const Permutation& start) {
    std::set<std::uint64_t> seen{start.lehmer_rank()};
    std::vector<Permutation> frontier{start};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
            for (int i = 1; i < start.size(); ++i) {
                Permutation moved = pi_left(w, i);
                if (seen.insert(moved.lehmer_rank()).second) next.push_back(std::move(moved));
            }
        frontier = std::move(next);
    }
    return seen;
}

// Nodes in the longest prefix with at most one sign change.
int single_change_prefix(const SignedDiagram& d) {
    int k = 0, changes = 0;
    for (int i = 1; i <= d.nodes(); ++i) {
        if (i > 1 && d.plus_at(i) != d.plus_at(i - 1)) ++changes;
        if (changes > 1) break;
        k = i;
    }
    return k;
}

}  // namespace

TEST_CASE("diagram structure") {
    const SignedDiagram d = SignedDiagram::parse("++-");
    CHECK(d.to_string() == "++-");
    CHECK(d.nodes() == 3);
    CHECK(d.n() == 4);
    CHECK(d.plus_set() == std::set<int>{1, 2});
    CHECK(d.sign_changes() == 1);
    const auto runs = d.runs();
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].a == 1);
    CHECK(runs[0].b == 2);
    CHECK(runs[0].plus);
    CHECK(runs[1].a == 3);
    CHECK(runs[1].b == 3);
    CHECK(!runs[1].plus);
    CHECK(d.child(false).to_string() == "++--");
    CHECK(d.parent().to_string() == "++");
    CHECK(d.sibling().to_string() == "+++");

    const auto all3 = SignedDiagram::all(3);
    REQUIRE(all3.size() == 4);
    CHECK(all3[0].to_string() == "++");
    CHECK(all3[3].to_string() == "--");

    const auto all1 = SignedDiagram::all(1);
    REQUIRE(all1.size() == 1);
    CHECK(all1[0].nodes() == 0);
}

TEST_CASE("rank two idempotents") {
    auto family = family_by_string(2);
    CHECK(family.at("+") == AlgebraElement::pi(2, 1));
    CHECK(family.at("-") == AlgebraElement::one(2) - AlgebraElement::pi(2, 1));
}

TEST_CASE("rank three idempotent table") {
    auto family = family_by_string(3);
    CHECK(family.at("++") == m({3, 2, 1}));
    CHECK(family.at("+-") == m({2, 1, 3}) - m({3, 2, 1}));
    CHECK(family.at("-+") == m({1, 3, 2}) - m({2, 3, 1}) - m({3, 1, 2}) + m({3, 2, 1}));
    CHECK(family.at("--") == AlgebraElement::one(3) - m({2, 1, 3}) - m({1, 3, 2}) +
                                 m({2, 3, 1}) + m({3, 1, 2}) - m({3, 2, 1}));
}

TEST_CASE("worked factor products") {
    CHECK(diagram_demipotent(SignedDiagram::parse("+-")) == m({2, 1, 3}) - m({3, 2, 1}));
    CHECK(diagram_factors(SignedDiagram::parse("-+")).opposite == m({1, 3, 2}) - m({3, 2, 1}));
    for (int n = 3; n <= 4; ++n)
        for (const auto& d : SignedDiagram::all(n))
            CHECK_NOTHROW(idempotent_from(diagram_factors(d).opposite, n + 1));
}

TEST_CASE("masked word example") {
    const AlgebraElement v = masked_word(3, {1, 2, 1}, SignedDiagram::parse("+-"));
    CHECK(v == AlgebraElement::pi(3, 1) - m({3, 2, 1}));
    CHECK(universal_word(4) == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(universal_word(2) == std::vector<int>{1});
}

TEST_CASE("branching") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : SignedDiagram::all(n)) {
            const AlgebraElement sum =
                diagram_demipotent(d.child(true)) + diagram_demipotent(d.child(false));
            CHECK(sum == diagram_demipotent(d, n + 1));
        }
}

TEST_CASE("sibling rivalry") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& d : SignedDiagram::all(n)) {
            const AlgebraElement a = diagram_demipotent(d);
            const AlgebraElement b = diagram_demipotent(d.sibling());
            CHECK((a * b).is_zero());
            CHECK((b * a).is_zero());
        }
}

TEST_CASE("demipotents sum to one") {
    for (int n = 2; n <= 6; ++n) {
        AlgebraElement sum = AlgebraElement::zero(n);
        for (const auto& d : SignedDiagram::all(n)) sum = sum + diagram_demipotent(d);
        CHECK(sum == AlgebraElement::one(n));
    }
}

TEST_CASE("triangular action on monoid elements") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<AlgebraElement> demis;
        std::vector<std::set<int>> plus_sets;
        for (const auto& d : SignedDiagram::all(n)) {
            demis.push_back(diagram_demipotent(d));
            plus_sets.push_back(d.plus_set());
        }
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation w = Permutation::from_lehmer_rank(n, r);
            const auto closure = left_closure(w);
            const auto ld = w.left_descents();
            const std::set<int> descents(ld.begin(), ld.end());
            for (size_t k = 0; k < demis.size(); ++k) {
                const AlgebraElement p = demis[k] * AlgebraElement::monomial(w);
                const Rational diag = p.coefficient(w);
                if (plus_sets[k] == descents)
                    CHECK(diag == 1);
                else
                    CHECK(diag == 0);
                for (const auto& [v, c] : p.sorted_terms()) {
                    CHECK(closure.count(v.lehmer_rank()) == 1);
                    if (!(v == w)) CHECK(v.length() > w.length());
                }
            }
        }
    }
}

TEST_CASE("nilpotence census small ranks") {
    for (int n = 2; n <= 4; ++n) {
        const auto census = nilpotence_census(n);
        CHECK(census.histogram == std::map<int, int>{{1, 1 << (n - 1)}});
    }
    const auto census5 = nilpotence_census(5);
    CHECK(census5.plus_initial_histogram == std::map<int, int>{{1, 6}, {2, 2}});
    CHECK(census5.degree.at(SignedDiagram::parse("+-++")) == 2);
    CHECK(census5.degree.at(SignedDiagram::parse("+-+-")) == 2);
    int total = 0;
    for (const auto& [deg, count] : census5.histogram) total += count;
    CHECK(total == 16);
}

TEST_CASE("nilpotence degree laws") {
    std::map<int, NilpotenceCensus> census;
    for (int n = 5; n <= 6; ++n) census.emplace(n, nilpotence_census(n));

    for (const auto& [n, c] : census) {
        for (const auto& [d, deg] : c.degree) {
            // Overall cap for rank above four.
            CHECK(deg <= n - 3);
            // Prefix cap from the longest single-change prefix.
            const int k = single_change_prefix(d);
            CHECK(deg <= std::max(1, d.nodes() - k));
            // A diagram with at most one sign change is already idempotent.
            if (d.sign_changes() <= 1) CHECK(deg == 1);
            // Siblings share their degree.
            CHECK(c.degree.at(d.sibling()) == deg);
        }
    }

    // Child degrees against parent degrees across consecutive ranks.
    for (int n = 5; n <= 6; ++n) {
        const auto parent_census = nilpotence_census(n - 1);
        const auto& child_census = census.at(n);
        for (const auto& [d, deg] : child_census.degree) {
            const int pdeg = parent_census.degree.at(d.parent());
            CHECK((deg == pdeg || deg == pdeg + 1));
        }
    }
}

TEST_CASE("prefix products build the idempotents") {
    for (int n = 2; n <= 5; ++n) {
        auto family = idempotent_family(n);
        for (const auto& [d, idem] : family) {
            AlgebraElement acc = AlgebraElement::one(n);
            std::vector<bool> prefix;
            for (int i = 1; i <= d.nodes(); ++i) {
                prefix.push_back(d.plus_at(i));
                acc = acc * diagram_demipotent(SignedDiagram(prefix), n);
            }
            CHECK(acc == idem);
        }
    }
}

TEST_CASE("universal word idempotents") {
    for (int n = 2; n <= 5; ++n) {
        const auto report = check_universal_word(n);
        CHECK(report.all_demipotent);
        CHECK(report.all_match);
        CHECK(report.entries.size() == (1u << (n - 1)));
    }
}

TEST_CASE("family coefficients stay in plus or minus one") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& [d, e] : idempotent_family(n)) CHECK(e.coefficients_pm_one());
}
