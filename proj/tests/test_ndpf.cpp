#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "zerohecke/hecke_monoid.hpp"
#include "zerohecke/ndpf.hpp"
#include "zerohecke/pattern.hpp"

using namespace zerohecke;

namespace {

long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

NdpfFunction fold_forward(const Permutation& w) {
    auto f = NdpfFunction::identity(w.size());
    for (int i : w.reduced_word()) f = ndpf_compose(f, NdpfFunction::generator(w.size(), i));
    return f;
}

std::vector<Permutation> all_perms(int n) {
    std::vector<Permutation> out;
    for (std::uint64_t r = 0; r < factorial(n); ++r) out.push_back(Permutation::from_lehmer_rank(n, r));
    return out;
}

}  // namespace

TEST_CASE("parking function basics") {
    CHECK(NdpfFunction::identity(3).to_string() == "[1,2,3]");
    CHECK(NdpfFunction::parse("[1,1,3]") == NdpfFunction({1, 1, 3}));
    CHECK(NdpfFunction::parse("1,1,1,3,3").to_string() == "[1,1,1,3,3]");
    CHECK_THROWS_AS(NdpfFunction({2, 2}), std::invalid_argument);  // not regressive
    CHECK_THROWS_AS(NdpfFunction({1, 2, 1}), std::invalid_argument);
    const auto p1 = NdpfFunction::generator(3, 1);
    const auto p2 = NdpfFunction::generator(3, 2);
    CHECK(p1 == NdpfFunction({1, 1, 3}));
    CHECK(p2 == NdpfFunction({1, 2, 2}));
    CHECK(ndpf_compose(p1, p1) == p1);
}

TEST_CASE("generators satisfy the collapsed braid relation") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i + 1 < n; ++i) {
            const auto a = NdpfFunction::generator(n, i);
            const auto b = NdpfFunction::generator(n, i + 1);
            const auto aba = ndpf_compose(ndpf_compose(a, b), a);
            const auto bab = ndpf_compose(ndpf_compose(b, a), b);
            CHECK(aba == bab);
            CHECK(aba == ndpf_compose(b, a));
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                const auto a = NdpfFunction::generator(n, i);
                const auto b = NdpfFunction::generator(n, j);
                CHECK(ndpf_compose(a, b) == ndpf_compose(b, a));
            }
    }
}

TEST_CASE("the monoid has Catalan size and the generators reach it") {
    for (int n = 1; n <= 7; ++n) {
        const auto all = all_ndpf(n);
        CHECK(static_cast<long long>(all.size()) == catalan(n));
        CHECK(generate_ndpf(n) == all);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("quotient by suffix minima") {
    CHECK(quotient_phi(Permutation({2, 4, 1, 5, 3})) == NdpfFunction({1, 1, 1, 3, 3}));
    CHECK(quotient_phi(Permutation({4, 2, 1, 5, 3})) == NdpfFunction({1, 1, 1, 3, 3}));
    CHECK(quotient_phi(Permutation::longest(5)) == NdpfFunction({1, 1, 1, 1, 1}));
    CHECK(quotient_phi(Permutation::identity(4)) == NdpfFunction::identity(4));
}

TEST_CASE("the generator fold runs through the word in reverse") {
    // Suffix minima match the fold with each new letter applied first; the
    // same-order fold differs already on [2,3,1].
    const Permutation w({2, 3, 1});
    CHECK(quotient_phi(w) == NdpfFunction({1, 1, 1}));
    CHECK(fold_forward(w) == NdpfFunction({1, 1, 2}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& x : all_perms(n)) CHECK(quotient_phi(x) == quotient_phi_via_generators(x));
}

TEST_CASE("the quotient reverses products") {
    for (const auto& a : all_perms(4))
        for (const auto& b : all_perms(4))
            CHECK(quotient_phi(hecke_product(a, b)) ==
                  ndpf_compose(quotient_phi(b), quotient_phi(a)));
}

TEST_CASE("fibers have a unique short and long element with the avoidance signatures") {
    const Permutation p231({2, 3, 1});
    const Permutation p312({3, 1, 2});
    const Permutation p321({3, 2, 1});
    for (int n = 1; n <= 6; ++n) {
        const auto fibers = phi_fibers(n);
        CHECK(static_cast<long long>(fibers.size()) == catalan(n));
        std::uint64_t total = 0;
        for (const auto& fib : fibers) {
            total += fib.members.size();
            for (const auto& w : fib.members) {
                CHECK(quotient_phi(w) == fib.image);
                CHECK(avoids(w, p321) == (w == fib.short_element));
                CHECK(avoids(w, p231) == (w == fib.long_element));
            }
        }
        CHECK(total == factorial(n));
        const auto twisted = psi_phi_fibers(n);
        CHECK(twisted.size() == fibers.size());
        for (const auto& fib : twisted)
            for (const auto& w : fib.members) {
                CHECK(avoids(w, p321) == (w == fib.short_element));
                CHECK(avoids(w, p312) == (w == fib.long_element));
            }
    }
}

TEST_CASE("conjugating by the longest element flips the generator indices") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i)
            CHECK(psi_conjugate(Permutation::simple(n, i)) == Permutation::simple(n, n - i));
}

TEST_CASE("the long cycle sits in the fiber of the longest element of S_7") {
    const Permutation cycle({2, 3, 4, 5, 6, 7, 1});
    const Permutation w0 = Permutation::longest(7);
    CHECK(quotient_phi(cycle) == quotient_phi(w0));
    CHECK(cycle.length() == 6);
    CHECK(avoids(cycle, Permutation({3, 2, 1})));
    CHECK(avoids(w0, Permutation({2, 3, 1})));
}

TEST_CASE("straightening a width-minimal [231] stays in the fiber") {
    const Permutation p231({2, 3, 1});
    for (int n = 3; n <= 6; ++n)
        for (const auto& x : all_perms(n)) {
            for (const auto& q : minimal_instances(x, p231).global_minimal) {
                auto line = x.oneline();
                std::swap(line[static_cast<size_t>(q[0] - 1)], line[static_cast<size_t>(q[1] - 1)]);
                const Permutation y(line);
                CHECK(quotient_phi(y) == quotient_phi(x));
                CHECK(y.length() == x.length() + 1);
                // The same positions now hold a left-minimal [321]: nothing
                // under the small entry between the first two, nothing over
                // the middle entry between the last two.
                bool left_minimal = true;
                for (int t = q[0] + 1; t < q[1]; ++t)
                    if (y(t) > y(q[2])) left_minimal = false;
                for (int s = q[1] + 1; s < q[2]; ++s)
                    if (y(s) < y(q[1])) left_minimal = false;
                CHECK(left_minimal);
            }
        }
}

TEST_CASE("pair-of-quotients fibers match the swap digraph components") {
    const std::map<int, long long> expected{{1, 1}, {2, 2}, {3, 6}, {4, 23}, {5, 103}, {6, 513}};
    for (const auto& [n, count] : expected) {
        const auto g = omega_fiber_digraph(n);
        CHECK(static_cast<long long>(g.components.size()) == count);
        std::map<std::pair<NdpfFunction, NdpfFunction>, std::set<std::vector<int>>> fibers;
        for (const auto& w : g.vertices) fibers[omega_pair(w)].insert(w.oneline());
        CHECK(fibers.size() == g.components.size());
        std::set<std::set<std::vector<int>>> from_fibers, from_components;
        for (const auto& [key, mem] : fibers) from_fibers.insert(mem);
        long long avoiders = 0;
        const Permutation p4321({4, 3, 2, 1});
        for (const auto& comp : g.components) {
            std::set<std::vector<int>> mem;
            for (const auto& w : comp.members) mem.insert(w.oneline());
            from_components.insert(mem);
            CHECK(avoids(comp.avoider, p4321));
        }
        CHECK(from_fibers == from_components);
        for (const auto& w : g.vertices)
            if (avoids(w, p4321)) ++avoiders;
        CHECK(avoiders == count);
    }
}

TEST_CASE("swap edges preserve the quotient pair") {
    for (int n = 3; n <= 6; ++n) {
        const auto g = omega_fiber_digraph(n);
        for (const auto& [a, b] : g.edges)
            CHECK(omega_pair(g.vertices[static_cast<size_t>(a)]) ==
                  omega_pair(g.vertices[static_cast<size_t>(b)]));
    }
}

TEST_CASE("the only S_4 fiber with two members pairs [4231] with [4321]") {
    const auto g = omega_fiber_digraph(4);
    std::vector<OmegaComponent> big;
    for (const auto& comp : g.components)
        if (comp.members.size() > 1) big.push_back(comp);
    REQUIRE(big.size() == 1);
    REQUIRE(big[0].members.size() == 2);
    CHECK(big[0].members[0] == Permutation({4, 2, 3, 1}));
    CHECK(big[0].members[1] == Permutation({4, 3, 2, 1}));
    CHECK(big[0].avoider == Permutation({4, 2, 3, 1}));
}

TEST_CASE("a three-element fiber of S_7") {
    const auto g = omega_fiber_digraph(7);
    CHECK(g.components.size() == 2761);
    const Permutation seed({5, 2, 7, 4, 1, 6, 3});
    for (const auto& comp : g.components)
        if (std::find(comp.members.begin(), comp.members.end(), seed) != comp.members.end()) {
            REQUIRE(comp.members.size() == 3);
            CHECK(comp.members[0] == Permutation({5, 2, 7, 4, 1, 6, 3}));
            CHECK(comp.members[1] == Permutation({5, 2, 7, 6, 1, 4, 3}));
            CHECK(comp.members[2] == Permutation({5, 4, 7, 2, 1, 6, 3}));
            CHECK(comp.avoider == seed);
            return;
        }
    FAIL("seed permutation not found in any component");
}

TEST_CASE("doubled parking functions count by binomial squares times Catalan") {
    const std::vector<long long> expected{1, 2, 7, 33, 183, 1118, 7281};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
        long long formula = 0;
        for (int j = 0; j <= n; ++j) {
            long long binom = 1;
            for (int k = 1; k <= j; ++k) binom = binom * (n - k + 1) / k;
            formula += binom * binom * catalan(j);
        }
        CHECK(formula == expected[static_cast<size_t>(n)]);
        CHECK(static_cast<long long>(bndpf_elements(n).size()) == expected[static_cast<size_t>(n)]);
    }
}

TEST_CASE("the chain monoid realizes the parking functions") {
    for (int n = 2; n <= 5; ++n) {
        const auto m = ndpf_monoid(n);
        CHECK(static_cast<long long>(m->size()) == catalan(n));
        for (const auto& f : all_ndpf(n)) CHECK(from_orp(to_orp(f)) == f);
        for (const auto& f : all_ndpf(n))
            for (const auto& g : all_ndpf(n))
                CHECK(to_orp(ndpf_compose(f, g)) ==
                      m->element(m->product(m->index_of(to_orp(f)), m->index_of(to_orp(g)))));
    }
}

TEST_CASE("plus and minus generators collapse across adjacent indices") {
    for (int n = 4; n <= 5; ++n) {
        const auto m = ndpf_monoid(n);
        for (int i = 2; i < n; ++i) {
            const auto ap = ndpf_pi_plus(m, i - 1), am = ndpf_pi_minus(m, i - 1);
            const auto bp = ndpf_pi_plus(m, i), bm = ndpf_pi_minus(m, i);
            CHECK(ap * bp * ap == bp * ap);
            CHECK(am * bm * am == am * bm);
            CHECK(bp * am * bp == bp * am);
            CHECK(bm * ap * bm == ap * bm);
            CHECK(ap * bm * ap == bm * ap);
            CHECK(am * bp * am == am * bp);
        }
    }
}

TEST_CASE("later-index products pass a plus or minus generator through") {
    const int n = 5;
    const auto m = ndpf_monoid(n);
    for (int i = 1; i <= 3; ++i) {
        // Everything generated beyond index i commutes into the fixed laws.
        std::vector<OrpAlgebraElement> letters;
        for (int j = i + 1; j < n; ++j) {
            letters.push_back(ndpf_pi_plus(m, j));
            letters.push_back(ndpf_pi_minus(m, j));
        }
        std::vector<OrpAlgebraElement> words{OrpAlgebraElement::one(m)};
        size_t layer_start = 0;
        for (int len = 0; len < 3; ++len) {
            const size_t layer_end = words.size();
            for (size_t t = layer_start; t < layer_end; ++t)
                for (const auto& l : letters) words.push_back(words[t] * l);
            layer_start = layer_end;
        }
        const auto p = ndpf_pi_plus(m, i), q = ndpf_pi_minus(m, i);
        for (const auto& f : words) {
            CHECK(q * f * q == q * f);
            CHECK(p * f * p == f * p);
        }
    }
}

TEST_CASE("run demipotents equal their collapsed form and split the identity") {
    for (int n = 3; n <= 5; ++n) {
        const auto m = ndpf_monoid(n);
        std::vector<OrpAlgebraElement> cds;
        auto sum = OrpAlgebraElement::zero(m);
        for (const auto& d : SignedDiagram::all(n)) {
            const auto fac = ndpf_run_factors(m, d);
            const auto norton = ndpf_norton_demipotent(m, d);
            CHECK(fac.C == norton);
            CHECK(norton * norton == norton);  // idempotent without power-raising
            // Unit coefficient on the product of the plus generators.
            auto lead = NdpfFunction::identity(n);
            for (int i = n - 1; i >= 1; --i)
                if (d.plus_at(i)) lead = ndpf_compose(lead, NdpfFunction::generator(n, i));
            CHECK(norton.coefficient(m->index_of(to_orp(lead))) == Rational(1));
            std::set<int> image(lead.values().begin(), lead.values().end());
            std::set<int> expected;
            for (int v = 1; v <= n; ++v)
                if (!(v >= 2 && d.plus_at(v - 1))) expected.insert(v);
            CHECK(image == expected);
            cds.push_back(norton);
            sum = sum + norton;
        }
        CHECK(sum == OrpAlgebraElement::one(m));
        for (size_t a = 0; a < cds.size(); ++a)
            for (size_t b = 0; b < cds.size(); ++b)
                if (a != b) CHECK((cds[a] * cds[b]).is_zero());
    }
}

TEST_CASE("appending a signed node branches a demipotent into its children") {
    for (int n = 4; n <= 5; ++n) {
        const auto m = ndpf_monoid(n);
        for (const auto& d : SignedDiagram::all(n - 1)) {
            // Parent factors embedded in the larger algebra via the fixed point n.
            const auto fac = ndpf_run_factors(m, d);
            const auto plus_child = fac.L * ndpf_pi_plus(m, n - 1) * fac.R;
            const auto minus_child = fac.L * ndpf_pi_minus(m, n - 1) * fac.R;
            CHECK(plus_child + minus_child == fac.C);
            CHECK(plus_child == ndpf_run_factors(m, d.child(true)).C);
            CHECK(minus_child == ndpf_run_factors(m, d.child(false)).C);
        }
    }
}

TEST_CASE("chain semilattice demipotents transcribe to the parking function family") {
    for (int n = 3; n <= 5; ++n) {
        const Poset chain = Poset::chain(n);
        std::vector<int> extension(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) extension[static_cast<size_t>(i)] = i;
        const auto report = semilattice_demipotents(chain, extension);
        const auto m = report.monoid;
        CHECK(report.sum_is_identity);
        CHECK(report.orthogonal_first_power);
        for (const auto& entry : report.entries) {
            // Element k in the image reads as a plain node k of the diagram.
            REQUIRE(static_cast<int>(entry.diagram.size()) == n);
            std::vector<bool> plus;
            for (int k = 1; k < n; ++k) plus.push_back(entry.diagram[static_cast<size_t>(k)] == '-');
            const auto norton = ndpf_norton_demipotent(m, SignedDiagram(plus));
            CHECK(entry.demipotent == norton);
        }
    }
}
