#include "zerohecke/ndpf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zerohecke/pattern.hpp"

namespace zerohecke {

namespace {

void check_values(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > static_cast<int>(i) + 1)
            throw std::invalid_argument("ndpf value out of range: " + std::to_string(v[i]) +
                                        " at position " + std::to_string(i + 1));
        if (i > 0 && v[i] < v[i - 1]) throw std::invalid_argument("ndpf values must be nondecreasing");
    }
}

}  // namespace

NdpfFunction::NdpfFunction(std::vector<int> values) : values_(std::move(values)) {
    check_values(values_);
}

NdpfFunction NdpfFunction::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return NdpfFunction(std::move(v));
}

NdpfFunction NdpfFunction::generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    auto f = identity(n);
    f.values_[static_cast<size_t>(i)] = i;
    return f;
}

NdpfFunction NdpfFunction::parse(const std::string& text) {
    std::string body = text;
    std::erase_if(body, [](char c) { return c == '[' || c == ']' || c == ' '; });
    std::vector<int> v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) v.push_back(std::stoi(tok));
    }
    return NdpfFunction(std::move(v));
}

bool NdpfFunction::is_identity() const {
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string NdpfFunction::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + "]";
}

NdpfFunction ndpf_compose(const NdpfFunction& f, const NdpfFunction& g) {
    if (f.size() != g.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(static_cast<size_t>(f.size()));
    for (int i = 1; i <= f.size(); ++i) v[static_cast<size_t>(i - 1)] = g(f(i));
    return NdpfFunction(std::move(v));
}

std::vector<NdpfFunction> all_ndpf(int n) {
    std::vector<NdpfFunction> out;
    std::vector<int> pref;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(pref.size()) == n) {
            out.emplace_back(pref);
            return;
        }
        int lo = pref.empty() ? 1 : pref.back();
        for (int v = lo; v <= static_cast<int>(pref.size()) + 1; ++v) {
            pref.push_back(v);
            self(self);
            pref.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<NdpfFunction> generate_ndpf(int n) {
    std::set<NdpfFunction> seen;
    std::vector<NdpfFunction> frontier{NdpfFunction::identity(n)};
    seen.insert(frontier.front());
    std::vector<NdpfFunction> gens;
    for (int i = 1; i < n; ++i) gens.push_back(NdpfFunction::generator(n, i));
    while (!frontier.empty()) {
        std::vector<NdpfFunction> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                auto h = ndpf_compose(f, g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

NdpfFunction quotient_phi(const Permutation& w) {
    std::vector<int> v(static_cast<size_t>(w.size()));
    int m = w.size() + 1;
    for (int i = w.size(); i >= 1; --i) {
        m = std::min(m, w(i));
        v[static_cast<size_t>(i - 1)] = m;
    }
    return NdpfFunction(std::move(v));
}

NdpfFunction quotient_phi_via_generators(const Permutation& w) {
    auto f = NdpfFunction::identity(w.size());
    for (int i : w.reduced_word()) f = ndpf_compose(NdpfFunction::generator(w.size(), i), f);
    return f;
}

Permutation psi_conjugate(const Permutation& w) {
    auto w0 = Permutation::longest(w.size());
    return w0 * w * w0;
}

NdpfFunction quotient_psi_phi(const Permutation& w) { return quotient_phi(psi_conjugate(w)); }

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

std::vector<NdpfFiber> fibers_of(int n, NdpfFunction (*map)(const Permutation&)) {
    std::map<NdpfFunction, std::vector<Permutation>> groups;
    for (auto& w : all_permutations(n)) groups[map(w)].push_back(w);
    std::vector<NdpfFiber> out;
    for (auto& [image, members] : groups) {
        long lo = -1, hi = -1;
        size_t lo_at = 0, hi_at = 0, lo_count = 0, hi_count = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            long len = members[i].length();
            if (lo < 0 || len < lo) lo = len, lo_at = i, lo_count = 0;
            if (len == lo) ++lo_count;
            if (hi < 0 || len > hi) hi = len, hi_at = i, hi_count = 0;
            if (len == hi) ++hi_count;
        }
        if (lo_count != 1 || hi_count != 1)
            throw verification_failure("fiber of " + image.to_string() +
                                       " lacks a unique length extreme");
        out.push_back({image, members, members[lo_at], members[hi_at]});
    }
    return out;
}

}  // namespace

std::vector<NdpfFiber> phi_fibers(int n) { return fibers_of(n, &quotient_phi); }

std::vector<NdpfFiber> psi_phi_fibers(int n) { return fibers_of(n, &quotient_psi_phi); }

std::pair<NdpfFunction, NdpfFunction> omega_pair(const Permutation& w) {
    return {quotient_phi(w), quotient_psi_phi(w)};
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

OmegaFiberDigraph omega_fiber_digraph(int n) {
    OmegaFiberDigraph g;
    g.n = n;
    g.vertices = all_permutations(n);
    const Permutation p4231({4, 2, 3, 1});
    const Permutation p4321({4, 3, 2, 1});
    Dsu dsu(g.vertices.size());
    for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
        const auto& x = g.vertices[vi];
        std::set<int> targets;
        for (const auto& q : minimal_instances(x, p4231).locally_minimal) {
            auto line = x.oneline();
            std::swap(line[static_cast<size_t>(q[1] - 1)], line[static_cast<size_t>(q[2] - 1)]);
            targets.insert(static_cast<int>(Permutation(line).lehmer_rank()));
        }
        for (int t : targets) {
            g.edges.emplace_back(static_cast<int>(vi), t);
            dsu.unite(static_cast<int>(vi), t);
        }
    }
    std::map<int, size_t> comp_at;
    for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
        int root = dsu.find(static_cast<int>(vi));
        auto it = comp_at.find(root);
        if (it == comp_at.end()) {
            comp_at.emplace(root, g.components.size());
            g.components.push_back({{g.vertices[vi]}, g.vertices[vi]});
        } else {
            g.components[it->second].members.push_back(g.vertices[vi]);
        }
    }
    for (auto& comp : g.components) {
        size_t hits = 0;
        for (const auto& w : comp.members)
            if (avoids(w, p4321)) {
                comp.avoider = w;
                ++hits;
            }
        if (hits != 1)
            throw verification_failure("component of " + comp.members.front().to_string() +
                                       " has " + std::to_string(hits) + " [4321]-avoiders");
    }
    return g;
}

std::vector<NdpfFunction> bndpf_elements(int n) {
    const int n2 = 2 * n;
    std::vector<NdpfFunction> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back(ndpf_compose(NdpfFunction::generator(n2, i), NdpfFunction::generator(n2, n2 - i)));
    if (n >= 1) gens.push_back(NdpfFunction::generator(n2, n));
    std::set<NdpfFunction> seen;
    std::vector<NdpfFunction> frontier{NdpfFunction::identity(n2)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<NdpfFunction> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                auto h = ndpf_compose(f, g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::shared_ptr<const OrpMonoid> ndpf_monoid(int n) {
    return std::make_shared<const OrpMonoid>(Poset::chain(n));
}

OrpFunction to_orp(const NdpfFunction& f) {
    OrpFunction g;
    g.values.reserve(static_cast<size_t>(f.size()));
    for (int v : f.values()) g.values.push_back(v - 1);
    return g;
}

NdpfFunction from_orp(const OrpFunction& f) {
    std::vector<int> v;
    v.reserve(f.values.size());
    for (int x : f.values) v.push_back(x + 1);
    return NdpfFunction(std::move(v));
}

OrpAlgebraElement ndpf_pi_plus(const std::shared_ptr<const OrpMonoid>& m, int i) {
    const int n = m->poset().size();
    return OrpAlgebraElement::monomial(m, m->index_of(to_orp(NdpfFunction::generator(n, i))));
}

OrpAlgebraElement ndpf_pi_minus(const std::shared_ptr<const OrpMonoid>& m, int i) {
    return OrpAlgebraElement::one(m) - ndpf_pi_plus(m, i);
}

NdpfDiagramFactors ndpf_run_factors(const std::shared_ptr<const OrpMonoid>& m,
                                    const SignedDiagram& d) {
    auto runs = d.runs();
    auto run_product = [&](const SignedDiagram::Run& r) {
        auto acc = OrpAlgebraElement::one(m);
        if (r.plus) {
            for (int i = r.b; i >= r.a; --i) acc = acc * ndpf_pi_plus(m, i);
        } else {
            for (int i = r.a; i <= r.b; ++i) acc = acc * ndpf_pi_minus(m, i);
        }
        return acc;
    };
    NdpfDiagramFactors out{OrpAlgebraElement::one(m), OrpAlgebraElement::one(m),
                           OrpAlgebraElement::one(m)};
    for (const auto& r : runs) out.L = out.L * run_product(r);
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) out.R = out.R * run_product(*it);
    out.C = out.L * out.R;
    return out;
}

OrpAlgebraElement ndpf_norton_demipotent(const std::shared_ptr<const OrpMonoid>& m,
                                         const SignedDiagram& d) {
    auto acc = OrpAlgebraElement::one(m);
    for (int i = 1; i <= d.nodes(); ++i)
        if (!d.plus_at(i)) acc = acc * ndpf_pi_minus(m, i);
    for (int i = d.nodes(); i >= 1; --i)
        if (d.plus_at(i)) acc = acc * ndpf_pi_plus(m, i);
    return acc;
}

}  // namespace zerohecke
