#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zerohecke/diagram.hpp"
#include "zerohecke/orp.hpp"
#include "zerohecke/permutation.hpp"

namespace zerohecke {

// A nondecreasing parking function: f(i) <= i and f(i) <= f(i+1), stored as
// the one-line [f(1),...,f(N)].  Functions act on the right.
class NdpfFunction {
public:
    explicit NdpfFunction(std::vector<int> values);

    static NdpfFunction identity(int n);
    // The i-th generator sends i+1 to i and fixes everything else.
    static NdpfFunction generator(int n, int i);
    // Accepts "[1,1,3]" or "1,1,3".
    static NdpfFunction parse(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    // 1-based evaluation.
    int operator()(int i) const { return values_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& values() const { return values_; }
    bool is_identity() const;
    std::string to_string() const;  // "[1,1,3]"

    auto operator<=>(const NdpfFunction&) const = default;

private:
    std::vector<int> values_;
};

// x.(f g) = (x.f).g.
NdpfFunction ndpf_compose(const NdpfFunction& f, const NdpfFunction& g);

// All nondecreasing parking functions sorted by one-line; Catalan(N) many.
std::vector<NdpfFunction> all_ndpf(int n);
// Closure of the generators under composition, sorted; equals all_ndpf.
std::vector<NdpfFunction> generate_ndpf(int n);

// Quotient of the permutation monoid onto NDPF: the one-line of the image is
// the suffix-minimum vector of the one-line of w.  The map reverses products:
// the image of a product is the image of the right factor composed before the
// image of the left factor.
NdpfFunction quotient_phi(const Permutation& w);
// Folds a reduced word of w through the generators, each new letter composed
// on the left (applied first); equals quotient_phi.
NdpfFunction quotient_phi_via_generators(const Permutation& w);

// Conjugation by the longest element, sending s_i to s_{N-i}.
Permutation psi_conjugate(const Permutation& w);
// quotient_phi after psi_conjugate.
NdpfFunction quotient_psi_phi(const Permutation& w);

// A fiber of a quotient map over S_N.  The shortest member is the unique
// [321]-avoider; the longest avoids [231] for quotient_phi and [312] for
// quotient_psi_phi.  Construction throws verification_failure if either
// extreme length is not attained exactly once.
struct NdpfFiber {
    NdpfFunction image;
    std::vector<Permutation> members;  // lex order
    Permutation short_element;
    Permutation long_element;
};

std::vector<NdpfFiber> phi_fibers(int n);
std::vector<NdpfFiber> psi_phi_fibers(int n);

// The pair (quotient_phi(w), quotient_psi_phi(w)).
std::pair<NdpfFunction, NdpfFunction> omega_pair(const Permutation& w);

struct OmegaComponent {
    std::vector<Permutation> members;  // lex order
    Permutation avoider;               // the unique [4321]-avoiding member
};

// Vertices are all of S_N in lex order; each locally width-minimal [4231]
// instance of x contributes the edge from x to the permutation obtained by
// swapping the entries in the instance's two middle positions.  Connected
// components carry exactly one [4321]-avoider each (else the construction
// throws verification_failure) and coincide with the omega_pair fibers.
struct OmegaFiberDigraph {
    int n = 0;
    std::vector<Permutation> vertices;
    std::vector<std::pair<int, int>> edges;  // vertex indices
    std::vector<OmegaComponent> components;  // sorted by first member
};

OmegaFiberDigraph omega_fiber_digraph(int n);

// The submonoid of NDPF_{2N} generated by pi_i pi_{2N-i} for i = 1..N,
// as a sorted element list grown breadth-first (no product table is built:
// the N = 6 table alone would not fit in memory).
std::vector<NdpfFunction> bndpf_elements(int n);

// NDPF_N as the regressive order-preserving monoid of a chain, giving its
// monoid algebra over the rationals.
std::shared_ptr<const OrpMonoid> ndpf_monoid(int n);
OrpFunction to_orp(const NdpfFunction& f);
NdpfFunction from_orp(const OrpFunction& f);

// The generator monomial pi_i and its complement 1 - pi_i.
OrpAlgebraElement ndpf_pi_plus(const std::shared_ptr<const OrpMonoid>& m, int i);
OrpAlgebraElement ndpf_pi_minus(const std::shared_ptr<const OrpMonoid>& m, int i);

// L_D and R_D multiply one factor per maximal constant-sign run: a plus run
// [a,b] contributes pi_b pi_{b-1} ... pi_a and a minus run the complements
// (1-pi_a)(1-pi_{a+1}) ... (1-pi_b); L_D takes the runs left to right, R_D
// right to left, and C_D = L_D R_D.
struct NdpfDiagramFactors {
    OrpAlgebraElement L, R, C;
};

NdpfDiagramFactors ndpf_run_factors(const std::shared_ptr<const OrpMonoid>& m,
                                    const SignedDiagram& d);

// The collapsed form of C_D: all minus factors ascending, then all plus
// factors descending.  These 2^(N-1) elements are idempotent, pairwise
// orthogonal without any power-raising, and sum to the identity.
OrpAlgebraElement ndpf_norton_demipotent(const std::shared_ptr<const OrpMonoid>& m,
                                         const SignedDiagram& d);

}  // namespace zerohecke
