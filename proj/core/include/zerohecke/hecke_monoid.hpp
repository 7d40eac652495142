#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "zerohecke/permutation.hpp"

namespace zerohecke {

// pi-action of the 0-Hecke generator on the right: anti-sorting, idempotent.
Permutation pi_right(const Permutation& w, int i);
Permutation pi_left(const Permutation& w, int i);

// Product in H_0(S_N): fold pi_right over a reduced word of b.
Permutation hecke_product(const Permutation& a, const Permutation& b);

// Letters appearing in any reduced word of w (well defined).
std::set<int> support(const Permutation& w);

// Longest element of the parabolic submonoid indexed by J; the idempotent pi_J+.
Permutation parabolic_longest(const std::set<int>& J, int n);

// x^omega: the idempotent power, equal to the longest element over supp(x).
Permutation hecke_omega(const Permutation& x);

// The automorphism sending pi_i to pi_{N-i}; conjugation by the longest element.
Permutation dynkin_automorphism(const Permutation& w);

// Result of an evaluation map: an element of the parabolic submonoid avoiding
// the evaluated generator, or an absorbing zero marker.
struct Evaluated {
    bool is_zero = false;
    Permutation value = Permutation::identity(1);
};

// Phi_i^+ sends pi_i to 1, Phi_i^- sends pi_i to 0; other generators are fixed.
Evaluated evaluation_map(const Permutation& w, int i, bool plus);

// Character of the simple module indexed by J: 0 when supp(x) meets J, else 1.
int lambda_J(const Permutation& x, const std::set<int>& J);

// All w with left descent set exactly J, sorted by (length, one-line); the
// basis of the combinatorial projective module.
std::vector<Permutation> descent_class_basis(int n, const std::set<int>& J);

// Right action on the descent-class basis: w * pi_i when that preserves the
// left descent set, absent otherwise (the basis vector is sent to zero).
std::optional<Permutation> descent_class_action(const Permutation& w, int i);

// Cached arithmetic for H_0(S_N) on Lehmer ranks.  The generator-action table
// exists for every cached rank; the full Cayley table is built on demand and
// only allowed for N <= 7 (uint16 ranks, ~51 MB at N = 7).
class HeckeTable {
public:
    static const HeckeTable& get(int n);

    int n() const { return n_; }
    std::uint32_t size() const { return size_; }
    std::uint16_t right(std::uint16_t x, int i) const {
        return right_action_[static_cast<size_t>(x) * static_cast<size_t>(n_ - 1) + static_cast<size_t>(i - 1)];
    }
    int length(std::uint16_t x) const { return length_[x]; }
    const std::vector<std::uint32_t>& ranks_by_length() const { return by_length_; }

    // Reduced word of the element with the given rank (last letters peeled first).
    std::vector<int> word(std::uint16_t x) const;

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
    void ensure_full_table() const;
    bool has_full_table() const { return !full_.empty(); }
    const std::uint16_t* full_row(std::uint16_t a) const {
        return full_.data() + static_cast<size_t>(a) * static_cast<size_t>(size_);
    }

private:
    explicit HeckeTable(int n);

    int n_;
    std::uint32_t size_;
    std::vector<std::uint16_t> right_action_;
    std::vector<std::uint16_t> length_;
    std::vector<std::uint32_t> by_length_;
    std::vector<std::uint16_t> parent_;      // x with one right descent peeled
    std::vector<std::uint8_t> last_letter_;  // the peeled letter
    mutable std::vector<std::uint16_t> full_;
};

}  // namespace zerohecke
