#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerohecke/hecke_monoid.hpp"
#include "zerohecke/permutation.hpp"

namespace zerohecke {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Sparse exact linear combination of 0-Hecke monoid elements, keyed by Lehmer
// rank.  No zero coefficients are stored; terms are kept sorted by rank.
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n) {}

    static AlgebraElement zero(int n) { return AlgebraElement(n); }
    static AlgebraElement one(int n);
    static AlgebraElement monomial(const Permutation& w, Rational coeff = 1);
    // pi_i as a single term.
    static AlgebraElement pi(int n, int i);
    // 1 - pi_i.
    static AlgebraElement pi_bar(int n, int i);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<std::uint32_t, Rational>>& terms() const { return terms_; }

    Rational coefficient(const Permutation& w) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Rational& c) const;

    bool operator==(const AlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Applies the Dynkin automorphism termwise.
    AlgebraElement dynkin() const;

    // True when every coefficient lies in {-1, +1}.
    bool coefficients_pm_one() const;

    // Terms sorted by (length, lex one-line), for stable external output.
    std::vector<std::pair<Permutation, Rational>> sorted_terms() const;
    std::string to_string() const;

    // Internal: assumes sorted unique ranks with no zero coefficients.
    static AlgebraElement from_sorted_terms(int n, std::vector<std::pair<std::uint32_t, Rational>> terms);

private:
    int n_;
    std::vector<std::pair<std::uint32_t, Rational>> terms_;
};

// w_J^+ as a single monoid term, or w_J^- = the product of (1 - pi_i) along a
// reduced word of the parabolic longest element.
AlgebraElement longest_signed(const std::set<int>& J, bool plus, int n);

}  // namespace zerohecke
