#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zerohecke {

// Permutation of {1..N} in one-line notation.  Products compose as functions:
// (w*v)(i) = w(v(i)), so w*s_i swaps the entries of w at positions i, i+1 and
// s_i*w swaps the values i, i+1.
class Permutation {
public:
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);
    static Permutation longest(int n);
    // Folds the word left to right: s_{w_1} * s_{w_2} * ... * s_{w_k}.
    static Permutation from_word(int n, std::span<const int> word);
    static Permutation simple(int n, int i);
    // Parses comma separated one-line notation, e.g. "3,4,5,2,1,6".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    // Image of i, 1-based.
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& oneline() const { return w_; }

    Permutation operator*(const Permutation& v) const;
    Permutation inverse() const;
    Permutation right_mult_s(int i) const;
    Permutation left_mult_s(int i) const;

    long length() const;
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;
    bool has_right_descent(int i) const { return w_[i - 1] > w_[i]; }
    bool has_left_descent(int i) const;

    // Lex-minimal reduced word, obtained by peeling the smallest left descent.
    std::vector<int> reduced_word() const;

    // Rank in the Lehmer-code order on S_N; 0 is the identity.
    std::uint64_t lehmer_rank() const;
    static Permutation from_lehmer_rank(int n, std::uint64_t rank);

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.w_ <=> b.w_;
    }

private:
    std::vector<int> w_;
};

std::uint64_t factorial(int n);

}  // namespace zerohecke
