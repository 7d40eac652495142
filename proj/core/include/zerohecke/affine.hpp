#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zerohecke {

// A bijection x of the integers with x(i+N) = x(i)+N whose window values
// x(1..N) sum to N(N+1)/2, stored as that window.  Generators s_0..s_{N-1}
// act on position classes mod N; right multiplication swaps positions,
// left multiplication swaps values.
class AffinePermutation {
public:
    explicit AffinePermutation(std::vector<long long> window);

    static AffinePermutation identity(int n);
    static AffinePermutation from_word(int n, const std::vector<int>& word);
    // Accepts "[0,2,4]" or "0,2,4".
    static AffinePermutation parse(const std::string& text);

    int size() const { return static_cast<int>(window_.size()); }
    long long operator()(long long j) const;
    // The position p with x(p) = v.
    long long inverse(long long v) const;
    const std::vector<long long>& window() const { return window_; }
    bool is_identity() const;

    AffinePermutation right_mult_s(int i) const;
    AffinePermutation left_mult_s(int i) const;

    // Number of inversion classes: sum over window index pairs i < j of
    // |floor((x(j) - x(i)) / N)|.
    long long length() const;
    bool has_right_descent(int i) const;  // x(i) > x(i+1)
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;
    // Lexicographically least word, peeling the smallest left descent.
    std::vector<int> reduced_word() const;

    std::string to_string() const;  // "[0,2,4]"
    auto operator<=>(const AffinePermutation&) const = default;

private:
    std::vector<long long> window_;
};

// Elements grouped by length, layers 0..max_length.
std::vector<std::vector<AffinePermutation>> affine_length_ball(int n, int max_length);

// Lexicographically least (i,j,k) with j-N < i < j < k < j+N, 1 <= j <= N and
// x(i) > x(j) > x(k); such a triple exists whenever x contains the pattern.
std::optional<std::array<long long, 3>> affine_find_321(const AffinePermutation& x);

// A regressive order-preserving function f on the integers with
// f(i+N) = f(i)+N, stored as the window f(1..N).  Nontrivial translations
// are rejected: a window whose periodic gaps are all 1 must be the identity.
class AffineNdpf {
public:
    explicit AffineNdpf(std::vector<long long> window);

    static AffineNdpf identity(int n);
    // Sends j to j-1 on the class j = i+1 mod N and fixes the rest.
    static AffineNdpf generator(int n, int i);
    static AffineNdpf parse(const std::string& text);

    int size() const { return static_cast<int>(window_.size()); }
    long long operator()(long long j) const;
    const std::vector<long long>& window() const { return window_; }
    bool is_identity() const;
    std::string to_string() const;

    auto operator<=>(const AffineNdpf&) const = default;

private:
    std::vector<long long> window_;
};

// x.(f g) = (x.f).g.
AffineNdpf affine_ndpf_compose(const AffineNdpf& f, const AffineNdpf& g);

// Quotient onto the affine parking functions: the window minimum keeps its
// value and running minima propagate downward through one period.
AffineNdpf affine_quotient(const AffinePermutation& x);
// Folds a reduced word through the generators, each new letter composed on
// the left (applied first); equals affine_quotient.
AffineNdpf affine_quotient_via_generators(const AffinePermutation& x);

// The unique [321]-avoiding preimage of f under affine_quotient: positions
// where f strictly grows keep their f-values, the remaining positions take
// consecutive entries of the complement of the image, at the unique offset
// giving a valid window sum.
AffinePermutation affine_reconstruct(const AffineNdpf& f);

}  // namespace zerohecke
