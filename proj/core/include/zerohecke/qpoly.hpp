#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zerohecke {

using Rational = boost::multiprecision::cpp_rational;

struct qpoly_domain_error : std::runtime_error {
    explicit qpoly_domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact Laurent polynomial in q with rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly mono(int exponent, Rational coeff = 1);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    bool is_zero() const { return terms_.empty(); }
    // Substitution q -> q^-1.
    LaurentPoly bar() const;
    // Smallest exponent; throws on the zero polynomial.
    int valuation() const;
    Rational coefficient(int exponent) const;
    Rational at_one() const;
    // Value at q = 0; defined only when no exponent is negative.
    Rational at_zero() const;

    const std::map<int, Rational>& terms() const { return terms_; }
    // "q^-1 + 2 + q" style, exponents ascending; "0" when zero.
    std::string to_string() const;

private:
    std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
    void put(int e, const Rational& c);
};

// Symmetric quantum integer q^(n-1) + q^(n-3) + ... + q^(1-n); n >= 0.
LaurentPoly q_int(int n);
LaurentPoly q_factorial(int n);
// Symmetric quantum binomial [n]!/([k]![n-k]!); zero outside 0 <= k <= n.
// Computed division-free via the Gaussian Pascal recurrence in q^2.
LaurentPoly q_binomial(int n, int k);

// Structure constant for f^n acting on a highest-weight tensor pair:
// p_{x,y}(q) = q^(jy-xy) * qbinom(x+y, x) with j the left highest weight.
LaurentPoly structure_constants(int j, int x, int y);

// Brute-force coproduct expansions on V(j) (x) V(k). State maps the basis
// index pair (x, y) = (f^x u, f^y v) to its exact coefficient.
using TensorState = std::map<std::pair<int, int>, LaurentPoly>;

// n steps of Delta(f) = f(x)1 + K(x)f; caps < 0 mean uncapped.
TensorState f1_expansion(int j, int n, int jcap = -1, int kcap = -1);
// n steps of Delta(e0) = e0(x)K0^-1 + 1(x)e0 on the evaluation module with
// a = q^alpha, b = q^beta; always capped at (j, k).
TensorState e0_expansion(int j, int k, int n, int alpha, int beta);

// f^(j+k)(u(x)v) = f^(j)u (x) f^(k)v in the truncated module, checked
// symbolically through the full ladder of divided-power coefficients.
bool divided_power_identity_check(int j, int k);

// Leading-order report for the e0 ladder at one step. A coefficient is
// q^(kx-xy+alpha x+beta y) times a symmetric binomial; leading means minimal
// monomial exponent, the divided-basis order as q -> 0.
struct ZeroStringStep {
    int n;
    std::vector<std::pair<int, int>> leading;
};

struct ZeroStringReport {
    std::vector<ZeroStringStep> steps;
    bool e0_equals_f1;   // every expansion coincides with the f ladder
    bool traces_zero_string;  // leading terms follow (0,n) then (n-k,k)
    std::string verdict;      // "connected" or "disconnected"
};

// The two admissible monomial parameter pairs are (alpha, beta) = (0, 0) and
// (-k, j); anything else throws.
ZeroStringReport evaluation_zero_string(int j, int k, int alpha, int beta);

}  // namespace zerohecke
