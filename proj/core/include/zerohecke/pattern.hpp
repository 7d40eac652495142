#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zerohecke/permutation.hpp"

namespace zerohecke {

struct unsupported_pattern : std::invalid_argument {
    explicit unsupported_pattern(const std::string& what) : std::invalid_argument(what) {}
};

// Positions are 1-based and strictly increasing; the values of x at those
// positions are in the same relative order as the pattern.
using PatternPositions = std::vector<int>;

// All instances of sigma in x, in lex order of position tuples.
std::vector<PatternPositions> pattern_instances(const Permutation& x, const Permutation& sigma);

bool avoids(const Permutation& x, const Permutation& sigma);

// Width tuple of an instance for the five patterns with a fixed width system:
// [231] and [321] use (r-p, q-p), [312] uses (r-p, r-q), and the two patterns
// [4231], [4321] use the consecutive gaps (q-p, r-q, s-r).
std::vector<int> registry_width(const Permutation& sigma, std::span<const int> positions);
bool in_width_registry(const Permutation& sigma);

struct MinimalInstances {
    std::vector<PatternPositions> global_minimal;
    std::vector<PatternPositions> locally_minimal;
};

// Instances of minimal width, and instances that are width-minimal within the
// contiguous window they span.  Every global minimal instance is locally
// minimal.  Only patterns from the width registry are accepted.
MinimalInstances minimal_instances(const Permutation& x, const Permutation& sigma);

struct PatternFactorization {
    Permutation y;            // no right descents in J
    Permutation sigma_prime;  // the J-shift of sigma
    Permutation z;            // no left descents in J
    int shift;                // window start j, so J = {j, ..., j+k-2}
};

// Factors x = y * sigma' * z with additive lengths, where sigma' is sigma
// relabeled into a contiguous window.  Supported patterns: all of S_2, all of
// S_3 except [123], and the closures under prepending a new maximum (or two)
// and appending a new minimum (or two).  Returns nothing when x avoids sigma.
std::optional<PatternFactorization> factor_over_pattern(const Permutation& x, const Permutation& sigma);

bool factorization_supported(const Permutation& sigma);

}  // namespace zerohecke
