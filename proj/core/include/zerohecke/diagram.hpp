#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerohecke/algebra.hpp"

namespace zerohecke {

// Signs attached to the N-1 nodes of the type A Dynkin diagram.
class SignedDiagram {
public:
    explicit SignedDiagram(std::vector<bool> plus) : plus_(std::move(plus)) {}

    // Parses strings like "++-"; an empty string is the N=1 diagram.
    static SignedDiagram parse(const std::string& text);
    // All 2^(N-1) diagrams for rank N, in binary order with '+' first.
    static std::vector<SignedDiagram> all(int n);

    int nodes() const { return static_cast<int>(plus_.size()); }
    int n() const { return nodes() + 1; }
    bool plus_at(int i) const { return plus_[static_cast<size_t>(i - 1)]; }
    std::set<int> plus_set() const;

    SignedDiagram child(bool plus) const;
    SignedDiagram parent() const;
    SignedDiagram sibling() const;
    int sign_changes() const;

    // Maximal constant-sign runs as index intervals [a, b].
    struct Run {
        int a, b;
        bool plus;
    };
    std::vector<Run> runs() const;

    std::string to_string() const;
    bool operator==(const SignedDiagram&) const = default;
    bool operator<(const SignedDiagram& o) const { return plus_ < o.plus_; }

private:
    std::vector<bool> plus_;
};

// The left and right factors L_D, R_D (run longest-elements in run order and
// reversed run order), the demipotent C_D = L_D * R_D, and the opposite
// product R_D * L_D.
struct DiagramFactors {
    AlgebraElement L, R, C, opposite;
};

// ambient_n = 0 means the diagram's own rank; a larger ambient rank embeds the
// demipotent in a bigger algebra (used by the branching identities).
DiagramFactors diagram_factors(const SignedDiagram& d, int ambient_n = 0);
AlgebraElement diagram_demipotent(const SignedDiagram& d, int ambient_n = 0);

struct IdempotentResult {
    AlgebraElement idempotent;
    int degree = 0;  // least k with C^k = C^(k+1)
};

// Power-stabilizes a demipotent; throws not_demipotent if no stabilization
// occurs within max_power steps.
struct not_demipotent : std::runtime_error {
    explicit not_demipotent(const std::string& what) : std::runtime_error(what) {}
};

IdempotentResult idempotent_from(const AlgebraElement& c, int max_power);

// All 2^(N-1) idempotents I_D, pairwise orthogonality and sum-to-one verified.
struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::pair<SignedDiagram, AlgebraElement>> idempotent_family(int n);

// Applies the sign of each letter's node in D to each letter of the word.
AlgebraElement masked_word(int n, const std::vector<int>& word, const SignedDiagram& d);

// The palindrome word (1, 2, ..., N-1, ..., 2, 1).
std::vector<int> universal_word(int n);

struct UniversalWordEntry {
    SignedDiagram diagram;
    bool demipotent = false;
    int degree = 0;
    bool matches_family_idempotent = false;
};

struct UniversalWordReport {
    std::vector<UniversalWordEntry> entries;
    bool all_demipotent = true;
    bool all_match = true;
};

UniversalWordReport check_universal_word(int n);

struct NilpotenceCensus {
    std::map<SignedDiagram, int> degree;           // every diagram
    std::map<int, int> histogram;                  // full family
    std::map<int, int> plus_initial_histogram;     // diagrams whose first node is '+'
};

NilpotenceCensus nilpotence_census(int n);

}  // namespace zerohecke
