#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zerohecke {

// A finite poset on labelled elements; indices follow sorted label order.
class Poset {
public:
    // covers lists (lower, upper) pairs; the order is the reflexive
    // transitive closure. Throws on unknown labels, duplicates, or cycles.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    // One relation "a < b" per line (a below b); a bare token declares an
    // isolated element; '#' starts a comment.
    static Poset parse(const std::string& text);

    static Poset chain(int n);      // 1 < 2 < ... < n, single-digit labels
    static Poset antichain(int n);  // no relations
    static Poset boolean_lattice(int k);  // subsets of {1..k} as bitstrings
    static Poset diamond();               // bot < mid1, mid2 < top
    static Poset pentagon();              // 1 < 2 < 5 and 1 < 3 < 4 < 5

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int index_of(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    // a covers b: b < a with nothing strictly between.
    bool covers(int a, int b) const;
    std::vector<std::pair<int, int>> cover_pairs() const;  // (upper, lower)

    std::vector<int> minimals() const;
    // Minimal upper bounds of S; joins({}) is the set of minimal elements.
    std::vector<int> joins(const std::vector<int>& s) const;
    // Closure of S together with the minimal elements under pairwise joins.
    std::vector<int> join_closure(const std::vector<int>& s) const;

    bool is_meet_semilattice() const;
    // Unique maximal lower bound; throws when it does not exist.
    int meet(int a, int b) const;

    // Sorted label order when that is a linear extension, otherwise the
    // lexicographically smallest topological order.
    std::vector<int> default_linear_extension() const;
    bool is_linear_extension(const std::vector<int>& order) const;

private:
    Poset() = default;

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

}  // namespace zerohecke
