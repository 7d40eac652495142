#include "zerohecke/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace zerohecke {

SignedDiagram SignedDiagram::parse(const std::string& text) {
    std::vector<bool> plus;
    plus.reserve(text.size());
    for (char ch : text) {
        if (ch == '+') plus.push_back(true);
        else if (ch == '-') plus.push_back(false);
        else throw std::invalid_argument("signed diagram must consist of + and - only");
    }
    return SignedDiagram(std::move(plus));
}

std::vector<SignedDiagram> SignedDiagram::all(int n) {
    const int nodes = n - 1;
    std::vector<SignedDiagram> out;
    out.reserve(1u << nodes);
    for (unsigned mask = 0; mask < (1u << nodes); ++mask) {
        std::vector<bool> plus(static_cast<size_t>(nodes));
        for (int i = 0; i < nodes; ++i) plus[static_cast<size_t>(i)] = !(mask & (1u << i));
        out.push_back(SignedDiagram(std::move(plus)));
    }
    return out;
}

std::set<int> SignedDiagram::plus_set() const {
    std::set<int> out;
    for (int i = 1; i <= nodes(); ++i)
        if (plus_at(i)) out.insert(i);
    return out;
}

SignedDiagram SignedDiagram::child(bool plus) const {
    auto next = plus_;
    next.push_back(plus);
    return SignedDiagram(std::move(next));
}

SignedDiagram SignedDiagram::parent() const {
    if (plus_.empty()) throw std::invalid_argument("empty diagram has no parent");
    auto prev = plus_;
    prev.pop_back();
    return SignedDiagram(std::move(prev));
}

SignedDiagram SignedDiagram::sibling() const {
    if (plus_.empty()) throw std::invalid_argument("empty diagram has no sibling");
    auto flipped = plus_;
    flipped.back() = !flipped.back();
    return SignedDiagram(std::move(flipped));
}

int SignedDiagram::sign_changes() const {
    int changes = 0;
    for (size_t i = 1; i < plus_.size(); ++i)
        if (plus_[i] != plus_[i - 1]) ++changes;
    return changes;
}

std::vector<SignedDiagram::Run> SignedDiagram::runs() const {
    std::vector<Run> out;
    int i = 1;
    while (i <= nodes()) {
        int j = i;
        while (j < nodes() && plus_[static_cast<size_t>(j)] == plus_[static_cast<size_t>(i - 1)]) ++j;
        out.push_back(Run{i, j, plus_at(i)});
        i = j + 1;
    }
    return out;
}

std::string SignedDiagram::to_string() const {
    std::string out;
    for (bool p : plus_) out += p ? '+' : '-';
    return out;
}

namespace {

AlgebraElement run_factor(const SignedDiagram::Run& run, int n) {
    std::set<int> J;
    for (int i = run.a; i <= run.b; ++i) J.insert(i);
    return longest_signed(J, run.plus, n);
}

}  // namespace

DiagramFactors diagram_factors(const SignedDiagram& d, int ambient_n) {
    const int n = ambient_n == 0 ? d.n() : ambient_n;
    if (n < d.n()) throw std::invalid_argument("ambient rank too small for diagram");
    AlgebraElement left = AlgebraElement::one(n);
    AlgebraElement right = AlgebraElement::one(n);
    const auto runs = d.runs();
    for (const auto& run : runs) left = left * run_factor(run, n);
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) right = right * run_factor(*it, n);
    AlgebraElement c = left * right;
    AlgebraElement opposite = right * left;
    return DiagramFactors{std::move(left), std::move(right), std::move(c), std::move(opposite)};
}

AlgebraElement diagram_demipotent(const SignedDiagram& d, int ambient_n) {
    return diagram_factors(d, ambient_n).C;
}

IdempotentResult idempotent_from(const AlgebraElement& c, int max_power) {
    AlgebraElement power = c;
    for (int k = 1; k <= max_power; ++k) {
        AlgebraElement next = power * c;
        if (next == power) {
            AlgebraElement square = power * power;
            if (!(square == power))
                throw not_demipotent("stabilized power is not idempotent");
            return IdempotentResult{std::move(power), k};
        }
        power = std::move(next);
    }
    throw not_demipotent("no power stabilization within the allowed bound");
}

std::vector<std::pair<SignedDiagram, AlgebraElement>> idempotent_family(int n) {
    std::vector<std::pair<SignedDiagram, AlgebraElement>> out;
    for (const auto& d : SignedDiagram::all(n)) {
        auto result = idempotent_from(diagram_demipotent(d), n + 1);
        out.emplace_back(d, std::move(result.idempotent));
    }
    AlgebraElement sum = AlgebraElement::zero(n);
    for (const auto& [d, e] : out) sum = sum + e;
    if (!(sum == AlgebraElement::one(n)))
        throw verification_failure("idempotent family does not sum to the identity");
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) {
            if (i == j) continue;
            if (!(out[i].second * out[j].second).is_zero())
                throw verification_failure("idempotent family is not orthogonal: " +
                                           out[i].first.to_string() + " * " + out[j].first.to_string());
        }
    return out;
}

AlgebraElement masked_word(int n, const std::vector<int>& word, const SignedDiagram& d) {
    if (d.n() != n) throw std::invalid_argument("diagram rank mismatch");
    AlgebraElement out = AlgebraElement::one(n);
    for (int letter : word) {
        if (letter < 1 || letter >= n) throw std::invalid_argument("word letter out of range");
        out = out * (d.plus_at(letter) ? AlgebraElement::pi(n, letter) : AlgebraElement::pi_bar(n, letter));
    }
    return out;
}

std::vector<int> universal_word(int n) {
    std::vector<int> word;
    for (int i = 1; i <= n - 1; ++i) word.push_back(i);
    for (int i = n - 2; i >= 1; --i) word.push_back(i);
    return word;
}

UniversalWordReport check_universal_word(int n) {
    UniversalWordReport report;
    const auto word = universal_word(n);
    auto family = idempotent_family(n);
    for (auto& [d, family_idempotent] : family) {
        UniversalWordEntry entry{d};
        try {
            auto result = idempotent_from(masked_word(n, word, d), 2 * n + 2);
            entry.demipotent = true;
            entry.degree = result.degree;
            entry.matches_family_idempotent = result.idempotent == family_idempotent;
        } catch (const not_demipotent&) {
            entry.demipotent = false;
        }
        report.all_demipotent = report.all_demipotent && entry.demipotent;
        report.all_match = report.all_match && entry.matches_family_idempotent;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

NilpotenceCensus nilpotence_census(int n) {
    NilpotenceCensus census;
    for (const auto& d : SignedDiagram::all(n)) {
        auto result = idempotent_from(diagram_demipotent(d), n + 1);
        census.degree.emplace(d, result.degree);
        census.histogram[result.degree] += 1;
        if (d.nodes() == 0 || d.plus_at(1)) census.plus_initial_histogram[result.degree] += 1;
    }
    return census;
}

}  // namespace zerohecke
