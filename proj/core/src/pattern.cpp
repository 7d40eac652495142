#include "zerohecke/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zerohecke {

namespace {

// sigma as relative-order template: values[i] < values[j] iff sigma(i+1) < sigma(j+1).
bool matches(const std::vector<int>& values, std::span<const int> picked, const Permutation& sigma) {
    const int k = sigma.size();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool lt = values[static_cast<size_t>(picked[static_cast<size_t>(i)])] <
                            values[static_cast<size_t>(picked[static_cast<size_t>(j)])];
            if (lt != (sigma(i + 1) < sigma(j + 1))) return false;
        }
    return true;
}

void enumerate(const std::vector<int>& values, const Permutation& sigma, int from, std::vector<int>& picked,
               std::vector<PatternPositions>& out) {
    const int k = sigma.size();
    const int n = static_cast<int>(values.size());
    if (static_cast<int>(picked.size()) == k) {
        if (matches(values, picked, sigma)) {
            PatternPositions pos;
            pos.reserve(picked.size());
            for (int p : picked) pos.push_back(p + 1);
            out.push_back(std::move(pos));
        }
        return;
    }
    const int need = k - static_cast<int>(picked.size());
    for (int p = from; p <= n - need; ++p) {
        picked.push_back(p);
        enumerate(values, sigma, p + 1, picked, out);
        picked.pop_back();
    }
}

std::vector<PatternPositions> instances_in(const std::vector<int>& values, const Permutation& sigma) {
    std::vector<PatternPositions> out;
    std::vector<int> picked;
    enumerate(values, sigma, 0, picked, out);
    return out;
}

}  // namespace

std::vector<PatternPositions> pattern_instances(const Permutation& x, const Permutation& sigma) {
    if (sigma.size() > x.size()) return {};
    return instances_in(x.oneline(), sigma);
}

bool avoids(const Permutation& x, const Permutation& sigma) {
    return pattern_instances(x, sigma).empty();
}

bool in_width_registry(const Permutation& sigma) {
    static const std::vector<std::vector<int>> registry = {
        {2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {4, 2, 3, 1}, {4, 3, 2, 1}};
    return std::find(registry.begin(), registry.end(), sigma.oneline()) != registry.end();
}

std::vector<int> registry_width(const Permutation& sigma, std::span<const int> positions) {
    const auto& s = sigma.oneline();
    const int p = positions[0], q = positions[1], r = positions[2];
    if (s == std::vector<int>{2, 3, 1} || s == std::vector<int>{3, 2, 1}) return {r - p, q - p};
    if (s == std::vector<int>{3, 1, 2}) return {r - p, r - q};
    if (s == std::vector<int>{4, 2, 3, 1} || s == std::vector<int>{4, 3, 2, 1}) {
        const int t = positions[3];
        return {q - p, r - q, t - r};
    }
    throw unsupported_pattern("no width system registered for " + sigma.to_string());
}

MinimalInstances minimal_instances(const Permutation& x, const Permutation& sigma) {
    if (!in_width_registry(sigma))
        throw unsupported_pattern("no width system registered for " + sigma.to_string());
    MinimalInstances out;
    const auto all = pattern_instances(x, sigma);
    if (all.empty()) return out;

    std::vector<int> best;
    std::vector<std::vector<int>> widths;
    widths.reserve(all.size());
    for (const auto& inst : all) {
        auto w = registry_width(sigma, inst);
        if (best.empty() || w < best) best = w;
        widths.push_back(std::move(w));
    }
    for (size_t i = 0; i < all.size(); ++i)
        if (widths[i] == best) out.global_minimal.push_back(all[i]);

    // Locally minimal: width-minimal among the instances inside the window the
    // instance spans.  Widths depend only on position differences, so the
    // absolute positions of window instances can be compared directly.
    for (size_t i = 0; i < all.size(); ++i) {
        const auto& inst = all[i];
        const int lo = inst.front(), hi = inst.back();
        std::vector<int> window(x.oneline().begin() + lo - 1, x.oneline().begin() + hi);
        std::vector<int> local_best;
        for (const auto& winst : instances_in(window, sigma)) {
            std::vector<int> absolute;
            absolute.reserve(winst.size());
            for (int p : winst) absolute.push_back(p + lo - 1);
            auto w = registry_width(sigma, absolute);
            if (local_best.empty() || w < local_best) local_best = w;
        }
        if (widths[i] == local_best) out.locally_minimal.push_back(inst);
    }
    return out;
}

namespace {

// Recursive recognizer for the factorization-supported family, returning the
// width tuple of an instance, or nothing if the pattern is unsupported.
std::optional<std::vector<int>> factorization_width(const std::vector<int>& sigma, std::span<const int> pos) {
    const int k = static_cast<int>(sigma.size());
    if (k < 2) return std::nullopt;
    if (k == 2) return std::vector<int>{pos[1] - pos[0]};
    if (k == 3) {
        const int p = pos[0], q = pos[1], r = pos[2];
        if (sigma == std::vector<int>{2, 3, 1}) return std::vector<int>{r - p, q - p};
        if (sigma == std::vector<int>{3, 1, 2}) return std::vector<int>{r - p, r - q};
        if (sigma == std::vector<int>{3, 2, 1}) return std::vector<int>{r - p, q - p};
        if (sigma == std::vector<int>{2, 1, 3}) return std::vector<int>{r - q, q - p};
        if (sigma == std::vector<int>{1, 3, 2}) return std::vector<int>{q - p, r - q};
        return std::nullopt;  // [123]
    }
    if (sigma == std::vector<int>{4, 2, 3, 1} || sigma == std::vector<int>{4, 3, 2, 1})
        return std::vector<int>{pos[1] - pos[0], pos[2] - pos[1], pos[3] - pos[2]};

    const int span = pos[k - 1] - pos[0];
    // sigma_+ = [k, base]: prepended new maximum.
    if (sigma[0] == k) {
        std::vector<int> base(sigma.begin() + 1, sigma.end());
        if (auto w = factorization_width(base, pos.subspan(1))) {
            w->push_back(span);
            return w;
        }
    }
    // sigma_- = [base+1, 1]: appended new minimum.
    if (sigma[static_cast<size_t>(k - 1)] == 1) {
        std::vector<int> base(sigma.begin(), sigma.end() - 1);
        for (auto& v : base) --v;
        if (auto w = factorization_width(base, pos.first(static_cast<size_t>(k - 1)))) {
            w->push_back(span);
            return w;
        }
    }
    // sigma_++ = [k-1, k, base]: two prepended maxima.
    if (sigma[0] == k - 1 && sigma[1] == k) {
        std::vector<int> base(sigma.begin() + 2, sigma.end());
        if (auto w = factorization_width(base, pos.subspan(2))) {
            w->push_back(span);
            w->push_back(pos[2] - pos[1]);
            return w;
        }
    }
    // sigma_-- = [base+2, 1, 2]: two appended minima.
    if (sigma[static_cast<size_t>(k - 2)] == 1 && sigma[static_cast<size_t>(k - 1)] == 2) {
        std::vector<int> base(sigma.begin(), sigma.end() - 2);
        for (auto& v : base) v -= 2;
        if (auto w = factorization_width(base, pos.first(static_cast<size_t>(k - 2)))) {
            w->push_back(span);
            w->push_back(pos[static_cast<size_t>(k - 2)] - pos[static_cast<size_t>(k - 3)]);
            return w;
        }
    }
    return std::nullopt;
}

Permutation window_shift(const Permutation& sigma, int n, int j) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
    for (int t = 1; t <= sigma.size(); ++t) w[static_cast<size_t>(j - 1 + t - 1)] = j - 1 + sigma(t);
    return Permutation(std::move(w));
}

bool contiguous(const std::vector<int>& pos) {
    for (size_t i = 1; i < pos.size(); ++i)
        if (pos[i] != pos[i - 1] + 1) return false;
    return true;
}

struct VacateSearch {
    const Permutation* sigma = nullptr;
    int n = 0;
    long budget = 1'000'000;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    std::optional<PatternFactorization> run(const Permutation& x, const Permutation& cur, std::vector<int> pos,
                                            std::vector<int>& uword) {
        if (contiguous(pos)) {
            if (auto fac = assemble(x, cur, pos.front(), uword)) return fac;
        }
        if (!seen.insert({cur.oneline(), pos}).second) return std::nullopt;
        if (--budget < 0) return std::nullopt;
        // Any length-decreasing swap touching the spanned window is a legal
        // move, as long as it does not reorder two pattern entries; the swap
        // drags a pattern entry along when it sits on one side.
        const int lo = std::max(1, pos.front() - 1);
        const int hi = std::min(n - 1, pos.back());
        for (int c = lo; c <= hi; ++c) {
            if (cur(c) <= cur(c + 1)) continue;
            const bool left_in = std::binary_search(pos.begin(), pos.end(), c);
            const bool right_in = std::binary_search(pos.begin(), pos.end(), c + 1);
            if (left_in && right_in) continue;
            auto next_pos = pos;
            if (left_in)
                *std::lower_bound(next_pos.begin(), next_pos.end(), c) = c + 1;
            else if (right_in)
                *std::lower_bound(next_pos.begin(), next_pos.end(), c + 1) = c;
            uword.push_back(c);
            if (auto fac = run(x, cur.right_mult_s(c), std::move(next_pos), uword)) return fac;
            uword.pop_back();
        }
        return std::nullopt;
    }

    std::optional<PatternFactorization> assemble(const Permutation& x, const Permutation& cur, int j,
                                                 const std::vector<int>& uword) {
        const int k = sigma->size();
        const Permutation sp = window_shift(*sigma, n, j);
        const Permutation u = Permutation::from_word(n, uword);
        const Permutation z = u.inverse();
        const Permutation y = cur * sp.inverse();
        if (y.length() + sp.length() + z.length() != x.length()) return std::nullopt;
        if (!(y * sp * z == x)) return std::nullopt;
        for (int i = j; i <= j + k - 2; ++i) {
            if (y.has_right_descent(i)) return std::nullopt;
            if (z.has_left_descent(i)) return std::nullopt;
        }
        return PatternFactorization{y, sp, z, j};
    }
};

}  // namespace

bool factorization_supported(const Permutation& sigma) {
    const int k = sigma.size();
    std::vector<int> probe(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) probe[static_cast<size_t>(i)] = i + 1;
    return factorization_width(sigma.oneline(), probe).has_value();
}

std::optional<PatternFactorization> factor_over_pattern(const Permutation& x, const Permutation& sigma) {
    if (!factorization_supported(sigma))
        throw unsupported_pattern("pattern does not admit a bountiful width system: " + sigma.to_string());
    auto all = pattern_instances(x, sigma);
    if (all.empty()) return std::nullopt;

    std::vector<std::pair<std::vector<int>, PatternPositions>> order;
    order.reserve(all.size());
    for (auto& inst : all) {
        auto w = factorization_width(sigma.oneline(), inst);
        order.emplace_back(std::move(*w), std::move(inst));
    }
    std::sort(order.begin(), order.end());

    for (const auto& [w, inst] : order) {
        VacateSearch search;
        search.sigma = &sigma;
        search.n = x.size();
        std::vector<int> uword;
        if (auto fac = search.run(x, x, inst, uword)) return fac;
    }
    return std::nullopt;
}

}  // namespace zerohecke
