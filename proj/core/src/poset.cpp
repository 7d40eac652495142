#include "zerohecke/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zerohecke {

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("duplicate label");
    Poset p;
    p.labels_ = std::move(labels);
    const int n = p.size();
    p.leq_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) p.leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (const auto& [lo, hi] : covers)
        p.leq_[static_cast<size_t>(p.index_of(lo))][static_cast<size_t>(p.index_of(hi))] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq(i, k))
                for (int j = 0; j < n; ++j)
                    if (p.leq(k, j)) p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i)) throw std::invalid_argument("relation has a cycle");
    return p;
}

Poset Poset::parse(const std::string& text) {
    std::vector<std::string> labels;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> covers;
    std::istringstream lines(text);
    std::string line;
    auto declare = [&](const std::string& l) {
        if (seen.insert(l).second) labels.push_back(l);
    };
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        std::string w;
        while (words >> w) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            declare(tok[0]);
        } else if (tok.size() == 3 && tok[1] == "<") {
            declare(tok[0]);
            declare(tok[2]);
            covers.emplace_back(tok[0], tok[2]);
        } else {
            throw std::invalid_argument("expected 'a < b' or a bare element: " + line);
        }
    }
    return from_covers(std::move(labels), covers);
}

Poset Poset::chain(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("chain size must be 1..9");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
    return from_covers(std::move(labels), covers);
}

Poset Poset::antichain(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("antichain size must be 1..9");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return from_covers(std::move(labels), {});
}

Poset Poset::boolean_lattice(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("boolean lattice rank must be 1..5");
    const int m = 1 << k;
    auto name = [&](int mask) {
        std::string s(static_cast<size_t>(k), '0');
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) s[static_cast<size_t>(k - 1 - b)] = '1';
        return s;
    };
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int mask = 0; mask < m; ++mask) labels.push_back(name(mask));
    for (int mask = 0; mask < m; ++mask)
        for (int b = 0; b < k; ++b)
            if (!(mask >> b & 1)) covers.emplace_back(name(mask), name(mask | 1 << b));
    return from_covers(std::move(labels), covers);
}

Poset Poset::diamond() {
    return from_covers({"bot", "mid1", "mid2", "top"},
                       {{"bot", "mid1"}, {"bot", "mid2"}, {"mid1", "top"}, {"mid2", "top"}});
}

Poset Poset::pentagon() {
    return from_covers({"1", "2", "3", "4", "5"},
                       {{"1", "2"}, {"2", "5"}, {"1", "3"}, {"3", "4"}, {"4", "5"}});
}

int Poset::index_of(const std::string& label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw std::invalid_argument("unknown label " + label);
    return static_cast<int>(it - labels_.begin());
}

bool Poset::covers(int a, int b) const {
    if (!lt(b, a)) return false;
    for (int c = 0; c < size(); ++c)
        if (lt(b, c) && lt(c, a)) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<int> Poset::minimals() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        bool minimal = true;
        for (int y = 0; y < size() && minimal; ++y)
            if (lt(y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::joins(const std::vector<int>& s) const {
    std::vector<int> ubs;
    for (int x = 0; x < size(); ++x) {
        bool ub = true;
        for (int e : s)
            if (!leq(e, x)) {
                ub = false;
                break;
            }
        if (ub) ubs.push_back(x);
    }
    std::vector<int> out;
    for (int x : ubs) {
        bool minimal = true;
        for (int y : ubs)
            if (lt(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::join_closure(const std::vector<int>& s) const {
    std::vector<bool> in(static_cast<size_t>(size()), false);
    for (int x : s) in[static_cast<size_t>(x)] = true;
    for (int x : minimals()) in[static_cast<size_t>(x)] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < size(); ++a) {
            if (!in[static_cast<size_t>(a)]) continue;
            for (int b = a + 1; b < size(); ++b) {
                if (!in[static_cast<size_t>(b)]) continue;
                for (int j : joins({a, b}))
                    if (!in[static_cast<size_t>(j)]) {
                        in[static_cast<size_t>(j)] = true;
                        changed = true;
                    }
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (in[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

bool Poset::is_meet_semilattice() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b) {
            try {
                meet(a, b);
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
    return true;
}

int Poset::meet(int a, int b) const {
    std::vector<int> lbs;
    for (int x = 0; x < size(); ++x)
        if (leq(x, a) && leq(x, b)) lbs.push_back(x);
    int found = -1;
    for (int x : lbs) {
        bool maximal = true;
        for (int y : lbs)
            if (lt(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) {
            if (found >= 0) throw std::invalid_argument("meet is not unique");
            found = x;
        }
    }
    if (found < 0) throw std::invalid_argument("no common lower bound");
    return found;
}

std::vector<int> Poset::default_linear_extension() const {
    std::vector<int> order(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) order[static_cast<size_t>(i)] = i;
    if (is_linear_extension(order)) return order;
    std::vector<bool> placed(static_cast<size_t>(size()), false);
    order.clear();
    while (static_cast<int>(order.size()) < size()) {
        for (int x = 0; x < size(); ++x) {
            if (placed[static_cast<size_t>(x)]) continue;
            bool ready = true;
            for (int y = 0; y < size() && ready; ++y)
                if (lt(y, x) && !placed[static_cast<size_t>(y)]) ready = false;
            if (ready) {
                placed[static_cast<size_t>(x)] = true;
                order.push_back(x);
                break;
            }
        }
    }
    return order;
}

bool Poset::is_linear_extension(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != size()) return false;
    std::vector<bool> seen(static_cast<size_t>(size()), false);
    for (int x : order) {
        if (x < 0 || x >= size() || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = true;
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (lt(order[j], order[i])) return false;
    return true;
}

}  // namespace zerohecke
