#include "zerohecke/hecke_monoid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace zerohecke {

Permutation pi_right(const Permutation& w, int i) {
    if (w.has_right_descent(i)) return w;
    return w.right_mult_s(i);
}

Permutation pi_left(const Permutation& w, int i) {
    if (w.has_left_descent(i)) return w;
    return w.left_mult_s(i);
}

Permutation hecke_product(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank mismatch in hecke_product");
    Permutation out = a;
    for (int i : b.reduced_word()) out = pi_right(out, i);
    return out;
}

std::set<int> support(const Permutation& w) {
    auto word = w.reduced_word();
    return std::set<int>(word.begin(), word.end());
}

Permutation parabolic_longest(const std::set<int>& J, int n) {
    // Maximal runs [a..b] of consecutive indices in J give blocks of positions
    // a..b+1; the longest element reverses each block.
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    auto it = J.begin();
    while (it != J.end()) {
        int a = *it, b = a;
        ++it;
        while (it != J.end() && *it == b + 1) { b = *it; ++it; }
        if (a < 1 || b >= n) throw std::invalid_argument("parabolic index out of range");
        std::reverse(w.begin() + a - 1, w.begin() + b + 1);
    }
    return Permutation(std::move(w));
}

Permutation hecke_omega(const Permutation& x) {
    Permutation cur = x;
    for (;;) {
        Permutation next = hecke_product(cur, x);
        if (next == cur) return cur;
        cur = next;
    }
}

Permutation dynkin_automorphism(const Permutation& w) {
    const Permutation w0 = Permutation::longest(w.size());
    return w0 * w * w0;
}

Evaluated evaluation_map(const Permutation& w, int i, bool plus) {
    if (!plus) {
        auto s = support(w);
        if (s.count(i)) return Evaluated{true, Permutation::identity(w.size())};
        return Evaluated{false, w};
    }
    Permutation out = Permutation::identity(w.size());
    for (int letter : w.reduced_word())
        if (letter != i) out = pi_right(out, letter);
    return Evaluated{false, out};
}

int lambda_J(const Permutation& x, const std::set<int>& J) {
    const auto s = support(x);
    for (int i : s)
        if (J.count(i)) return 0;
    return 1;
}

std::vector<Permutation> descent_class_basis(int n, const std::set<int>& J) {
    std::vector<Permutation> out;
    const std::uint64_t total = factorial(n);
    for (std::uint64_t r = 0; r < total; ++r) {
        Permutation w = Permutation::from_lehmer_rank(n, r);
        auto d = w.left_descents();
        if (std::set<int>(d.begin(), d.end()) == J) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        const long la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.oneline() < b.oneline();
    });
    return out;
}

std::optional<Permutation> descent_class_action(const Permutation& w, int i) {
    Permutation next = pi_right(w, i);
    if (next.left_descents() == w.left_descents()) return next;
    return std::nullopt;
}

HeckeTable::HeckeTable(int n) : n_(n) {
    if (n < 1 || n > 8) throw std::invalid_argument("HeckeTable supports 1 <= N <= 8");
    const std::uint64_t total = factorial(n);
    size_ = static_cast<std::uint32_t>(total);
    right_action_.resize(static_cast<size_t>(size_) * static_cast<size_t>(std::max(0, n - 1)));
    length_.resize(size_);
    parent_.resize(size_);
    last_letter_.resize(size_);

    for (std::uint32_t r = 0; r < size_; ++r) {
        Permutation w = Permutation::from_lehmer_rank(n, r);
        length_[r] = static_cast<std::uint16_t>(w.length());
        int peel = 0;
        for (int i = 1; i < n; ++i) {
            const Permutation next = pi_right(w, i);
            right_action_[static_cast<size_t>(r) * static_cast<size_t>(n - 1) + static_cast<size_t>(i - 1)] =
                static_cast<std::uint16_t>(next.lehmer_rank());
            if (peel == 0 && w.has_right_descent(i)) peel = i;
        }
        if (peel != 0) {
            parent_[r] = static_cast<std::uint16_t>(w.right_mult_s(peel).lehmer_rank());
            last_letter_[r] = static_cast<std::uint8_t>(peel);
        } else {
            parent_[r] = static_cast<std::uint16_t>(r);
            last_letter_[r] = 0;
        }
    }

    by_length_.resize(size_);
    for (std::uint32_t r = 0; r < size_; ++r) by_length_[r] = r;
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [this](std::uint32_t a, std::uint32_t b) { return length_[a] < length_[b]; });
}

const HeckeTable& HeckeTable::get(int n) {
    static std::map<int, std::unique_ptr<HeckeTable>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<HeckeTable>(new HeckeTable(n))).first;
    return *it->second;
}

std::vector<int> HeckeTable::word(std::uint16_t x) const {
    std::vector<int> reversed;
    while (last_letter_[x] != 0) {
        reversed.push_back(last_letter_[x]);
        x = parent_[x];
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

std::uint16_t HeckeTable::mul(std::uint16_t a, std::uint16_t b) const {
    if (!full_.empty())
        return full_[static_cast<size_t>(a) * static_cast<size_t>(size_) + static_cast<size_t>(b)];
    std::uint16_t out = a;
    for (int i : word(b)) out = right(out, i);
    return out;
}

void HeckeTable::ensure_full_table() const {
    if (!full_.empty()) return;
    if (n_ > 7) throw std::invalid_argument("full Cayley table limited to N <= 7");
    full_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
    for (std::uint32_t a = 0; a < size_; ++a) {
        std::uint16_t* row = full_.data() + static_cast<size_t>(a) * static_cast<size_t>(size_);
        for (std::uint32_t b : by_length_) {
            if (last_letter_[b] == 0) {
                row[b] = static_cast<std::uint16_t>(a);
            } else {
                row[b] = right(row[parent_[b]], last_letter_[b]);
            }
        }
    }
}

}  // namespace zerohecke
