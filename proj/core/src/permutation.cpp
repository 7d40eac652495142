#include "zerohecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zerohecke {

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
    const int n = static_cast<int>(w_.size());
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("one-line notation is not a bijection of 1..N");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    Permutation w = identity(n);
    std::swap(w.w_[static_cast<size_t>(i - 1)], w.w_[static_cast<size_t>(i)]);
    return w;
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
    Permutation w = identity(n);
    for (int i : word) w = w.right_mult_s(i);
    return w;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        w.push_back(std::stoi(item));
    }
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (size() != v.size()) throw std::invalid_argument("size mismatch in product");
    std::vector<int> out(w_.size());
    for (size_t i = 0; i < w_.size(); ++i)
        out[i] = w_[static_cast<size_t>(v.w_[i] - 1)];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(w_.size());
    for (size_t i = 0; i < w_.size(); ++i)
        out[static_cast<size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(out));
}

Permutation Permutation::right_mult_s(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("generator index out of range");
    Permutation out = *this;
    std::swap(out.w_[static_cast<size_t>(i - 1)], out.w_[static_cast<size_t>(i)]);
    return out;
}

Permutation Permutation::left_mult_s(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("generator index out of range");
    Permutation out = *this;
    for (auto& v : out.w_) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return out;
}

long Permutation::length() const {
    long inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (has_right_descent(i)) out.push_back(i);
    return out;
}

bool Permutation::has_left_descent(int i) const {
    // i is a left descent iff i appears to the right of i+1 in the one-line word.
    int pos_i = 0, pos_i1 = 0;
    for (int p = 0; p < size(); ++p) {
        if (w_[static_cast<size_t>(p)] == i) pos_i = p;
        else if (w_[static_cast<size_t>(p)] == i + 1) pos_i1 = p;
    }
    return pos_i > pos_i1;
}

std::vector<int> Permutation::left_descents() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (has_left_descent(i)) out.push_back(i);
    return out;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
        int d = 0;
        for (int i = 1; i < w.size(); ++i) {
            if (w.has_left_descent(i)) { d = i; break; }
        }
        if (d == 0) break;
        word.push_back(d);
        w = w.left_mult_s(d);
    }
    return word;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t Permutation::lehmer_rank() const {
    const int n = size();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t code = 0;
        for (int j = i + 1; j < n; ++j)
            if (w_[static_cast<size_t>(j)] < w_[static_cast<size_t>(i)]) ++code;
        rank += code * factorial(n - 1 - i);
    }
    return rank;
}

Permutation Permutation::from_lehmer_rank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        if (idx >= pool.size()) throw std::invalid_argument("rank out of range");
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w_[i]);
    }
    out += "]";
    return out;
}

}  // namespace zerohecke
