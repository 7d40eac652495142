#include "zerohecke/affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zerohecke {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long pos_mod(long long a, long long b) { return a - b * floor_div(a, b); }

std::vector<long long> parse_window(const std::string& text) {
    std::string body = text;
    std::erase_if(body, [](char c) { return c == '[' || c == ']' || c == ' '; });
    std::vector<long long> v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) v.push_back(std::stoll(tok));
    }
    return v;
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long long> window) : window_(std::move(window)) {
    const long long n = static_cast<long long>(window_.size());
    if (n < 2) throw std::invalid_argument("window needs at least two entries");
    std::set<long long> residues;
    long long sum = 0;
    for (long long v : window_) {
        residues.insert(pos_mod(v, n));
        sum += v;
    }
    if (static_cast<long long>(residues.size()) != n)
        throw std::invalid_argument("window residues must be distinct mod N");
    if (sum != n * (n + 1) / 2) throw std::invalid_argument("window sum must be N(N+1)/2");
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<long long> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return AffinePermutation(std::move(v));
}

AffinePermutation AffinePermutation::from_word(int n, const std::vector<int>& word) {
    auto x = identity(n);
    for (int i : word) x = x.right_mult_s(i);
    return x;
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
    return AffinePermutation(parse_window(text));
}

long long AffinePermutation::operator()(long long j) const {
    const long long n = size();
    const long long q = floor_div(j - 1, n);
    return window_[static_cast<size_t>(j - 1 - q * n)] + q * n;
}

long long AffinePermutation::inverse(long long v) const {
    const long long n = size();
    for (long long p = 1; p <= n; ++p)
        if (pos_mod(window_[static_cast<size_t>(p - 1)], n) == pos_mod(v, n))
            return p + (v - window_[static_cast<size_t>(p - 1)]);
    throw std::logic_error("residue not found");
}

bool AffinePermutation::is_identity() const {
    for (size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<long long>(i) + 1) return false;
    return true;
}

AffinePermutation AffinePermutation::right_mult_s(int i) const {
    const int n = size();
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    auto w = window_;
    if (i == 0) {
        w[0] = window_[static_cast<size_t>(n - 1)] - n;
        w[static_cast<size_t>(n - 1)] = window_[0] + n;
    } else {
        std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    }
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::left_mult_s(int i) const {
    const int n = size();
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    auto w = window_;
    for (auto& v : w) {
        const long long r = pos_mod(v, n);
        if (r == pos_mod(i, n))
            ++v;
        else if (r == pos_mod(i + 1, n))
            --v;
    }
    return AffinePermutation(std::move(w));
}

long long AffinePermutation::length() const {
    const long long n = size();
    long long total = 0;
    for (size_t i = 0; i < window_.size(); ++i)
        for (size_t j = i + 1; j < window_.size(); ++j) {
            long long d = floor_div(window_[j] - window_[i], n);
            total += d < 0 ? -d : d;
        }
    return total;
}

bool AffinePermutation::has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

std::vector<int> AffinePermutation::right_descents() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (has_right_descent(i)) out.push_back(i);
    return out;
}

std::vector<int> AffinePermutation::left_descents() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (inverse(i) > inverse(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> AffinePermutation::reduced_word() const {
    std::vector<int> word;
    auto x = *this;
    while (true) {
        auto ld = x.left_descents();
        if (ld.empty()) break;
        word.push_back(ld.front());
        x = x.left_mult_s(ld.front());
    }
    return word;
}

std::string AffinePermutation::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(window_[i]);
    }
    return out + "]";
}

std::vector<std::vector<AffinePermutation>> affine_length_ball(int n, int max_length) {
    std::vector<std::vector<AffinePermutation>> layers{{AffinePermutation::identity(n)}};
    std::set<AffinePermutation> seen{layers[0][0]};
    for (int d = 0; d < max_length; ++d) {
        std::vector<AffinePermutation> next;
        for (const auto& x : layers.back())
            for (int i = 0; i < n; ++i)
                if (!x.has_right_descent(i)) {
                    auto y = x.right_mult_s(i);
                    if (seen.insert(y).second) next.push_back(y);
                }
        layers.push_back(std::move(next));
    }
    return layers;
}

std::optional<std::array<long long, 3>> affine_find_321(const AffinePermutation& x) {
    const long long n = x.size();
    for (long long i = 2 - n; i <= n - 1; ++i)
        for (long long j = std::max<long long>(i + 1, 1); j <= std::min(i + n - 1, n); ++j) {
            if (x(i) <= x(j)) continue;
            for (long long k = j + 1; k <= j + n - 1; ++k)
                if (x(j) > x(k)) return std::array<long long, 3>{i, j, k};
        }
    return std::nullopt;
}

AffineNdpf::AffineNdpf(std::vector<long long> window) : window_(std::move(window)) {
    const long long n = static_cast<long long>(window_.size());
    if (n < 2) throw std::invalid_argument("window needs at least two entries");
    bool unit_gaps = true;
    for (long long i = 1; i <= n; ++i) {
        const long long v = window_[static_cast<size_t>(i - 1)];
        if (v > i) throw std::invalid_argument("affine ndpf must be regressive");
        const long long next = i < n ? window_[static_cast<size_t>(i)] : window_[0] + n;
        if (v > next) throw std::invalid_argument("affine ndpf must be order preserving");
        if (next - v != 1) unit_gaps = false;
    }
    if (unit_gaps && window_[0] != 1)
        throw std::invalid_argument("nontrivial translations are not affine ndpf elements");
}

AffineNdpf AffineNdpf::identity(int n) {
    std::vector<long long> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return AffineNdpf(std::move(v));
}

AffineNdpf AffineNdpf::generator(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    auto f = identity(n);
    f.window_[static_cast<size_t>(i)] = i;  // window position i+1 maps to i
    return f;
}

AffineNdpf AffineNdpf::parse(const std::string& text) { return AffineNdpf(parse_window(text)); }

long long AffineNdpf::operator()(long long j) const {
    const long long n = size();
    const long long q = floor_div(j - 1, n);
    return window_[static_cast<size_t>(j - 1 - q * n)] + q * n;
}

bool AffineNdpf::is_identity() const {
    for (size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<long long>(i) + 1) return false;
    return true;
}

std::string AffineNdpf::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(window_[i]);
    }
    return out + "]";
}

AffineNdpf affine_ndpf_compose(const AffineNdpf& f, const AffineNdpf& g) {
    if (f.size() != g.size()) throw std::invalid_argument("size mismatch");
    std::vector<long long> v(static_cast<size_t>(f.size()));
    for (long long i = 1; i <= f.size(); ++i) v[static_cast<size_t>(i - 1)] = g(f(i));
    return AffineNdpf(std::move(v));
}

AffineNdpf affine_quotient(const AffinePermutation& x) {
    const long long n = x.size();
    long long k0 = 1;
    for (long long p = 2; p <= n; ++p)
        if (x(p) < x(k0)) k0 = p;
    std::vector<long long> window(static_cast<size_t>(n));
    auto store = [&](long long p, long long v) {
        const long long q = floor_div(p - 1, n);
        window[static_cast<size_t>(p - 1 - q * n)] = v - q * n;
    };
    long long running = x(k0);
    store(k0, running);
    for (long long p = k0 - 1; p > k0 - n; --p) {
        running = std::min(x(p), running);
        store(p, running);
    }
    return AffineNdpf(std::move(window));
}

AffineNdpf affine_quotient_via_generators(const AffinePermutation& x) {
    auto f = AffineNdpf::identity(x.size());
    for (int i : x.reduced_word())
        f = affine_ndpf_compose(AffineNdpf::generator(x.size(), i), f);
    return f;
}

AffinePermutation affine_reconstruct(const AffineNdpf& f) {
    const long long n = f.size();
    std::vector<long long> window(static_cast<size_t>(n), 0);
    std::vector<long long> rest;
    std::set<long long> image_residues;
    long long target = n * (n + 1) / 2;
    for (long long m = 1; m <= n; ++m) {
        if (f(m) < f(m + 1)) {
            window[static_cast<size_t>(m - 1)] = f(m);
            image_residues.insert(pos_mod(f(m), n));
            target -= f(m);
        } else {
            rest.push_back(m);
        }
    }
    if (rest.empty()) return AffinePermutation(std::move(window));
    std::vector<long long> chain;
    const long long bound = 3 * n * n;
    for (long long v = -bound; v <= bound; ++v)
        if (!image_residues.contains(pos_mod(v, n))) chain.push_back(v);
    const size_t t = rest.size();
    for (size_t s = 0; s + t <= chain.size(); ++s) {
        long long sum = 0;
        for (size_t k = 0; k < t; ++k) sum += chain[s + k];
        if (sum == target) {
            for (size_t k = 0; k < t; ++k) window[static_cast<size_t>(rest[k] - 1)] = chain[s + k];
            return AffinePermutation(std::move(window));
        }
    }
    throw std::logic_error("no window-sum offset found");
}

}  // namespace zerohecke
