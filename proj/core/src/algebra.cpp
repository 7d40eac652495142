#include "zerohecke/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace zerohecke {

AlgebraElement AlgebraElement::one(int n) {
    return monomial(Permutation::identity(n));
}

AlgebraElement AlgebraElement::monomial(const Permutation& w, Rational coeff) {
    AlgebraElement out(w.size());
    if (coeff != 0)
        out.terms_.emplace_back(static_cast<std::uint32_t>(w.lehmer_rank()), std::move(coeff));
    return out;
}

AlgebraElement AlgebraElement::pi(int n, int i) {
    return monomial(Permutation::simple(n, i));
}

AlgebraElement AlgebraElement::pi_bar(int n, int i) {
    return one(n) - pi(n, i);
}

AlgebraElement AlgebraElement::from_sorted_terms(int n, std::vector<std::pair<std::uint32_t, Rational>> terms) {
    AlgebraElement out(n);
    out.terms_ = std::move(terms);
    return out;
}

Rational AlgebraElement::coefficient(const Permutation& w) const {
    const auto rank = static_cast<std::uint32_t>(w.lehmer_rank());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), rank,
                               [](const auto& t, std::uint32_t r) { return t.first < r; });
    if (it != terms_.end() && it->first == rank) return it->second;
    return 0;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch in algebra sum");
    AlgebraElement out(n_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i; ++j;
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(-1);
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement out(n_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [r, v] : terms_) out.terms_.emplace_back(r, v * c);
    return out;
}

namespace {

bool to_int64(const Rational& q, long long& out) {
    if (denominator(q) != 1) return false;
    const auto& num = numerator(q);
    if (num < std::numeric_limits<long long>::min() / 4 || num > std::numeric_limits<long long>::max() / 4)
        return false;
    out = static_cast<long long>(num);
    return true;
}

}  // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch in algebra product");
    AlgebraElement out(n_);
    if (terms_.empty() || o.terms_.empty()) return out;

    if (n_ <= 7) {
        const HeckeTable& table = HeckeTable::get(n_);
        table.ensure_full_table();
        const std::uint32_t size = table.size();

        // Integer fast path: accumulate in int64 when no cancellation pattern
        // can overflow (sum of |a_i| times sum of |b_j| bounds every cell).
        bool small = true;
        BigInt abs_a = 0, abs_b = 0;
        std::vector<std::pair<std::uint32_t, long long>> ta, tb;
        ta.reserve(terms_.size());
        tb.reserve(o.terms_.size());
        for (const auto& [r, c] : terms_) {
            long long v;
            if (!to_int64(c, v)) { small = false; break; }
            ta.emplace_back(r, v);
            abs_a += v < 0 ? -v : v;
        }
        if (small)
            for (const auto& [r, c] : o.terms_) {
                long long v;
                if (!to_int64(c, v)) { small = false; break; }
                tb.emplace_back(r, v);
                abs_b += v < 0 ? -v : v;
            }
        if (small && abs_a * abs_b < BigInt(1) << 62) {
            std::vector<long long> scratch(size, 0);
            for (const auto& [ra, ca] : ta) {
                const std::uint16_t* row = table.full_row(static_cast<std::uint16_t>(ra));
                for (const auto& [rb, cb] : tb)
                    scratch[row[rb]] += ca * cb;
            }
            for (std::uint32_t r = 0; r < size; ++r)
                if (scratch[r] != 0) out.terms_.emplace_back(r, Rational(scratch[r]));
            return out;
        }

        std::vector<Rational> scratch(size, Rational(0));
        for (const auto& [ra, ca] : terms_) {
            const std::uint16_t* row = table.full_row(static_cast<std::uint16_t>(ra));
            for (const auto& [rb, cb] : o.terms_)
                scratch[row[rb]] += ca * cb;
        }
        for (std::uint32_t r = 0; r < size; ++r)
            if (scratch[r] != 0) out.terms_.emplace_back(r, std::move(scratch[r]));
        return out;
    }

    // Large rank: no Cayley table; fold stored reduced words through the
    // generator action, accumulating in an ordered map.
    std::map<std::uint32_t, Rational> acc;
    std::vector<std::vector<int>> words;
    words.reserve(o.terms_.size());
    for (const auto& [rb, cb] : o.terms_)
        words.push_back(Permutation::from_lehmer_rank(n_, rb).reduced_word());
    for (const auto& [ra, ca] : terms_) {
        Permutation a = Permutation::from_lehmer_rank(n_, ra);
        for (size_t j = 0; j < o.terms_.size(); ++j) {
            Permutation p = a;
            for (int i : words[j]) p = pi_right(p, i);
            Rational& cell = acc[static_cast<std::uint32_t>(p.lehmer_rank())];
            cell += ca * o.terms_[j].second;
        }
    }
    for (auto& [r, c] : acc)
        if (c != 0) out.terms_.emplace_back(r, std::move(c));
    return out;
}

AlgebraElement AlgebraElement::dynkin() const {
    std::vector<std::pair<std::uint32_t, Rational>> mapped;
    mapped.reserve(terms_.size());
    for (const auto& [r, c] : terms_) {
        const Permutation w = dynkin_automorphism(Permutation::from_lehmer_rank(n_, r));
        mapped.emplace_back(static_cast<std::uint32_t>(w.lehmer_rank()), c);
    }
    std::sort(mapped.begin(), mapped.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return from_sorted_terms(n_, std::move(mapped));
}

bool AlgebraElement::coefficients_pm_one() const {
    for (const auto& [r, c] : terms_)
        if (c != 1 && c != -1) return false;
    return true;
}

std::vector<std::pair<Permutation, Rational>> AlgebraElement::sorted_terms() const {
    std::vector<std::pair<Permutation, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [r, c] : terms_)
        out.emplace_back(Permutation::from_lehmer_rank(n_, r), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const long la = a.first.length(), lb = b.first.length();
        if (la != lb) return la < lb;
        return a.first.oneline() < b.first.oneline();
    });
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : sorted_terms()) {
        if (!out.empty()) out += " ";
        out += "(" + w.to_string() + ": " + c.str() + ")";
    }
    return out;
}

AlgebraElement longest_signed(const std::set<int>& J, bool plus, int n) {
    const Permutation wj = parabolic_longest(J, n);
    if (plus) return AlgebraElement::monomial(wj);
    AlgebraElement out = AlgebraElement::one(n);
    for (int i : wj.reduced_word()) out = out * AlgebraElement::pi_bar(n, i);
    return out;
}

}  // namespace zerohecke
