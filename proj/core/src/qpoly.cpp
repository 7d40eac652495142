#include "zerohecke/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace zerohecke {

void LaurentPoly::put(int e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::mono(int exponent, Rational coeff) {
    LaurentPoly p;
    p.put(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.put(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.put(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

int LaurentPoly::valuation() const {
    if (terms_.empty()) throw qpoly_domain_error("valuation of zero polynomial");
    return terms_.begin()->first;
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Rational LaurentPoly::at_zero() const {
    if (!terms_.empty() && terms_.begin()->first < 0)
        throw qpoly_domain_error("evaluation at 0 with negative exponents");
    return coefficient(0);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = c < 0 ? Rational(-c) : c;
        bool unit = a == 1 && e != 0;
        if (!unit) out << a.str();
        if (e != 0) {
            if (!unit) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly q_int(int n) {
    if (n < 0) throw qpoly_domain_error("q_int of negative argument");
    LaurentPoly p;
    for (int e = -(n - 1); e <= n - 1; e += 2) p = p + LaurentPoly::mono(e);
    return p;
}

LaurentPoly q_factorial(int n) {
    if (n < 0) throw qpoly_domain_error("q_factorial of negative argument");
    LaurentPoly r = LaurentPoly::mono(0);
    for (int m = 2; m <= n; ++m) r = r * q_int(m);
    return r;
}

LaurentPoly q_binomial(int n, int k) {
    if (n < 0) throw qpoly_domain_error("q_binomial with negative n");
    if (k < 0 || k > n) return LaurentPoly();
    // Gaussian binomial in t = q^2 by the Pascal recurrence
    // G(m, c) = G(m-1, c-1) + t^c G(m-1, c), then recentered by q^(-k(n-k)).
    std::vector<LaurentPoly> row{LaurentPoly::mono(0)};
    for (int m = 1; m <= n; ++m) {
        std::vector<LaurentPoly> next{LaurentPoly::mono(0)};
        for (int c = 1; c < m; ++c)
            next.push_back(row[static_cast<size_t>(c - 1)] +
                           LaurentPoly::mono(2 * c) * row[static_cast<size_t>(c)]);
        next.push_back(LaurentPoly::mono(0));
        row = std::move(next);
    }
    return LaurentPoly::mono(-k * (n - k)) * row[static_cast<size_t>(k)];
}

LaurentPoly structure_constants(int j, int x, int y) {
    if (j < 0 || x < 0 || y < 0) throw qpoly_domain_error("structure_constants domain");
    return LaurentPoly::mono(j * y - x * y) * q_binomial(x + y, x);
}

TensorState f1_expansion(int j, int n, int jcap, int kcap) {
    TensorState st{{{0, 0}, LaurentPoly::mono(0)}};
    for (int step = 0; step < n; ++step) {
        TensorState next;
        for (const auto& [xy, c] : st) {
            auto [x, y] = xy;
            if (jcap < 0 || x < jcap) {
                auto& t = next[{x + 1, y}];
                t = t + c;
            }
            if (kcap < 0 || y < kcap) {
                auto& t = next[{x, y + 1}];
                t = t + c * LaurentPoly::mono(j - 2 * x);
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        st = std::move(next);
    }
    return st;
}

TensorState e0_expansion(int j, int k, int n, int alpha, int beta) {
    TensorState st{{{0, 0}, LaurentPoly::mono(0)}};
    for (int step = 0; step < n; ++step) {
        TensorState next;
        for (const auto& [xy, c] : st) {
            auto [x, y] = xy;
            if (x < j) {
                auto& t = next[{x + 1, y}];
                t = t + c * LaurentPoly::mono(alpha + k - 2 * y);
            }
            if (y < k) {
                auto& t = next[{x, y + 1}];
                t = t + c * LaurentPoly::mono(beta);
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        st = std::move(next);
    }
    return st;
}

bool divided_power_identity_check(int j, int k) {
    if (j < 0 || k < 0) throw qpoly_domain_error("divided_power_identity_check domain");
    // Divided-power ladder: coefficient of f^x u (x) f^y v in f^n(u (x) v)
    // times [x]![y]! must equal q^(jy-xy) [n]!; multiplication-only form.
    for (int n = 0; n <= j + k; ++n) {
        TensorState st = f1_expansion(j, n, j, k);
        for (int x = std::max(0, n - k); x <= std::min(j, n); ++x) {
            int y = n - x;
            auto it = st.find({x, y});
            LaurentPoly lhs =
                (it == st.end() ? LaurentPoly() : it->second) * q_factorial(x) * q_factorial(y);
            LaurentPoly rhs = LaurentPoly::mono(j * y - x * y) * q_factorial(n);
            if (!(lhs == rhs)) return false;
        }
    }
    // At the top of the ladder a single term survives.
    TensorState top = f1_expansion(j, j + k, j, k);
    if (top.size() != 1 || top.begin()->first != std::make_pair(j, k)) return false;
    return top.begin()->second * q_factorial(j) * q_factorial(k) == q_factorial(j + k);
}

ZeroStringReport evaluation_zero_string(int j, int k, int alpha, int beta) {
    if (j < 0 || k < 0) throw qpoly_domain_error("evaluation_zero_string domain");
    bool connected_case = (alpha == 0 && beta == 0);
    bool disconnected_case = (alpha == -k && beta == j);
    if (!connected_case && !disconnected_case)
        throw qpoly_domain_error("inadmissible evaluation parameters");

    ZeroStringReport rep;
    rep.e0_equals_f1 = true;
    rep.traces_zero_string = true;
    for (int n = 0; n <= j + k; ++n) {
        TensorState st = e0_expansion(j, k, n, alpha, beta);
        auto exponent = [&](const std::pair<int, int>& xy) {
            return k * xy.first - xy.first * xy.second + alpha * xy.first + beta * xy.second;
        };
        int best = 0;
        bool have = false;
        for (const auto& [xy, c] : st) {
            int v = exponent(xy);
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
        ZeroStringStep step;
        step.n = n;
        for (const auto& [xy, c] : st)
            if (exponent(xy) == best) step.leading.push_back(xy);
        std::sort(step.leading.begin(), step.leading.end());
        if (!(st == f1_expansion(j, n, j, k))) rep.e0_equals_f1 = false;
        if (n >= 1) {
            std::pair<int, int> expect = n <= k ? std::make_pair(0, n) : std::make_pair(n - k, k);
            if (step.leading.size() != 1 || step.leading.front() != expect)
                rep.traces_zero_string = false;
        }
        rep.steps.push_back(std::move(step));
    }
    // j = k = 0 satisfies both parameter families; the one-vertex graph is connected.
    rep.verdict = connected_case ? "connected" : "disconnected";
    return rep;
}

}  // namespace zerohecke
