#include "zerohecke/orp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace zerohecke {

std::string OrpFunction::to_string(const Poset& p) const {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += p.label(values[i]);
    }
    return out + "]";
}

OrpFunction orp_identity(const Poset& p) {
    OrpFunction f;
    f.values.resize(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) f.values[static_cast<size_t>(x)] = x;
    return f;
}

bool is_orp(const Poset& p, const OrpFunction& f) {
    if (static_cast<int>(f.values.size()) != p.size()) return false;
    for (int x = 0; x < p.size(); ++x) {
        if (f(x) < 0 || f(x) >= p.size() || !p.leq(f(x), x)) return false;
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y) && !p.leq(f(x), f(y))) return false;
    }
    return true;
}

OrpFunction orp_compose(const OrpFunction& f, const OrpFunction& g) {
    if (f.values.size() != g.values.size())
        throw std::invalid_argument("functions on different posets");
    OrpFunction h;
    h.values.resize(f.values.size());
    for (size_t x = 0; x < f.values.size(); ++x) h.values[x] = g(f.values[x]);
    return h;
}

std::vector<OrpFunction> generate_orp(const Poset& p) {
    if (p.size() > 8) throw std::invalid_argument("poset too large to enumerate");
    const std::vector<int> ext = p.default_linear_extension();
    std::vector<OrpFunction> out;
    std::vector<int> values(static_cast<size_t>(p.size()), -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == p.size()) {
            out.push_back(OrpFunction{values});
            return;
        }
        const int e = ext[static_cast<size_t>(i)];
        for (int v = 0; v < p.size(); ++v) {
            if (!p.leq(v, e)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                const int u = ext[static_cast<size_t>(j)];
                if (p.leq(u, e) && !p.leq(values[static_cast<size_t>(u)], v)) ok = false;
            }
            if (!ok) continue;
            values[static_cast<size_t>(e)] = v;
            rec(i + 1);
            values[static_cast<size_t>(e)] = -1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_image_set(const Poset& p, const std::vector<int>& image) {
    std::vector<bool> in(static_cast<size_t>(p.size()), false);
    for (int x : image) in[static_cast<size_t>(x)] = true;
    for (int m : p.minimals())
        if (!in[static_cast<size_t>(m)]) return false;
    for (int a : image)
        for (int b : image)
            for (int j : p.joins({a, b}))
                if (!in[static_cast<size_t>(j)]) return false;
    return true;
}

OrpFunction sup_function(const Poset& p, const std::vector<int>& image) {
    OrpFunction f;
    f.values.resize(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
        std::vector<int> below;
        for (int y : image)
            if (p.leq(y, x)) below.push_back(y);
        int found = -1;
        for (int y : below) {
            bool maximal = true;
            for (int z : below)
                if (p.lt(y, z)) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                if (found >= 0) throw std::invalid_argument("image has two maxima below an element");
                found = y;
            }
        }
        if (found < 0) throw std::invalid_argument("image has no element below an element");
        f.values[static_cast<size_t>(x)] = found;
    }
    return f;
}

std::vector<std::pair<std::vector<int>, OrpFunction>> orp_idempotents(const Poset& p) {
    if (p.size() > 8) throw std::invalid_argument("poset too large to enumerate");
    std::vector<std::pair<std::vector<int>, OrpFunction>> out;
    for (int mask = 0; mask < (1 << p.size()); ++mask) {
        std::vector<int> image;
        for (int x = 0; x < p.size(); ++x)
            if (mask >> x & 1) image.push_back(x);
        if (!is_valid_image_set(p, image)) continue;
        out.emplace_back(image, sup_function(p, image));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<int> image_of(const OrpFunction& f) {
    std::vector<int> image(f.values);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

std::vector<int> fiber_minimals(const Poset& p, const OrpFunction& f) {
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x) {
        bool minimal = true;
        for (int y = 0; y < p.size() && minimal; ++y)
            if (f(y) == f(x) && p.lt(y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

std::pair<OrpFunction, OrpFunction> lfix_rfix(const Poset& p, const OrpFunction& f) {
    const OrpFunction lfix = sup_function(p, p.join_closure(fiber_minimals(p, f)));
    const OrpFunction rfix = sup_function(p, p.join_closure(image_of(f)));
    return {lfix, rfix};
}

bool cartan_triangularity_check(const Poset& p, const std::vector<int>& extension) {
    if (!p.is_linear_extension(extension))
        throw std::invalid_argument("order is not a linear extension");
    auto indicator = [&](const OrpFunction& g) {
        std::vector<bool> in(static_cast<size_t>(p.size()), false);
        for (int v : image_of(g)) in[static_cast<size_t>(v)] = true;
        std::vector<int> bits;
        for (int e : extension) bits.push_back(in[static_cast<size_t>(e)] ? 1 : 0);
        return bits;
    };
    for (const OrpFunction& f : generate_orp(p)) {
        const auto [l, r] = lfix_rfix(p, f);
        const auto bl = indicator(l);
        const auto br = indicator(r);
        if (bl > br) return false;
        if ((bl == br) != (orp_compose(f, f) == f)) return false;
    }
    return true;
}

OrpFunction e_ab(const Poset& p, int a, int b) {
    if (!p.leq(b, a)) throw std::invalid_argument("lower element is not below upper");
    OrpFunction f;
    f.values.resize(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x)
        f.values[static_cast<size_t>(x)] = p.leq(x, a) ? p.meet(x, b) : x;
    return f;
}

std::vector<std::pair<int, int>> factor_idempotent(const Poset& p, const OrpFunction& f,
                                                   const std::vector<int>& extension) {
    if (!is_orp(p, f)) throw std::invalid_argument("not a regressive order-preserving function");
    if (!(orp_compose(f, f) == f)) throw not_idempotent_error("function is not idempotent");
    if (!p.is_linear_extension(extension))
        throw std::invalid_argument("order is not a linear extension");
    std::vector<int> epos(static_cast<size_t>(p.size()));
    for (size_t i = 0; i < extension.size(); ++i) epos[static_cast<size_t>(extension[i])] = static_cast<int>(i);
    std::vector<int> cur(f.values);
    std::vector<std::vector<std::pair<int, int>>> chains;
    for (int k = p.size() - 1; k >= 0; --k) {
        const int a = extension[static_cast<size_t>(k)];
        const int b = cur[static_cast<size_t>(a)];
        if (b == a) continue;
        std::vector<std::pair<int, int>> chain;
        int c = a;
        while (c != b) {
            int best = -1;
            for (int d = 0; d < p.size(); ++d)
                if (p.covers(c, d) && p.leq(b, d) &&
                    (best < 0 || epos[static_cast<size_t>(d)] < epos[static_cast<size_t>(best)]))
                    best = d;
            if (best < 0) throw std::logic_error("no saturated chain step inside the interval");
            chain.emplace_back(c, best);
            c = best;
        }
        chains.push_back(std::move(chain));
        cur[static_cast<size_t>(a)] = a;
    }
    std::vector<std::pair<int, int>> seq;
    for (auto it = chains.rbegin(); it != chains.rend(); ++it)
        seq.insert(seq.end(), it->begin(), it->end());
    return seq;
}

OrpMonoid::OrpMonoid(const Poset& p) : p_(p), elems_(generate_orp(p)) {
    for (size_t i = 0; i < elems_.size(); ++i)
        index_.emplace(elems_[i].values, static_cast<int>(i));
    identity_ = index_of(orp_identity(p_));
    const int m = size();
    table_.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                index_.at(orp_compose(element(a), element(b)).values);
}

int OrpMonoid::index_of(const OrpFunction& f) const {
    const auto it = index_.find(f.values);
    if (it == index_.end()) throw std::invalid_argument("function is not in the monoid");
    return it->second;
}

OrpAlgebraElement OrpAlgebraElement::zero(std::shared_ptr<const OrpMonoid> m) {
    return OrpAlgebraElement(std::move(m));
}

OrpAlgebraElement OrpAlgebraElement::one(std::shared_ptr<const OrpMonoid> m) {
    const int e = m->identity_index();
    return monomial(std::move(m), e);
}

OrpAlgebraElement OrpAlgebraElement::monomial(std::shared_ptr<const OrpMonoid> m, int x,
                                              Rational coeff) {
    OrpAlgebraElement out(std::move(m));
    if (x < 0 || x >= out.m_->size()) throw std::invalid_argument("element index out of range");
    if (coeff != 0) out.terms_.emplace_back(x, std::move(coeff));
    return out;
}

Rational OrpAlgebraElement::coefficient(int x) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                                     [](const auto& t, int v) { return t.first < v; });
    if (it == terms_.end() || it->first != x) return 0;
    return it->second;
}

OrpAlgebraElement OrpAlgebraElement::operator+(const OrpAlgebraElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("elements over different monoids");
    OrpAlgebraElement out(m_);
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

OrpAlgebraElement OrpAlgebraElement::operator-(const OrpAlgebraElement& o) const {
    return *this + o.scaled(-1);
}

OrpAlgebraElement OrpAlgebraElement::operator*(const OrpAlgebraElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("elements over different monoids");
    std::vector<Rational> acc(static_cast<size_t>(m_->size()), Rational(0));
    for (const auto& [x, cx] : terms_)
        for (const auto& [y, cy] : o.terms_)
            acc[static_cast<size_t>(m_->product(x, y))] += cx * cy;
    OrpAlgebraElement out(m_);
    for (int z = 0; z < m_->size(); ++z)
        if (acc[static_cast<size_t>(z)] != 0)
            out.terms_.emplace_back(z, std::move(acc[static_cast<size_t>(z)]));
    return out;
}

OrpAlgebraElement OrpAlgebraElement::scaled(const Rational& c) const {
    OrpAlgebraElement out(m_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [x, coeff] : out.terms_) coeff *= c;
    return out;
}

SemilatticeDemipotentReport semilattice_demipotents(const Poset& p,
                                                    const std::vector<int>& extension) {
    if (!p.is_meet_semilattice()) throw std::invalid_argument("poset is not a meet semilattice");
    if (!p.is_linear_extension(extension))
        throw std::invalid_argument("order is not a linear extension");
    const int n = p.size();
    const auto monoid = std::make_shared<const OrpMonoid>(p);
    const OrpAlgebraElement one = OrpAlgebraElement::one(monoid);
    std::vector<bool> minimal(static_cast<size_t>(n), false);
    for (int m : p.minimals()) minimal[static_cast<size_t>(m)] = true;

    // Minimal upper bounds of {a, b} within the first k+1 extension elements.
    auto prefix_join_hits = [&](int a, int b, int k) {
        std::vector<int> ubs;
        for (int j = 0; j <= k; ++j) {
            const int u = extension[static_cast<size_t>(j)];
            if (p.leq(a, u) && p.leq(b, u)) ubs.push_back(u);
        }
        std::vector<int> out;
        for (int u : ubs) {
            bool min_ub = true;
            for (int v : ubs)
                if (p.lt(v, u)) {
                    min_ub = false;
                    break;
                }
            if (min_ub) out.push_back(u);
        }
        return out;
    };

    SemilatticeDemipotentReport report;
    report.monoid = monoid;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string signs(static_cast<size_t>(n), '+');
        std::vector<int> image;
        for (int k = 0; k < n; ++k) {
            if (mask >> k & 1)
                signs[static_cast<size_t>(k)] = '-';
            else
                image.push_back(extension[static_cast<size_t>(k)]);
        }
        std::sort(image.begin(), image.end());
        if (!is_valid_image_set(p, image)) continue;

        OrpAlgebraElement left = one;
        OrpAlgebraElement right = one;
        std::set<int> prefix_image;
        for (int k = 0; k < n; ++k) {
            const int x = extension[static_cast<size_t>(k)];
            const bool plus = signs[static_cast<size_t>(k)] == '+';
            if (minimal[static_cast<size_t>(x)]) {
                if (!plus) throw std::logic_error("minimal element marked minus in valid diagram");
                prefix_image.insert(x);
                continue;
            }
            bool prefix_join = false;
            for (int a : prefix_image) {
                for (int b : prefix_image) {
                    if (a >= b) continue;
                    const auto hits = prefix_join_hits(a, b, k);
                    if (std::find(hits.begin(), hits.end(), x) != hits.end()) {
                        prefix_join = true;
                        break;
                    }
                }
                if (prefix_join) break;
            }
            if (prefix_join) {
                if (!plus) throw std::logic_error("prefix join marked minus in valid diagram");
                prefix_image.insert(x);
                continue;
            }
            int b = -1;
            for (int y : prefix_image) {
                if (!p.leq(y, x)) continue;
                bool maximal = true;
                for (int z : prefix_image)
                    if (p.leq(z, x) && p.lt(y, z)) {
                        maximal = false;
                        break;
                    }
                if (maximal) {
                    if (b >= 0) throw std::logic_error("two maximal image elements below a node");
                    b = y;
                }
            }
            if (b < 0) throw std::logic_error("no image element below a non-minimal node");
            const OrpAlgebraElement gen =
                OrpAlgebraElement::monomial(monoid, monoid->index_of(e_ab(p, x, b)));
            const OrpAlgebraElement factor = plus ? one - gen : gen;
            left = left * factor;
            right = factor * right;
            if (plus) prefix_image.insert(x);
        }

        SemilatticeDemipotent entry{signs, image, left * right, one, 0, false, false};
        OrpAlgebraElement power = entry.demipotent;
        entry.degree = 1;
        for (int it = 0; it <= 2 * n + 3; ++it) {
            const OrpAlgebraElement next = power * entry.demipotent;
            if (next == power) {
                entry.demipotent_ok = true;
                break;
            }
            power = next;
            ++entry.degree;
        }
        entry.idempotent = power;
        entry.idempotent_first_power = (entry.demipotent * entry.demipotent == entry.demipotent);
        report.entries.push_back(std::move(entry));
    }

    OrpAlgebraElement total = OrpAlgebraElement::zero(monoid);
    for (const auto& entry : report.entries) total = total + entry.demipotent;
    report.sum_is_identity = (total == one);
    report.orthogonal = true;
    report.orthogonal_first_power = true;
    for (size_t i = 0; i < report.entries.size(); ++i)
        for (size_t j = 0; j < report.entries.size(); ++j) {
            if (i == j) continue;
            if (!(report.entries[i].idempotent * report.entries[j].idempotent).is_zero())
                report.orthogonal = false;
            if (!(report.entries[i].demipotent * report.entries[j].demipotent).is_zero())
                report.orthogonal_first_power = false;
        }
    return report;
}

}  // namespace zerohecke
