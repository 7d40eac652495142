#include "zerohecke/crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace zerohecke {

int CartanDatum::weight_dim() const {
    return family == CartanFamily::A ? rank + 1 : rank;
}

int CartanDatum::pairing(int i, int j) const {
    if (family == CartanFamily::A) {
        if (i == j) return 2;
        return std::abs(i - j) == 1 ? -1 : 0;
    }
    if (i == j) return 2;
    return i == 1 ? -1 : -2;  // <h1,a2> = -1, <h2,a1> = -2
}

std::vector<int> CartanDatum::simple_root(int i) const {
    std::vector<int> v(static_cast<size_t>(weight_dim()), 0);
    if (family == CartanFamily::A) {
        v[static_cast<size_t>(i - 1)] = 1;
        v[static_cast<size_t>(i)] = -1;
    } else if (i == 1) {
        v[0] = 1;
        v[1] = -1;
    } else {
        v[1] = 1;
    }
    return v;
}

int CartanDatum::h_pairing(int i, const std::vector<int>& wt) const {
    if (family == CartanFamily::A) return wt[static_cast<size_t>(i - 1)] - wt[static_cast<size_t>(i)];
    return i == 1 ? wt[0] - wt[1] : 2 * wt[1];
}

std::string CartanDatum::name() const {
    return (family == CartanFamily::A ? "A" : "B") + std::to_string(rank);
}

static void require_supported(const CartanDatum& c) {
    if (c.rank < 1) throw crystal_error("rank must be positive");
    if (c.family == CartanFamily::B && c.rank != 2)
        throw crystal_error("family B supported at rank 2 only");
}

std::vector<int> crystal_letters(const CartanDatum& c) {
    require_supported(c);
    if (c.family == CartanFamily::A) {
        std::vector<int> out(static_cast<size_t>(c.rank + 1));
        std::iota(out.begin(), out.end(), 1);
        return out;
    }
    return {1, 2, 0, -2, -1};
}

std::optional<int> letter_f(const CartanDatum& c, int i, int a) {
    if (c.family == CartanFamily::A) {
        if (a == i) return a + 1;
        return std::nullopt;
    }
    if (i == 1) {
        if (a == 1) return 2;
        if (a == -2) return -1;
        return std::nullopt;
    }
    if (a == 2) return 0;
    if (a == 0) return -2;
    return std::nullopt;
}

std::optional<int> letter_e(const CartanDatum& c, int i, int a) {
    if (c.family == CartanFamily::A) {
        if (a == i + 1) return a - 1;
        return std::nullopt;
    }
    if (i == 1) {
        if (a == 2) return 1;
        if (a == -1) return -2;
        return std::nullopt;
    }
    if (a == 0) return 2;
    if (a == -2) return 0;
    return std::nullopt;
}

std::vector<int> letter_weight(const CartanDatum& c, int a) {
    std::vector<int> v(static_cast<size_t>(c.weight_dim()), 0);
    if (c.family == CartanFamily::A) {
        v[static_cast<size_t>(a - 1)] = 1;
        return v;
    }
    if (a == 1) v[0] = 1;
    else if (a == -1) v[0] = -1;
    else if (a == 2) v[1] = 1;
    else if (a == -2) v[1] = -1;
    return v;
}

int letter_eps(const CartanDatum& c, int i, int a) {
    int n = 0;
    for (auto x = letter_e(c, i, a); x; x = letter_e(c, i, *x)) ++n;
    return n;
}

int letter_phi(const CartanDatum& c, int i, int a) {
    int n = 0;
    for (auto x = letter_f(c, i, a); x; x = letter_f(c, i, *x)) ++n;
    return n;
}

namespace {

struct SignatureScan {
    std::vector<int> unmatched_minus;  // factor indices, left to right
    std::vector<int> unmatched_plus;
};

SignatureScan scan(const CartanDatum& c, int i, const LetterWord& w) {
    SignatureScan s;
    for (size_t idx = 0; idx < w.size(); ++idx) {
        int ne = letter_eps(c, i, w[idx]);
        for (int t = 0; t < ne; ++t) {
            if (!s.unmatched_plus.empty())
                s.unmatched_plus.pop_back();
            else
                s.unmatched_minus.push_back(static_cast<int>(idx));
        }
        int np = letter_phi(c, i, w[idx]);
        for (int t = 0; t < np; ++t) s.unmatched_plus.push_back(static_cast<int>(idx));
    }
    return s;
}

}  // namespace

std::optional<LetterWord> word_f(const CartanDatum& c, int i, const LetterWord& w) {
    SignatureScan s = scan(c, i, w);
    if (s.unmatched_plus.empty()) return std::nullopt;
    size_t k = static_cast<size_t>(s.unmatched_plus.front());
    LetterWord out = w;
    out[k] = *letter_f(c, i, w[k]);
    return out;
}

std::optional<LetterWord> word_e(const CartanDatum& c, int i, const LetterWord& w) {
    SignatureScan s = scan(c, i, w);
    if (s.unmatched_minus.empty()) return std::nullopt;
    size_t k = static_cast<size_t>(s.unmatched_minus.back());
    LetterWord out = w;
    out[k] = *letter_e(c, i, w[k]);
    return out;
}

int word_eps(const CartanDatum& c, int i, const LetterWord& w) {
    return static_cast<int>(scan(c, i, w).unmatched_minus.size());
}

int word_phi(const CartanDatum& c, int i, const LetterWord& w) {
    return static_cast<int>(scan(c, i, w).unmatched_plus.size());
}

std::vector<int> word_weight(const CartanDatum& c, const LetterWord& w) {
    std::vector<int> total(static_cast<size_t>(c.weight_dim()), 0);
    for (int a : w) {
        std::vector<int> lw = letter_weight(c, a);
        for (size_t d = 0; d < total.size(); ++d) total[d] += lw[d];
    }
    return total;
}

Tableau Tableau::highest_weight(const std::vector<int>& shape) {
    Tableau t;
    t.shape = shape;
    for (size_t r = 0; r < shape.size(); ++r)
        t.rows.emplace_back(static_cast<size_t>(shape[r]), static_cast<int>(r) + 1);
    return t;
}

LetterWord Tableau::reading_word() const {
    LetterWord w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    std::reverse(w.begin(), w.end());
    return w;
}

Tableau Tableau::from_reading_word(const LetterWord& w, const std::vector<int>& shape) {
    Tableau t;
    t.shape = shape;
    LetterWord rev(w.rbegin(), w.rend());
    size_t pos = 0;
    std::vector<std::vector<int>> chunks;
    for (auto it = shape.rbegin(); it != shape.rend(); ++it) {
        chunks.emplace_back(rev.begin() + static_cast<long>(pos),
                            rev.begin() + static_cast<long>(pos) + *it);
        pos += static_cast<size_t>(*it);
    }
    t.rows.assign(chunks.rbegin(), chunks.rend());
    return t;
}

std::string Tableau::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out << ',';
        out << '[';
        for (size_t k = 0; k < rows[r].size(); ++k) {
            if (k) out << ',';
            out << rows[r][k];
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

bool Tableau::is_semistandard(int max_entry) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t k = 0; k < rows[r].size(); ++k) {
            int v = rows[r][k];
            if (v < 1 || v > max_entry) return false;
            if (k > 0 && rows[r][k - 1] > v) return false;
            if (r > 0 && rows[r - 1][k] >= v) return false;
        }
    }
    return true;
}

int CrystalGraph::add_vertex(std::string label, std::vector<int> weight) {
    labels.push_back(std::move(label));
    weights.push_back(std::move(weight));
    if (f_succ.empty()) {
        f_succ.assign(static_cast<size_t>(cartan.num_colors()), {});
        e_succ.assign(static_cast<size_t>(cartan.num_colors()), {});
    }
    for (auto& col : f_succ) col.push_back(-1);
    for (auto& col : e_succ) col.push_back(-1);
    return size() - 1;
}

void CrystalGraph::set_f(int i, int from, int to) {
    f_succ[static_cast<size_t>(i - 1)][static_cast<size_t>(from)] = to;
    e_succ[static_cast<size_t>(i - 1)][static_cast<size_t>(to)] = from;
}

int CrystalGraph::eps(int i, int v) const {
    int n = 0;
    for (int x = E(i, v); x >= 0; x = E(i, x)) {
        if (++n > size()) throw crystal_verification_error("cyclic string for color " + std::to_string(i));
    }
    return n;
}

int CrystalGraph::phi(int i, int v) const {
    int n = 0;
    for (int x = F(i, v); x >= 0; x = F(i, x)) {
        if (++n > size()) throw crystal_verification_error("cyclic string for color " + std::to_string(i));
    }
    return n;
}

std::optional<int> CrystalGraph::vertex_of_label(const std::string& label) const {
    for (int v = 0; v < size(); ++v)
        if (labels[static_cast<size_t>(v)] == label) return v;
    return std::nullopt;
}

std::vector<int> CrystalGraph::highest_weight_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        bool hw = true;
        for (int i = 1; i <= cartan.num_colors(); ++i)
            if (E(i, v) >= 0) hw = false;
        if (hw) out.push_back(v);
    }
    return out;
}

void CrystalGraph::validate() const {
    auto fail = [](const std::string& what) { throw crystal_verification_error(what); };
    for (int v = 0; v < size(); ++v) {
        for (int i = 1; i <= cartan.num_colors(); ++i) {
            int ep = eps(i, v), ph = phi(i, v);  // also rejects cyclic strings
            if (ph != ep + cartan.h_pairing(i, weights[static_cast<size_t>(v)]))
                fail("phi != eps + <h, wt> at vertex " + std::to_string(v));
            int fv = F(i, v);
            if (fv >= 0) {
                if (fv >= size()) fail("f target out of range");
                if (E(i, fv) != v) fail("f without matching e at vertex " + std::to_string(v));
                std::vector<int> expect = weights[static_cast<size_t>(v)];
                std::vector<int> root = cartan.simple_root(i);
                for (size_t d = 0; d < expect.size(); ++d) expect[d] -= root[d];
                if (weights[static_cast<size_t>(fv)] != expect)
                    fail("wt(f b) != wt(b) - alpha at vertex " + std::to_string(v));
                if (eps(i, fv) != ep + 1 || phi(i, fv) != ph - 1)
                    fail("eps/phi step along f at vertex " + std::to_string(v));
            }
            int ev = E(i, v);
            if (ev >= 0) {
                if (ev >= size()) fail("e target out of range");
                if (F(i, ev) != v) fail("e without matching f at vertex " + std::to_string(v));
                std::vector<int> expect = weights[static_cast<size_t>(v)];
                std::vector<int> root = cartan.simple_root(i);
                for (size_t d = 0; d < expect.size(); ++d) expect[d] += root[d];
                if (weights[static_cast<size_t>(ev)] != expect)
                    fail("wt(e b) != wt(b) + alpha at vertex " + std::to_string(v));
                if (eps(i, ev) != ep - 1 || phi(i, ev) != ph + 1)
                    fail("eps/phi step along e at vertex " + std::to_string(v));
            }
        }
    }
}

std::vector<std::vector<int>> CrystalGraph::components(
    const std::vector<std::vector<int>>& extra_succ) const {
    std::vector<int> parent(static_cast<size_t>(size()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
    };
    for (const auto& col : f_succ)
        for (int v = 0; v < size(); ++v)
            if (col[static_cast<size_t>(v)] >= 0) unite(v, col[static_cast<size_t>(v)]);
    for (const auto& col : extra_succ)
        for (int v = 0; v < size(); ++v)
            if (col[static_cast<size_t>(v)] >= 0) unite(v, col[static_cast<size_t>(v)]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < size(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::string CrystalGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph crystal {\n  rankdir=TB;\n";
    for (int v = 0; v < size(); ++v)
        out << "  v" << v << " [label=\"" << labels[static_cast<size_t>(v)] << "\"];\n";
    for (int i = 1; i <= cartan.num_colors(); ++i)
        for (int v = 0; v < size(); ++v)
            if (int w = F(i, v); w >= 0)
                out << "  v" << v << " -> v" << w << " [label=\"" << i << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string CrystalGraph::to_json() const {
    std::ostringstream out;
    out << "{\"cartan\":\"" << cartan.name() << "\",\"vertices\":[";
    for (int v = 0; v < size(); ++v) {
        if (v) out << ',';
        out << "{\"id\":" << v << ",\"label\":\"" << labels[static_cast<size_t>(v)]
            << "\",\"weight\":[";
        const auto& w = weights[static_cast<size_t>(v)];
        for (size_t d = 0; d < w.size(); ++d) {
            if (d) out << ',';
            out << w[d];
        }
        out << "]}";
    }
    out << "],\"edges\":[";
    bool first = true;
    for (int i = 1; i <= cartan.num_colors(); ++i)
        for (int v = 0; v < size(); ++v)
            if (int w = F(i, v); w >= 0) {
                if (!first) out << ',';
                first = false;
                out << "{\"color\":" << i << ",\"from\":" << v << ",\"to\":" << w << "}";
            }
    out << "]}";
    return out.str();
}

namespace {

// Closure of seed words under the word operators; labels via labeler.
template <typename Labeler>
CrystalGraph close_words(const CartanDatum& c, const std::vector<LetterWord>& seeds,
                         Labeler&& labeler) {
    CrystalGraph g(c);
    std::map<LetterWord, int> index;
    std::vector<LetterWord> todo;
    for (const auto& s : seeds) {
        if (index.count(s)) continue;
        index[s] = g.add_vertex(labeler(s), word_weight(c, s));
        todo.push_back(s);
    }
    while (!todo.empty()) {
        LetterWord w = std::move(todo.back());
        todo.pop_back();
        int v = index.at(w);
        for (int i = 1; i <= c.num_colors(); ++i) {
            if (auto u = word_f(c, i, w)) {
                auto it = index.find(*u);
                if (it == index.end()) {
                    it = index.emplace(*u, g.add_vertex(labeler(*u), word_weight(c, *u))).first;
                    todo.push_back(*u);
                }
                g.set_f(i, v, it->second);
            }
            if (auto u = word_e(c, i, w)) {
                auto it = index.find(*u);
                if (it == index.end()) {
                    it = index.emplace(*u, g.add_vertex(labeler(*u), word_weight(c, *u))).first;
                    todo.push_back(*u);
                }
                g.set_f(i, it->second, v);
            }
        }
    }
    return g;
}

}  // namespace

CrystalGraph tableau_crystal(const CartanDatum& c, const std::vector<int>& shape) {
    require_supported(c);
    for (size_t r = 1; r < shape.size(); ++r)
        if (shape[r] > shape[r - 1]) throw crystal_error("shape is not a partition");
    int max_rows = c.family == CartanFamily::A ? c.rank + 1 : c.rank;
    if (static_cast<int>(shape.size()) > max_rows) throw crystal_error("shape-too-tall");
    LetterWord hw = Tableau::highest_weight(shape).reading_word();
    return close_words(c, {hw}, [&](const LetterWord& w) {
        return Tableau::from_reading_word(w, shape).to_string();
    });
}

CrystalGraph letter_crystal(const CartanDatum& c) {
    require_supported(c);
    std::vector<LetterWord> seeds;
    for (int a : crystal_letters(c)) seeds.push_back({a});
    return close_words(c, seeds, [](const LetterWord& w) { return std::to_string(w[0]); });
}

CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2) {
    if (!(b1.cartan == b2.cartan)) throw crystal_error("type-mismatch in tensor product");
    CrystalGraph g(b1.cartan);
    int n2 = b2.size();
    auto pair_index = [n2](int v1, int v2) { return v1 * n2 + v2; };
    for (int v1 = 0; v1 < b1.size(); ++v1)
        for (int v2 = 0; v2 < n2; ++v2) {
            std::vector<int> wt = b1.weights[static_cast<size_t>(v1)];
            for (size_t d = 0; d < wt.size(); ++d)
                wt[d] += b2.weights[static_cast<size_t>(v2)][d];
            g.add_vertex(b1.labels[static_cast<size_t>(v1)] + " (x) " +
                             b2.labels[static_cast<size_t>(v2)],
                         std::move(wt));
        }
    for (int v1 = 0; v1 < b1.size(); ++v1)
        for (int v2 = 0; v2 < n2; ++v2)
            for (int i = 1; i <= g.cartan.num_colors(); ++i) {
                int ph1 = b1.phi(i, v1), ep2 = b2.eps(i, v2);
                if (ph1 > ep2) {
                    if (int t = b1.F(i, v1); t >= 0) g.set_f(i, pair_index(v1, v2), pair_index(t, v2));
                } else {
                    if (int t = b2.F(i, v2); t >= 0) g.set_f(i, pair_index(v1, v2), pair_index(v1, t));
                }
            }
    return g;
}

StembridgeStats stembridge_statistics(const CrystalGraph& g, int v, int i, int j) {
    StembridgeStats s;
    int ev = g.E(i, v);
    if (ev >= 0) {
        s.delta_eps = -g.eps(j, ev) + g.eps(j, v);
        s.delta_phi = g.phi(j, ev) - g.phi(j, v);
        s.triple = std::array<int, 3>{g.cartan.pairing(j, i), s.delta_eps, s.delta_phi};
    }
    int fv = g.F(i, v);
    if (fv >= 0) {
        s.nabla_eps = -g.eps(j, v) + g.eps(j, fv);
        s.nabla_phi = g.phi(j, v) - g.phi(j, fv);
    }
    return s;
}

StembridgeStats stembridge_statistics(const CartanDatum& c, const LetterWord& w, int i, int j) {
    StembridgeStats s;
    if (auto ew = word_e(c, i, w)) {
        s.delta_eps = -word_eps(c, j, *ew) + word_eps(c, j, w);
        s.delta_phi = word_phi(c, j, *ew) - word_phi(c, j, w);
        s.triple = std::array<int, 3>{c.pairing(j, i), s.delta_eps, s.delta_phi};
    }
    if (auto fw = word_f(c, i, w)) {
        s.nabla_eps = -word_eps(c, j, w) + word_eps(c, j, *fw);
        s.nabla_phi = word_phi(c, j, w) - word_phi(c, j, *fw);
    }
    return s;
}

namespace {

int chain_e(const CrystalGraph& g, int v, std::initializer_list<int> seq) {
    for (int i : seq) {
        if (v < 0) return -1;
        v = g.E(i, v);
    }
    return v;
}

int chain_f(const CrystalGraph& g, int v, std::initializer_list<int> seq) {
    for (int i : seq) {
        if (v < 0) return -1;
        v = g.F(i, v);
    }
    return v;
}

int del_rise(const CrystalGraph& g, int v, int i, int j) {
    int fv = g.F(i, v);
    if (fv < 0) return 0;
    return g.phi(j, v) - g.phi(j, fv);
}

int delta_depth(const CrystalGraph& g, int v, int i, int j) {
    int ev = g.E(i, v);
    if (ev < 0) return 0;
    return -g.eps(j, ev) + g.eps(j, v);
}

}  // namespace

StembridgeReport check_stembridge(const CrystalGraph& g, const std::vector<int>& index_subset,
                                  bool dual) {
    std::vector<int> colors = index_subset;
    if (colors.empty())
        for (int i = 1; i <= g.cartan.num_colors(); ++i) colors.push_back(i);
    StembridgeReport rep;
    auto record = [&](int v, int i, int j, const char* axiom) {
        rep.pass = false;
        rep.failures.push_back({v, i, j, axiom});
    };
    for (int v = 0; v < g.size(); ++v)
        for (int i : colors)
            for (int j : colors) {
                if (i == j) continue;
                if (g.E(i, v) >= 0 && g.E(j, v) >= 0) {
                    StembridgeStats s = stembridge_statistics(g, v, i, j);
                    auto [a, de, dp] = *s.triple;
                    if (a != de + dp || de > 0 || dp > 0) {
                        record(v, i, j, "P3-P4");
                    } else {
                        if (de == 0) {
                            int y1 = chain_e(g, v, {i, j});
                            int y2 = chain_e(g, v, {j, i});
                            if (y1 < 0 || y1 != y2 || del_rise(g, y1, j, i) != 0)
                                record(v, i, j, "P5");
                        }
                        if (de == -1 && delta_depth(g, v, j, i) == -1) {
                            int y1 = chain_e(g, v, {j, i, i, j});
                            int y2 = chain_e(g, v, {i, j, j, i});
                            if (y1 < 0 || y2 < 0 || y1 != y2 || del_rise(g, y1, j, i) != -1 ||
                                del_rise(g, y2, i, j) != -1)
                                record(v, i, j, "P6");
                        }
                    }
                }
                if (dual && g.F(i, v) >= 0 && g.F(j, v) >= 0) {
                    StembridgeStats s = stembridge_statistics(g, v, i, j);
                    int a = g.cartan.pairing(j, i);
                    if (a != s.nabla_eps + s.nabla_phi || s.nabla_eps > 0 || s.nabla_phi > 0) {
                        record(v, i, j, "dual-P3-P4");
                    } else {
                        if (s.nabla_phi == 0) {
                            int y1 = chain_f(g, v, {i, j});
                            int y2 = chain_f(g, v, {j, i});
                            if (y1 < 0 || y1 != y2 || delta_depth(g, y1, j, i) != 0)
                                record(v, i, j, "dual-P5");
                        }
                        if (s.nabla_phi == -1 && del_rise(g, v, j, i) == -1) {
                            int y1 = chain_f(g, v, {j, i, i, j});
                            int y2 = chain_f(g, v, {i, j, j, i});
                            if (y1 < 0 || y2 < 0 || y1 != y2 || delta_depth(g, y1, j, i) != -1 ||
                                delta_depth(g, y2, i, j) != -1)
                                record(v, i, j, "dual-P6");
                        }
                    }
                }
            }
    return rep;
}

int weyl_reflect(const CrystalGraph& g, int v, int i) {
    int d = g.phi(i, v) - g.eps(i, v);
    if (d >= 0)
        for (int t = 0; t < d; ++t) v = g.F(i, v);
    else
        for (int t = 0; t < -d; ++t) v = g.E(i, v);
    return v;
}

std::vector<PromotionOperator> promotion_search(const CrystalGraph& g, int size_limit) {
    if (g.cartan.family != CartanFamily::A)
        throw crystal_error("promotion search requires a type-A crystal");
    int nv = g.size();
    if (nv > size_limit) throw crystal_error("size-limit exceeded in promotion search");
    int n = g.cartan.rank;

    std::map<std::vector<int>, std::vector<int>> by_wt;
    for (int v = 0; v < nv; ++v) by_wt[g.weights[static_cast<size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> cand(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        std::vector<int> w = g.weights[static_cast<size_t>(v)];
        std::rotate(w.begin(), w.begin() + static_cast<long>(w.size()) - 1, w.end());
        if (auto it = by_wt.find(w); it != by_wt.end()) cand[static_cast<size_t>(v)] = it->second;
    }

    std::vector<int> pr(static_cast<size_t>(nv), -1);
    std::vector<char> used(static_cast<size_t>(nv), 0);
    std::vector<std::vector<int>> results;

    // Propagates pr f_i = f_{i+1} pr and the e-version from v; records new
    // assignments in trail; false on contradiction.
    auto propagate = [&](int v, std::vector<int>& trail) {
        std::vector<int> queue{v};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            int y = pr[static_cast<size_t>(x)];
            for (int i = 1; i < n; ++i) {
                int fx = g.F(i, x), fy = g.F(i + 1, y);
                if ((fx < 0) != (fy < 0)) return false;
                if (fx >= 0) {
                    if (pr[static_cast<size_t>(fx)] < 0) {
                        if (used[static_cast<size_t>(fy)]) return false;
                        pr[static_cast<size_t>(fx)] = fy;
                        used[static_cast<size_t>(fy)] = 1;
                        trail.push_back(fx);
                        queue.push_back(fx);
                    } else if (pr[static_cast<size_t>(fx)] != fy) {
                        return false;
                    }
                }
                int ex = g.E(i, x), ey = g.E(i + 1, y);
                if ((ex < 0) != (ey < 0)) return false;
                if (ex >= 0) {
                    if (pr[static_cast<size_t>(ex)] < 0) {
                        if (used[static_cast<size_t>(ey)]) return false;
                        pr[static_cast<size_t>(ex)] = ey;
                        used[static_cast<size_t>(ey)] = 1;
                        trail.push_back(ex);
                        queue.push_back(ex);
                    } else if (pr[static_cast<size_t>(ex)] != ey) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, int v0) -> void {
        while (v0 < nv && pr[static_cast<size_t>(v0)] >= 0) ++v0;
        if (v0 == nv) {
            for (int v = 0; v < nv; ++v) {
                int x = v;
                for (int t = 0; t <= n; ++t) x = pr[static_cast<size_t>(x)];
                if (x != v) return;  // pr^{n+1} != id
            }
            results.push_back(pr);
            return;
        }
        for (int y : cand[static_cast<size_t>(v0)]) {
            if (used[static_cast<size_t>(y)]) continue;
            pr[static_cast<size_t>(v0)] = y;
            used[static_cast<size_t>(y)] = 1;
            std::vector<int> trail{v0};
            if (propagate(v0, trail)) self(self, v0 + 1);
            for (int x : trail) {
                used[static_cast<size_t>(pr[static_cast<size_t>(x)])] = 0;
                pr[static_cast<size_t>(x)] = -1;
            }
        }
    };
    dfs(dfs, 0);

    std::vector<PromotionOperator> out;
    for (const auto& p : results) {
        std::vector<int> inv(static_cast<size_t>(nv));
        for (int v = 0; v < nv; ++v) inv[static_cast<size_t>(p[static_cast<size_t>(v)])] = v;
        std::vector<int> f0(static_cast<size_t>(nv), -1);
        for (int y = 0; y < nv; ++y) {
            int fx = g.F(n, inv[static_cast<size_t>(y)]);
            if (fx >= 0) f0[static_cast<size_t>(y)] = p[static_cast<size_t>(fx)];
        }
        bool conn = g.components({f0}).size() <= 1;
        out.push_back({p, std::move(f0), conn});
    }
    return out;
}

}  // namespace zerohecke
