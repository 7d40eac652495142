#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerohecke {

struct crystal_error : std::runtime_error {
    explicit crystal_error(const std::string& what) : std::runtime_error(what) {}
};
// Raised by CrystalGraph::validate when a structural axiom fails.
struct crystal_verification_error : std::runtime_error {
    explicit crystal_verification_error(const std::string& what) : std::runtime_error(what) {}
};

enum class CartanFamily { A, B };

// Cartan datum for A_n (any rank) and B_2 (used by comparison doctests only).
struct CartanDatum {
    CartanFamily family = CartanFamily::A;
    int rank = 1;

    bool operator==(const CartanDatum&) const = default;
    // Colors 1..rank.
    int num_colors() const { return rank; }
    // Coordinates of the weight vectors.
    int weight_dim() const;
    // <h_i, alpha_j>.
    int pairing(int i, int j) const;
    std::vector<int> simple_root(int i) const;
    int h_pairing(int i, const std::vector<int>& wt) const;
    // "A2", "B2".
    std::string name() const;
};

// Letters of the standard one-box crystal, in string order:
// A_n: 1..n+1; B_2: 1, 2, 0, -2, -1.
std::vector<int> crystal_letters(const CartanDatum& c);
std::optional<int> letter_f(const CartanDatum& c, int i, int a);
std::optional<int> letter_e(const CartanDatum& c, int i, int a);
std::vector<int> letter_weight(const CartanDatum& c, int a);
int letter_eps(const CartanDatum& c, int i, int a);
int letter_phi(const CartanDatum& c, int i, int a);

// A tensor word of letters, leftmost factor first. Crystal operators follow
// the signature rule: each factor contributes '-'^eps then '+'^phi, adjacent
// "+-" pairs cancel, f acts at the first surviving '+', e at the last
// surviving '-'. Well defined on arbitrary words, members of a crystal or not.
using LetterWord = std::vector<int>;

std::optional<LetterWord> word_f(const CartanDatum& c, int i, const LetterWord& w);
std::optional<LetterWord> word_e(const CartanDatum& c, int i, const LetterWord& w);
int word_eps(const CartanDatum& c, int i, const LetterWord& w);
int word_phi(const CartanDatum& c, int i, const LetterWord& w);
std::vector<int> word_weight(const CartanDatum& c, const LetterWord& w);

// Young tableau in French convention: rows[0] is the bottom (longest) row.
// Printed bottom row first: [[1,2],[2]].
struct Tableau {
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;

    static Tableau highest_weight(const std::vector<int>& shape);
    // Rows scanned top row to bottom, each left to right, then reversed into
    // tensor order; the unique reading that reproduces the validation figure.
    LetterWord reading_word() const;
    static Tableau from_reading_word(const LetterWord& w, const std::vector<int>& shape);
    std::string to_string() const;
    // Weakly increasing rows, strictly increasing columns bottom to top,
    // entries in 1..max_entry. Type-A notion; advisory elsewhere.
    bool is_semistandard(int max_entry) const;
};

// Edge-colored digraph with weights; vertex ids are dense 0-based.
class CrystalGraph {
public:
    CartanDatum cartan;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> weights;
    // f_succ[i-1][v] = target of the i-colored edge out of v, or -1.
    std::vector<std::vector<int>> f_succ;
    std::vector<std::vector<int>> e_succ;

    explicit CrystalGraph(CartanDatum c) : cartan(c) {}

    int size() const { return static_cast<int>(labels.size()); }
    int add_vertex(std::string label, std::vector<int> weight);
    void set_f(int i, int from, int to);  // records the e-inverse too
    int F(int i, int v) const { return f_succ[static_cast<size_t>(i - 1)][static_cast<size_t>(v)]; }
    int E(int i, int v) const { return e_succ[static_cast<size_t>(i - 1)][static_cast<size_t>(v)]; }
    int eps(int i, int v) const;
    int phi(int i, int v) const;
    std::optional<int> vertex_of_label(const std::string& label) const;
    std::vector<int> highest_weight_vertices() const;

    // Asserts the six defining properties on every vertex; throws
    // crystal_verification_error naming the first failure.
    void validate() const;

    // Connected components under all f-edges (optionally extra successor
    // maps, e.g. induced 0-edges), each sorted, ordered by least vertex.
    std::vector<std::vector<int>> components(
        const std::vector<std::vector<int>>& extra_succ = {}) const;
    bool connected() const { return components().size() <= 1; }

    std::string to_dot() const;
    std::string to_json() const;
};

// Closure of the highest-weight tableau under the word operators. Type A
// requires at most rank+1 rows; vertex labels are tableau strings.
CrystalGraph tableau_crystal(const CartanDatum& c, const std::vector<int>& shape);
// The one-box crystal, labels the letters themselves.
CrystalGraph letter_crystal(const CartanDatum& c);
// Two-factor tensor product on vertex pairs (left index major):
// f acts left iff phi_1 > eps_2, e acts left iff phi_1 >= eps_2.
CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2);

// Local finite differences at (v, i, j):
//   delta_eps = eps_j(e_i v) jump, delta_phi = phi_j(e_i v) jump (0 when e_i
//   undefined); nabla_eps, nabla_phi likewise for f_i. The triple is
//   (<h_j, alpha_i>, delta_eps, delta_phi), absent when e_i v is undefined.
struct StembridgeStats {
    int delta_eps = 0;
    int delta_phi = 0;
    int nabla_eps = 0;
    int nabla_phi = 0;
    std::optional<std::array<int, 3>> triple;
};
StembridgeStats stembridge_statistics(const CrystalGraph& g, int v, int i, int j);
// Same statistics on an ambient tensor word (no graph membership needed).
StembridgeStats stembridge_statistics(const CartanDatum& c, const LetterWord& w, int i, int j);

struct StembridgeFailure {
    int vertex;
    int i, j;
    std::string axiom;  // "P3-P4", "P5", "P6", with "dual-" prefix on the mirrored pass
};
struct StembridgeReport {
    bool pass = true;
    std::vector<StembridgeFailure> failures;
};
// Local axioms over ordered color pairs from index_subset (default: all
// colors). Conclusive for simply-laced types; advisory otherwise. The
// mirrored (dual) pass is off by default.
StembridgeReport check_stembridge(const CrystalGraph& g,
                                  const std::vector<int>& index_subset = {},
                                  bool dual = false);

// Weyl reflection r_i: flip v in its i-string.
int weyl_reflect(const CrystalGraph& g, int v, int i);

// A promotion operator: vertex bijection pr with wt(pr b) the cyclic weight
// shift, pr f_i = f_{i+1} pr for classical i < rank, pr^{rank+1} = id.
// f0 is the induced affine 0-edge map pr . f_rank . pr^-1 (-1 = none).
struct PromotionOperator {
    std::vector<int> perm;
    std::vector<int> f0;
    bool connected;  // classical edges plus 0-edges
};
// Exhaustive search by weight-seeded DFS with intertwining propagation;
// type A only; throws crystal_error above size_limit vertices.
std::vector<PromotionOperator> promotion_search(const CrystalGraph& g, int size_limit = 200);

}  // namespace zerohecke
