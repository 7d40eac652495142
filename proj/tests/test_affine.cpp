#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "zerohecke/affine.hpp"

using namespace zerohecke;

namespace {

const std::vector<std::vector<int>>& all_reduced_words(
    const AffinePermutation& x, std::map<AffinePermutation, std::vector<std::vector<int>>>& cache) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    const auto rd = x.right_descents();
    if (rd.empty()) {
        out.push_back({});
    } else {
        for (int i : rd)
            for (const auto& w : all_reduced_words(x.right_mult_s(i), cache)) {
                auto longer = w;
                longer.push_back(i);
                out.push_back(std::move(longer));
            }
    }
    return cache.emplace(x, std::move(out)).first->second;
}

bool word_has_braid(const std::vector<int>& word, int n) {
    for (size_t t = 0; t + 2 < word.size(); ++t) {
        const int gap = ((word[t + 1] - word[t]) % n + n) % n;
        if (word[t] == word[t + 2] && (gap == 1 || gap == n - 1)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("window validation and evaluation") {
    CHECK_THROWS_AS(AffinePermutation({1, 4, 1}), std::invalid_argument);  // residue clash
    CHECK_THROWS_AS(AffinePermutation({2, 3, 4}), std::invalid_argument);  // wrong sum
    const auto x = AffinePermutation::parse("[0,2,4]");
    CHECK(x.to_string() == "[0,2,4]");
    CHECK(x.size() == 3);
    CHECK(x(1) == 0);
    CHECK(x(4) == 3);
    CHECK(x(0) == 1);
    CHECK(x(-2) == -3);
    for (long long v = -5; v <= 5; ++v) CHECK(x(x.inverse(v)) == v);
    CHECK(AffinePermutation::identity(4).is_identity());
}

TEST_CASE("the wrap generator rotates the window ends") {
    const auto id3 = AffinePermutation::identity(3);
    const auto s0 = id3.right_mult_s(0);
    CHECK(s0 == AffinePermutation({0, 2, 4}));
    CHECK(s0.length() == 1);
    CHECK(s0.right_mult_s(0) == id3);
    CHECK(id3.right_mult_s(1) == AffinePermutation({2, 1, 3}));
    CHECK(id3.left_mult_s(0) == s0);
    for (int i = 0; i < 3; ++i) CHECK(id3.right_mult_s(i).length() == 1);
}

TEST_CASE("length by inversion classes matches the word metric") {
    for (int n = 2; n <= 4; ++n) {
        const auto layers = affine_length_ball(n, 8);
        for (size_t d = 0; d < layers.size(); ++d)
            for (const auto& x : layers[d]) {
                CHECK(x.length() == static_cast<long long>(d));
                for (int i = 0; i < n; ++i) {
                    const auto y = x.right_mult_s(i);
                    CHECK((y.length() == x.length() - 1) == x.has_right_descent(i));
                }
                const auto word = x.reduced_word();
                CHECK(static_cast<long long>(word.size()) == x.length());
                CHECK(AffinePermutation::from_word(n, word) == x);
            }
    }
}

TEST_CASE("parking generators: idempotent, commuting, collapsing around the cycle") {
    for (int n = 3; n <= 5; ++n) {
        for (int i = 0; i < n; ++i) {
            const auto f = AffineNdpf::generator(n, i);
            CHECK(affine_ndpf_compose(f, f) == f);
            for (int j = 0; j < n; ++j) {
                const int dist = std::min(((i - j) % n + n) % n, ((j - i) % n + n) % n);
                const auto g = AffineNdpf::generator(n, j);
                if (dist >= 2) CHECK(affine_ndpf_compose(f, g) == affine_ndpf_compose(g, f));
            }
            const auto g = AffineNdpf::generator(n, (i + 1) % n);
            const auto fgf = affine_ndpf_compose(affine_ndpf_compose(f, g), f);
            const auto gfg = affine_ndpf_compose(affine_ndpf_compose(g, f), g);
            CHECK(fgf == gfg);
            CHECK(fgf == affine_ndpf_compose(g, f));
        }
    }
}

TEST_CASE("translations are rejected, bounded windows are not") {
    CHECK_THROWS_AS(AffineNdpf({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(AffineNdpf({-1, 0, 1}), std::invalid_argument);
    CHECK(AffineNdpf({1, 1, 1}).window() == std::vector<long long>({1, 1, 1}));
    CHECK(AffineNdpf::generator(3, 0) == AffineNdpf({0, 2, 3}));
    CHECK(AffineNdpf::generator(3, 2) == AffineNdpf({1, 2, 2}));
    CHECK(AffineNdpf::parse("[0,2,3]").to_string() == "[0,2,3]");
    const auto f = AffineNdpf({1, 1, 3});
    CHECK(f(4) == 4);
    CHECK(f(0) == 0);
    CHECK(f(2) == 1);
}

TEST_CASE("composing with a full sweep of generators emulates a translation") {
    for (int n = 3; n <= 4; ++n) {
        const auto g = AffineNdpf::generator(n, 0);  // g(0) = g(1)
        auto h = g;
        for (int t = 0; t < n; ++t) h = affine_ndpf_compose(h, AffineNdpf::generator(n, t % n));
        std::vector<long long> shifted(g.window());
        for (auto& v : shifted) --v;
        CHECK(h == AffineNdpf(shifted));
    }
}

TEST_CASE("quotient: running minima equal the generator fold") {
    for (int n = 3; n <= 4; ++n) {
        const auto layers = affine_length_ball(n, 8);
        for (const auto& layer : layers)
            for (const auto& x : layer) CHECK(affine_quotient(x) == affine_quotient_via_generators(x));
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> word(rng() % 11);
            for (auto& l : word) l = static_cast<int>(rng() % n);
            const auto x = AffinePermutation::from_word(n, word);
            CHECK(affine_quotient(x) == affine_quotient_via_generators(x));
        }
    }
    for (int n = 3; n <= 5; ++n)
        CHECK(affine_quotient(AffinePermutation::identity(n).right_mult_s(0)) ==
              AffineNdpf::generator(n, 0));
}

TEST_CASE("pattern witness scan agrees with braids inside reduced words") {
    for (int n = 3; n <= 4; ++n) {
        const auto layers = affine_length_ball(n, 8);
        std::map<AffinePermutation, std::vector<std::vector<int>>> cache;
        for (const auto& layer : layers)
            for (const auto& x : layer) {
                const auto witness = affine_find_321(x);
                bool braided = false;
                for (const auto& word : all_reduced_words(x, cache))
                    if (word_has_braid(word, n)) {
                        braided = true;
                        break;
                    }
                CHECK(witness.has_value() == braided);
                if (witness) {
                    const auto [i, j, k] = *witness;
                    CHECK(i < j);
                    CHECK(j < k);
                    CHECK(1 <= j);
                    CHECK(j <= n);
                    CHECK(j - i < n);
                    CHECK(k - j < n);
                    CHECK(x(i) > x(j));
                    CHECK(x(j) > x(k));
                }
            }
    }
    const auto x = AffinePermutation::from_word(3, {1, 0, 1});
    CHECK(x == AffinePermutation({1, 0, 5}));
    REQUIRE(affine_find_321(x).has_value());
    CHECK(*affine_find_321(x) == std::array<long long, 3>{0, 1, 2});
    CHECK_FALSE(affine_find_321(AffinePermutation({0, 2, 4})).has_value());
}

TEST_CASE("reconstruction picks the avoider of every fiber") {
    for (int n = 3; n <= 4; ++n) {
        const auto layers = affine_length_ball(n, 8);
        std::map<AffineNdpf, std::vector<AffinePermutation>> fibers;
        for (const auto& layer : layers)
            for (const auto& x : layer) fibers[affine_quotient(x)].push_back(x);
        for (const auto& [f, members] : fibers) {
            const auto r = affine_reconstruct(f);
            CHECK(affine_quotient(r) == f);
            CHECK_FALSE(affine_find_321(r).has_value());
            int avoiders = 0;
            for (const auto& x : members) {
                if (!affine_find_321(x).has_value()) {
                    ++avoiders;
                    CHECK(x == r);
                }
                CHECK(r.length() <= x.length());
                CHECK((r.length() == x.length()) == !affine_find_321(x).has_value());
            }
            CHECK(avoiders == 1);
        }
    }
    for (int n = 3; n <= 5; ++n) {
        const auto r = affine_reconstruct(AffineNdpf::generator(n, 0));
        CHECK(r == AffinePermutation::identity(n).right_mult_s(0));
        CHECK(r.length() == 1);
    }
}
