#include "readchan/transforms.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "readchan/channel.hpp"
#include "readchan/enumerate.hpp"

using namespace readchan;

namespace {
const ChannelParams k83{8, 3};
}

TEST_CASE("block index grid") {
    const BlockIndexGrid g(14, k83);
    CHECK(g.a == 2);
    CHECK(g.b == 2);
    CHECK(g.d == 1);
    CHECK(g.t == 2);
    CHECK(g.di(1) == 3);
    CHECK(g.bi(1) == 4);
    CHECK(g.bi(3) == 10);
    CHECK(g.di(4) == 12);
    CHECK(g.di(1) + g.d == g.bi(1));
    CHECK_THROWS_AS(BlockIndexGrid(14, ChannelParams(6, 3)), param_error);  // b = 0
    CHECK_THROWS_AS(BlockIndexGrid(13, k83), param_error);
}

TEST_CASE("symbol expansion and block-weight contraction") {
    CHECK(mu_qary_to_binary(QWord({2, 0, 1}, 3)) == Word{1, 1, 0, 0, 1, 0});
    CHECK(mu_qary_to_binary(QWord({1, 0, 1}, 2)) == Word{1, 0, 1});
    CHECK(mu_qary_to_binary(QWord({3}, 4)) == Word{1, 1, 1});

    CHECK(psi_binary_to_qary(Word{1, 1, 0, 0, 1, 0}, 3) == QWord({2, 0, 1}, 3));
    CHECK(psi_binary_to_qary(Word{1, 0, 1}, 2) == QWord({1, 0, 1}, 2));
    CHECK_THROWS_AS(psi_binary_to_qary(Word{1, 0, 1}, 3), param_error);

    for (uint32_t v = 0; v < 81; ++v) {
        std::vector<uint8_t> sym(4);
        uint32_t rem = v;
        for (auto& s : sym) {
            s = static_cast<uint8_t>(rem % 3);
            rem /= 3;
        }
        const QWord x(sym, 3);
        CHECK(psi_binary_to_qary(mu_qary_to_binary(x), 3) == x);
    }
}

TEST_CASE("block canonicalization preserves the read vector") {
    const BlockIndexGrid g(14, k83);
    const Word x{1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1};
    const Word cx = canonicalize_pi(x, g);
    CHECK(is_pi_word(cx, g));
    CHECK_FALSE(is_pi_word(x, g));
    CHECK(read_vector(cx, k83) == read_vector(x, k83));
    CHECK(canonicalize_pi(cx, g) == cx);  // idempotent

    const Word ones(std::vector<uint8_t>(14, 1));
    CHECK(canonicalize_pi(ones, g) == ones);
}

TEST_CASE("window weights decompose over the grid") {
    const BlockIndexGrid g(14, k83);
    CHECK(weight_decomposition_check(Word{0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1}, g));
    CHECK(weight_decomposition_check(Word(std::vector<uint8_t>(14, 0)), g));
}

TEST_CASE("the rewriting map on the worked 14-symbol vector") {
    const BlockIndexGrid g(14, k83);
    const Word v{0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1};
    const Word expected{0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1};
    CHECK(phi(v, g) == expected);
    CHECK(read_vector(phi(v, g), k83) == read_vector(v, k83));

    const Word untouched{0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1};
    CHECK(phi(untouched, g) == untouched);

    CHECK_THROWS_AS(phi(Word{1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1}, g), param_error);
    const ChannelParams p53{5, 3};
    CHECK_THROWS_AS(phi(Word{0, 0, 0, 0, 0, 0, 0, 0}, BlockIndexGrid(8, p53)), param_error);
}

TEST_CASE("the rewritten code") {
    const auto C8 = build_code_C(8, k83);
    const auto Pi8 = pi_words(8, k83);
    CHECK(C8.size() == Pi8.size());  // t = 0: nothing rewrites
    CHECK(std::is_sorted(C8.begin(), C8.end()));

    const auto C14 = build_code_C(14, k83);
    CHECK(C14.size() == 3780);

    // no member keeps a rewritable window
    const BlockIndexGrid g(14, k83);
    for (const Word& w : C14) {
        const auto& s = w.symbols();
        for (int i = 1; i <= g.t - 1; ++i) {
            const int st = g.di(i) - 1;
            const bool head = s[st] == 1 && s[st + 1] == 0 && s[st + 2] == 0;
            const bool tail = s[st + 7] == 1 && s[st + 8] == 1 && s[st + 9] == 0;
            const bool rewritable = head && tail;
            CHECK_FALSE(rewritable);
        }
    }

    for (int n : {11, 14})
        CHECK(count_read_vectors(n, k83, 2).count <= build_code_C(n, k83).size());
}

TEST_CASE("the block constraint") {
    CHECK_FALSE(check_L_constraint(Word{0, 0, 1, 0, 0, 1, 0, 0, 0}, 2, 3));
    CHECK(check_L_constraint(Word(std::vector<uint8_t>(9, 0)), 2, 3));
    CHECK(check_L_constraint(Word{1, 1, 1, 1}, 1, 2));
    CHECK_FALSE(check_L_constraint(Word{0, 1, 0, 1, 0, 0}, 1, 2));
    // the same pattern off the block grid is allowed
    CHECK(check_L_constraint(Word{0, 0, 1, 0, 1, 0}, 1, 2));
    CHECK_THROWS_AS(check_L_constraint(Word{0}, 0, 2), param_error);
}

TEST_CASE("the constraint injection on the worked vector") {
    const BlockIndexGrid g(14, k83);
    const Word v{0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1};
    const Word expected{0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1};
    CHECK(g_map(v, g) == expected);

    const Word clean{0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1};
    CHECK(g_map(clean, g) == clean);

    const ChannelParams p53{5, 3};  // a = 1
    CHECK_THROWS_AS(g_map(Word{0, 0, 0, 0, 0, 0, 0, 0}, BlockIndexGrid(8, p53)), param_error);
}

TEST_CASE("constraint counts over the full block grid") {
    CHECK(count_L_words(8, k83) == 105);
    CHECK(count_L_words(11, k83) == 615);
    CHECK(pi_words(8, k83).size() == 108);   // 3^3 * 2^2
    CHECK(pi_words(14, k83).size() == 3888); // 3^5 * 2^4
}
