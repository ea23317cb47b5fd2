#ifndef READCHAN_TRANSFORMS_HPP
#define READCHAN_TRANSFORMS_HPP

#include <vector>

#include "readchan/core.hpp"

namespace readchan {

// Block index grid for n = t*delta + ell with b = ell mod delta > 0:
// b-blocks sit at bi(i) = delta*i+1 (0 <= i <= t+a) and d-blocks at
// di(i) = delta*i-d+1 (1 <= i <= t+a); together they tile positions 1..n.
struct BlockIndexGrid {
    int ell, delta, n;
    int a, b, d, t;

    BlockIndexGrid(int n_, const ChannelParams& p);

    int di(int i) const { return delta * i - d + 1; }
    int bi(int i) const { return delta * i + 1; }
};

// alpha -> 1^alpha 0^(r-alpha) per symbol, r = q-1; read vectors commute with
// the (r*ell, r*delta) channel.
Word mu_qary_to_binary(const QWord& x);

// Inverse direction: symbol i = weight of the i-th length-(q-1) block.
QWord psi_binary_to_qary(const Word& x, int q);

// Sorts every d-block and b-block zeros-first; window weights are untouched,
// so the read vector is preserved.
Word canonicalize_pi(const Word& x, const BlockIndexGrid& g);

bool is_pi_word(const Word& x, const BlockIndexGrid& g);

// Oracle for the window-weight decomposition into b-block and d-block
// weights; true for every word when the grid is consistent.
bool weight_decomposition_check(const Word& v, const BlockIndexGrid& g);

// The read-vector-preserving rewrite: scanning i = 1..t-1 over the current
// word, a window v[di(i); ell+2d] = 1^d 0^b u 1^b 0^d becomes
// 0 1^(d-1) 0^(b-1) 1 u 0 1^(b-1) 0^(d-1) 1. Requires v in Pi.
Word phi(const Word& v, const BlockIndexGrid& g);

// { phi(v) : v in Pi^n }, deduplicated.
std::vector<Word> build_code_C(int n, const ChannelParams& p,
                               unsigned long long budget = 1ull << 24);

// True iff no window v[di(i); 2delta] equals 1^d 0^b 1^d 0^b (checked at
// every i for which the window fits).
bool check_L_constraint(const Word& v, int b, int delta);

// The injection into constraint-satisfying words: for i = 1..t-1 (t of the
// full length), when the forbidden 2delta-window sits at di(i), rewrite
// v[di(i+1); delta] = 0^gamma 1^(d-gamma) 0^alpha 1^(b-alpha) and
// v[bi(i+a); delta] = 1^b 0^d, with alpha, gamma read before the writes.
// Requires a >= 2.
Word g_map(const Word& v, const BlockIndexGrid& g);

// All of Pi^n for the grid (block-canonical words).
std::vector<Word> pi_words(int n, const ChannelParams& p,
                           unsigned long long budget = 1ull << 24);

// |W_{b,delta}(n)|: Pi^n words whose every aligned 2delta-window avoids the
// forbidden pattern.
unsigned long long count_L_words(int n, const ChannelParams& p,
                                 unsigned long long budget = 1ull << 24);

}  // namespace readchan

#endif
