#include "readchan/transforms.hpp"

#include <algorithm>

#include "readchan/channel.hpp"

namespace readchan {

BlockIndexGrid::BlockIndexGrid(int n_, const ChannelParams& p)
    : ell(p.ell), delta(p.delta), n(n_), a(p.a()), b(p.b()), d(p.d()) {
    if (b == 0) throw param_error("BlockIndexGrid: delta divides ell, no block grid");
    if (n < ell || (n - ell) % delta != 0)
        throw param_error("BlockIndexGrid: need n = t*delta + ell");
    t = (n - ell) / delta;
}

Word mu_qary_to_binary(const QWord& x) {
    const int r = x.q() - 1;
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(r) * x.size());
    for (int i = 1; i <= x.size(); ++i) {
        const int alpha = x.at(i);
        for (int j = 0; j < alpha; ++j) bits.push_back(1);
        for (int j = alpha; j < r; ++j) bits.push_back(0);
    }
    return Word(std::move(bits));
}

QWord psi_binary_to_qary(const Word& x, int q) {
    if (q < 2) throw param_error("psi_binary_to_qary: require q >= 2");
    const int r = q - 1;
    if (x.size() % r != 0)
        throw param_error("psi_binary_to_qary: q-1 must divide the word length");
    std::vector<uint8_t> sym;
    sym.reserve(static_cast<size_t>(x.size() / r));
    for (int i = 0; i < x.size() / r; ++i)
        sym.push_back(static_cast<uint8_t>(weight(subvector(x, r * i + 1, r))));
    return QWord(std::move(sym), q);
}

namespace {

// Apply f to every (start, len) block of the grid, 1-based start.
template <typename F>
void for_each_block(const BlockIndexGrid& g, F&& f) {
    for (int i = 0; i <= g.t + g.a; ++i) f(g.bi(i), g.b);
    for (int i = 1; i <= g.t + g.a; ++i) f(g.di(i), g.d);
}

}  // namespace

Word canonicalize_pi(const Word& x, const BlockIndexGrid& g) {
    if (x.size() != g.n) throw param_error("canonicalize_pi: word length does not match grid");
    std::vector<uint8_t> s = x.symbols();
    for_each_block(g, [&](int start, int len) {
        std::sort(s.begin() + (start - 1), s.begin() + (start - 1) + len);
    });
    return Word(std::move(s));
}

bool is_pi_word(const Word& x, const BlockIndexGrid& g) {
    if (x.size() != g.n) return false;
    bool ok = true;
    for_each_block(g, [&](int start, int len) {
        ok = ok && std::is_sorted(x.symbols().begin() + (start - 1),
                                  x.symbols().begin() + (start - 1) + len);
    });
    return ok;
}

bool weight_decomposition_check(const Word& v, const BlockIndexGrid& g) {
    if (v.size() != g.n) throw param_error("weight_decomposition_check: length mismatch");
    for (int i = 0; i <= g.t; ++i) {
        const long long window = weight(subvector(v, g.delta * i + 1, g.ell));
        long long parts = weight(subvector(v, g.bi(i), g.b));
        for (int j = 1; j <= g.a; ++j) {
            parts += weight(subvector(v, g.di(i + j), g.d));
            parts += weight(subvector(v, g.bi(i + j), g.b));
        }
        if (window != parts) return false;
    }
    return true;
}

namespace {

bool match_run(const std::vector<uint8_t>& s, int start0, int len, uint8_t value) {
    for (int j = 0; j < len; ++j)
        if (s[static_cast<size_t>(start0 + j)] != value) return false;
    return true;
}

void write_run(std::vector<uint8_t>& s, int& pos0, int len, uint8_t value) {
    for (int j = 0; j < len; ++j) s[static_cast<size_t>(pos0++)] = value;
}

}  // namespace

Word phi(const Word& v, const BlockIndexGrid& g) {
    if (!(2 * g.delta < g.ell))
        throw param_error("phi: requires 2*delta < ell");
    if (!is_pi_word(v, g)) throw param_error("phi: word is not block-canonical");
    std::vector<uint8_t> s = v.symbols();
    const int L = g.ell + 2 * g.d;
    for (int i = 1; i <= g.t - 1; ++i) {
        const int start0 = g.di(i) - 1;
        // pattern 1^d 0^b u 1^b 0^d over the window
        if (!match_run(s, start0, g.d, 1)) continue;
        if (!match_run(s, start0 + g.d, g.b, 0)) continue;
        if (!match_run(s, start0 + L - g.d - g.b, g.b, 1)) continue;
        if (!match_run(s, start0 + L - g.d, g.d, 0)) continue;
        // becomes 0 1^(d-1) 0^(b-1) 1 u 0 1^(b-1) 0^(d-1) 1
        int pos = start0;
        write_run(s, pos, 1, 0);
        write_run(s, pos, g.d - 1, 1);
        write_run(s, pos, g.b - 1, 0);
        write_run(s, pos, 1, 1);
        pos = start0 + L - g.d - g.b;
        write_run(s, pos, 1, 0);
        write_run(s, pos, g.b - 1, 1);
        write_run(s, pos, g.d - 1, 0);
        write_run(s, pos, 1, 1);
    }
    return Word(std::move(s));
}

std::vector<Word> pi_words(int n, const ChannelParams& p, unsigned long long budget) {
    BlockIndexGrid g(n, p);
    const int nblocks = 2 * (g.t + g.a) + 1;
    // odometer over per-block weights
    std::vector<int> limit, start;
    start.reserve(static_cast<size_t>(nblocks));
    limit.reserve(static_cast<size_t>(nblocks));
    for (int i = 0; i <= g.t + g.a; ++i) {
        start.push_back(g.bi(i));
        limit.push_back(g.b);
    }
    for (int i = 1; i <= g.t + g.a; ++i) {
        start.push_back(g.di(i));
        limit.push_back(g.d);
    }

    unsigned long long total = 1;
    for (int lim : limit) {
        total *= static_cast<unsigned long long>(lim + 1);
        if (total > budget) throw resource_error("pi_words: block space exceeds budget");
    }

    std::vector<Word> out;
    out.reserve(total);
    std::vector<int> wts(static_cast<size_t>(nblocks), 0);
    std::vector<uint8_t> s(static_cast<size_t>(n), 0);
    for (unsigned long long it = 0; it < total; ++it) {
        for (int k = 0; k < nblocks; ++k) {
            const int len = limit[static_cast<size_t>(k)], w = wts[static_cast<size_t>(k)];
            int pos = start[static_cast<size_t>(k)] - 1;
            write_run(s, pos, len - w, 0);
            write_run(s, pos, w, 1);
        }
        out.emplace_back(s);
        for (int k = nblocks - 1; k >= 0; --k) {
            if (++wts[static_cast<size_t>(k)] <= limit[static_cast<size_t>(k)]) break;
            wts[static_cast<size_t>(k)] = 0;
        }
    }
    return out;
}

std::vector<Word> build_code_C(int n, const ChannelParams& p, unsigned long long budget) {
    BlockIndexGrid g(n, p);
    std::vector<Word> out;
    for (const Word& v : pi_words(n, p, budget)) out.push_back(phi(v, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool check_L_constraint(const Word& v, int b, int delta) {
    if (!(0 < b && b < delta)) throw param_error("check_L_constraint: require 0 < b < delta");
    const int d = delta - b;
    const auto& s = v.symbols();
    for (int i = 1; delta * i - d + 2 * delta - 1 <= v.size(); ++i) {
        const int start0 = delta * i - d;  // 0-based di(i)
        if (match_run(s, start0, d, 1) && match_run(s, start0 + d, b, 0) &&
            match_run(s, start0 + delta, d, 1) && match_run(s, start0 + delta + d, b, 0))
            return false;
    }
    return true;
}

Word g_map(const Word& v, const BlockIndexGrid& g) {
    if (g.a < 2) throw param_error("g_map: requires a >= 2 so the rewrites cannot overlap");
    if (!is_pi_word(v, g)) throw param_error("g_map: word is not block-canonical");
    std::vector<uint8_t> s = v.symbols();
    for (int i = 1; i <= g.t - 1; ++i) {
        // reads happen before the conditional writes of this iteration
        int alpha = 0, gamma = 0;
        for (int j = 0; j < g.b; ++j) alpha += s[static_cast<size_t>(g.bi(i + g.a) - 1 + j)];
        for (int j = 0; j < g.d; ++j) gamma += s[static_cast<size_t>(g.di(i + g.a + 1) - 1 + j)];

        const int start0 = g.di(i) - 1;
        if (!(match_run(s, start0, g.d, 1) && match_run(s, start0 + g.d, g.b, 0) &&
              match_run(s, start0 + g.delta, g.d, 1) && match_run(s, start0 + g.delta + g.d, g.b, 0)))
            continue;
        int pos = g.di(i + 1) - 1;
        write_run(s, pos, gamma, 0);
        write_run(s, pos, g.d - gamma, 1);
        write_run(s, pos, alpha, 0);
        write_run(s, pos, g.b - alpha, 1);
        pos = g.bi(i + g.a) - 1;
        write_run(s, pos, g.b, 1);
        write_run(s, pos, g.d, 0);
    }
    return Word(std::move(s));
}

unsigned long long count_L_words(int n, const ChannelParams& p, unsigned long long budget) {
    unsigned long long count = 0;
    for (const Word& w : pi_words(n, p, budget))
        count += check_L_constraint(w, p.b(), p.delta);
    return count;
}

}  // namespace readchan
