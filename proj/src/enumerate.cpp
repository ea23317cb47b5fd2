#include "readchan/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace readchan {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

double rate_of(unsigned long long count, long long symbols) {
    return std::log2(static_cast<double>(count)) / static_cast<double>(symbols);
}

// q^n, or budget+1 if it overflows past the budget.
unsigned long long input_space(int q, int n, unsigned long long budget) {
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<unsigned long long>(q) + 1) return budget + 1;
        total *= static_cast<unsigned long long>(q);
    }
    return total;
}

void check_budget(int q, int n, const EnumOptions& opts, const char* what) {
    if (input_space(q, n, opts.budget) > opts.budget)
        throw resource_error(std::string(what) + ": q^n exceeds the enumeration budget");
}

int thread_count(const EnumOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    (void)opts;
    return 1;
#endif
}

// ----- key collection and exact dedup -----

template <typename Key>
unsigned long long dedup_count(std::vector<std::vector<Key>>& shards, DedupMode mode) {
    if (mode == DedupMode::hash_set) {
        if constexpr (std::is_same_v<Key, std::string>) {
            std::unordered_set<std::string> all;
            for (auto& s : shards)
                for (auto& k : s) all.insert(std::move(k));
            return all.size();
        } else {
            std::set<Key> all;  // Key may be 128-bit; std::set keeps it simple and exact
            for (const auto& s : shards) all.insert(s.begin(), s.end());
            return all.size();
        }
    }
    std::vector<Key> merged;
    size_t total = 0;
    for (const auto& s : shards) total += s.size();
    merged.reserve(total);
    for (auto& s : shards) {
        merged.insert(merged.end(), s.begin(), s.end());
        s.clear();
        s.shrink_to_fit();
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged.size();
}

// ----- packed binary kernel -----

struct WindowMasks {
    std::vector<u64> masks;
    int bits_per_entry;
};

WindowMasks window_masks_1d(int n, const ChannelParams& p) {
    const int t = (n - p.ell) / p.delta;
    WindowMasks wm;
    wm.bits_per_entry = std::bit_width(static_cast<unsigned>(p.ell));
    for (int i = 0; i <= t; ++i) {
        u64 m = (p.ell == 64) ? ~0ull : ((1ull << p.ell) - 1);
        wm.masks.push_back(m << (static_cast<u64>(i) * p.delta));
    }
    return wm;
}

template <typename Key>
unsigned long long count_packed_binary(int n, const WindowMasks& wm, const EnumOptions& opts) {
    const u64 total = 1ull << n;
    const int shard_bits = std::min(opts.shard_symbols, n);
    const int num_shards = 1 << shard_bits;
    const u64 per_shard = total >> shard_bits;
    std::vector<std::vector<Key>> shard_keys(static_cast<size_t>(num_shards));
    const int nt = thread_count(opts);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int s = 0; s < num_shards; ++s) {
        auto& keys = shard_keys[static_cast<size_t>(s)];
        keys.reserve(per_shard);
        const u64 lo = static_cast<u64>(s) * per_shard;
        const u64 hi = lo + per_shard;
        for (u64 x = lo; x < hi; ++x) {
            Key key = 0;
            for (size_t i = 0; i < wm.masks.size(); ++i)
                key |= static_cast<Key>(static_cast<unsigned>(std::popcount(x & wm.masks[i])))
                       << (i * static_cast<size_t>(wm.bits_per_entry));
            keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    return dedup_count(shard_keys, opts.dedup);
}

// ----- generic q-ary kernel -----

// Mixed-radix decode of a linear index into digits (first symbol = most
// significant, so leading-symbol shards are contiguous index ranges).
void decode_word(unsigned long long g, int q, int n, std::vector<uint8_t>& digits) {
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<size_t>(i)] = static_cast<uint8_t>(g % static_cast<unsigned>(q));
        g /= static_cast<unsigned>(q);
    }
}

std::string read_key_of(const std::vector<uint8_t>& word, const std::vector<std::vector<int>>& windows) {
    std::string key;
    key.reserve(windows.size() * 2);
    for (const auto& win : windows) {
        int w = 0;
        for (int pos : win) w += word[static_cast<size_t>(pos)];
        key.push_back(static_cast<char>(w & 0xff));
        key.push_back(static_cast<char>((w >> 8) & 0xff));
    }
    return key;
}

unsigned long long count_generic(int q, int n, const std::vector<std::vector<int>>& windows,
                                 const EnumOptions& opts) {
    const unsigned long long total = input_space(q, n, opts.budget);
    unsigned long long num_shards = 1;
    for (int i = 0; i < std::min(opts.shard_symbols, n) && num_shards * static_cast<unsigned>(q) <= 4096; ++i)
        num_shards *= static_cast<unsigned>(q);
    while (total % num_shards != 0) num_shards /= static_cast<unsigned>(q);
    const unsigned long long per_shard = total / num_shards;
    std::vector<std::vector<std::string>> shard_keys(static_cast<size_t>(num_shards));
    const int nt = thread_count(opts);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long s = 0; s < static_cast<long long>(num_shards); ++s) {
        auto& keys = shard_keys[static_cast<size_t>(s)];
        keys.reserve(per_shard);
        std::vector<uint8_t> word(static_cast<size_t>(n));
        const unsigned long long lo = static_cast<unsigned long long>(s) * per_shard;
        decode_word(lo, q, n, word);
        for (unsigned long long g = lo; g < lo + per_shard; ++g) {
            keys.push_back(read_key_of(word, windows));
            // odometer increment, least significant symbol last
            for (int i = n - 1; i >= 0; --i) {
                if (++word[static_cast<size_t>(i)] < q) break;
                word[static_cast<size_t>(i)] = 0;
            }
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    return dedup_count(shard_keys, opts.dedup);
}

std::vector<std::vector<int>> windows_1d(int n, const ChannelParams& p) {
    const int t = (n - p.ell) / p.delta;
    std::vector<std::vector<int>> windows;
    for (int i = 0; i <= t; ++i) {
        std::vector<int> win;
        for (int j = 0; j < p.ell; ++j) win.push_back(i * p.delta + j);
        windows.push_back(std::move(win));
    }
    return windows;
}

void check_1d_params(int n, const ChannelParams& p, const char* what) {
    if (n < p.ell || (n - p.ell) % p.delta != 0)
        throw param_error(std::string(what) + ": need n >= ell and delta | n-ell");
}

}  // namespace

CountResult count_read_vectors(int n, const ChannelParams& p, int q, const EnumOptions& opts) {
    check_1d_params(n, p, "count_read_vectors");
    if (q < 2) throw param_error("count_read_vectors: require q >= 2");
    check_budget(q, n, opts, "count_read_vectors");

    unsigned long long count;
    if (q == 2 && n <= 62) {
        const WindowMasks wm = window_masks_1d(n, p);
        const size_t key_bits = wm.masks.size() * static_cast<size_t>(wm.bits_per_entry);
        if (key_bits <= 64)
            count = count_packed_binary<u64>(n, wm, opts);
        else if (key_bits <= 128)
            count = count_packed_binary<u128>(n, wm, opts);
        else
            count = count_generic(q, n, windows_1d(n, p), opts);
    } else {
        count = count_generic(q, n, windows_1d(n, p), opts);
    }
    return {n, -1, count, rate_of(count, n)};
}

CountResult count_read_vectors_serial(int n, const ChannelParams& p, int q, const EnumOptions& opts) {
    check_1d_params(n, p, "count_read_vectors");
    if (q < 2) throw param_error("count_read_vectors: require q >= 2");
    check_budget(q, n, opts, "count_read_vectors");

    const unsigned long long total = input_space(q, n, opts.budget);
    std::set<ReadVector> distinct;
    std::vector<uint8_t> word(static_cast<size_t>(n), 0);
    for (unsigned long long g = 0; g < total; ++g) {
        if (q == 2)
            distinct.insert(read_vector(Word(word), p));
        else
            distinct.insert(read_vector(QWord(word, q), p));
        for (int i = n - 1; i >= 0; --i) {
            if (++word[static_cast<size_t>(i)] < q) break;
            word[static_cast<size_t>(i)] = 0;
        }
    }
    const unsigned long long count = distinct.size();
    return {n, -1, count, rate_of(count, n)};
}

std::vector<CountResult> rate_sequence(const ChannelParams& p, int q, const std::vector<int>& n_list,
                                       const EnumOptions& opts) {
    std::vector<CountResult> out;
    out.reserve(n_list.size());
    for (int n : n_list) out.push_back(count_read_vectors(n, p, q, opts));
    return out;
}

namespace {

std::vector<std::vector<int>> windows_2d(int n1, int n2, const ChannelParams& p1,
                                         const ChannelParams& p2) {
    const int t1 = (n1 - p1.ell) / p1.delta;
    const int t2 = (n2 - p2.ell) / p2.delta;
    std::vector<std::vector<int>> windows;
    for (int i = 0; i <= t1; ++i)
        for (int j = 0; j <= t2; ++j) {
            std::vector<int> win;
            for (int r = 0; r < p1.ell; ++r)
                for (int c = 0; c < p2.ell; ++c)
                    win.push_back((i * p1.delta + r) * n2 + (j * p2.delta + c));
            windows.push_back(std::move(win));
        }
    return windows;
}

}  // namespace

CountResult count_read_matrices(int n1, int n2, const ChannelParams& p1, const ChannelParams& p2,
                                int q, const EnumOptions& opts) {
    check_1d_params(n1, p1, "count_read_matrices (axis 1)");
    check_1d_params(n2, p2, "count_read_matrices (axis 2)");
    if (q < 2) throw param_error("count_read_matrices: require q >= 2");
    const long long cells = static_cast<long long>(n1) * n2;
    if (cells > 62)  // row-major flattening reuses the 1-D generic core anyway
        throw resource_error("count_read_matrices: grid too large");
    check_budget(q, static_cast<int>(cells), opts, "count_read_matrices");

    const unsigned long long count =
        count_generic(q, static_cast<int>(cells), windows_2d(n1, n2, p1, p2), opts);
    return {n1, n2, count, rate_of(count, cells)};
}

CountResult count_read_matrices_serial(int n1, int n2, const ChannelParams& p1,
                                       const ChannelParams& p2, int q, const EnumOptions& opts) {
    check_1d_params(n1, p1, "count_read_matrices (axis 1)");
    check_1d_params(n2, p2, "count_read_matrices (axis 2)");
    const long long cells = static_cast<long long>(n1) * n2;
    check_budget(q, static_cast<int>(cells), opts, "count_read_matrices");

    std::set<ReadMatrix> distinct;
    std::vector<uint8_t> flat(static_cast<size_t>(cells), 0);
    const unsigned long long total = input_space(q, static_cast<int>(cells), opts.budget);
    for (unsigned long long g = 0; g < total; ++g) {
        BitMatrix B(n1, n2, q);
        for (int r = 1; r <= n1; ++r)
            for (int c = 1; c <= n2; ++c)
                B.set(r, c, flat[static_cast<size_t>((r - 1) * n2 + (c - 1))]);
        distinct.insert(read_matrix(B, p1, p2));
        for (long long i = cells - 1; i >= 0; --i) {
            if (++flat[static_cast<size_t>(i)] < q) break;
            flat[static_cast<size_t>(i)] = 0;
        }
    }
    const unsigned long long count = distinct.size();
    return {n1, n2, count, rate_of(count, cells)};
}

CountResult count_constraint_words(int n, int b, int delta, const EnumOptions& opts) {
    if (!(0 < b && b < delta)) throw param_error("count_constraint_words: require 0 < b < delta");
    if (n < delta || n % delta != 0)
        throw param_error("count_constraint_words: n must be a positive multiple of delta");
    const int d = delta - b;
    const int k = n / delta;
    const int m = (b + 1) * (d + 1);
    if (input_space(m, k, opts.budget) > opts.budget)
        throw resource_error("count_constraint_words: block space exceeds the enumeration budget");

    // Block value = (d-part weight, b-part weight); the forbidden block
    // 1^d 0^b is (d, 0).
    const int forbidden = d * (b + 1) + 0;
    std::vector<int> blocks(static_cast<size_t>(k), 0);
    unsigned long long count = 0;
    const unsigned long long total = input_space(m, k, opts.budget);
    for (unsigned long long g = 0; g < total; ++g) {
        bool ok = true;
        for (int i = 0; i + 1 < k; ++i)
            if (blocks[static_cast<size_t>(i)] == forbidden &&
                blocks[static_cast<size_t>(i + 1)] == forbidden) {
                ok = false;
                break;
            }
        count += ok;
        for (int i = k - 1; i >= 0; --i) {
            if (++blocks[static_cast<size_t>(i)] < m) break;
            blocks[static_cast<size_t>(i)] = 0;
        }
    }
    return {n, -1, count, rate_of(count, n)};
}

std::vector<double> growth_ratio(const std::vector<CountResult>& counts, int step) {
    if (counts.size() < 2) throw param_error("growth_ratio: need at least two counts");
    for (size_t i = 1; i < counts.size(); ++i)
        if (counts[i].n1 - counts[i - 1].n1 != step)
            throw param_error("growth_ratio: n values are not an arithmetic progression of the step");
    std::vector<double> out;
    for (size_t i = 1; i < counts.size(); ++i)
        out.push_back(static_cast<double>(counts[i].count) / static_cast<double>(counts[i - 1].count));
    return out;
}

std::string to_csv(const std::vector<CountResult>& results) {
    std::string s = "n,count,rate\n";
    char buf[64];
    for (const auto& r : results) {
        if (r.n2 >= 0)
            s += std::to_string(r.n1) + "x" + std::to_string(r.n2);
        else
            s += std::to_string(r.n1);
        std::snprintf(buf, sizeof buf, ",%llu,%.6f\n", r.count, r.rate);
        s += buf;
    }
    return s;
}

std::string to_json(const std::vector<CountResult>& results) {
    // counts as decimal strings so consumers need not fit them in 64 bits
    std::string s = "[";
    char buf[64];
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (i) s.push_back(',');
        s += "{\"n\":" + std::to_string(r.n1);
        if (r.n2 >= 0) s += ",\"n2\":" + std::to_string(r.n2);
        s += ",\"count\":\"" + std::to_string(r.count) + "\"";
        std::snprintf(buf, sizeof buf, ",\"rate\":%.6f}", r.rate);
        s += buf;
    }
    s += "]";
    return s;
}

}  // namespace readchan
