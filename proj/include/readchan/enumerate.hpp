#ifndef READCHAN_ENUMERATE_HPP
#define READCHAN_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "readchan/channel.hpp"
#include "readchan/core.hpp"

namespace readchan {

struct CountResult {
    int n1 = 0;                       // word length (rows for 2-D counts)
    int n2 = -1;                      // columns for 2-D counts, -1 otherwise
    unsigned long long count = 0;     // exact
    double rate = 0.0;                // log2(count)/n, or /(n1*n2) in 2-D

    long long symbols() const { return n2 < 0 ? n1 : static_cast<long long>(n1) * n2; }
};

enum class DedupMode {
    sorted_exact,  // per-shard sorted+uniqued key vectors, merged and re-deduped
    hash_set       // hash containers holding the full keys; equally exact
};

struct EnumOptions {
    unsigned long long budget = 1ull << 24;  // max evaluated inputs; exceeding errors out
    int threads = 0;                         // 0 = runtime default
    DedupMode dedup = DedupMode::sorted_exact;
    int shard_symbols = 8;                   // parallel sharding by this many leading symbols
};

// Exact |{ read_vector(x) : x in Sigma_q^n }| by exhaustive enumeration.
// OpenMP-parallel over word-prefix shards; the merge is order-independent.
CountResult count_read_vectors(int n, const ChannelParams& p, int q = 2,
                               const EnumOptions& opts = {});

// Single-threaded reference walking the public Word/read_vector API; kept for
// testing the parallel kernel against an independent route.
CountResult count_read_vectors_serial(int n, const ChannelParams& p, int q = 2,
                                      const EnumOptions& opts = {});

std::vector<CountResult> rate_sequence(const ChannelParams& p, int q,
                                       const std::vector<int>& n_list,
                                       const EnumOptions& opts = {});

// Exact count of distinct read matrices over Sigma_q^{n1 x n2}.
CountResult count_read_matrices(int n1, int n2, const ChannelParams& p1,
                                const ChannelParams& p2, int q = 2,
                                const EnumOptions& opts = {});

CountResult count_read_matrices_serial(int n1, int n2, const ChannelParams& p1,
                                       const ChannelParams& p2, int q = 2,
                                       const EnumOptions& opts = {});

// Words made of n/delta blocks (d-part then b-part, zeros before ones in
// each) with no two consecutive blocks both equal to 1^d 0^b; matches path
// counting in the block-constraint state diagram.
CountResult count_constraint_words(int n, int b, int delta, const EnumOptions& opts = {});

// count(n+step)/count(n) along an arithmetic n-progression.
std::vector<double> growth_ratio(const std::vector<CountResult>& counts, int step);

std::string to_csv(const std::vector<CountResult>& results);
std::string to_json(const std::vector<CountResult>& results);

}  // namespace readchan

#endif
