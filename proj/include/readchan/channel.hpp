#ifndef READCHAN_CHANNEL_HPP
#define READCHAN_CHANNEL_HPP

#include <vector>

#include "readchan/core.hpp"

namespace readchan {

// Channel output in one dimension: entry i (0-based, i = 0..t) is the weight
// of the window starting at position i*delta+1, with t = (n-ell)/delta.
using ReadVector = std::vector<int>;

// Channel output in two dimensions, (t1+1) x (t2+1), row-major.
using ReadMatrix = std::vector<std::vector<int>>;

// Requires n >= ell and delta | n-ell.
ReadVector read_vector(const Word& x, const ChannelParams& p);
ReadVector read_vector(const QWord& x, const ChannelParams& p);

// Straight per-window sums; the incremental path slides the window by
// subtracting the leaving delta-block and adding the entering one. They agree
// bit-exactly; read_vector dispatches to the incremental path for n > 256.
ReadVector read_vector_direct(const Word& x, const ChannelParams& p);
ReadVector read_vector_incremental(const Word& x, const ChannelParams& p);

ReadMatrix read_matrix(const BitMatrix& B, const ChannelParams& p1,
                       const ChannelParams& p2);

std::string to_json(const ReadVector& rv);
std::string to_json(const ReadMatrix& rm);

}  // namespace readchan

#endif
