#include "readchan/channel.hpp"

namespace readchan {

namespace {

void check_params(int n, const ChannelParams& p, const char* what) {
    if (n < p.ell)
        throw param_error(std::string(what) + ": word shorter than window");
    if ((n - p.ell) % p.delta != 0)
        throw param_error(std::string(what) + ": delta does not divide n-ell");
}

template <typename W>
ReadVector direct(const W& x, const ChannelParams& p) {
    const int t = (x.size() - p.ell) / p.delta;
    ReadVector rv(static_cast<size_t>(t) + 1);
    for (int i = 0; i <= t; ++i)
        rv[static_cast<size_t>(i)] =
            static_cast<int>(weight(subvector(x, i * p.delta + 1, p.ell)));
    return rv;
}

ReadVector incremental(const std::vector<uint8_t>& s, const ChannelParams& p) {
    const int t = (static_cast<int>(s.size()) - p.ell) / p.delta;
    ReadVector rv(static_cast<size_t>(t) + 1);
    if (p.delta >= p.ell) {
        // Windows do not overlap; nothing to carry.
        for (int i = 0; i <= t; ++i) {
            int w = 0;
            for (int j = 0; j < p.ell; ++j) w += s[static_cast<size_t>(i * p.delta + j)];
            rv[static_cast<size_t>(i)] = w;
        }
        return rv;
    }
    int w = 0;
    for (int j = 0; j < p.ell; ++j) w += s[static_cast<size_t>(j)];
    rv[0] = w;
    for (int i = 1; i <= t; ++i) {
        const int leave = (i - 1) * p.delta;
        const int enter = leave + p.ell;
        for (int j = 0; j < p.delta; ++j) {
            w -= s[static_cast<size_t>(leave + j)];
            w += s[static_cast<size_t>(enter + j)];
        }
        rv[static_cast<size_t>(i)] = w;
    }
    return rv;
}

}  // namespace

ReadVector read_vector_direct(const Word& x, const ChannelParams& p) {
    check_params(x.size(), p, "read_vector");
    return direct(x, p);
}

ReadVector read_vector_incremental(const Word& x, const ChannelParams& p) {
    check_params(x.size(), p, "read_vector");
    return incremental(x.symbols(), p);
}

ReadVector read_vector(const Word& x, const ChannelParams& p) {
    if (x.size() > 256) return read_vector_incremental(x, p);
    return read_vector_direct(x, p);
}

ReadVector read_vector(const QWord& x, const ChannelParams& p) {
    check_params(x.size(), p, "read_vector");
    if (x.size() > 256) return incremental(x.symbols(), p);
    return direct(x, p);
}

ReadMatrix read_matrix(const BitMatrix& B, const ChannelParams& p1,
                       const ChannelParams& p2) {
    check_params(B.rows(), p1, "read_matrix (axis 1)");
    check_params(B.cols(), p2, "read_matrix (axis 2)");
    const int t1 = (B.rows() - p1.ell) / p1.delta;
    const int t2 = (B.cols() - p2.ell) / p2.delta;
    ReadMatrix rm(static_cast<size_t>(t1) + 1,
                  std::vector<int>(static_cast<size_t>(t2) + 1));
    for (int i = 0; i <= t1; ++i)
        for (int j = 0; j <= t2; ++j)
            rm[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
                submatrix_weight(B, i * p1.delta + 1, p1.ell, j * p2.delta + 1, p2.ell));
    return rm;
}

std::string to_json(const ReadVector& rv) {
    std::string s = "[";
    for (size_t i = 0; i < rv.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(rv[i]);
    }
    s.push_back(']');
    return s;
}

std::string to_json(const ReadMatrix& rm) {
    std::string s = "[";
    for (size_t i = 0; i < rm.size(); ++i) {
        if (i) s.push_back(',');
        s += to_json(rm[i]);
    }
    s.push_back(']');
    return s;
}

}  // namespace readchan
