#include "readchan/core.hpp"

#include <numeric>

namespace readchan {

long long weight(const Word& w) {
    return std::accumulate(w.symbols().begin(), w.symbols().end(), 0LL);
}

long long weight(const QWord& w) {
    return std::accumulate(w.symbols().begin(), w.symbols().end(), 0LL);
}

namespace {
template <typename V>
V slice(const V& v, int i, int len, const char* what) {
    if (len < 0 || i < 1 || i + len - 1 > static_cast<int>(v.size()))
        throw param_error(std::string(what) + ": slice out of range");
    return V(v.begin() + (i - 1), v.begin() + (i - 1) + len);
}
}  // namespace

Word subvector(const Word& w, int i, int len) {
    return Word(slice(w.symbols(), i, len, "subvector"));
}

QWord subvector(const QWord& w, int i, int len) {
    return QWord(slice(w.symbols(), i, len, "subvector"), w.q());
}

BitMatrix submatrix(const BitMatrix& B, int k1, int l1, int k2, int l2) {
    if (l1 < 0 || l2 < 0 || k1 < 1 || k2 < 1 || k1 + l1 - 1 > B.rows() ||
        k2 + l2 - 1 > B.cols())
        throw param_error("submatrix: window out of range");
    BitMatrix out(l1, l2, B.q());
    for (int r = 0; r < l1; ++r)
        for (int c = 0; c < l2; ++c) out.set(r + 1, c + 1, B.at(k1 + r, k2 + c));
    return out;
}

long long submatrix_weight(const BitMatrix& B, int k1, int l1, int k2, int l2) {
    if (l1 < 0 || l2 < 0 || k1 < 1 || k2 < 1 || k1 + l1 - 1 > B.rows() ||
        k2 + l2 - 1 > B.cols())
        throw param_error("submatrix_weight: window out of range");
    long long s = 0;
    for (int r = 0; r < l1; ++r)
        for (int c = 0; c < l2; ++c) s += B.at(k1 + r, k2 + c);
    return s;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(static_cast<size_t>(w.size()));
    for (uint8_t b : w.symbols()) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::string to_string(const QWord& w) {
    std::string s;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) s.push_back(',');
        s += std::to_string(static_cast<int>(w.at(i)));
    }
    return s;
}

}  // namespace readchan
