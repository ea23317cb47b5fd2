#ifndef READCHAN_CORE_HPP
#define READCHAN_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace readchan {

// Error taxonomy shared by all modules; the CLI maps these to exit codes.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Window length ell and window step delta of the read channel, together with
// the derived quantities a = floor(ell/delta), b = ell mod delta, d = delta-b.
struct ChannelParams {
    int ell = 1;
    int delta = 1;

    ChannelParams() = default;
    ChannelParams(int ell_, int delta_) : ell(ell_), delta(delta_) {
        if (ell < 1 || delta < 1)
            throw param_error("ChannelParams: require ell >= 1 and delta >= 1");
    }

    int a() const { return ell / delta; }
    int b() const { return ell % delta; }
    int d() const { return delta - b(); }
};

// Binary word. All public indices are 1-based; storage is 0-based and does
// not leak through the interface.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<uint8_t> bits) : sym_(std::move(bits)) {
        for (uint8_t s : sym_)
            if (s > 1) throw param_error("Word: symbol out of {0,1}");
    }
    Word(std::initializer_list<uint8_t> bits) : Word(std::vector<uint8_t>(bits)) {}

    int size() const { return static_cast<int>(sym_.size()); }
    // 1-based symbol access.
    uint8_t at(int i) const {
        if (i < 1 || i > size()) throw param_error("Word::at: index out of range");
        return sym_[static_cast<size_t>(i - 1)];
    }
    const std::vector<uint8_t>& symbols() const { return sym_; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

  private:
    std::vector<uint8_t> sym_;
};

// q-ary word over {0,...,q-1}, q >= 2.
class QWord {
  public:
    QWord() : q_(2) {}
    QWord(std::vector<uint8_t> symbols, int q) : sym_(std::move(symbols)), q_(q) {
        if (q < 2) throw param_error("QWord: require q >= 2");
        for (uint8_t s : sym_)
            if (s >= q) throw param_error("QWord: symbol out of alphabet");
    }

    int size() const { return static_cast<int>(sym_.size()); }
    int q() const { return q_; }
    uint8_t at(int i) const {
        if (i < 1 || i > size()) throw param_error("QWord::at: index out of range");
        return sym_[static_cast<size_t>(i - 1)];
    }
    const std::vector<uint8_t>& symbols() const { return sym_; }

    bool operator==(const QWord&) const = default;

  private:
    std::vector<uint8_t> sym_;
    int q_;
};

// Rectangular matrix with entries in {0,...,q-1}; q = 2 for the binary 2-D
// channel. Row-major storage.
class BitMatrix {
  public:
    BitMatrix() : rows_(0), cols_(0), q_(2) {}
    BitMatrix(int rows, int cols, int q = 2)
        : rows_(rows), cols_(cols), q_(q), ent_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0 || q < 2) throw param_error("BitMatrix: bad shape");
    }
    BitMatrix(std::vector<std::vector<uint8_t>> rows, int q = 2) : q_(q) {
        if (q < 2) throw param_error("BitMatrix: require q >= 2");
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows[0].size()) : 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw param_error("BitMatrix: ragged rows");
            for (uint8_t v : r) {
                if (v >= q) throw param_error("BitMatrix: entry out of alphabet");
                ent_.push_back(v);
            }
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }

    // 1-based access.
    uint8_t at(int r, int c) const {
        check(r, c);
        return ent_[idx(r, c)];
    }
    void set(int r, int c, uint8_t v) {
        check(r, c);
        if (v >= q_) throw param_error("BitMatrix::set: entry out of alphabet");
        ent_[idx(r, c)] = v;
    }
    const std::vector<uint8_t>& flat() const { return ent_; }

    bool operator==(const BitMatrix&) const = default;

  private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r - 1) * cols_ + static_cast<size_t>(c - 1);
    }
    void check(int r, int c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_)
            throw param_error("BitMatrix: index out of range");
    }

    int rows_, cols_, q_;
    std::vector<uint8_t> ent_;
};

// Square matrix of exact integers (adjacency matrices, characteristic
// polynomial input). No floating point anywhere in here.
class IntMatrix {
  public:
    IntMatrix() : dim_(0) {}
    explicit IntMatrix(int dim) : dim_(dim), ent_(static_cast<size_t>(dim) * dim, 0) {
        if (dim < 0) throw param_error("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        dim_ = static_cast<int>(rows.size());
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != dim_)
                throw param_error("IntMatrix: not square");
            for (long long v : r) ent_.push_back(v);
        }
    }

    int dim() const { return dim_; }
    long long& at(int r, int c) { return ent_[idx(r, c)]; }
    long long at(int r, int c) const { return ent_[idx(r, c)]; }

    long long row_sum(int r) const {
        long long s = 0;
        for (int c = 0; c < dim_; ++c) s += at(r, c);
        return s;
    }

    bool operator==(const IntMatrix&) const = default;

  private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
            throw param_error("IntMatrix: index out of range");
        return static_cast<size_t>(r) * dim_ + c;
    }

    int dim_;
    std::vector<long long> ent_;
};

// L1 weight (Hamming weight for binary).
long long weight(const Word& w);
long long weight(const QWord& w);

// Contiguous slice w[i; len], 1-based.
Word subvector(const Word& w, int i, int len);
QWord subvector(const QWord& w, int i, int len);

// l1 x l2 window of B starting at (k1, k2), 1-based inclusive.
BitMatrix submatrix(const BitMatrix& B, int k1, int l1, int k2, int l2);
long long submatrix_weight(const BitMatrix& B, int k1, int l1, int k2, int l2);

std::string to_string(const Word& w);
std::string to_string(const QWord& w);

}  // namespace readchan

#endif
