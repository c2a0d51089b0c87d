#pragma once

#include <cstdint>
#include <vector>

namespace patchwork {

// Dense matrix over GF(2), one bitset per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (data_[r][c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v);
    void flip(int r, int c) { data_[r][c >> 6] ^= (uint64_t)1 << (c & 63); }
    void append_row(const std::vector<bool>& row);

    // rank by Gaussian elimination, pivots taken in column order
    int rank() const;
    // basis of {x : M x = 0}
    std::vector<std::vector<bool>> kernel() const;
    bool symmetric() const;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::vector<uint64_t>> data_;
};

}  // namespace patchwork
