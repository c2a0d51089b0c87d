#include "patchwork/gf2.hpp"

namespace patchwork {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(rows, std::vector<uint64_t>((cols + 63) / 64, 0)) {}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t bit = (uint64_t)1 << (c & 63);
    if (v)
        data_[r][c >> 6] |= bit;
    else
        data_[r][c >> 6] &= ~bit;
}

void BitMatrix::append_row(const std::vector<bool>& row) {
    std::vector<uint64_t> w(words_, 0);
    for (int c = 0; c < cols_; ++c)
        if (row[c]) w[c >> 6] |= (uint64_t)1 << (c & 63);
    data_.push_back(std::move(w));
    ++rows_;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<int> rref(std::vector<std::vector<uint64_t>>& m, int cols) {
    std::vector<int> pivots;
    int r = 0;
    const int rows = (int)m.size();
    for (int c = 0; c < cols && r < rows; ++c) {
        const int w = c >> 6;
        const uint64_t bit = (uint64_t)1 << (c & 63);
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][w] & bit) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = 0; i < rows; ++i)
            if (i != r && (m[i][w] & bit))
                for (size_t k = 0; k < m[i].size(); ++k) m[i][k] ^= m[r][k];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int BitMatrix::rank() const {
    auto m = data_;
    return (int)rref(m, cols_).size();
}

std::vector<std::vector<bool>> BitMatrix::kernel() const {
    auto m = data_;
    std::vector<int> piv = rref(m, cols_);
    std::vector<int> pivot_row(cols_, -1);
    for (int i = 0; i < (int)piv.size(); ++i) pivot_row[piv[i]] = i;
    std::vector<std::vector<bool>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivot_row[f] >= 0) continue;
        std::vector<bool> x(cols_, false);
        x[f] = true;
        for (int i = 0; i < (int)piv.size(); ++i)
            if ((m[i][f >> 6] >> (f & 63)) & 1u) x[piv[i]] = true;
        basis.push_back(std::move(x));
    }
    return basis;
}

bool BitMatrix::symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

}  // namespace patchwork
