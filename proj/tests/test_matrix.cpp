#include <doctest.h>

#include "gentle/matrix.hpp"
#include "gentle/randgen.hpp"

using namespace gentle;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Cofactor expansion along the first row; exponential, test-only.
Integer det_cofactor(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Integer det = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int col = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, col++) = m.at(i, k);
            }
        }
        Integer term = m.at(0, j) * det_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Rank as the largest size of a square submatrix with nonzero determinant.
long rank_by_minors(const IntMatrix& m) {
    const int r = m.rows(), c = m.cols();
    for (int size = std::min(r, c); size >= 1; --size) {
        std::vector<int> row_pick(size), col_pick(size);
        std::vector<int> rows_mask(r, 0), cols_mask(c, 0);
        std::fill(rows_mask.begin(), rows_mask.begin() + size, 1);
        std::sort(rows_mask.begin(), rows_mask.end());
        do {
            int ri = 0;
            for (int i = 0; i < r; ++i)
                if (rows_mask[i]) row_pick[ri++] = i;
            std::fill(cols_mask.begin(), cols_mask.end(), 0);
            std::fill(cols_mask.begin(), cols_mask.begin() + size, 1);
            std::sort(cols_mask.begin(), cols_mask.end());
            do {
                int ci = 0;
                for (int j = 0; j < c; ++j)
                    if (cols_mask[j]) col_pick[ci++] = j;
                IntMatrix sub(size, size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(row_pick[i], col_pick[j]);
                if (det_cofactor(sub) != 0) return size;
            } while (std::next_permutation(cols_mask.begin(), cols_mask.end()));
        } while (std::next_permutation(rows_mask.begin(), rows_mask.end()));
    }
    return 0;
}

}  // namespace

TEST_CASE("determinants of pinned matrices") {
    CHECK(det_oracle(from_rows({{2, 3}, {5, 7}})) == -1);
    CHECK(det_oracle(from_rows({{4}})) == 4);
    CHECK(det_oracle(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(det_oracle(from_rows({{0, 1}, {1, 0}})) == -1);
    // Vandermonde on 2, 3, 5: (3-2)(5-2)(5-3) = 6.
    CHECK(det_oracle(from_rows({{1, 2, 4}, {1, 3, 9}, {1, 5, 25}})) == 6);
}

TEST_CASE("rank of pinned matrices") {
    CHECK(rank_oracle(from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank_oracle(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_oracle(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_oracle(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 2);
    CHECK(rank_oracle(from_rows({{1, 1}})) == 1);
    CHECK(rank_oracle(from_rows({{2}, {1}})) == 1);
}

TEST_CASE("fraction-free division stays exact on a growth-prone matrix") {
    // Entries chosen so naive elimination would need fractions.
    IntMatrix m = from_rows({{3, 1, 4, 1}, {5, 9, 2, 6}, {5, 3, 5, 8}, {9, 7, 9, 3}});
    CHECK(det_oracle(m) == det_cofactor(m));
}

TEST_CASE("random matrices agree with the cofactor and minor oracles") {
    Rng rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(4));
        int cols = 1 + static_cast<int>(rng.below(4));
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long>(rng.below(11)) - 5;
        CHECK(rank_oracle(m) == rank_by_minors(m));
        if (rows == cols) CHECK(det_oracle(m) == det_cofactor(m));
    }
}

TEST_CASE("matrix product shape check") {
    CHECK_THROWS(from_rows({{1, 2}}) * from_rows({{1, 2}}));
    IntMatrix b = from_rows({{1, 1}});
    IntMatrix c = b * b.transpose();
    CHECK(c.rows() == 1);
    CHECK(c.at(0, 0) == 2);
    CHECK(c.is_symmetric());
}

TEST_CASE("format_matrix aligns columns") {
    std::string text = format_matrix(from_rows({{10, 2}, {3, 400}}), "");
    CHECK(text == " 10   2\n  3 400\n");
}
