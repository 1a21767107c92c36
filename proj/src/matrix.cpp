#include "gentle/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "gentle/errors.hpp"

namespace gentle {

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// One fraction-free elimination step at pivot (k,k). Entries of the trailing
// submatrix stay integral because each update is a 2x2 minor divided by the
// previous pivot (Sylvester's identity).
void bareiss_step(IntMatrix& m, int k, const Integer& prev_pivot) {
    const Integer pivot = m.at(k, k);
    for (int i = k + 1; i < m.rows(); ++i) {
        for (int j = k + 1; j < m.cols(); ++j) {
            Integer num = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
            Integer quotient, remainder;
            boost::multiprecision::divide_qr(num, prev_pivot, quotient, remainder);
            if (remainder != 0) throw Error("fraction-free elimination lost exactness");
            m.at(i, j) = std::move(quotient);
        }
        m.at(i, k) = 0;
    }
}

}  // namespace

long rank_oracle(const IntMatrix& input) {
    IntMatrix m = input;
    const int steps = std::min(m.rows(), m.cols());
    Integer prev_pivot = 1;
    int k = 0;
    for (; k < steps; ++k) {
        int pivot_row = -1, pivot_col = -1;
        for (int i = k; i < m.rows() && pivot_row == -1; ++i)
            for (int j = k; j < m.cols(); ++j)
                if (m.at(i, j) != 0) {
                    pivot_row = i;
                    pivot_col = j;
                    break;
                }
        if (pivot_row == -1) break;
        swap_rows(m, k, pivot_row);
        swap_cols(m, k, pivot_col);
        bareiss_step(m, k, prev_pivot);
        prev_pivot = m.at(k, k);
    }
    return k;
}

Integer det_oracle(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
    const int n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev_pivot = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row == -1) return 0;
        if (pivot_row != k) {
            swap_rows(m, k, pivot_row);
            sign = -sign;
        }
        bareiss_step(m, k, prev_pivot);
        prev_pivot = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix& m, const std::string& indent) {
    std::vector<std::string> cells(m.rows() * m.cols());
    size_t width = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = m.at(i, j).str();
            width = std::max(width, cells[i * m.cols() + j].size());
        }
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        out << indent;
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& cell = cells[i * m.cols() + j];
            out << std::string(width - cell.size(), ' ') << cell;
            if (j + 1 < m.cols()) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace gentle
