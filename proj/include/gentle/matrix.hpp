#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gentle {

// All linear algebra in this project is exact; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return data_[i * cols_ + j]; }
    const Integer& at(int i, int j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact rank over the integers via fraction-free (Bareiss-style) Gaussian
// elimination with full pivoting.
long rank_oracle(const IntMatrix& m);

// Exact determinant of a square matrix via the Bareiss fraction-free
// algorithm with row pivoting.
Integer det_oracle(const IntMatrix& m);

// Aligned decimal rendering for CLI output.
std::string format_matrix(const IntMatrix& m, const std::string& indent = "  ");

}  // namespace gentle
