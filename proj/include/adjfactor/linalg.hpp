#ifndef ADJFACTOR_LINALG_HPP
#define ADJFACTOR_LINALG_HPP

#include <vector>

#include "adjfactor/field.hpp"

namespace af {

// Dense matrix over a Field, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(const Field& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Coeff::zero(f)) {}

    static Mat identity(const Field& f, std::size_t n);
    static Mat from_rows(const Field& f, const std::vector<std::vector<Coeff>>& rows);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Coeff& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Coeff& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Coeff> row(std::size_t i) const;
    void append_row(const std::vector<Coeff>& r);

    Mat transpose() const;
    Mat mul(const Mat& o) const;

    bool operator==(const Mat& o) const;

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Coeff> a_;
};

// In-place reduced row echelon form; deterministic pivoting (leftmost column,
// then topmost row).  Returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);

// Basis of {v : M v = 0}, returned as the reduced row echelon basis
// (rows sorted by pivot position).
Mat right_kernel(const Mat& m);
// Basis of {v : v M = 0}, reduced row echelon.
Mat left_kernel(const Mat& m);
// Reduced echelon basis of the row space.
Mat row_space(const Mat& m);

// Solve M x = b; throws Err::Internal if inconsistent, requires unique solution
// only when M has full column rank on the pivot columns used.
std::vector<Coeff> solve(const Mat& m, const std::vector<Coeff>& b);

}  // namespace af

#endif
