#include "adjfactor/linalg.hpp"

#include <algorithm>

namespace af {

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coeff::one(f);
    return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<Coeff>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Mat m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check(rows[i].size() == c, Err::BadInput, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Coeff> Mat::row(std::size_t i) const {
    std::vector<Coeff> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

void Mat::append_row(const std::vector<Coeff>& r) {
    check(r.size() == cols_ || rows_ == 0, Err::BadInput, "row width mismatch");
    if (rows_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::mul(const Mat& o) const {
    check(cols_ == o.rows_, Err::BadInput, "matrix dimension mismatch");
    Mat m(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        }
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_)) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Coeff inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Coeff fac = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - fac * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat right_kernel(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> piv = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : piv) is_pivot[c] = true;
    Mat ker(m.field(), 0, m.cols());
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Coeff> v(m.cols(), Coeff::zero(m.field()));
        v[fc] = Coeff::one(m.field());
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, fc);
        ker.append_row(v);
    }
    rref(ker);  // canonical reduced echelon basis
    return ker;
}

Mat left_kernel(const Mat& m) { return right_kernel(m.transpose()); }

Mat row_space(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> piv = rref(r);
    Mat out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) out.append_row(r.row(i));
    return out;
}

std::vector<Coeff> solve(const Mat& m, const std::vector<Coeff>& b) {
    check(b.size() == m.rows(), Err::BadInput, "rhs size mismatch");
    Mat aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv = rref(aug);
    std::vector<Coeff> x(m.cols(), Coeff::zero(m.field()));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        check(piv[i] < m.cols(), Err::Internal, "inconsistent linear system");
        x[piv[i]] = aug.at(i, m.cols());
    }
    return x;
}

}  // namespace af
