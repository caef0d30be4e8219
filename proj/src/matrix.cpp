#include "stokescluster/matrix.hpp"

#include <sstream>

namespace sc {

MatrixRF::MatrixRF(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

MatrixRF MatrixRF::identity(std::size_t n) {
    MatrixRF m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one();
    return m;
}

MatrixRF MatrixRF::diagonal(const std::vector<RationalFunction>& d) {
    MatrixRF m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RationalFunction& MatrixRF::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return a_[i * cols_ + j];
}

const RationalFunction& MatrixRF::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return a_[i * cols_ + j];
}

MatrixRF MatrixRF::operator+(const MatrixRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix addition");
    MatrixRF r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

MatrixRF MatrixRF::operator-(const MatrixRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix subtraction");
    MatrixRF r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

MatrixRF MatrixRF::operator*(const MatrixRF& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix multiplication");
    MatrixRF r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

MatrixRF MatrixRF::scale(const RationalFunction& c) const {
    MatrixRF r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

MatrixRF MatrixRF::transpose() const {
    MatrixRF r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void MatrixRF::check_square(const char* what) const {
    if (rows_ != cols_) throw ShapeMismatch(std::string(what) + " requires a square matrix");
}

MatrixRF MatrixRF::inverse() const {
    check_square("inverse");
    std::size_t n = rows_;
    MatrixRF w = *this;
    MatrixRF inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrix("no pivot in column " + std::to_string(col));
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RationalFunction p = w.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            RationalFunction f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

MatrixRF MatrixRF::inverse_transpose() const { return inverse().transpose(); }

RationalFunction MatrixRF::det() const {
    check_square("det");
    std::size_t n = rows_;
    MatrixRF w = *this;
    RationalFunction d = RationalFunction::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) return RationalFunction::zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        RationalFunction p = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            RationalFunction f = w.at(i, col) * p;
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

MatrixRF MatrixRF::adjugate() const {
    check_square("adjugate");
    std::size_t n = rows_;
    if (n == 1) {
        MatrixRF r(1, 1);
        r.at(0, 0) = RationalFunction::one();
        return r;
    }
    MatrixRF r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatrixRF minor(n - 1, n - 1);
            for (std::size_t a = 0, ai = 0; a < n; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, bj = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor.at(ai, bj) = at(a, b);
                    ++bj;
                }
                ++ai;
            }
            RationalFunction c = minor.det();
            if ((i + j) % 2 == 1) c = -c;
            r.at(j, i) = c;
        }
    return r;
}

MatrixRF MatrixRF::pow(std::int64_t e) const {
    check_square("pow");
    if (e < 0) return inverse().pow(-e);
    MatrixRF acc = identity(rows_);
    MatrixRF base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

RationalFunction MatrixRF::trace() const {
    check_square("trace");
    RationalFunction t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

MatrixRF MatrixRF::derivative(VarId v) const {
    MatrixRF r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].derivative(v);
    return r;
}

MatrixRF MatrixRF::substitute(const std::map<VarId, RationalFunction>& images) const {
    MatrixRF r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].substitute(images);
    return r;
}

std::vector<std::vector<mpq_class>> MatrixRF::eval(
    const std::map<VarId, mpq_class>& point) const {
    std::vector<std::vector<mpq_class>> r(rows_, std::vector<mpq_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i][j] = at(i, j).eval(point);
    return r;
}

bool MatrixRF::equals(const MatrixRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!a_[k].equals(o.a_[k])) return false;
    return true;
}

bool MatrixRF::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool MatrixRF::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<VarId> MatrixRF::variables() const {
    std::vector<VarId> all;
    for (const auto& e : a_)
        for (VarId v : e.variables())
            if (!std::binary_search(all.begin(), all.end(), v))
                all.insert(std::upper_bound(all.begin(), all.end(), v), v);
    return all;
}

std::string MatrixRF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace sc
