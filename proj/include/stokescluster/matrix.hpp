#ifndef STOKESCLUSTER_MATRIX_HPP
#define STOKESCLUSTER_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "stokescluster/rational.hpp"

namespace sc {

// Dense matrix over exact rational functions.
class MatrixRF {
public:
    MatrixRF() : rows_(0), cols_(0) {}
    MatrixRF(std::size_t rows, std::size_t cols);
    static MatrixRF identity(std::size_t n);
    static MatrixRF diagonal(const std::vector<RationalFunction>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RationalFunction& at(std::size_t i, std::size_t j);
    const RationalFunction& at(std::size_t i, std::size_t j) const;

    MatrixRF operator+(const MatrixRF& o) const;
    MatrixRF operator-(const MatrixRF& o) const;
    MatrixRF operator*(const MatrixRF& o) const;
    MatrixRF scale(const RationalFunction& c) const;

    MatrixRF transpose() const;
    MatrixRF inverse() const;            // throws SingularMatrix
    MatrixRF inverse_transpose() const;
    MatrixRF adjugate() const;           // cofactor transpose, any size
    MatrixRF pow(std::int64_t e) const;  // square matrices; negative uses inverse
    RationalFunction det() const;
    RationalFunction trace() const;

    MatrixRF derivative(VarId v) const;
    MatrixRF substitute(const std::map<VarId, RationalFunction>& images) const;
    std::vector<std::vector<mpq_class>> eval(const std::map<VarId, mpq_class>& point) const;

    bool equals(const MatrixRF& o) const;
    bool is_identity() const;
    bool is_zero() const;
    std::vector<VarId> variables() const;
    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<RationalFunction> a_;
    void check_square(const char* what) const;
};

// Exact rank of a rational matrix via fraction-free elimination.
std::size_t rank_q(std::vector<std::vector<mpq_class>> m);

} // namespace sc

#endif
