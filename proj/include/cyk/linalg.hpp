#pragma once

#include <optional>
#include <vector>

#include "cyk/cyclotomic.hpp"

namespace cyk {

// Dense row-major matrix over CycScalar. Sized for the small systems this
// project needs (fusion algebras, pairings); all arithmetic is exact.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CycMatrix identity(size_t n);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    CycScalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const CycScalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    CycMatrix operator*(const CycMatrix& rhs) const;
    std::vector<CycScalar> apply(const std::vector<CycScalar>& v) const;

    bool operator==(const CycMatrix& rhs) const;

private:
    size_t rows_, cols_;
    std::vector<CycScalar> data_;
};

CycScalar determinant(CycMatrix m);
std::optional<CycMatrix> inverse(const CycMatrix& m);

// Solves m x = b; nullopt when m is singular.
std::optional<std::vector<CycScalar>> solve(CycMatrix m, std::vector<CycScalar> b);

// Signature (p - n counts of a congruence diagonalization) of a symmetric
// rational matrix, computed exactly.
long signature(std::vector<std::vector<Rational>> m);

} // namespace cyk
