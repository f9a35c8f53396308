#include "cyk/linalg.hpp"

namespace cyk {

CycMatrix CycMatrix::identity(size_t n) {
    CycMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar::from_long(1);
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    CycMatrix out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    return out;
}

std::vector<CycScalar> CycMatrix::apply(const std::vector<CycScalar>& v) const {
    std::vector<CycScalar> out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != rhs.data_[i]) return false;
    return true;
}

CycScalar determinant(CycMatrix m) {
    const size_t n = m.rows();
    CycScalar det = CycScalar::from_long(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return CycScalar();
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        CycScalar inv = m.at(col, col).inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            CycScalar f = m.at(row, col) * inv;
            for (size_t j = col; j < n; ++j) {
                m.at(row, j) -= f * m.at(col, j);
            }
        }
    }
    return det;
}

std::optional<std::vector<CycScalar>> solve(CycMatrix m, std::vector<CycScalar> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        CycScalar inv = m.at(col, col).inverse();
        for (size_t j = col; j < n; ++j) m.at(col, j) *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m.at(row, col).is_zero()) continue;
            CycScalar f = m.at(row, col);
            for (size_t j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
            b[row] -= f * b[col];
        }
    }
    return b;
}

std::optional<CycMatrix> inverse(const CycMatrix& m) {
    const size_t n = m.rows();
    CycMatrix work = m;
    CycMatrix inv = CycMatrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        CycScalar s = work.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            work.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || work.at(row, col).is_zero()) continue;
            CycScalar f = work.at(row, col);
            for (size_t j = 0; j < n; ++j) {
                work.at(row, j) -= f * work.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

long signature(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    long sig = 0;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            size_t l = k + 1;
            while (l < n && m[k][l] == 0) ++l;
            if (l == n) continue; // zero row/column contributes nothing
            if (m[l][l] != 0) {
                std::swap(m[k], m[l]);
                for (auto& row : m) std::swap(row[k], row[l]);
            } else {
                // add row/col l into k; the new diagonal entry is 2*m[k][l] != 0
                for (size_t j = 0; j < n; ++j) m[k][j] += m[l][j];
                for (size_t i = 0; i < n; ++i) m[i][k] += m[i][l];
            }
        }
        if (m[k][k] == 0) continue;
        sig += (m[k][k] > 0) ? 1 : -1;
        Rational pivot_inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] * pivot_inv;
            for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (size_t j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
        }
    }
    return sig;
}

} // namespace cyk
