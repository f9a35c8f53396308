#pragma once

#include <string>
#include <vector>

#include "cyk/linalg.hpp"

namespace cyk {

// Rank-3 tensor with all indices of the same size; t(i,j,k) is the
// coefficient of basis element k in the product (or coproduct) of i and j.
class Tensor3 {
public:
    Tensor3() : n_(0) {}
    explicit Tensor3(size_t n) : n_(n), data_(n * n * n) {}

    size_t size() const noexcept { return n_; }
    CycScalar& at(size_t i, size_t j, size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const CycScalar& at(size_t i, size_t j, size_t k) const {
        return data_[(i * n_ + j) * n_ + k];
    }

    bool operator==(const Tensor3& rhs) const {
        return n_ == rhs.n_ && data_ == rhs.data_;
    }

private:
    size_t n_;
    std::vector<CycScalar> data_;
};

struct CheckItem {
    std::string name;
    bool pass;
    std::string note;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string note = "") {
        items.push_back({std::move(name), pass, std::move(note)});
    }
};

// A finite-dimensional commutative algebra with a chosen counit; the
// comultiplication is always derived from the induced pairing, never stored.
struct FrobeniusAlgebra {
    std::string name;
    long order = 1;                       // cyclotomic order the data lives in
    std::vector<std::string> basis;
    Tensor3 mult;                         // mult(i,j,k): coefficient of b_k in b_i * b_j
    std::vector<CycScalar> unit;
    std::vector<CycScalar> counit;        // functional values on basis elements

    size_t dim() const { return basis.size(); }

    // Product of two coefficient vectors in this algebra.
    std::vector<CycScalar> product(const std::vector<CycScalar>& a,
                                   const std::vector<CycScalar>& b) const;
    // Matrix of left multiplication by the coefficient vector a.
    CycMatrix mult_operator(const std::vector<CycScalar>& a) const;
    CycScalar apply_counit(const std::vector<CycScalar>& a) const;
};

CheckReport check_axioms(const FrobeniusAlgebra& a);

// Gram matrix of the pairing (x, y) -> counit(x * y).
CycMatrix pairing_matrix(const FrobeniusAlgebra& a);

// Comultiplication from the dual basis of the pairing; DegeneratePairing
// if the pairing matrix is singular.
Tensor3 derive_comul(const FrobeniusAlgebra& a);

// Matrix of mult . comul in the given basis.
CycMatrix window(const FrobeniusAlgebra& a);

bool is_semisimple(const FrobeniusAlgebra& a);

// Number of indecomposable summands over the algebraic closure; requires
// semisimplicity (NotSemisimple otherwise).
long indecomposable_count(const FrobeniusAlgebra& a);

// Complete orthogonal set of primitive idempotents with entries in
// Q(zeta_{working_order}). Raises SplitFieldNeeded when some multiplication
// operator has an eigenvalue outside that field; callers may retry with a
// larger working order. working_order = 0 uses the algebra's own order.
std::vector<std::vector<CycScalar>> primitive_idempotents(const FrobeniusAlgebra& a,
                                                          long working_order = 0);

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

// k[Z/n1 x ... x Z/nk] with counit dual to the identity element.
FrobeniusAlgebra group_algebra(const std::vector<long>& factors);

// k[x]/(x^2) with the given counit values on (1, x).
FrobeniusAlgebra nilpotent_algebra(const Rational& counit_one, const Rational& counit_x);

} // namespace cyk
