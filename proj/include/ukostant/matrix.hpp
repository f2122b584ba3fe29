#ifndef UKOSTANT_MATRIX_HPP
#define UKOSTANT_MATRIX_HPP

#include <optional>
#include <vector>

#include "ukostant/ring.hpp"

namespace ukostant {

/// Dense n x n matrix over one ring. Immutable in spirit: operations return
/// fresh matrices, in-place mutation is limited to construction.
class Matrix {
public:
    Matrix(int n, const RingDescriptor& desc)
        : n_(n), desc_(desc), e_(static_cast<size_t>(n) * n, RingElement::zero(desc)) {
        if (n < 1) throw DomainError("bad-input", "matrix dimension must be >= 1");
    }

    static Matrix identity(int n, const RingDescriptor& desc);

    int n() const { return n_; }
    const RingDescriptor& descriptor() const { return desc_; }

    const RingElement& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, RingElement v);

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    int n_;
    RingDescriptor desc_;
    std::vector<RingElement> e_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix scalar_mul(const RingElement& s, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix sigma_entrywise(const Matrix& a);

std::vector<RingElement> mat_vec(const Matrix& a, const std::vector<RingElement>& v);

/// Anti-diagonal Gram matrix: entry (i, j) = 1 iff i + j = n + 1 (1-based).
Matrix gram_matrix(int n, const RingDescriptor& desc);

/// Outcome of the skew-hermitian membership test. Failure is data, not an
/// error; indices are 1-based to match the usual matrix conventions.
struct MembershipReport {
    bool pass = false;
    int fail_i = 0;
    int fail_j = 0;
    std::optional<RingElement> fail_value;
};

/// Tests Phi*A + sigma(A^t)*Phi = 0 twice: once by the matrix product and
/// once by the entrywise identity A_{n+1-i,j} + sigma(A_{n+1-j,i}). The two
/// routes must agree on every entry; a disagreement is an internal bug.
MembershipReport in_unitary_lie_algebra(const Matrix& a);

/// Monic polynomial, coefficients stored low-to-high, leading 1 included.
struct Polynomial {
    std::vector<RingElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
};

/// det(xI - A) by the Berkowitz algorithm: division-free, valid over any
/// commutative backend including the truncated series ring.
Polynomial char_poly(const Matrix& a);

RingElement determinant(const Matrix& a);

/// Evaluates a monic polynomial at a square matrix.
Matrix eval_at_matrix(const Polynomial& p, const Matrix& a);

/// True iff det[v | Av | ... | A^{n-1}v] is a unit (regularity witness).
bool krylov_unit(const Matrix& a, const std::vector<RingElement>& v);

}  // namespace ukostant

#endif
