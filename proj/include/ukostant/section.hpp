#ifndef UKOSTANT_SECTION_HPP
#define UKOSTANT_SECTION_HPP

#include <string>
#include <vector>

#include "ukostant/matrix.hpp"

namespace ukostant {

/// (a_1, ..., a_n) with sigma(a_i) = (-1)^i a_i, the coefficient tuple of a
/// monic polynomial x^n + a_1 x^{n-1} + ... + a_n. Parity is checked at
/// construction.
struct InvariantTuple {
    int n = 0;
    std::vector<RingElement> a;

    static InvariantTuple checked(std::vector<RingElement> coeffs);
};

struct VerificationReport {
    bool membership = false;
    bool charpoly_match = false;
    bool conjugacy_match = false;
    MembershipReport membership_detail;

    bool pass() const { return membership && charpoly_match && conjugacy_match; }
};

struct SectionResult {
    Matrix X;
    std::vector<RingElement> b;
    RingElement alpha;
    VerificationReport report;
};

/// Recovers (b_1, ..., b_n) such that the companion-type model matrix has
/// characteristic polynomial x^n + a_1 x^{n-1} + ... + a_n. Forward
/// substitution: a_k is linear in b_k with coefficient 2, so each step is one
/// char-poly evaluation and a division by 2.
std::vector<RingElement> solve_b(const InvariantTuple& a);

/// The companion-type matrix: first row (-b_1, ..., -b_{n-1}, -2 b_n), unit
/// subdiagonal, last column (-b_{n-1}, ..., -b_1) below the first row. At
/// n = 1 this degenerates to the 1x1 matrix (-2 b_1), so that the
/// characteristic polynomial convention x + 2 b_1 = x + a_1 holds.
Matrix model_matrix(const std::vector<RingElement>& b, const RingDescriptor& desc);

/// diag(1, alpha, ..., alpha^{n-1}).
Matrix diag_alpha(const RingElement& alpha, int n);

/// The section matrix: the alpha-twisted companion-type matrix, verified
/// against all three identities (membership, char poly, conjugacy to the
/// model matrix). Verification is built in; the report always accompanies X.
SectionResult build_X(const InvariantTuple& a, const RingElement& alpha);
SectionResult build_X(const InvariantTuple& a);  // canonical alpha

/// Coefficients of the characteristic polynomial of a verified member of the
/// unitary Lie algebra. Throws "not-in-lie-algebra" if membership fails and
/// "codomain-violation" if the sigma-parity check fails (the latter would be
/// an arithmetic bug, membership implies it).
InvariantTuple phi_n(const Matrix& gamma);

struct ExistenceResult {
    int n = 0;
    long residue_char = 0;
    bool exists_over_o = false;     // guaranteed by the existence theorem
    bool constructive_here = false; // buildable by this library (char != 2)

    std::string label() const;
};

/// Existence of a Kostant section for u_n over o, by n parity and residue
/// characteristic. Purely a predicate; nothing is constructed.
ExistenceResult kostant_exists(int n, long residue_char);

}  // namespace ukostant

#endif
