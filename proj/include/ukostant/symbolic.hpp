#ifndef UKOSTANT_SYMBOLIC_HPP
#define UKOSTANT_SYMBOLIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ukostant/ring.hpp"

namespace ukostant {

/// Multivariate polynomial over the integers in x (variable 0) and
/// b_1, ..., b_n (variables 1..n). Sparse term map keyed by exponent
/// vectors; zero coefficients are never stored.
class SymbolicPolynomial {
public:
    explicit SymbolicPolynomial(int nvars) : nvars_(nvars) {}

    static SymbolicPolynomial constant(std::int64_t c, int nvars);
    static SymbolicPolynomial variable(int idx, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, std::int64_t>& terms() const { return terms_; }

    SymbolicPolynomial operator+(const SymbolicPolynomial& o) const;
    SymbolicPolynomial operator-(const SymbolicPolynomial& o) const;
    SymbolicPolynomial operator*(const SymbolicPolynomial& o) const;
    SymbolicPolynomial operator-() const;
    bool operator==(const SymbolicPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// The coefficient of x^k, as a polynomial in the remaining variables.
    SymbolicPolynomial coefficient_of_x(int k) const;

    /// Largest variable index appearing with a nonzero exponent (0 if none).
    int max_variable() const;

    /// Max exponent of variable idx across all terms.
    int degree_in(int idx) const;

    /// Substitutes ring values for the variables (values[i] for variable
    /// i + 1; x must not appear).
    RingElement evaluate(const RingDescriptor& desc,
                         const std::vector<RingElement>& values) const;

    /// Deterministic human-readable form, e.g. "b1^2 + 2*b2".
    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, std::int64_t> terms_;

    void add_term(std::vector<int> exps, std::int64_t c);
};

/// Cofactor-expansion characteristic polynomial of the symbolic model
/// matrix: returns a_k as a polynomial in b_1..b_k for k = 1..n. Verifies
/// that a_k involves only b_1..b_k and is linear in b_k with integer
/// coefficient exactly 2; a violation would invalidate the b-solver and
/// throws. Refuses n > 5.
std::map<int, SymbolicPolynomial> symbolic_charpoly_oracle(int n);

}  // namespace ukostant

#endif
