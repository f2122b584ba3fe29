#include "ukostant/section.hpp"

namespace ukostant {

namespace {

bool parity_ok(const RingElement& v, int k /* 1-based */) {
    RingElement s = sigma(v);
    return k % 2 == 0 ? s == v : s == -v;
}

RingElement half(const RingDescriptor& desc) {
    RingElement two = RingElement::from_int(desc, 2);
    if (!two.is_unit())
        throw DomainError("non-invertible-2", "2 is not a unit in this backend");
    return two.inverse();
}

}  // namespace

InvariantTuple InvariantTuple::checked(std::vector<RingElement> coeffs) {
    InvariantTuple t;
    t.n = static_cast<int>(coeffs.size());
    if (t.n < 1) throw DomainError("bad-input", "invariant tuple must have length >= 1");
    for (int k = 1; k <= t.n; ++k)
        if (!parity_ok(coeffs[k - 1], k))
            throw DomainError("codomain-violation",
                              "sigma(a_" + std::to_string(k) + ") != (-1)^" + std::to_string(k) +
                                  " a_" + std::to_string(k));
    t.a = std::move(coeffs);
    return t;
}

Matrix model_matrix(const std::vector<RingElement>& b, const RingDescriptor& desc) {
    const int n = static_cast<int>(b.size());
    Matrix m(n, desc);
    RingElement two = RingElement::from_int(desc, 2);
    m.set(0, n - 1, -(two * b[n - 1]));
    for (int k = 1; k <= n - 1; ++k) {
        m.set(0, k - 1, -b[k - 1]);        // first row
        m.set(n - k, n - 1, -b[k - 1]);    // last column, row n+1-k
        m.set(k, k - 1, RingElement::one(desc));  // unit subdiagonal
    }
    return m;
}

std::vector<RingElement> solve_b(const InvariantTuple& a) {
    const int n = a.n;
    const RingDescriptor desc = a.a[0].descriptor();
    const RingElement h = half(desc);

    std::vector<RingElement> b(static_cast<size_t>(n), RingElement::zero(desc));
    for (int k = 1; k <= n; ++k) {
        // with b_1..b_{k-1} fixed and b_{>=k} = 0, the x^{n-k} coefficient
        // differs from a_k by exactly 2 b_k
        Polynomial chi = char_poly(model_matrix(b, desc));
        RingElement ck = chi.coeffs[n - k];
        b[k - 1] = (a.a[k - 1] - ck) * h;
    }
    return b;
}

Matrix diag_alpha(const RingElement& alpha, int n) {
    if (!alpha.is_unit()) throw DomainError("invalid-alpha", "alpha must be a unit");
    Matrix d(n, alpha.descriptor());
    RingElement p = RingElement::one(alpha.descriptor());
    for (int i = 0; i < n; ++i) {
        d.set(i, i, p);
        if (i + 1 < n) p = p * alpha;
    }
    return d;
}

namespace {

/// Entry (i, j), 1-based, straight from the four-case table in the
/// membership proof. Used to cross-check the display-pattern fill.
RingElement case_table_entry(int i, int j, int n, const std::vector<RingElement>& b,
                             const RingElement& alpha) {
    const RingDescriptor& desc = alpha.descriptor();
    if (i == 1 && j == n)
        return -(RingElement::from_int(desc, 2) * pow(alpha, -(n - 1)) * b[n - 1]);
    for (int k = 1; k <= n - 1; ++k)
        if ((i == 1 && j == k) || (i == n + 1 - k && j == n))
            return -(pow(alpha, -(k - 1)) * b[k - 1]);
    if (j >= 1 && j <= n - 1 && i == j + 1) return alpha;
    return RingElement::zero(desc);
}

}  // namespace

SectionResult build_X(const InvariantTuple& a, const RingElement& alpha) {
    const int n = a.n;
    const RingDescriptor desc = a.a[0].descriptor();
    if (!(alpha.descriptor() == desc))
        throw DomainError("descriptor-mismatch", "alpha belongs to a different ring");
    if (!alpha.is_unit() || !is_trace_zero(alpha))
        throw DomainError("invalid-alpha", "alpha must be a unit with alpha + sigma(alpha) = 0");

    std::vector<RingElement> b = solve_b(a);

    // fill by the display pattern: twisted first row, alpha subdiagonal,
    // twisted last column
    Matrix x(n, desc);
    x.set(0, n - 1,
          -(RingElement::from_int(desc, 2) * pow(alpha, -(n - 1)) * b[n - 1]));
    for (int k = 1; k <= n - 1; ++k) {
        RingElement v = -(pow(alpha, -(k - 1)) * b[k - 1]);
        x.set(0, k - 1, v);
        x.set(n - k, n - 1, v);
        x.set(k, k - 1, alpha);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(x.at(i - 1, j - 1) == case_table_entry(i, j, n, b, alpha)))
                throw std::logic_error("section matrix disagrees with the case table");

    SectionResult res{x, std::move(b), alpha, {}};

    res.report.membership_detail = in_unitary_lie_algebra(x);
    res.report.membership = res.report.membership_detail.pass;

    Polynomial chi = char_poly(x);
    res.report.charpoly_match = true;
    for (int k = 1; k <= n; ++k)
        if (!(chi.coeffs[n - k] == a.a[k - 1])) res.report.charpoly_match = false;

    Matrix dmat = diag_alpha(alpha, n);
    Matrix dinv = diag_alpha(alpha.inverse(), n);
    res.report.conjugacy_match = mat_mul(mat_mul(dinv, x), dmat) == model_matrix(res.b, desc);

    return res;
}

SectionResult build_X(const InvariantTuple& a) {
    return build_X(a, choose_alpha(a.a[0].descriptor()));
}

InvariantTuple phi_n(const Matrix& gamma) {
    MembershipReport rep = in_unitary_lie_algebra(gamma);
    if (!rep.pass)
        throw DomainError("not-in-lie-algebra",
                          "matrix is not in the unitary Lie algebra, first failure at (" +
                              std::to_string(rep.fail_i) + ", " + std::to_string(rep.fail_j) + ")");
    Polynomial chi = char_poly(gamma);
    const int n = gamma.n();
    std::vector<RingElement> a;
    a.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) a.push_back(chi.coeffs[n - k]);
    return InvariantTuple::checked(std::move(a));
}

std::string ExistenceResult::label() const {
    if (!exists_over_o) return "no-guarantee";
    return constructive_here ? "yes-over-o, constructive-here"
                             : "yes-over-o, not constructive-here";
}

ExistenceResult kostant_exists(int n, long residue_char) {
    if (n < 1) throw DomainError("bad-input", "n must be >= 1");
    if (residue_char < 2) throw DomainError("bad-input", "residue characteristic must be prime");
    ExistenceResult r;
    r.n = n;
    r.residue_char = residue_char;
    r.exists_over_o = (n % 2 == 1) || (residue_char != 2);
    r.constructive_here = residue_char != 2;
    return r;
}

}  // namespace ukostant
