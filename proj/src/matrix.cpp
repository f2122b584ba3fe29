#include "ukostant/matrix.hpp"

namespace ukostant {

namespace {
void check_same_ring(const Matrix& a, const Matrix& b) {
    if (!(a.descriptor() == b.descriptor()))
        throw DomainError("descriptor-mismatch", "matrices belong to different rings");
    if (a.n() != b.n())
        throw DomainError("dimension-mismatch", "matrix dimensions differ");
}
}  // namespace

Matrix Matrix::identity(int n, const RingDescriptor& desc) {
    Matrix m(n, desc);
    for (int i = 0; i < n; ++i) m.set(i, i, RingElement::one(desc));
    return m;
}

void Matrix::set(int i, int j, RingElement v) {
    if (!(v.descriptor() == desc_))
        throw DomainError("descriptor-mismatch", "entry belongs to a different ring");
    e_[static_cast<size_t>(i) * n_ + j] = std::move(v);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b);
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b);
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            RingElement s = RingElement::zero(a.descriptor());
            for (int k = 0; k < a.n(); ++k) s = s + a.at(i, k) * b.at(k, j);
            r.set(i, j, s);
        }
    return r;
}

Matrix mat_neg(const Matrix& a) {
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.set(i, j, -a.at(i, j));
    return r;
}

Matrix scalar_mul(const RingElement& s, const Matrix& a) {
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.set(i, j, s * a.at(i, j));
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.set(i, j, a.at(j, i));
    return r;
}

Matrix sigma_entrywise(const Matrix& a) {
    Matrix r(a.n(), a.descriptor());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.set(i, j, sigma(a.at(i, j)));
    return r;
}

std::vector<RingElement> mat_vec(const Matrix& a, const std::vector<RingElement>& v) {
    if (static_cast<int>(v.size()) != a.n())
        throw DomainError("dimension-mismatch", "vector length does not match matrix");
    std::vector<RingElement> r(v.size(), RingElement::zero(a.descriptor()));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r[i] = r[i] + a.at(i, j) * v[j];
    return r;
}

Matrix gram_matrix(int n, const RingDescriptor& desc) {
    Matrix m(n, desc);
    for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, RingElement::one(desc));
    return m;
}

MembershipReport in_unitary_lie_algebra(const Matrix& a) {
    const int n = a.n();
    Matrix phi = gram_matrix(n, a.descriptor());
    Matrix product = mat_add(mat_mul(phi, a), mat_mul(sigma_entrywise(transpose(a)), phi));

    MembershipReport rep;
    rep.pass = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // index route: A_{n+1-i,j} + sigma(A_{n+1-j,i}), 1-based
            RingElement byIndex = a.at(n - 1 - i, j) + sigma(a.at(n - 1 - j, i));
            if (!(byIndex == product.at(i, j)))
                throw std::logic_error("membership routes disagree: product vs index identity");
            if (rep.pass && !byIndex.is_zero()) {
                rep.pass = false;
                rep.fail_i = i + 1;
                rep.fail_j = j + 1;
                rep.fail_value = byIndex;
            }
        }
    return rep;
}

Polynomial char_poly(const Matrix& a) {
    const int n = a.n();
    const auto& desc = a.descriptor();
    const RingElement one = RingElement::one(desc);
    const RingElement zero = RingElement::zero(desc);

    // Berkowitz: grow the char poly of leading principal minors. Coefficients
    // kept high-to-low, flipped at the end.
    std::vector<RingElement> poly = {one, -a.at(0, 0)};
    for (int i = 1; i < n; ++i) {
        const int m = i;  // size of the previous principal block
        // Toeplitz column: 1, -a_ii, -(R C), -(R M C), ..., -(R M^{m-1} C)
        std::vector<RingElement> t = {one, -a.at(i, i)};
        std::vector<RingElement> w(m, zero);
        for (int j = 0; j < m; ++j) w[j] = a.at(j, i);
        for (int k = 2; k <= m + 1; ++k) {
            RingElement dot = zero;
            for (int j = 0; j < m; ++j) dot = dot + a.at(i, j) * w[j];
            t.push_back(-dot);
            if (k < m + 1) {
                std::vector<RingElement> nw(m, zero);
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c) nw[r] = nw[r] + a.at(r, c) * w[c];
                w = std::move(nw);
            }
        }
        std::vector<RingElement> np(static_cast<size_t>(i) + 2, zero);
        for (size_t j = 0; j < poly.size(); ++j)
            for (size_t k = 0; k < t.size(); ++k)
                if (j + k < np.size()) np[j + k] = np[j + k] + t[k] * poly[j];
        poly = std::move(np);
    }

    Polynomial p;
    p.coeffs.assign(poly.rbegin(), poly.rend());
    return p;
}

RingElement determinant(const Matrix& a) {
    Polynomial p = char_poly(a);
    RingElement c0 = p.coeffs[0];  // det(xI - A) at x = 0 is (-1)^n det(A)
    return a.n() % 2 == 0 ? c0 : -c0;
}

Matrix eval_at_matrix(const Polynomial& p, const Matrix& a) {
    Matrix r(a.n(), a.descriptor());
    Matrix power = Matrix::identity(a.n(), a.descriptor());
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
        r = mat_add(r, scalar_mul(p.coeffs[k], power));
        if (k + 1 < p.coeffs.size()) power = mat_mul(power, a);
    }
    return r;
}

bool krylov_unit(const Matrix& a, const std::vector<RingElement>& v) {
    if (static_cast<int>(v.size()) != a.n())
        throw DomainError("dimension-mismatch", "vector length does not match matrix");
    Matrix k(a.n(), a.descriptor());
    std::vector<RingElement> col = v;
    for (int j = 0; j < a.n(); ++j) {
        for (int i = 0; i < a.n(); ++i) k.set(i, j, col[i]);
        if (j + 1 < a.n()) col = mat_vec(a, col);
    }
    return determinant(k).is_unit();
}

}  // namespace ukostant
