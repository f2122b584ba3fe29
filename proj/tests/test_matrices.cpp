#include <doctest.h>

#include "ukostant/harness.hpp"
#include "ukostant/matrix.hpp"
#include "ukostant/section.hpp"

using namespace ukostant;

namespace {
RingElement ff(const RingDescriptor& d, long x, long y) { return RingElement::make_ff(d, x, y); }
}

TEST_CASE("gram matrix is the anti-diagonal involution") {
    auto d = RingDescriptor::finite_field(3, 2);
    auto phi2 = gram_matrix(2, d);
    CHECK(phi2.at(0, 0).is_zero());
    CHECK(phi2.at(0, 1) == RingElement::one(d));
    CHECK(phi2.at(1, 0) == RingElement::one(d));
    CHECK(phi2.at(1, 1).is_zero());
    CHECK(gram_matrix(1, d) == Matrix::identity(1, d));
    for (int n = 1; n <= 6; ++n) {
        auto phi = gram_matrix(n, d);
        CHECK(mat_mul(phi, phi) == Matrix::identity(n, d));
    }
}

TEST_CASE("basic matrix algebra") {
    auto d = RingDescriptor::finite_field(5, 2);
    ElementSampler s(d, 99);
    Matrix a(3, d);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.set(i, j, s.uniform());
    CHECK(mat_mul(a, Matrix::identity(3, d)) == a);
    CHECK(transpose(transpose(a)) == a);
    CHECK(sigma_entrywise(sigma_entrywise(a)) == a);
    CHECK(mat_add(a, mat_neg(a)) == Matrix(3, d));

    Matrix b(2, d);
    CHECK_THROWS_AS(mat_mul(a, b), DomainError);
}

TEST_CASE("membership: worked cases") {
    auto d = RingDescriptor::finite_field(3, 2);

    CHECK(in_unitary_lie_algebra(Matrix(2, d)).pass);  // zero matrix

    // alpha*I with trace-zero alpha
    auto alpha = choose_alpha(d);
    CHECK(in_unitary_lie_algebra(scalar_mul(alpha, Matrix::identity(2, d))).pass);

    // the worked section matrix [[w, 2w], [w, w]]
    Matrix x(2, d);
    x.set(0, 0, ff(d, 0, 1));
    x.set(0, 1, ff(d, 0, 2));
    x.set(1, 0, ff(d, 0, 1));
    x.set(1, 1, ff(d, 0, 1));
    CHECK(in_unitary_lie_algebra(x).pass);

    // Phi itself is hermitian, not skew: Phi*Phi + sigma(Phi)*Phi = 2I
    auto rep = in_unitary_lie_algebra(gram_matrix(2, d));
    CHECK_FALSE(rep.pass);
    CHECK(rep.fail_i == 1);
    CHECK(rep.fail_j == 1);
    CHECK(*rep.fail_value == ff(d, 2, 0));
}

TEST_CASE("membership failures report the first offending entry") {
    auto d = RingDescriptor::finite_field(3, 2);
    Matrix m = Matrix::identity(3, d);  // I fails: entries 1 + sigma(1) = 2
    auto rep = in_unitary_lie_algebra(m);
    CHECK_FALSE(rep.pass);
    CHECK(rep.fail_i >= 1);
    CHECK(rep.fail_j >= 1);
}

TEST_CASE("char_poly: closed forms") {
    auto d = RingDescriptor::finite_field(5, 2);
    Polynomial chi = char_poly(Matrix(3, d));  // x^3
    CHECK(chi.degree() == 3);
    CHECK(chi.coeffs[3] == RingElement::one(d));
    for (int k = 0; k < 3; ++k) CHECK(chi.coeffs[k].is_zero());

    // diag(l1, l2): x^2 - (l1+l2)x + l1 l2
    auto l1 = ff(d, 2, 1), l2 = ff(d, 4, 3);
    Matrix diag(2, d);
    diag.set(0, 0, l1);
    diag.set(1, 1, l2);
    chi = char_poly(diag);
    CHECK(chi.coeffs[2] == RingElement::one(d));
    CHECK(chi.coeffs[1] == -(l1 + l2));
    CHECK(chi.coeffs[0] == l1 * l2);
}

TEST_CASE("char_poly agrees with the cofactor-expansion oracle") {
    std::vector<RingDescriptor> descs = {RingDescriptor::finite_field(3, 2),
                                         RingDescriptor::rational(),
                                         RingDescriptor::series(5, 2, 3)};
    for (const auto& d : descs) {
        ElementSampler s(d, 42);
        for (int n = 1; n <= 5; ++n)
            for (int rep = 0; rep < 10; ++rep) {
                Matrix a(n, d);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) a.set(i, j, s.uniform());
                CHECK(char_poly(a) == charpoly_cofactor_oracle(a));
            }
    }
}

TEST_CASE("char_poly is conjugation-invariant and satisfies Cayley-Hamilton") {
    std::vector<RingDescriptor> descs = {RingDescriptor::finite_field(3, 2),
                                         RingDescriptor::finite_field(5, 3),
                                         RingDescriptor::series(3, 2, 2),
                                         RingDescriptor::rational()};
    for (const auto& d : descs) {
        ElementSampler s(d, 7);
        auto alpha = choose_alpha(d);
        for (int n = 1; n <= 5; ++n)
            for (int rep = 0; rep < 5; ++rep) {
                Matrix a(n, d);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) a.set(i, j, s.uniform());
                Matrix p = diag_alpha(alpha, n);
                Matrix pinv = diag_alpha(alpha.inverse(), n);
                CHECK(char_poly(mat_mul(mat_mul(pinv, a), p)) == char_poly(a));
                CHECK(eval_at_matrix(char_poly(a), a) == Matrix(n, d));
            }
    }
}

TEST_CASE("membership set is closed under +, sigma-fixed scaling, and the bracket") {
    auto d = RingDescriptor::finite_field(5, 2);
    ElementSampler s(d, 11);
    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            Matrix a = sample_u_n_one(s, n);
            Matrix b = sample_u_n_one(s, n);
            CHECK(in_unitary_lie_algebra(mat_add(a, b)).pass);
            CHECK(in_unitary_lie_algebra(scalar_mul(s.sigma_fixed(), a)).pass);
            Matrix bracket = mat_add(mat_mul(a, b), mat_neg(mat_mul(b, a)));
            CHECK(in_unitary_lie_algebra(bracket).pass);
        }
}

TEST_CASE("krylov_unit") {
    auto d = RingDescriptor::finite_field(3, 2);
    auto e1 = [&](int n) {
        std::vector<RingElement> v(static_cast<size_t>(n), RingElement::zero(d));
        v[0] = RingElement::one(d);
        return v;
    };

    // companion-type model matrices are regular with cyclic vector e1
    ElementSampler s(d, 23);
    for (int n = 2; n <= 5; ++n) {
        InvariantTuple a = sample_invariant_tuple(s, n);
        Matrix m = model_matrix(solve_b(a), d);
        CHECK(krylov_unit(m, e1(n)));
    }

    CHECK_FALSE(krylov_unit(Matrix(2, d), e1(2)));  // A = 0
    CHECK_FALSE(krylov_unit(Matrix::identity(2, d), e1(2)));  // columns coincide
}
