#include <doctest.h>

#include "ukostant/json_io.hpp"

using namespace ukostant;

TEST_CASE("descriptor round-trip and aliases") {
    auto d = RingDescriptor::finite_field(3, 2);
    CHECK(descriptor_from_json(to_json(d)) == d);
    CHECK(descriptor_from_json(json{{"backend", "ff"}, {"p", 3}, {"d", 2}}) == d);

    auto s = RingDescriptor::series(5, 2, 4);
    CHECK(descriptor_from_json(to_json(s)) == s);

    auto q = RingDescriptor::rational();
    CHECK(descriptor_from_json(to_json(q)) == q);
    CHECK(descriptor_from_json(json{{"backend", "rational"}}) == q);

    CHECK_THROWS_AS(descriptor_from_json(json{{"backend", "padic"}}), DomainError);
}

TEST_CASE("element encodings round-trip across all backends") {
    auto dff = RingDescriptor::finite_field(5, 2);
    auto e = RingElement::make_ff(dff, 3, 4);
    CHECK(to_json(e) == json{{"x", 3}, {"y", 4}});
    CHECK(element_from_json(dff, to_json(e)) == e);
    CHECK(element_from_json(dff, json::array({3, 4})) == e);  // compact form

    auto ds = RingDescriptor::series(3, 2, 2);
    auto z = RingElement::make_series(ds, {{1, 2}, {0, 1}});
    CHECK(to_json(z) == json{{"coeffs", json::array({json::array({1, 2}), json::array({0, 1})})}});
    CHECK(element_from_json(ds, to_json(z)) == z);

    auto dq = RingDescriptor::rational();
    auto r = RingElement::make_rational(dq, Rational(-1, 2), Rational(3));
    CHECK(to_json(r) == json{{"x", "-1/2"}, {"y", "3/1"}});
    CHECK(element_from_json(dq, to_json(r)) == r);
    CHECK(element_from_json(dq, json::array({"-1/2", "3"})) == r);
}

TEST_CASE("json round-trip property over random elements and matrices") {
    std::vector<RingDescriptor> descs = {RingDescriptor::finite_field(7, 3),
                                         RingDescriptor::series(3, 2, 3),
                                         RingDescriptor::rational()};
    for (const auto& d : descs) {
        ElementSampler s(d, 2024);
        for (int i = 0; i < 200; ++i) {
            auto e = s.uniform();
            CHECK(element_from_json(d, to_json(e)) == e);
        }
        for (int n = 1; n <= 4; ++n) {
            Matrix m = sample_u_n_one(s, n);
            CHECK(matrix_from_json(d, to_json(m)) == m);
        }
    }
}

TEST_CASE("malformed input is rejected") {
    auto d = RingDescriptor::finite_field(3, 2);
    CHECK_THROWS_AS(element_from_json(d, json::array({1})), DomainError);
    CHECK_THROWS_AS(matrix_from_json(d, json::parse(R"({"n": 3, "entries": [[[0,0]]]})")),
                    DomainError);
    CHECK_THROWS_AS(matrix_from_json(d, json::parse(R"([[[0,0],[0,0]],[[0,0]]])")), DomainError);
    auto ds = RingDescriptor::series(3, 2, 1);
    CHECK_THROWS_AS(element_from_json(ds, json::parse("[[0,0],[0,0]]")), DomainError);
}
