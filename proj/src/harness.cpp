#include "ukostant/harness.hpp"

#include <chrono>

#include "ukostant/json_io.hpp"

namespace ukostant {

Rational ElementSampler::draw_rational() {
    // small fractions: numerator in [-9, 9], denominator in [1, 9]
    long num = static_cast<long>(rng_() % 19) - 9;
    long den = static_cast<long>(rng_() % 9) + 1;
    return Rational(num, den);
}

RingElement ElementSampler::uniform() {
    switch (desc_.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(desc_, draw_mod(desc_.p), draw_mod(desc_.p));
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(desc_.N));
            for (auto& v : c) v = {draw_mod(desc_.p), draw_mod(desc_.p)};
            return RingElement::make_series(desc_, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(desc_, draw_rational(), draw_rational());
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement ElementSampler::trace_zero() {
    // trace(x + y*w) = 2x, so trace-zero means vanishing w-fixed part
    switch (desc_.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(desc_, 0, draw_mod(desc_.p));
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(desc_.N));
            for (auto& v : c) v = {0, draw_mod(desc_.p)};
            return RingElement::make_series(desc_, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(desc_, Rational(0), draw_rational());
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement ElementSampler::sigma_fixed() {
    switch (desc_.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(desc_, draw_mod(desc_.p), 0);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(desc_.N));
            for (auto& v : c) v = {draw_mod(desc_.p), 0};
            return RingElement::make_series(desc_, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(desc_, draw_rational(), Rational(0));
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

InvariantTuple sample_invariant_tuple(ElementSampler& s, int n) {
    std::vector<RingElement> a;
    a.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) a.push_back(k % 2 == 1 ? s.trace_zero() : s.sigma_fixed());
    return InvariantTuple::checked(std::move(a));
}

Matrix sample_u_n_one(ElementSampler& s, int n) {
    // the membership identity pairs (i, j) with (n+1-j, n+1-i); orbits with
    // i + j < n + 1 are free, the anti-diagonal is self-paired
    Matrix m(n, s.descriptor());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j < n + 1) {
                RingElement v = s.uniform();
                m.set(i - 1, j - 1, v);
                m.set(n - j, n - i, -sigma(v));
            } else if (i + j == n + 1) {
                m.set(i - 1, j - 1, s.trace_zero());
            }
        }
    if (!in_unitary_lie_algebra(m).pass)
        throw std::logic_error("sampler emitted a matrix outside u_n");
    return m;
}

std::vector<Matrix> sample_u_n(const SampleConfig& config) {
    if (config.count < 1) throw DomainError("bad-input", "count must be >= 1");
    ElementSampler s(config.desc, config.seed);
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(config.count));
    for (int i = 0; i < config.count; ++i) out.push_back(sample_u_n_one(s, config.n));
    return out;
}

namespace {

CampaignReport roundtrip_campaign(const SampleConfig& config) {
    CampaignReport rep;
    ElementSampler s(config.desc, config.seed);
    for (int i = 0; i < config.count; ++i) {
        InvariantTuple a = sample_invariant_tuple(s, config.n);
        SectionResult res = build_X(a);
        bool ok = res.report.pass();
        if (ok) {
            InvariantTuple back = phi_n(res.X);
            ok = back.a == a.a;
        }
        if (ok) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.first_counterexample_json.empty()) {
                json ja = json::array();
                for (const auto& e : a.a) ja.push_back(to_json(e));
                rep.first_counterexample_json = json{{"a", ja}}.dump();
            }
        }
    }
    return rep;
}

CampaignReport membership_campaign(const SampleConfig& config) {
    CampaignReport rep;
    ElementSampler s(config.desc, config.seed);
    for (int i = 0; i < config.count; ++i) {
        Matrix m = sample_u_n_one(s, config.n);
        if (in_unitary_lie_algebra(m).pass) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.first_counterexample_json.empty())
                rep.first_counterexample_json = to_json(m).dump();
        }
    }
    return rep;
}

CampaignReport negative_control_campaign(const SampleConfig& config) {
    // untwisted companion-type matrices must FAIL membership (the unit
    // subdiagonal contributes 1 + sigma(1) = 2 != 0 whenever n >= 2)
    CampaignReport rep;
    ElementSampler s(config.desc, config.seed);
    for (int i = 0; i < config.count; ++i) {
        InvariantTuple a = sample_invariant_tuple(s, config.n);
        Matrix untwisted = model_matrix(solve_b(a), config.desc);
        bool fails = !in_unitary_lie_algebra(untwisted).pass;
        if (fails) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.first_counterexample_json.empty())
                rep.first_counterexample_json = to_json(untwisted).dump();
        }
    }
    return rep;
}

}  // namespace

CampaignReport run_campaign(const SampleConfig& config) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport rep;
    if (config.campaign == "roundtrip")
        rep = roundtrip_campaign(config);
    else if (config.campaign == "membership")
        rep = membership_campaign(config);
    else if (config.campaign == "negative-control")
        rep = negative_control_campaign(config);
    else
        throw DomainError("bad-input", "unknown campaign '" + config.campaign + "'");
    rep.campaign = config.campaign;
    rep.config = config;
    rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start)
                                           .count());
    return rep;
}

namespace {

// dense polynomials over RingElement, low-to-high
using RPoly = std::vector<RingElement>;

RPoly rp_add(const RPoly& a, const RPoly& b, const RingDescriptor& d) {
    RPoly r(std::max(a.size(), b.size()), RingElement::zero(d));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

RPoly rp_mul(const RPoly& a, const RPoly& b, const RingDescriptor& d) {
    RPoly r(a.size() + b.size() - 1, RingElement::zero(d));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

RPoly rp_neg(const RPoly& a) {
    RPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

RPoly poly_det(const std::vector<std::vector<RPoly>>& m, const RingDescriptor& d) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    RPoly det{RingElement::zero(d)};
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::vector<RPoly>> minor;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        RPoly term = rp_mul(m[r][0], poly_det(minor, d), d);
        det = rp_add(det, r % 2 == 0 ? term : rp_neg(term), d);
    }
    return det;
}

}  // namespace

Polynomial charpoly_cofactor_oracle(const Matrix& a) {
    if (a.n() > 5) throw DomainError("cost-bound-exceeded", "cofactor oracle is limited to n <= 5");
    const auto& d = a.descriptor();
    const int n = a.n();
    std::vector<std::vector<RPoly>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RPoly e{-a.at(i, j)};
            if (i == j) e.push_back(RingElement::one(d));  // + x on the diagonal
            m[static_cast<size_t>(i)].push_back(std::move(e));
        }
    RPoly det = poly_det(m, d);
    det.resize(static_cast<size_t>(n) + 1, RingElement::zero(d));
    Polynomial p;
    p.coeffs = std::move(det);
    return p;
}

}  // namespace ukostant
