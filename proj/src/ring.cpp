#include "ukostant/ring.hpp"

namespace ukostant {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long mod(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long pow_mod(long base, long exp, long p) {
    long r = 1;
    base = mod(base, p);
    while (exp > 0) {
        if (exp & 1) r = (r * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return r;
}

long inv_mod(long a, long p) {
    // p prime, a nonzero mod p
    return pow_mod(a, p - 2, p);
}

void validate_quadratic(long p, long d) {
    if (!is_prime(p))
        throw DomainError("invalid-descriptor", "p = " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw DomainError("non-invertible-2",
                          "residue characteristic 2 is not supported: 2 is not a unit and "
                          "the w^2 = d model of sigma degenerates");
    if (pow_mod(mod(d, p), (p - 1) / 2, p) != p - 1)
        throw DomainError("invalid-descriptor",
                          "d = " + std::to_string(d) + " is a square mod " + std::to_string(p));
}

FFPair ff_add(const FFPair& a, const FFPair& b, long p) {
    return {mod(a.x + b.x, p), mod(a.y + b.y, p)};
}
FFPair ff_sub(const FFPair& a, const FFPair& b, long p) {
    return {mod(a.x - b.x, p), mod(a.y - b.y, p)};
}
FFPair ff_neg(const FFPair& a, long p) { return {mod(-a.x, p), mod(-a.y, p)}; }
FFPair ff_mul(const FFPair& a, const FFPair& b, long p, long d) {
    // (x1 + y1 w)(x2 + y2 w) = x1 x2 + d y1 y2 + (x1 y2 + x2 y1) w
    long x = mod(a.x * b.x + mod(d, p) * ((a.y * b.y) % p), p);
    long y = mod(a.x * b.y + a.y * b.x, p);
    return {x, y};
}
FFPair ff_inv(const FFPair& a, long p, long d) {
    // 1/z = sigma(z) / N(z), N(z) = x^2 - d y^2 in F_p
    long n = mod(a.x * a.x - mod(d, p) * ((a.y * a.y) % p), p);
    long ni = inv_mod(n, p);
    return {mod(a.x * ni, p), mod(-a.y * ni, p)};
}

}  // namespace

RingDescriptor RingDescriptor::finite_field(long p, long d) {
    validate_quadratic(p, d);
    RingDescriptor r;
    r.backend = Backend::FiniteFieldQuadratic;
    r.p = p;
    r.d = mod(d, p);
    return r;
}

RingDescriptor RingDescriptor::series(long p, long d, int N) {
    validate_quadratic(p, d);
    if (N < 1) throw DomainError("invalid-descriptor", "series precision N must be >= 1");
    RingDescriptor r;
    r.backend = Backend::SeriesQuadratic;
    r.p = p;
    r.d = mod(d, p);
    r.N = N;
    return r;
}

RingDescriptor RingDescriptor::rational() {
    RingDescriptor r;
    r.backend = Backend::RationalQuadratic;
    return r;
}

RingElement RingElement::make_ff(const RingDescriptor& d, long x, long y) {
    if (d.backend != Backend::FiniteFieldQuadratic)
        throw DomainError("bad-input", "finite-field payload on non-finite-field descriptor");
    RingElement e;
    e.desc_ = d;
    e.payload_ = FFPair{mod(x, d.p), mod(y, d.p)};
    return e;
}

RingElement RingElement::make_series(const RingDescriptor& d, std::vector<FFPair> coeffs) {
    if (d.backend != Backend::SeriesQuadratic)
        throw DomainError("bad-input", "series payload on non-series descriptor");
    coeffs.resize(static_cast<size_t>(d.N));
    for (auto& c : coeffs) c = {mod(c.x, d.p), mod(c.y, d.p)};
    RingElement e;
    e.desc_ = d;
    e.payload_ = std::move(coeffs);
    return e;
}

RingElement RingElement::make_rational(const RingDescriptor& d, Rational x, Rational y) {
    if (d.backend != Backend::RationalQuadratic)
        throw DomainError("bad-input", "rational payload on non-rational descriptor");
    RingElement e;
    e.desc_ = d;
    e.payload_ = RationalPair{std::move(x), std::move(y)};
    return e;
}

RingElement RingElement::zero(const RingDescriptor& d) { return from_int(d, 0); }
RingElement RingElement::one(const RingDescriptor& d) { return from_int(d, 1); }

RingElement RingElement::from_int(const RingDescriptor& d, long v) {
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic:
            return make_ff(d, v, 0);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(d.N));
            c[0] = {mod(v, d.p), 0};
            return make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic:
            return make_rational(d, Rational(v), Rational(0));
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement RingElement::omega(const RingDescriptor& d) {
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic:
            return make_ff(d, 0, 1);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(d.N));
            c[0] = {0, 1};
            return make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic:
            return make_rational(d, Rational(0), Rational(1));
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

bool RingElement::is_zero() const {
    switch (desc_.backend) {
        case Backend::FiniteFieldQuadratic: {
            const auto& v = ff();
            return v.x == 0 && v.y == 0;
        }
        case Backend::SeriesQuadratic:
            for (const auto& c : series_coeffs())
                if (c.x != 0 || c.y != 0) return false;
            return true;
        case Backend::RationalQuadratic: {
            const auto& v = rational();
            return v.x == 0 && v.y == 0;
        }
    }
    return false;
}

bool RingElement::is_unit() const {
    switch (desc_.backend) {
        case Backend::FiniteFieldQuadratic:
        case Backend::RationalQuadratic:
            return !is_zero();
        case Backend::SeriesQuadratic: {
            const auto& c0 = series_coeffs()[0];
            return c0.x != 0 || c0.y != 0;
        }
    }
    return false;
}

namespace {
void check_same(const RingDescriptor& a, const RingDescriptor& b) {
    if (!(a == b))
        throw DomainError("descriptor-mismatch", "operands belong to different rings");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    check_same(a.desc_, b.desc_);
    const auto& d = a.desc_;
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(d, a.ff().x + b.ff().x, a.ff().y + b.ff().y);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(d.N));
            for (int k = 0; k < d.N; ++k)
                c[k] = ff_add(a.series_coeffs()[k], b.series_coeffs()[k], d.p);
            return RingElement::make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(d, a.rational().x + b.rational().x,
                                              a.rational().y + b.rational().y);
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement operator-(const RingElement& a) {
    const auto& d = a.desc_;
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(d, -a.ff().x, -a.ff().y);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c(static_cast<size_t>(d.N));
            for (int k = 0; k < d.N; ++k) c[k] = ff_neg(a.series_coeffs()[k], d.p);
            return RingElement::make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(d, -a.rational().x, -a.rational().y);
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same(a.desc_, b.desc_);
    const auto& d = a.desc_;
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic: {
            FFPair r = ff_mul(a.ff(), b.ff(), d.p, d.d);
            return RingElement::make_ff(d, r.x, r.y);
        }
        case Backend::SeriesQuadratic: {
            // truncated convolution over F_{p^2}
            std::vector<FFPair> c(static_cast<size_t>(d.N));
            for (int k = 0; k < d.N; ++k)
                for (int j = 0; j <= k; ++j)
                    c[k] = ff_add(c[k],
                                  ff_mul(a.series_coeffs()[j], b.series_coeffs()[k - j], d.p, d.d),
                                  d.p);
            return RingElement::make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic: {
            const auto& u = a.rational();
            const auto& v = b.rational();
            // i^2 = -1
            return RingElement::make_rational(d, u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x);
        }
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement RingElement::inverse() const {
    if (!is_unit())
        throw DomainError("non-invertible", "element is not a unit");
    const auto& d = desc_;
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic: {
            FFPair r = ff_inv(ff(), d.p, d.d);
            return make_ff(d, r.x, r.y);
        }
        case Backend::SeriesQuadratic: {
            // solve z * w = 1 coefficient by coefficient
            const auto& z = series_coeffs();
            std::vector<FFPair> w(static_cast<size_t>(d.N));
            FFPair c0i = ff_inv(z[0], d.p, d.d);
            w[0] = c0i;
            for (int k = 1; k < d.N; ++k) {
                FFPair s{0, 0};
                for (int j = 1; j <= k; ++j) s = ff_add(s, ff_mul(z[j], w[k - j], d.p, d.d), d.p);
                w[k] = ff_mul(ff_neg(s, d.p), c0i, d.p, d.d);
            }
            return make_series(d, std::move(w));
        }
        case Backend::RationalQuadratic: {
            const auto& v = rational();
            Rational n = v.x * v.x + v.y * v.y;
            return make_rational(d, v.x / n, -v.y / n);
        }
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement sigma(const RingElement& x) {
    const auto& d = x.descriptor();
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic:
            return RingElement::make_ff(d, x.ff().x, -x.ff().y);
        case Backend::SeriesQuadratic: {
            std::vector<FFPair> c = x.series_coeffs();
            for (auto& v : c) v.y = mod(-v.y, d.p);
            return RingElement::make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic:
            return RingElement::make_rational(d, x.rational().x, -x.rational().y);
    }
    throw DomainError("invalid-descriptor", "unknown backend");
}

RingElement trace(const RingElement& x) { return x + sigma(x); }
RingElement norm(const RingElement& x) { return x * sigma(x); }

bool is_trace_zero(const RingElement& x) { return trace(x).is_zero(); }
bool is_sigma_fixed(const RingElement& x) { return sigma(x) == x; }

RingElement choose_alpha(const RingDescriptor& d) {
    RingElement a = RingElement::omega(d);
    if (!a.is_unit() || !is_trace_zero(a))
        throw DomainError("invalid-alpha", "no canonical trace-zero unit in this backend");
    return a;
}

RingElement pow(const RingElement& base, long exp) {
    RingElement b = exp < 0 ? base.inverse() : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    RingElement r = RingElement::one(base.descriptor());
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

}  // namespace ukostant
