#ifndef UKOSTANT_RING_HPP
#define UKOSTANT_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ukostant {

using Rational = boost::multiprecision::cpp_rational;

/// Error with a stable machine-readable code, surfaced as-is by the CLI.
/// Codes in use: "invalid-descriptor", "non-invertible-2", "non-invertible",
/// "descriptor-mismatch", "dimension-mismatch", "invalid-alpha",
/// "not-in-lie-algebra", "codomain-violation", "cost-bound-exceeded",
/// "bad-input".
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class Backend {
    FiniteFieldQuadratic,   // o_E = F_p[w], w^2 = d, d a non-residue
    SeriesQuadratic,        // o_E = F_{p^2}[[pi]] truncated at pi^N
    RationalQuadratic,      // o_E = Q(i), i^2 = -1
};

/// Which quadratic ring we are working in. Elements carry a copy so that
/// cross-ring arithmetic is rejected.
struct RingDescriptor {
    Backend backend = Backend::FiniteFieldQuadratic;
    long p = 0;  // prime, quadratic backends only
    long d = 0;  // w^2 = d, must be a non-residue mod p
    int N = 0;   // series precision, series backend only

    static RingDescriptor finite_field(long p, long d);
    static RingDescriptor series(long p, long d, int N);
    static RingDescriptor rational();

    bool operator==(const RingDescriptor&) const = default;
};

/// One coefficient x + y*w with x, y residues mod p.
struct FFPair {
    long x = 0;
    long y = 0;
    bool operator==(const FFPair&) const = default;
};

struct RationalPair {
    Rational x;
    Rational y;
    bool operator==(const RationalPair&) const = default;
};

/// An element of o_E in one of the three backends. Immutable value type;
/// all arithmetic returns fresh elements in canonical form.
class RingElement {
public:
    RingElement() = default;

    static RingElement zero(const RingDescriptor& d);
    static RingElement one(const RingDescriptor& d);
    static RingElement from_int(const RingDescriptor& d, long v);
    /// The canonical trace-zero generator: w (quadratic backends) or i.
    static RingElement omega(const RingDescriptor& d);

    static RingElement make_ff(const RingDescriptor& d, long x, long y);
    static RingElement make_series(const RingDescriptor& d, std::vector<FFPair> coeffs);
    static RingElement make_rational(const RingDescriptor& d, Rational x, Rational y);

    const RingDescriptor& descriptor() const { return desc_; }
    const FFPair& ff() const { return std::get<FFPair>(payload_); }
    const std::vector<FFPair>& series_coeffs() const {
        return std::get<std::vector<FFPair>>(payload_);
    }
    const RationalPair& rational() const { return std::get<RationalPair>(payload_); }

    bool is_zero() const;
    bool is_unit() const;
    RingElement inverse() const;  // throws "non-invertible" on non-units

    bool operator==(const RingElement& o) const {
        return desc_ == o.desc_ && payload_ == o.payload_;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);

private:
    RingDescriptor desc_;
    std::variant<FFPair, std::vector<FFPair>, RationalPair> payload_;
};

/// The nontrivial Galois involution: x + y*w -> x - y*w, coefficientwise on
/// series, complex conjugation on the rational backend.
RingElement sigma(const RingElement& x);

RingElement trace(const RingElement& x);  // x + sigma(x)
RingElement norm(const RingElement& x);   // x * sigma(x)

bool is_trace_zero(const RingElement& x);
bool is_sigma_fixed(const RingElement& x);

/// A unit alpha with alpha + sigma(alpha) = 0; deterministic (always omega).
RingElement choose_alpha(const RingDescriptor& d);

/// alpha^k for any integer k (negative exponents via inverse).
RingElement pow(const RingElement& base, long exp);

}  // namespace ukostant

#endif
