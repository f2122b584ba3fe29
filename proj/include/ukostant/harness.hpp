#ifndef UKOSTANT_HARNESS_HPP
#define UKOSTANT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ukostant/matrix.hpp"
#include "ukostant/section.hpp"

namespace ukostant {

struct SampleConfig {
    RingDescriptor desc;
    int n = 1;
    int count = 1;
    std::uint64_t seed = 0;
    std::string campaign;  // campaign subcommand only
};

/// Deterministic element source. The seed fully determines the stream; the
/// rational backend draws small fractions so results stay readable.
class ElementSampler {
public:
    ElementSampler(const RingDescriptor& desc, std::uint64_t seed)
        : desc_(desc), rng_(seed) {}

    const RingDescriptor& descriptor() const { return desc_; }

    RingElement uniform();
    RingElement trace_zero();  // x + sigma(x) = 0
    RingElement sigma_fixed(); // sigma(x) = x

private:
    RingDescriptor desc_;
    std::mt19937_64 rng_;

    long draw_mod(long p) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(p)); }
    Rational draw_rational();
};

/// A tuple (a_1, ..., a_n) in the sigma-parity codomain: odd slots
/// trace-zero, even slots sigma-fixed.
InvariantTuple sample_invariant_tuple(ElementSampler& s, int n);

/// A member of u_n(o): free entries above the anti-diagonal, mirrored
/// entries forced to -sigma(.), anti-diagonal entries drawn trace-zero.
/// Every sample passes membership by construction (asserted).
Matrix sample_u_n_one(ElementSampler& s, int n);
std::vector<Matrix> sample_u_n(const SampleConfig& config);

struct CampaignReport {
    std::string campaign;
    SampleConfig config;
    long passes = 0;
    long failures = 0;
    std::string first_counterexample_json;  // empty when no failure
    long elapsed_ms = 0;
};

/// Campaigns: "roundtrip" (build -> verify -> phi_n over random tuples),
/// "membership" (sampled u_n members pass the membership test),
/// "negative-control" (untwisted companion-type matrices fail membership).
CampaignReport run_campaign(const SampleConfig& config);

/// Characteristic polynomial by cofactor expansion of xI - A over the
/// polynomial ring R[x]. Independent of the Berkowitz path; n <= 5 only.
Polynomial charpoly_cofactor_oracle(const Matrix& a);

}  // namespace ukostant

#endif
