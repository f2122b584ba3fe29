#ifndef UKOSTANT_JSON_IO_HPP
#define UKOSTANT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "ukostant/harness.hpp"
#include "ukostant/matrix.hpp"
#include "ukostant/ring.hpp"
#include "ukostant/section.hpp"
#include "ukostant/symbolic.hpp"

namespace ukostant {

using json = nlohmann::json;

// Canonical encodings:
//   finite-field element   {"x": int, "y": int}
//   series element         {"coeffs": [[x, y], ...]}   index = power of pi
//   rational element       {"x": "num/den", "y": "num/den"}
//   descriptor             {"backend": str, "p": int, "d": int, "N": int}
// Parsers additionally accept the compact array forms [x, y],
// [[x, y], ...] and ["num/den", "num/den"].

json to_json(const RingDescriptor& d);
RingDescriptor descriptor_from_json(const json& j);

json to_json(const RingElement& e);
RingElement element_from_json(const RingDescriptor& d, const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const RingDescriptor& d, const json& j);

json to_json(const Polynomial& p);

json to_json(const MembershipReport& r);
json to_json(const SectionResult& r, const InvariantTuple& a);
json to_json(const ExistenceResult& r);
json to_json(const CampaignReport& r);

std::vector<RingElement> tuple_from_json(const RingDescriptor& d, const json& j);

}  // namespace ukostant

#endif
