#include "ukostant/json_io.hpp"

#include <sstream>

namespace ukostant {

namespace {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::FiniteFieldQuadratic: return "finite-field-quadratic";
        case Backend::SeriesQuadratic: return "truncated-series-quadratic";
        case Backend::RationalQuadratic: return "rational-quadratic";
    }
    return "?";
}

Backend backend_from_name(const std::string& s) {
    if (s == "finite-field-quadratic" || s == "ff") return Backend::FiniteFieldQuadratic;
    if (s == "truncated-series-quadratic" || s == "series") return Backend::SeriesQuadratic;
    if (s == "rational-quadratic" || s == "rational") return Backend::RationalQuadratic;
    throw DomainError("bad-input", "unknown backend '" + s + "'");
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r) << "/" << denominator(r);
    return out.str();
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw DomainError("bad-input", "rational must be an int or \"num/den\"");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

FFPair ffpair_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw DomainError("bad-input", "element pair must be [x, y]");
        return {j[0].get<long>(), j[1].get<long>()};
    }
    return {j.at("x").get<long>(), j.at("y").get<long>()};
}

}  // namespace

json to_json(const RingDescriptor& d) {
    json j;
    j["backend"] = backend_name(d.backend);
    if (d.backend != Backend::RationalQuadratic) {
        j["p"] = d.p;
        j["d"] = d.d;
    }
    if (d.backend == Backend::SeriesQuadratic) j["N"] = d.N;
    return j;
}

RingDescriptor descriptor_from_json(const json& j) {
    Backend b = backend_from_name(j.at("backend").get<std::string>());
    switch (b) {
        case Backend::FiniteFieldQuadratic:
            return RingDescriptor::finite_field(j.at("p").get<long>(), j.at("d").get<long>());
        case Backend::SeriesQuadratic:
            return RingDescriptor::series(j.at("p").get<long>(), j.at("d").get<long>(),
                                          j.at("N").get<int>());
        case Backend::RationalQuadratic:
            return RingDescriptor::rational();
    }
    throw DomainError("bad-input", "unknown backend");
}

json to_json(const RingElement& e) {
    switch (e.descriptor().backend) {
        case Backend::FiniteFieldQuadratic:
            return json{{"x", e.ff().x}, {"y", e.ff().y}};
        case Backend::SeriesQuadratic: {
            json coeffs = json::array();
            for (const auto& c : e.series_coeffs()) coeffs.push_back(json::array({c.x, c.y}));
            return json{{"coeffs", coeffs}};
        }
        case Backend::RationalQuadratic:
            return json{{"x", rational_to_string(e.rational().x)},
                        {"y", rational_to_string(e.rational().y)}};
    }
    throw DomainError("bad-input", "unknown backend");
}

RingElement element_from_json(const RingDescriptor& d, const json& j) {
    switch (d.backend) {
        case Backend::FiniteFieldQuadratic: {
            FFPair p = ffpair_from_json(j);
            return RingElement::make_ff(d, p.x, p.y);
        }
        case Backend::SeriesQuadratic: {
            const json& coeffs = j.is_array() ? j : j.at("coeffs");
            std::vector<FFPair> c;
            for (const auto& item : coeffs) c.push_back(ffpair_from_json(item));
            if (static_cast<int>(c.size()) > d.N)
                throw DomainError("bad-input", "series element longer than precision N");
            return RingElement::make_series(d, std::move(c));
        }
        case Backend::RationalQuadratic: {
            if (j.is_array()) {
                if (j.size() != 2) throw DomainError("bad-input", "element pair must be [x, y]");
                return RingElement::make_rational(d, rational_from_json(j[0]),
                                                  rational_from_json(j[1]));
            }
            return RingElement::make_rational(d, rational_from_json(j.at("x")),
                                              rational_from_json(j.at("y")));
        }
    }
    throw DomainError("bad-input", "unknown backend");
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", rows}};
}

Matrix matrix_from_json(const RingDescriptor& d, const json& j) {
    const json& entries = j.is_array() ? j : j.at("entries");
    int n = static_cast<int>(entries.size());
    if (j.is_object() && j.contains("n") && j.at("n").get<int>() != n)
        throw DomainError("bad-input", "matrix 'n' does not match the entry grid");
    Matrix m(n, d);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries[i].size()) != n)
            throw DomainError("bad-input", "matrix rows must all have length n");
        for (int k = 0; k < n; ++k) m.set(i, k, element_from_json(d, entries[i][k]));
    }
    return m;
}

json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
    return json{{"monic_coeffs_low_to_high", coeffs}};
}

json to_json(const MembershipReport& r) {
    json j;
    j["pass"] = r.pass;
    if (!r.pass) {
        j["first_fail"] = json::array({r.fail_i, r.fail_j});
        j["first_fail_value"] = to_json(*r.fail_value);
    }
    return j;
}

json to_json(const SectionResult& r, const InvariantTuple& a) {
    json ja = json::array();
    for (const auto& e : a.a) ja.push_back(to_json(e));
    json jb = json::array();
    for (const auto& e : r.b) jb.push_back(to_json(e));
    return json{{"n", a.n},
                {"a", ja},
                {"b", jb},
                {"alpha", to_json(r.alpha)},
                {"X", to_json(r.X)},
                {"report",
                 {{"membership", r.report.membership},
                  {"charpoly_match", r.report.charpoly_match},
                  {"conjugacy_match", r.report.conjugacy_match}}}};
}

json to_json(const ExistenceResult& r) {
    return json{{"n", r.n},
                {"residue_char", r.residue_char},
                {"exists_over_o", r.exists_over_o},
                {"constructive_here", r.constructive_here},
                {"label", r.label()}};
}

json to_json(const CampaignReport& r) {
    json cfg{{"descriptor", to_json(r.config.desc)},
             {"n", r.config.n},
             {"count", r.config.count},
             {"seed", r.config.seed}};
    json j{{"campaign", r.campaign},
           {"config", cfg},
           {"passes", r.passes},
           {"failures", r.failures},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.first_counterexample_json.empty())
        j["first_counterexample"] = nullptr;
    else
        j["first_counterexample"] = json::parse(r.first_counterexample_json);
    return j;
}

std::vector<RingElement> tuple_from_json(const RingDescriptor& d, const json& j) {
    if (!j.is_array()) throw DomainError("bad-input", "tuple must be a JSON array");
    std::vector<RingElement> a;
    for (const auto& item : j) a.push_back(element_from_json(d, item));
    return a;
}

}  // namespace ukostant
