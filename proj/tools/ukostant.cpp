// Batch front end: builds section matrices, verifies membership, samples
// u_n(o), runs property campaigns, prints the symbolic oracle, and reports
// existence. JSON on stdout, diagnostics on stderr.
// Exit status: 0 pass, 1 domain error or failed verification, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ukostant/json_io.hpp"

using namespace ukostant;

namespace {

// flags accept inline JSON or @path
json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("bad-input", "cannot open file '" + arg.substr(1) + "'");
        return json::parse(in);
    }
    return json::parse(arg);
}

struct DescriptorFlags {
    std::string backend;
    long p = 0;
    long d = 0;
    int N = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--backend", backend,
                        "ff | series | rational (default: UKOSTANT_BACKEND descriptor)");
        cmd->add_option("--p", p, "prime p (quadratic backends)");
        cmd->add_option("--d", d, "non-residue d with w^2 = d (quadratic backends)");
        cmd->add_option("--N", N, "series truncation precision (series backend)");
    }

    RingDescriptor resolve() const {
        if (backend.empty()) {
            const char* env = std::getenv("UKOSTANT_BACKEND");
            if (!env)
                throw DomainError("bad-input",
                                  "no --backend given and UKOSTANT_BACKEND is not set");
            return descriptor_from_json(json::parse(env));
        }
        json j{{"backend", backend}, {"p", p}, {"d", d}, {"N", N}};
        return descriptor_from_json(j);
    }
};

int emit(const json& j, bool ok) {
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_build(const DescriptorFlags& df, int n, const std::string& a_arg,
              const std::string& alpha_arg) {
    RingDescriptor desc = df.resolve();
    InvariantTuple a = InvariantTuple::checked(tuple_from_json(desc, load_json_arg(a_arg)));
    if (n != 0 && n != a.n)
        throw DomainError("bad-input", "--n does not match the length of --a");
    SectionResult res = alpha_arg.empty()
                            ? build_X(a)
                            : build_X(a, element_from_json(desc, load_json_arg(alpha_arg)));
    return emit(to_json(res, a), res.report.pass());
}

int cmd_verify(const DescriptorFlags& df, const std::string& matrix_arg) {
    RingDescriptor desc = df.resolve();
    Matrix m = matrix_from_json(desc, load_json_arg(matrix_arg));
    MembershipReport rep = in_unitary_lie_algebra(m);
    json j = to_json(rep);
    j["charpoly"] = to_json(char_poly(m));
    return emit(j, rep.pass);
}

int cmd_sample(const DescriptorFlags& df, int n, int count, std::uint64_t seed) {
    SampleConfig cfg{df.resolve(), n, count, seed, ""};
    json out = json::array();
    for (const auto& m : sample_u_n(cfg)) out.push_back(to_json(m));
    return emit(out, true);
}

int cmd_campaign(const DescriptorFlags& df, const std::string& name, int n, int count,
                 std::uint64_t seed) {
    SampleConfig cfg{df.resolve(), n, count, seed, name};
    CampaignReport rep = run_campaign(cfg);
    return emit(to_json(rep), rep.failures == 0);
}

int cmd_oracle(int n) {
    auto coeffs = symbolic_charpoly_oracle(n);
    json j;
    for (const auto& [k, poly] : coeffs) j["a" + std::to_string(k)] = poly.to_string();
    return emit(json{{"n", n}, {"coefficients", j}}, true);
}

int cmd_exists(int n, long residue_char) {
    return emit(to_json(kostant_exists(n, residue_char)), true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostant section constructor and verifier for the unitary Lie algebra u_n"};
    app.require_subcommand(1);

    DescriptorFlags build_df, verify_df, sample_df, campaign_df;
    int n = 0, count = 1;
    std::uint64_t seed = 0;
    long residue_char = 0;
    std::string a_arg, alpha_arg, matrix_arg, campaign_name;

    auto* build = app.add_subcommand("build", "construct and verify a section matrix");
    build_df.attach(build);
    build->add_option("--n", n, "rank (optional, must match --a)");
    build->add_option("--a", a_arg, "invariant tuple, inline JSON or @file")->required();
    build->add_option("--alpha", alpha_arg, "override the canonical trace-zero unit");

    auto* verify = app.add_subcommand("verify", "membership test for a matrix");
    verify_df.attach(verify);
    verify->add_option("--matrix", matrix_arg, "matrix, inline JSON or @file")->required();

    auto* sample = app.add_subcommand("sample", "seeded random members of u_n(o)");
    sample_df.attach(sample);
    sample->add_option("--n", n, "rank")->required();
    sample->add_option("--count", count, "number of samples");
    sample->add_option("--seed", seed, "64-bit seed");

    auto* campaign = app.add_subcommand("campaign", "run a property campaign");
    campaign_df.attach(campaign);
    campaign->add_option("--campaign", campaign_name,
                         "roundtrip | membership | negative-control")->required();
    campaign->add_option("--n", n, "rank")->required();
    campaign->add_option("--count", count, "number of cases");
    campaign->add_option("--seed", seed, "64-bit seed");

    auto* oracle = app.add_subcommand("oracle", "symbolic char-poly coefficients (n <= 5)");
    oracle->add_option("--n", n, "rank")->required();

    auto* exists = app.add_subcommand("exists", "existence of a Kostant section");
    exists->add_option("--n", n, "rank")->required();
    exists->add_option("--char", residue_char, "residue characteristic")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_df, n, a_arg, alpha_arg);
        if (verify->parsed()) return cmd_verify(verify_df, matrix_arg);
        if (sample->parsed()) return cmd_sample(sample_df, n, count, seed);
        if (campaign->parsed()) return cmd_campaign(campaign_df, campaign_name, n, count, seed);
        if (oracle->parsed()) return cmd_oracle(n);
        if (exists->parsed()) return cmd_exists(n, residue_char);
    } catch (const DomainError& e) {
        std::cout << json{{"error", e.code()}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cout << json{{"error", "bad-input"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
