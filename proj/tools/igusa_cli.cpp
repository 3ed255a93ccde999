#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "igusa/report.hpp"

using namespace igusa;

namespace {

enum class Format { json, tsv };

struct Request {
    std::string f_text, g_text;
    std::uint64_t prime = 5;
    std::size_t depth = 8;
    std::optional<std::int64_t> max_deg;
    std::uint64_t budget = 100'000'000;
    std::string mode = "exact";
    std::vector<std::uint64_t> residue_primes;
    std::string domain = "full";
    std::int64_t c = 0, d = 0, c_tilde = 1, d_tilde = 1;
    bool tsv = false;
    bool json = false;
    bool verbose = false;
};

struct UsageError : Error {
    using Error::Error;
};

Json envelope(const std::string& command)
{
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

Polynomial need(const std::string& text, const char* flag)
{
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_polynomial(text);
}

NonCritParams noncrit_params(const Request& r)
{
    NonCritParams p;
    if (r.mode == "heuristic")
        p.mode = NonCritMode::heuristic;
    else if (r.mode != "exact")
        throw UsageError("--mode must be exact or heuristic");
    p.residue_primes = r.residue_primes;
    return p;
}

CountOptions count_options(const Request& r)
{
    CountOptions o;
    o.budget = r.budget;
    return o;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_analyze(const Request& r)
{
    const Polynomial f = need(r.f_text, "-f");
    const NonCritParams params = noncrit_params(r);
    Json j = envelope("analyze");
    j["f"] = f.to_string();
    j["polyhedron"] = to_json(NewtonPolyhedron::build(f));
    j["noncrit"] = to_json(check_noncritical(f, params));
    if (!r.g_text.empty()) {
        const Polynomial g = parse_polynomial(r.g_text);
        j["g"] = g.to_string();
        j["polyhedron_g"] = to_json(NewtonPolyhedron::build(g));
        j["noncrit_g"] = to_json(check_noncritical(g, params));
        j["denominator"] = to_json(denominator(f, g, params));
    }
    emit(j);
    return 0;
}

int run_poles(const Request& r)
{
    const auto den = denominator(need(r.f_text, "-f"), need(r.g_text, "-g"), noncrit_params(r));
    const auto poles = candidate_poles(den);
    if (r.tsv) {
        for (const auto& x : poles) std::cout << to_string(x) << '\n';
        return 0;
    }
    Json j = envelope("poles");
    j["poles"] = poles_json(poles);
    if (!den.warnings.empty()) j["warnings"] = den.warnings;
    emit(j);
    return 0;
}

int run_spf(const Request& r)
{
    const Polynomial f = need(r.f_text, "-f");
    const PrimeSpec p(r.prime);
    ResidueDomain dom = ResidueDomain::full(f.num_vars(), p.value());
    if (r.domain == "unit_torus")
        dom = ResidueDomain::unit_torus(f.num_vars(), p.value());
    else if (r.domain != "full")
        throw UsageError("--domain must be full or unit_torus");
    const SPFResult res = spf_evaluate(f, dom, p);
    Json j = envelope("spf");
    j["f"] = f.to_string();
    j["p"] = p.value();
    j["domain"] = dom.describe();
    j["zeta"] = to_json(res.zeta);
    j["max_path"] = res.max_path;
    if (r.verbose) j["trace"] = to_json(res.trace);
    emit(j);
    return 0;
}

int run_count(const Request& r)
{
    const CountSeries c = count_mod(need(r.f_text, "-f"), PrimeSpec(r.prime), r.depth, std::nullopt, count_options(r));
    if (r.tsv) {
        const PowerSeries s = measure_series(c);
        std::cout << "m\tN_m\tcoefficient\n";
        for (std::size_t m = 0; m < c.counts.size(); ++m)
            std::cout << m + 1 << '\t' << to_string(c.counts[m]) << '\t' << to_string(s[m]) << '\n';
        return 0;
    }
    Json j = envelope("count");
    j.update(to_json(c));
    emit(j);
    return 0;
}

int run_verify(const Request& r)
{
    const VerifyReport rep = verify_theorem(need(r.f_text, "-f"), need(r.g_text, "-g"), PrimeSpec(r.prime), r.depth,
                                            r.max_deg, count_options(r));
    Json j = envelope("verify");
    j.update(to_json(rep));
    emit(j);
    return rep.ok ? 0 : 2;
}

int run_phi(const Request& r)
{
    if (r.c < 1 || r.d < 1) throw UsageError("-c and -d must be positive");
    const PhiOrbit o = orbit(r.c, r.d);
    const MuNuSums s = mu_nu_sums(o, r.c_tilde, r.d_tilde);
    if (r.tsv) {
        std::cout << "i\tstate_c\tstate_d\tmu\tnu\n";
        for (std::size_t i = 0; i < o.states.size(); ++i) {
            std::cout << i + 1 << '\t' << o.states[i].first << '\t' << o.states[i].second;
            if (i >= 1 && i - 1 < s.mu.size())
                std::cout << '\t' << s.mu[i - 1] << '\t' << s.nu[i - 1];
            else
                std::cout << "\t\t";
            std::cout << '\n';
        }
        std::cout << "sum\t\t\t" << s.mu_sum << '\t' << s.nu_sum << '\n';
        return 0;
    }
    Json j = envelope("phi");
    j.update(to_json(o, s));
    emit(j);
    return 0;
}

int fail(const std::string& kind, const std::string& message, std::optional<std::size_t> position = std::nullopt)
{
    Json e;
    e["schema"] = 1;
    e["error"] = {{"kind", kind}, {"message", message}};
    if (position) e["error"]["position"] = *position;
    std::cerr << e.dump() << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Igusa local zeta function toolkit"};
    app.require_subcommand(1);
    Request req;

    auto common = [&](CLI::App* sub, bool g, bool prime) {
        sub->add_option("-f", req.f_text, "polynomial f");
        if (g) sub->add_option("-g", req.g_text, "polynomial g in disjoint variables");
        if (prime) sub->add_option("-p,--prime", req.prime, "prime")->capture_default_str();
        auto* j = sub->add_flag("--json", req.json, "JSON output (default)");
        sub->add_flag("--tsv", req.tsv, "TSV output")->excludes(j);
    };

    auto* analyze = app.add_subcommand("analyze", "Newton polyhedron, non-criticality and denominator");
    common(analyze, true, false);
    auto* poles = app.add_subcommand("poles", "candidate poles of Z(f+g)");
    common(poles, true, false);
    auto* spf = app.add_subcommand("spf", "stationary phase evaluation");
    common(spf, false, true);
    spf->add_option("--domain", req.domain, "full or unit_torus")->capture_default_str();
    auto* count = app.add_subcommand("count", "point counts mod p^m and the measure series");
    common(count, false, true);
    auto* verify = app.add_subcommand("verify", "check the denominator against counted series");
    common(verify, true, true);
    auto* phi = app.add_subcommand("phi", "orbit of the subtractive map and mu/nu sums");
    phi->add_option("-c", req.c, "c")->required();
    phi->add_option("-d", req.d, "d")->required();
    phi->add_option("--c-tilde", req.c_tilde, "c tilde")->capture_default_str();
    phi->add_option("--d-tilde", req.d_tilde, "d tilde")->capture_default_str();
    {
        auto* j = phi->add_flag("--json", req.json, "JSON output (default)");
        phi->add_flag("--tsv", req.tsv, "TSV output")->excludes(j);
    }
    for (auto* sub : {count, verify}) {
        sub->add_option("--depth", req.depth, "series depth")->capture_default_str();
        sub->add_option("--budget", req.budget, "node budget")->capture_default_str();
    }
    verify->add_option("--max-deg", req.max_deg, "numerator degree bound");
    for (auto* sub : {analyze, poles}) {
        sub->add_option("--mode", req.mode, "exact or heuristic")->capture_default_str();
        sub->add_option("--residue-primes", req.residue_primes, "primes for the mod-p comparison");
    }
    spf->add_flag("-v,--verbose", req.verbose, "include the recursion trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (req.tsv && (*analyze || *spf || *verify)) throw UsageError("--tsv is available for poles, count and phi");
        if (*analyze) return run_analyze(req);
        if (*poles) return run_poles(req);
        if (*spf) return run_spf(req);
        if (*count) return run_count(req);
        if (*verify) return run_verify(req);
        return run_phi(req);
    } catch (const UsageError& e) {
        return fail("usage", e.what());
    } catch (const ParseError& e) {
        return fail("parse", e.what(), e.position());
    } catch (const Error& e) {
        return fail("error", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}
