#include "igusa/report.hpp"

namespace igusa {

namespace {

Json monomial_json(const Monomial& m) { return Json(std::vector<unsigned>(m.begin(), m.end())); }

Json ratvec(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json bigvec(const std::vector<BigInt>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

}  // namespace

Json to_json(const NewtonPolyhedron& poly)
{
    Json j;
    Json supp = Json::array();
    for (const auto& w : poly.support()) supp.push_back(monomial_json(w));
    j["support"] = supp;
    Json facets = Json::array();
    for (const auto& f : poly.facets()) facets.push_back({{"normal", f.normal}, {"m", f.m_value}, {"meet", f.meet}});
    j["facets"] = facets;
    Json faces = Json::array();
    for (const auto& f : poly.faces()) {
        Json s = Json::array();
        for (auto k : f.meet) s.push_back(monomial_json(poly.support()[k]));
        faces.push_back({{"support", s}, {"rays", f.rays}, {"facets", f.facets}, {"dim", f.dim}, {"improper", f.improper}});
    }
    j["faces"] = faces;
    return j;
}

Json to_json(const NonCritReport& rep)
{
    Json j;
    j["verdict"] = to_string(rep.verdict);
    j["heuristic"] = rep.heuristic;
    Json faces = Json::array();
    for (const auto& f : rep.faces)
        faces.push_back({{"face", f.face}, {"verdict", to_string(f.verdict)}, {"method", f.method}, {"witness", f.witness}});
    j["faces"] = faces;
    if (!rep.residue.empty()) {
        Json res = Json::array();
        for (const auto& r : rep.residue)
            res.push_back({{"p", r.p}, {"verdict", to_string(r.verdict)}, {"critical_faces", r.critical_faces}, {"disagrees", r.disagrees}});
        j["mod_p"] = res;
    }
    return j;
}

Json to_json(const TSDenominator& den)
{
    Json j;
    j["universal"] = {{"qpow", den.universal.first}, {"tpow", den.universal.second}};
    Json factors = Json::array(), inert = Json::array();
    for (const auto& p : den.pairs) {
        if (p.exponent.finite)
            factors.push_back({{"a", p.a}, {"b", p.b}, {"qpow", p.exponent.q_power}, {"tpow", p.exponent.t_power}});
        else
            inert.push_back({{"a", p.a}, {"b", p.b}, {"m_f", p.m_f}, {"m_g", p.m_g}});
    }
    j["factors"] = factors;
    j["inert"] = inert;
    j["poles"] = poles_json(candidate_poles(den));
    if (!den.warnings.empty()) j["warnings"] = den.warnings;
    return j;
}

Json poles_json(const std::vector<Rational>& poles) { return ratvec(poles); }

Json to_json(const RationalZeta& z)
{
    Json j;
    j["q"] = z.q;
    j["numerator"] = ratvec(z.numerator.coeffs());
    Json f = Json::array();
    for (const auto& [a, b] : z.factors) f.push_back({{"qpow", a}, {"tpow", b}});
    j["denominator"] = f;
    j["text"] = z.to_string();
    return j;
}

Json to_json(const SPFNode& node)
{
    Json j;
    j["path"] = node.path;
    j["order"] = node.order;
    j["cumulative"] = node.cumulative;
    j["f"] = node.polynomial;
    if (node.shared) {
        j["shared"] = true;
        return j;
    }
    j["nu"] = to_string(node.nu);
    j["sigma"] = to_string(node.sigma);
    j["singular"] = node.singular;
    Json ch = Json::array();
    for (const auto& c : node.children) ch.push_back(to_json(c));
    j["children"] = ch;
    return j;
}

Json to_json(const CountSeries& c)
{
    Json j;
    j["f"] = c.f.to_string();
    j["p"] = c.p;
    j["n"] = c.n;
    j["domain"] = c.domain;
    j["counts"] = bigvec(c.counts);
    if (c.restricted) j["undecided"] = bigvec(c.undecided);
    j["requested_depth"] = c.requested_depth;
    j["truncated"] = c.truncated;
    j["nodes"] = c.nodes;
    if (!c.restricted) j["series"] = to_json(measure_series(c));
    return j;
}

Json to_json(const PowerSeries& s) { return ratvec(s); }

Json to_json(const VerifyReport& r)
{
    Json j;
    j["ok"] = r.ok;
    j["f"] = r.sum.to_string();
    j["denominator"] = to_json(r.den);
    j["counts"] = bigvec(r.counts.counts);
    j["series"] = to_json(r.series);
    j["max_deg"] = r.max_deg;
    j["numerator"] = r.recovery.numerator.to_string("t");
    j["residual"] = ratvec(r.recovery.residual);
    j["candidate_poles"] = poles_json(r.candidates);
    if (r.ok) {
        j["poles_surviving"] = poles_json(r.reduction.surviving_poles);
        j["poles_cancelled"] = poles_json(r.reduction.cancelled_poles);
    }
    if (r.spf_agrees) j["spf_agrees"] = *r.spf_agrees;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json to_json(const PhiOrbit& o, const MuNuSums& s)
{
    Json j;
    j["c"] = o.c;
    j["d"] = o.d;
    j["e"] = o.e;
    j["e_prime"] = o.e_prime;
    j["period"] = o.period;
    Json st = Json::array();
    for (const auto& [a, b] : o.states) st.push_back({a, b});
    j["states"] = st;
    j["c_tilde"] = s.c_tilde;
    j["d_tilde"] = s.d_tilde;
    j["mu"] = s.mu;
    j["nu"] = s.nu;
    j["mu_sum"] = s.mu_sum;
    j["nu_sum"] = s.nu_sum;
    return j;
}

}  // namespace igusa
