#pragma once

#include <json.hpp>

#include "igusa/euclid.hpp"
#include "igusa/newton.hpp"
#include "igusa/noncrit.hpp"
#include "igusa/oracle.hpp"
#include "igusa/ratfun.hpp"
#include "igusa/spf.hpp"
#include "igusa/tsden.hpp"

namespace igusa {

using Json = nlohmann::ordered_json;

Json to_json(const NewtonPolyhedron& poly);
Json to_json(const NonCritReport& rep);
Json to_json(const TSDenominator& den);
Json poles_json(const std::vector<Rational>& poles);
Json to_json(const RationalZeta& z);
Json to_json(const SPFNode& node);
Json to_json(const CountSeries& c);
Json to_json(const PowerSeries& s);
Json to_json(const VerifyReport& r);
Json to_json(const PhiOrbit& o, const MuNuSums& s);

}  // namespace igusa
