/*
 * JSON (and DOT) serialisation for the public file formats.
 *
 * Conventions: vertices are 1-based; matrices serialise as arrays of
 * integer rows; rationals serialise as the string "p/q" ("p" when the
 * denominator is 1).  Output field order is fixed so identical inputs
 * produce byte-identical documents.
 */

#pragma once

#include "greenwalk/charge.hpp"
#include "greenwalk/repkit_stability.hpp"
#include "greenwalk/repkit_tautilting.hpp"
#include "greenwalk/walk.hpp"

#include <json.hpp>

namespace gwjson {

using Json = nlohmann::ordered_json;

Json int_to_json(const ratlin::Int& x);
Json intvec_to_json(const ratlin::IntVec& v);
Json matrix_to_json(const ratlin::IntMatrix& m);
Json ratvec_to_json(const ratlin::RatVec& v);
ratlin::RatVec ratvec_from_json(const Json& j);

Json quiver_to_json(const cluster::Quiver& q);
cluster::Quiver quiver_from_json(const Json& j);

Json walk_to_json(const cluster::GreenWalk& w);
Json bricks_to_json(const cluster::BrickSeq& b);
cluster::BrickSeq bricks_from_json(const Json& j);

Json crossing_report_to_json(const charge::CrossingReport& r);

Json lattice_to_json(const repkit::TorsionLattice& lat);
std::string lattice_to_dot(const repkit::TorsionLattice& lat);

Json cfho_report_to_json(const repkit::CfhoReport& r);
Json hn_to_json(const repkit::HNFiltration& f);
Json pairs_to_json(const repkit::TorsionLattice& lat,
                   const std::vector<repkit::TauTiltingPair>& pairs);

/// Non-authoritative decimal rendering used by the CLI --float flag.
Json ratvec_to_float_json(const ratlin::RatVec& v);

} // namespace gwjson
