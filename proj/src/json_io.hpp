#pragma once

#include <string>

#include <json.hpp>

#include "dl.hpp"
#include "vertex_complex.hpp"

// JSON views of the library's values.  Every serializer is deterministic
// (ordered keys, canonical inner representations), and the value-level
// round trips reproduce bitwise-equal objects.

namespace ramlat {

using Json = nlohmann::ordered_json;

// "a+b*pi mod p^N"; the element must be exact at full precision
std::string oe_to_string(const OEElement& x);
OEElement oe_from_string(const FieldParams& fp, const std::string& s);

// {p, epsilon, n, gram: n x n element strings}; the precision is carried by
// the element strings themselves
Json space_to_json(const HermitianSpace& space);
SpacePtr space_from_json(const Json& j);

// {scale, basis: n x n element strings}
Json lattice_to_json(const HermitianLattice& L);
HermitianLattice lattice_from_json(SpacePtr space, const Json& j);

// {p, k, modulus, ambient, dim, basis}: the modulus lists the non-leading
// coefficients of the defining polynomial, each basis entry is the
// little-endian coefficient list of one field element, and the explicit
// ambient keeps zero-dimensional subspaces reconstructible
Json subspace_to_json(const FqSubspace& U);
FqSubspace subspace_from_json(const Json& j);

// {nodes: [{id, type, lattice}], edges: [{a, b, kind}], center, radius}
Json graph_to_json(const VertexComplexGraph& g);

// {p, m, k, total, strata: [{i, count, components: [{W, count}]}]}
Json stratum_report_to_json(const StratumReport& r);

// dump with two-space indent and a trailing newline; the byte form used by
// files and the command line
std::string json_text(const Json& j);

} // namespace ramlat
