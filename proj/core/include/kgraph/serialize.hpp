#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgraph/algebra.hpp"
#include "kgraph/boundary.hpp"
#include "kgraph/groupoid.hpp"
#include "kgraph/paths.hpp"
#include "kgraph/skeleton.hpp"

// JSON views of the library's results. Objects have sorted keys and arrays keep the
// library's canonical order, so dumps are byte-stable across runs.
namespace kgraph::serial {

using nlohmann::json;

json degree(const Degree& d);
json offset(const Offset& m);
json path(const Skeleton& s, const Path& p);
json paths(const Skeleton& s, const std::vector<Path>& ps);

json validation(const ValidationReport& r);
json classification(const Skeleton& s, const VertexClassification& c);
json exhaustive(const Skeleton& s, const ExhaustiveResult& r);
json exhaustive_sets(const Skeleton& s, const std::vector<ExhaustiveSet>& sets);
json lambda_min(const Skeleton& s, const std::vector<MinimalExtensionPair>& pairs);
json alignment(const Skeleton& s, const AlignmentReport& r);

json space_element(const Skeleton& s, const PathSpaceElement& x);
json boundary_verdict(const Skeleton& s, const PathSpaceElement& x, const BoundaryVerdict& v);

/// Elements as {x, m, y, unit, orbit}; x and y are path strings, orbit an index into orbits.
json groupoid(const FiniteGroupoid& G);
json structure(const StructureReport& r);

/// [[x-index, m, y-index, re, im], ...] in element order.
json algebra_element(const AlgebraElement& f);
json relation(const RelationReport& r);
json generation(const GenerationReport& r);

}  // namespace kgraph::serial
