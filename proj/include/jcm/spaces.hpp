#pragma once

#include "jcm/simplicial.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace jcm {

/// Pointed n-sphere: basepoint k0 and one nondegenerate n-simplex x.  For
/// n = 0 the second vertex is called y.
std::shared_ptr<const FiniteSimplicialSet> sphere(int n);
/// Standard simplex Delta[n] pointed at v0; the face on vertex set {a<b<...}
/// is called "vab...".
std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n);
/// Wedge at the basepoints; generator ids get suffixes _1 and _2.
std::shared_ptr<const FiniteSimplicialSet> wedge(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

/// Rewrite any set with finite nondegenerate enumeration as a generator
/// table, naming generators by their textual form.
std::shared_ptr<const FiniteSimplicialSet> flatten(const SimplicialSet& set);

nlohmann::json fixture_to_json(const FiniteSimplicialSet& set);
/// Reads the fixture JSON format; throws std::invalid_argument on bad input.
std::shared_ptr<const FiniteSimplicialSet> fixture_from_json(const nlohmann::json& j);

/// Named fixtures: S0, S1, S2, ..., D1, D2, ..., S1vS1, a leading "E"
/// suspends ("ES1", "EES0"), "AxB" forms a product, or a path to a fixture
/// JSON file.
SetPtr named_space(const std::string& name);

/// Space expressions for the build command: "sphere 2", "delta 1",
/// "wedge (sphere 1) (sphere 1)", "suspension (sphere 1)",
/// "product (sphere 1) (delta 1)".
SetPtr space_from_expression(const std::string& expr);

} // namespace jcm
