#pragma once

#include <json.hpp>

#include "farey/cf.hpp"
#include "farey/density.hpp"
#include "farey/dynamics.hpp"
#include "farey/roots.hpp"
#include "farey/tree.hpp"
#include "farey/verify.hpp"

// JSON record shapes shared by the CLI and the tests. Keys are emitted in
// insertion order (ordered_json) so output is byte-stable.

namespace farey {

using Json = nlohmann::ordered_json;

/// {"variant":..., "level":..., "label":[...] | "branchWord":"...",
///  "p":[coeff strings], "q":[coeff strings]}
Json tree_node_json(const TreeNode& node, TreeVariant variant);

/// Integers bare ("20"), non-integers "num/den" ("3/4"). Convergent
/// components are exact and deliberately unreduced as a pair.
std::string convergent_component(const Rat& v);

Json expansion_json(const DigitExpansion& exp, const std::vector<Convergent>& convs);

Json case_result_json(const verify::CaseResult& c);
Json suite_report_json(const verify::SuiteReport& rep);

Json complex_root_json(const ComplexApprox& r);
Json isolating_interval_json(const IsolatingInterval& iv);
Json poly_roots_json(const IntPoly& f, const Rat& eps, double tol);

Json interlace_report_json(const InterlaceReport& rep);
Json density_trace_json(const DensityTrace& trace);

/// One CSV field, quoted when it contains separators.
std::string csv_field(const std::string& s);

}  // namespace farey
