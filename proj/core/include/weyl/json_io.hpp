#pragma once

#include <string>

#include "weyl/kernels.hpp"
#include "weyl/measures.hpp"
#include "weyl/moments.hpp"
#include "weyl/region.hpp"

namespace weyl {

// JSON wire formats (field names are fixed for CLI round-tripping):
//   MomentSequence  {"label": string, "values": [number, ...]}
//   DiscreteMeasure {"atoms": [{"x": number, "w": number}, ...]}
//   WeylRegion      {"kind", "circles", "vertices", "vertex_angle",
//                    "degenerate", "order", "convergence"}
//   RelationReport  [{"relation", "max_residual", "worst_input"}, ...]
// Numbers are emitted in shortest round-trip decimal form.

std::string to_json(const MomentSequence& s);
MomentSequence moment_sequence_from_json(const std::string& text);

std::string to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const std::string& text);

std::string to_json(const WeylRegion& region);
/// Re-parses the serialized fields (boundary arcs and diagnostics are not
/// part of the wire format).
WeylRegion region_from_json(const std::string& text);

std::string to_json(const RelationReport& report);

}  // namespace weyl
