#include "weyl/json_io.hpp"

#include <json.hpp>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
    return Complex{j.at(0).get<double>(), j.at(1).get<double>()};
}

RegionKind kind_from(const std::string& name) {
    for (RegionKind kind :
         {RegionKind::hamburger_disk, RegionKind::stieltjes_lens, RegionKind::interval_lens_even,
          RegionKind::interval_lens_odd, RegionKind::gap_lens, RegionKind::multi_gap})
        if (name == to_string(kind)) return kind;
    throw NonFiniteInput("unknown region kind: " + name);
}

}  // namespace

std::string to_json(const MomentSequence& s) {
    json j;
    j["label"] = s.label;
    j["values"] = s.values;
    return j.dump();
}

MomentSequence moment_sequence_from_json(const std::string& text) {
    const json j = json::parse(text);
    MomentSequence s;
    s.label = j.at("label").get<std::string>();
    s.values = j.at("values").get<std::vector<double>>();
    return s;
}

std::string to_json(const DiscreteMeasure& mu) {
    json atoms = json::array();
    for (const auto& atom : mu.atoms) atoms.push_back({{"x", atom.x}, {"w", atom.w}});
    return json{{"atoms", atoms}}.dump();
}

DiscreteMeasure measure_from_json(const std::string& text) {
    const json j = json::parse(text);
    DiscreteMeasure mu;
    for (const auto& atom : j.at("atoms"))
        mu.atoms.push_back({atom.at("x").get<double>(), atom.at("w").get<double>()});
    return mu;
}

std::string to_json(const WeylRegion& region) {
    json j;
    j["kind"] = to_string(region.kind);
    j["circles"] = json::array();
    for (const auto& c : region.circles)
        j["circles"].push_back({{"center", complex_json(c.center)}, {"radius", c.radius}});
    j["vertices"] = json::array();
    for (Complex v : region.vertices) j["vertices"].push_back(complex_json(v));
    j["vertex_angle"] = region.vertex_angle ? json(*region.vertex_angle) : json(nullptr);
    j["degenerate"] = region.degenerate;
    j["order"] = region.order;
    j["convergence"] = region.convergence
                           ? json{{"delta_center", region.convergence->delta_center},
                                  {"delta_radius", region.convergence->delta_radius}}
                           : json(nullptr);
    if (region.kind == RegionKind::multi_gap)
        j["intersection_empty"] = region.intersection_empty;
    return j.dump();
}

WeylRegion region_from_json(const std::string& text) {
    const json j = json::parse(text);
    WeylRegion region;
    region.kind = kind_from(j.at("kind").get<std::string>());
    for (const auto& c : j.at("circles"))
        region.circles.push_back(
            Circle{complex_from(c.at("center")), c.at("radius").get<double>()});
    for (const auto& v : j.at("vertices")) region.vertices.push_back(complex_from(v));
    if (!j.at("vertex_angle").is_null())
        region.vertex_angle = j.at("vertex_angle").get<double>();
    region.degenerate = j.at("degenerate").get<bool>();
    region.order = j.at("order").get<int>();
    if (!j.at("convergence").is_null())
        region.convergence =
            ConvergenceInfo{j.at("convergence").at("delta_center").get<double>(),
                            j.at("convergence").at("delta_radius").get<double>()};
    if (j.contains("intersection_empty"))
        region.intersection_empty = j.at("intersection_empty").get<bool>();
    return region;
}

std::string to_json(const RelationReport& report) {
    json j = json::array();
    for (const auto& entry : report.entries) {
        json inputs = json::array();
        for (Complex z : entry.worst_input) inputs.push_back(complex_json(z));
        j.push_back({{"relation", entry.relation},
                     {"max_residual", entry.max_residual},
                     {"worst_input", inputs}});
    }
    return j.dump();
}

}  // namespace weyl
