#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "complex_arg.hpp"
#include "emit.hpp"
#include "verify.hpp"
#include "weyl/errors.hpp"
#include "weyl/json_io.hpp"
#include "weyl/kernels.hpp"
#include "weyl/measures.hpp"
#include "weyl/region.hpp"

namespace {

using namespace weyl;
using nlohmann::json;

struct Options {
    std::string input = "-";
    std::string z_text;
    std::string w_text;
    std::string problem = "hamburger";
    std::string gaps_text;
    std::string format;
    int order = 1;
    double a = std::nan("");
    double b = std::nan("");
    int samples = 64;
    std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::vector<std::pair<double, double>> parse_gaps(const std::string& text) {
    std::vector<std::pair<double, double>> gaps;
    std::istringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        const auto comma = chunk.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("gap must be given as a,b: " + chunk);
        gaps.emplace_back(std::stod(chunk.substr(0, comma)), std::stod(chunk.substr(comma + 1)));
    }
    if (gaps.empty()) throw std::invalid_argument("--gaps is empty");
    return gaps;
}

double verification_tolerance() {
    if (const char* env = std::getenv("WEYL_TOL")) return std::stod(env);
    return 1e-9;
}

void require_parameter(bool present, const std::string& name, const std::string& problem) {
    if (!present)
        throw std::invalid_argument("--" + name + " is required for --problem " + problem);
}

int system_order(const Options& opt, const MomentSequence& s) {
    if (opt.problem == "hamburger") {
        // Prefer one extra order so the boundary arc carries the
        // degree-(n+1) parametrization with the Gauss point at t = infinity.
        return 2 * (opt.order + 1) <= s.max_index() ? opt.order + 1 : opt.order;
    }
    if (opt.problem == "interval") {
        const int n = opt.order / 2;
        return opt.order % 2 == 0 ? n : n + 2;
    }
    return opt.order;
}

WeylRegion build_region(const OrthoSystem& sys, const Options& opt, Complex z) {
    if (opt.problem == "hamburger") return hamburger_region(sys, opt.order, z);
    if (opt.problem == "stieltjes") {
        require_parameter(!std::isnan(opt.a), "a", opt.problem);
        return stieltjes_region(sys, opt.order, z, opt.a);
    }
    if (opt.problem == "interval" || opt.problem == "gap") {
        require_parameter(!std::isnan(opt.a), "a", opt.problem);
        require_parameter(!std::isnan(opt.b), "b", opt.problem);
        return opt.problem == "interval" ? interval_region(sys, opt.order, z, opt.a, opt.b)
                                         : gap_circles(sys, opt.order, z, opt.a, opt.b);
    }
    if (opt.problem == "multigap") {
        require_parameter(!opt.gaps_text.empty(), "gaps", opt.problem);
        const auto gaps = parse_gaps(opt.gaps_text);
        return multi_gap_region(sys, opt.order, z, gaps);
    }
    throw std::invalid_argument("unknown problem: " + opt.problem);
}

std::vector<Complex> transform_markers(const OrthoSystem& sys, Complex z) {
    std::vector<Complex> points;
    for (int n = 1; n <= std::min(3, sys.max_order()); ++n) {
        try {
            points.push_back(stieltjes_transform(gauss_quadrature(sys, n), z).value);
        } catch (const Error&) {
            break;
        }
    }
    return points;
}

int run_region_verb(const Options& opt, const std::string& default_format) {
    const MomentSequence s = moment_sequence_from_json(read_input(opt.input));
    const Complex z = cli::parse_complex(opt.z_text);
    const OrthoSystem sys = orthonormal_system(s, system_order(opt, s));
    const WeylRegion region = build_region(sys, opt, z);

    for (const auto& note : region.diagnostics) std::cerr << "warning: " << note << '\n';

    const std::string format = opt.format.empty() ? default_format : opt.format;
    if (format == "json") {
        std::cout << to_json(region) << '\n';
    } else if (format == "csv") {
        cli::emit_boundary_csv(std::cout, region, opt.samples);
    } else if (format == "svg") {
        cli::emit_region_svg(std::cout, region, std::max(opt.samples, 16),
                             transform_markers(sys, z));
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

int run_ortho(const Options& opt) {
    const MomentSequence s = moment_sequence_from_json(read_input(opt.input));
    const OrthoSystem sys = orthonormal_system(s, opt.order);

    json j;
    j["label"] = s.label;
    j["order"] = sys.max_order();
    j["P"] = json::array();
    j["Q"] = json::array();
    for (const auto& p : sys.P) j["P"].push_back(p.coeffs());
    for (const auto& q : sys.Q) j["Q"].push_back(q.coeffs());
    j["a"] = sys.a;
    j["b"] = sys.b;
    j["condition"] = sys.condition;
    std::cout << j.dump() << '\n';
    return 0;
}

int run_kernels(const Options& opt) {
    const MomentSequence s = moment_sequence_from_json(read_input(opt.input));
    const Complex z = cli::parse_complex(opt.z_text);
    const Complex w = cli::parse_complex(opt.w_text);
    const OrthoSystem sys = orthonormal_system(s, opt.order);

    json j;
    j["order"] = opt.order;
    j["z"] = {z.real(), z.imag()};
    j["w"] = {w.real(), w.imag()};
    json delta;
    const char* names[] = {"A", "B", "C", "D"};
    const KernelKind kinds[] = {KernelKind::A, KernelKind::B, KernelKind::C, KernelKind::D};
    for (int i = 0; i < 4; ++i) {
        const Complex value = kernel(sys, kinds[i], opt.order, z, w);
        j[names[i]] = {value.real(), value.imag()};
        if (opt.order >= 1)
            delta[names[i]] = std::abs(value - kernel(sys, kinds[i], opt.order - 1, z, w));
    }
    j["delta"] = opt.order >= 1 ? delta : json(nullptr);
    std::cout << j.dump() << '\n';
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_z) {
    cmd->add_option("--input", opt.input, "input JSON path (default: stdin)");
    cmd->add_option("--order", opt.order, "truncation order");
    if (needs_z) cmd->add_option("--z", opt.z_text, "evaluation point RE+IMi")->required();
}

void add_geometry(CLI::App* cmd, Options& opt) {
    cmd->add_option("--problem", opt.problem,
                    "hamburger|stieltjes|interval|gap|multigap");
    cmd->add_option("--a", opt.a, "left endpoint");
    cmd->add_option("--b", opt.b, "right endpoint");
    cmd->add_option("--gaps", opt.gaps_text, "gap list a1,b1;a2,b2");
    cmd->add_option("--samples", opt.samples, "boundary samples per arc");
    cmd->add_option("--format", opt.format, "json|csv|svg");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl circles and regions for one-dimensional moment problems"};
    app.require_subcommand(1);
    Options opt;

    auto* ortho = app.add_subcommand("ortho", "orthonormal system coefficients");
    add_common(ortho, opt, false);

    auto* kernels_cmd = app.add_subcommand("kernels", "Nevanlinna kernel values at (z, w)");
    add_common(kernels_cmd, opt, true);
    kernels_cmd->add_option("--w", opt.w_text, "second argument RE+IMi")->required();

    auto* circle = app.add_subcommand("circle", "Weyl circle (JSON region)");
    add_common(circle, opt, true);
    add_geometry(circle, opt);

    auto* region = app.add_subcommand("region", "Weyl region (JSON)");
    add_common(region, opt, true);
    add_geometry(region, opt);

    auto* boundary = app.add_subcommand("boundary", "boundary samples (CSV)");
    add_common(boundary, opt, true);
    add_geometry(boundary, opt);

    auto* plot = app.add_subcommand("plot", "SVG plot of the region");
    add_common(plot, opt, true);
    add_geometry(plot, opt);

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify, opt, false);
    verify->add_option("--seed", opt.seed, "verification RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(ortho)) return run_ortho(opt);
        if (app.got_subcommand(kernels_cmd)) return run_kernels(opt);
        if (app.got_subcommand(circle)) return run_region_verb(opt, "json");
        if (app.got_subcommand(region)) return run_region_verb(opt, "json");
        if (app.got_subcommand(boundary)) return run_region_verb(opt, "csv");
        if (app.got_subcommand(plot)) return run_region_verb(opt, "svg");
        if (app.got_subcommand(verify)) {
            const MomentSequence s = moment_sequence_from_json(read_input(opt.input));
            return cli::run_verify(s, opt.seed, verification_tolerance(), std::cout) ? 0 : 3;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
