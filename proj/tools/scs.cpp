// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sc/homology.hpp"
#include "sc/homotopy.hpp"
#include "sc/io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct LoadedText {
    std::string path;
    std::string bytes;
};

LoadedText slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return {"-", buffer.str()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sc::input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return {path, buffer.str()};
}

sc::io::json input_record(const LoadedText& text) {
    return {{"path", text.path}, {"digest", sc::io::fnv1a_digest(text.bytes)}};
}

sc::io::json parse_json(const LoadedText& text) {
    try {
        return sc::io::json::parse(text.bytes);
    } catch (const sc::io::json::parse_error& err) {
        throw sc::input_error("'" + text.path + "': " + err.what());
    }
}

enum class SpaceFormat { automatic, space, edges, csv };

SpaceFormat sniff(const LoadedText& text) {
    const auto start = text.bytes.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text.bytes[start] == '{') return SpaceFormat::space;
    std::istringstream in(text.bytes);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        return line.find(',') != std::string::npos ? SpaceFormat::csv : SpaceFormat::edges;
    }
    return SpaceFormat::edges;
}

sc::Space load_space(const LoadedText& text, SpaceFormat format, const std::string& scale_text,
                     bool strict) {
    if (format == SpaceFormat::automatic) format = sniff(text);
    switch (format) {
        case SpaceFormat::space:
            return sc::io::space_from_json(parse_json(text));
        case SpaceFormat::edges: {
            std::istringstream in(text.bytes);
            return sc::io::parse_edge_list(in);
        }
        case SpaceFormat::csv: {
            if (scale_text.empty())
                throw sc::input_error("point-cloud input needs --scale");
            std::istringstream in(text.bytes);
            const sc::PointCloud cloud = sc::io::parse_point_cloud_csv(in);
            return sc::from_point_cloud(cloud, sc::io::parse_decimal(scale_text), strict);
        }
        default:
            throw sc::input_error("unknown input format");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sc::input_error("cannot write '" + out_path + "'");
    out << text;
}

void print_report(const sc::io::json& report) { std::cout << report.dump(2) << "\n"; }

sc::io::json base_report(const std::string& command) {
    sc::io::json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["inputs"] = sc::io::json::object();
    report["options"] = sc::io::json::object();
    report["warnings"] = sc::io::json::array();
    return report;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = item.find_last_not_of(" \t");
        out.push_back(item.substr(begin, end - begin + 1));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_pair_lines(const LoadedText& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text.bytes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a)) continue;
        if (!(row >> b) || (row >> extra))
            throw sc::input_error("'" + text.path + "' line " + std::to_string(lineno) +
                                  ": expected 'from to'");
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

sc::io::json groups_to_json(const std::vector<sc::HomologyGroup>& groups) {
    sc::io::json out = sc::io::json::array();
    for (const auto& g : groups) {
        sc::io::json torsion = sc::io::json::array();
        for (const auto& t : g.torsion) torsion.push_back(t.str());
        out.push_back({{"dim", g.dim},
                       {"betti", g.betti},
                       {"torsion", torsion},
                       {"cap_limited", g.cap_limited}});
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& input, const std::string& format_name,
              const std::string& scale_text, bool strict, const std::string& product_path,
              const std::string& quotient_path, const std::vector<std::string>& union_paths,
              const std::string& subspace_csv, const std::string& out_path) {
    SpaceFormat format = SpaceFormat::automatic;
    if (format_name == "space") format = SpaceFormat::space;
    else if (format_name == "edges") format = SpaceFormat::edges;
    else if (format_name == "csv") format = SpaceFormat::csv;
    else if (!format_name.empty() && format_name != "auto")
        throw sc::input_error("unknown --format '" + format_name + "'");

    const LoadedText text = slurp(input);
    sc::Space space = load_space(text, format, scale_text, strict);

    const int transforms = int(!product_path.empty()) + int(!quotient_path.empty()) +
                           int(!union_paths.empty()) + int(!subspace_csv.empty());
    if (transforms > 1)
        throw sc::input_error("--product, --quotient, --union and --subspace are exclusive");

    if (!product_path.empty()) {
        const LoadedText other = slurp(product_path);
        space = sc::product(space, load_space(other, SpaceFormat::automatic, scale_text, strict));
    } else if (!quotient_path.empty()) {
        const LoadedText table_text = slurp(quotient_path);
        std::unordered_map<std::string, std::string> table;
        for (auto& [from, to] : parse_pair_lines(table_text)) table[from] = to;
        space = sc::quotient(space, table);
    } else if (!union_paths.empty()) {
        std::vector<sc::Space> parts{space};
        for (const auto& path : union_paths) {
            const LoadedText other = slurp(path);
            parts.push_back(load_space(other, SpaceFormat::automatic, scale_text, strict));
        }
        space = sc::disjoint_union(parts);
    } else if (!subspace_csv.empty()) {
        space = sc::subspace(space, split_names(subspace_csv));
    }

    emit(sc::io::canonical_space_text(space), out_path);
    return 0;
}

int cmd_homology(const std::string& input, int max_dim) {
    if (max_dim < 0) throw sc::input_error("--max-dim must be nonnegative");
    const LoadedText text = slurp(input);
    const sc::Space space = load_space(text, SpaceFormat::automatic, "", false);
    const auto groups = sc::homology(space, max_dim);

    sc::io::json report = base_report("homology");
    report["inputs"]["space"] = input_record(text);
    report["options"]["max_dim"] = max_dim;
    report["result"]["groups"] = groups_to_json(groups);
    report["warnings"].push_back(
        "dimension " + std::to_string(max_dim) +
        " is cap-limited: the rank of the next boundary is unavailable");
    print_report(report);
    return 0;
}

int cmd_pi1(long long n, long long m) {
    const sc::Pi1 group = sc::pi1_cyclic(n, m);
    sc::io::json report = base_report("pi1");
    report["options"]["n"] = n;
    report["options"]["m"] = m;
    report["result"]["group"] = group == sc::Pi1::infinite_cyclic ? "Z" : "trivial";
    print_report(report);
    return 0;
}

int cmd_winding(const std::string& space_path, const std::string& path_path, bool unsafe_small) {
    const LoadedText space_text = slurp(space_path);
    const sc::Space space = load_space(space_text, SpaceFormat::automatic, "", false);
    const LoadedText path_text = slurp(path_path);
    const auto values = sc::io::path_values_from_json(parse_json(path_text));

    std::vector<sc::VertexId> raw(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) raw[i] = space.require(values[i]);

    const auto model = sc::recognize_cyclic(space, raw.front());
    if (!model)
        throw sc::input_error("the space is not a supported cyclic graph");

    // Translate onto the standard model, anchored at the path start.
    std::vector<int> position(space.size());
    for (int i = 0; i < model->n; ++i) position[model->order[i]] = i;
    const sc::SpacePtr standard = sc::share(sc::cyclic_space(model->n, model->jump));
    std::vector<sc::VertexId> grid(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        grid[i] = standard->require(std::to_string(position[raw[i]]));
    const sc::CubeMap path(sc::Cube{1, static_cast<int>(raw.size()) - 1}, standard, grid);

    const sc::WindingCertificate cert = sc::lift_path(path, model->jump, unsafe_small);

    sc::io::json report = base_report("winding");
    report["inputs"]["space"] = input_record(space_text);
    report["inputs"]["path"] = input_record(path_text);
    report["options"]["unsafe_small_n"] = unsafe_small;
    report["result"]["n"] = model->n;
    report["result"]["m"] = model->jump;
    report["result"]["loop"] = cert.loop;
    report["result"]["lift"] = cert.lift;
    report["result"]["displacement"] = cert.displacement;
    if (cert.loop)
        report["result"]["winding"] = cert.winding;
    else
        report["warnings"].push_back("path is not a based loop; reporting the displacement only");
    print_report(report);
    return 0;
}

int cmd_check(const std::string& map_path, const std::string& homotopy_path) {
    if (map_path.empty() == homotopy_path.empty())
        throw sc::input_error("check needs exactly one of --map or --homotopy");

    sc::io::json report = base_report("check");
    if (!map_path.empty()) {
        const LoadedText text = slurp(map_path);
        const sc::VertexMap map = sc::io::map_from_json(parse_json(text));
        report["inputs"]["map"] = input_record(text);
        report["options"]["kind"] = "map";
        const auto violation = sc::bornologous_violation(map);
        report["result"]["valid"] = !violation.has_value();
        if (violation) {
            report["result"]["witness"] = {
                {"pair", {map.source().name(violation->first), map.source().name(violation->second)}},
                {"images",
                 {map.target().name(map(violation->first)), map.target().name(map(violation->second))}}};
        }
    } else {
        const LoadedText text = slurp(homotopy_path);
        const sc::Homotopy homotopy = sc::io::homotopy_from_json(parse_json(text));
        report["inputs"]["homotopy"] = input_record(text);
        report["options"]["kind"] = "homotopy";
        const sc::VerifyResult verdict = sc::verify_homotopy(homotopy);
        report["result"]["valid"] = verdict.ok;
        if (!verdict.ok) {
            report["result"]["witness"] = {{"slice", verdict.slice},
                                           {"alpha", homotopy.cube.coords(verdict.alpha)},
                                           {"beta", homotopy.cube.coords(verdict.beta)},
                                           {"reason", verdict.reason}};
        }
    }
    print_report(report);
    return 0;
}

int cmd_coarsen(const std::string& input, const std::string& out_path) {
    const LoadedText text = slurp(input);
    const sc::Space space = load_space(text, SpaceFormat::automatic, "", false);
    const sc::CompletionResult completed = sc::coarse_completion(space);

    sc::io::json report = base_report("coarsen");
    report["inputs"]["space"] = input_record(text);
    report["result"]["iterations"] = completed.iterations;
    report["result"]["space"] = sc::io::space_to_json(completed.space);
    if (!out_path.empty()) emit(sc::io::canonical_space_text(completed.space), out_path);
    print_report(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semicoarse: semi-coarse spaces, discrete homotopy, and clique homology"};
    app.require_subcommand(1);

    // build
    std::string build_input, build_format = "auto", build_scale, build_out;
    std::string build_product, build_quotient, build_subspace;
    std::vector<std::string> build_union;
    bool build_strict = false;
    auto* build = app.add_subcommand("build", "construct a space and write its canonical form");
    build->add_option("input", build_input, "edge list, point-cloud CSV, or space JSON ('-' for stdin)")
        ->required();
    build->add_option("--format", build_format, "auto|edges|csv|space");
    build->add_option("--scale", build_scale, "scale r for point clouds (decimal, exact)");
    build->add_flag("--strict", build_strict, "use d < r instead of d <= r");
    build->add_option("--product", build_product, "second space: categorical product");
    build->add_option("--quotient", build_quotient, "vertex map file ('from to' lines): quotient");
    build->add_option("--union", build_union, "more spaces: disjoint union");
    build->add_option("--subspace", build_subspace, "comma-separated vertices: induced subspace");
    build->add_option("-o,--output", build_out, "output file (stdout by default)");

    // homology
    std::string homology_input;
    int homology_cap = 3;
    auto* homology = app.add_subcommand("homology", "Betti numbers and torsion of the clique complex");
    homology->add_option("space", homology_input, "space input ('-' for stdin)")->required();
    homology->add_option("--max-dim", homology_cap, "dimension cap (default 3)");

    // pi1
    long long pi1_n = 0, pi1_m = 1;
    auto* pi1 = app.add_subcommand("pi1", "fundamental group of the cyclic graph C_n with jumps 1..m");
    pi1->add_option("--n", pi1_n, "number of vertices")->required();
    pi1->add_option("--m", pi1_m, "jump width (default 1)");

    // winding
    std::string winding_space, winding_path;
    bool winding_unsafe = false;
    auto* winding = app.add_subcommand("winding", "winding number of a path in a cyclic graph");
    winding->add_option("space", winding_space, "cyclic space input")->required();
    winding->add_option("path", winding_path, "path JSON ({\"format\":\"path\",\"values\":[...]})")
        ->required();
    winding->add_flag("--unsafe-small-n", winding_unsafe,
                      "lift even where the fundamental group is trivial");

    // check
    std::string check_map, check_homotopy;
    auto* check = app.add_subcommand("check", "verify a map or a homotopy certificate");
    check->add_option("--map", check_map, "map JSON to verify");
    check->add_option("--homotopy", check_homotopy, "homotopy JSON to verify");

    // coarsen
    std::string coarsen_input, coarsen_out;
    auto* coarsen = app.add_subcommand("coarsen", "coarse completion (set-product fixpoint)");
    coarsen->add_option("space", coarsen_input, "space input ('-' for stdin)")->required();
    coarsen->add_option("-o,--output", coarsen_out, "also write the completed space here");

    try {
        app.parse(argc, argv);
        if (build->parsed())
            return cmd_build(build_input, build_format, build_scale, build_strict, build_product,
                             build_quotient, build_union, build_subspace, build_out);
        if (homology->parsed()) return cmd_homology(homology_input, homology_cap);
        if (pi1->parsed()) return cmd_pi1(pi1_n, pi1_m);
        if (winding->parsed()) return cmd_winding(winding_space, winding_path, winding_unsafe);
        if (check->parsed()) return cmd_check(check_map, check_homotopy);
        if (coarsen->parsed()) return cmd_coarsen(coarsen_input, coarsen_out);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const sc::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const sc::precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const sc::budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    }
}
