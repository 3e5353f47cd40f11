#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace segdraw;
using namespace segdraw::cli;

namespace {

int report(const std::vector<Result>& rs, const std::string& header = "") {
    std::cout << header;
    for (const auto& r : rs) {
        std::cout << r.out;
        std::cerr << r.err;
    }
    return combine(rs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Straight-line grid drawings with few segments"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool inputs) {
        if (inputs) sub->add_option("inputs", o.inputs, "Input files");
        sub->add_option("--family", o.family, "Generator family instead of an input file");
        sub->add_option("--n", o.n, "Generator size");
        sub->add_option("--seed", o.seed, "Generator seed");
        sub->add_option("--monotone-cap", o.monotone_cap, "Largest n for the brute-force monotonicity check");
        sub->add_option("--jobs", o.jobs, "Worker threads over the input files")->check(CLI::PositiveNumber);
    };

    auto* tree = app.add_subcommand("draw-tree", "Draw a tree with few segments");
    common(tree, true);
    tree->add_option("--out", o.out, "Drawing file (a directory for several inputs)");
    tree->add_option("--svg", o.svg, "SVG file (a directory for several inputs)");

    auto* con = app.add_subcommand("draw-3con", "Draw a 3-connected plane graph monotonically");
    common(con, true);
    con->add_option("--out", o.out, "Drawing file (a directory for several inputs)");
    con->add_option("--svg", o.svg, "SVG file (a directory for several inputs)");

    auto* real = app.add_subcommand("realizer", "Compute or verify a realizer");
    common(real, true);
    real->add_option("--verify", o.verify_realizer, "Realizer file to validate against the graph");

    auto* ver = app.add_subcommand("verify", "Recompute and compare the summary of drawing files");
    common(ver, true);

    auto* gen = app.add_subcommand("gen", "Generate a graph or tree file");
    common(gen, false);
    gen->add_option("--out", o.out, "Output file");

    auto* ren = app.add_subcommand("render", "Render a drawing file as SVG");
    common(ren, true);
    ren->add_option("--svg", o.svg, "SVG file; stdout if omitted");

    auto* bnd = app.add_subcommand("bounds", "Table of lower bounds, achieved and certified segment counts");
    common(bnd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return report({gen_cmd(o)});
        if (*tree || *con) {
            const bool is_tree = tree->parsed();
            const auto srcs = collect_sources(o, is_tree);
            return report(fan_out(srcs, o.jobs, [&](std::size_t, const Source& s) {
                const auto out = output_path(o.out, s.ref, srcs.size(), ".drawing");
                const auto svg = output_path(o.svg, s.ref, srcs.size(), ".svg");
                return is_tree ? draw_tree_cmd(s, o, out, svg) : draw_3con_cmd(s, o, out, svg);
            }));
        }
        if (*real) {
            const auto srcs = collect_sources(o, false);
            return report(fan_out(srcs, o.jobs, [&](std::size_t, const Source& s) { return realizer_cmd(s, o); }));
        }
        if (*ver) {
            const auto srcs = collect_sources(o, false);
            return report(fan_out(srcs, o.jobs, [&](std::size_t, const Source& s) { return verify_cmd(s, o); }));
        }
        if (*ren) {
            const auto srcs = collect_sources(o, false);
            if (srcs.size() != 1) throw GraphError("render takes exactly one drawing file");
            return report({render_cmd(srcs[0], o)});
        }
        if (*bnd) {
            std::vector<Source> srcs;
            if (o.inputs.empty() && o.family) {
                srcs = collect_sources(o, is_tree_family(parse_family(*o.family)));
            } else {
                srcs = collect_sources(o, false);
            }
            return report(fan_out(srcs, o.jobs, [&](std::size_t, const Source& s) { return bounds_cmd(s, o); }),
                          bounds_header());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failure;
    }
    return Failure;
}
