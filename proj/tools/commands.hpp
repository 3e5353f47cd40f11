#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segdraw/generators.hpp"

namespace segdraw::cli {

enum Exit : int { Certified = 0, Failure = 1, Unchecked = 2 };

struct Options {
    std::vector<std::string> inputs;
    std::optional<std::string> family;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string svg;
    std::string verify_realizer;
    int monotone_cap = 10;
    int jobs = 1;
};

/// Output of one command on one input.
struct Result {
    int code = Certified;
    std::string out;  ///< stdout text
    std::string err;  ///< diagnostics
};

/// Input text and reference: a file, or a generated instance when no file is given.
struct Source {
    std::string ref;
    std::string text;
};

std::vector<Source> collect_sources(const Options& o, bool want_tree);

Result draw_tree_cmd(const Source& src, const Options& o, const std::string& out_path, const std::string& svg_path);
Result draw_3con_cmd(const Source& src, const Options& o, const std::string& out_path, const std::string& svg_path);
Result realizer_cmd(const Source& src, const Options& o);
Result verify_cmd(const Source& src, const Options& o);
Result gen_cmd(const Options& o);
Result render_cmd(const Source& src, const Options& o);
/// One table row per input: bounds against the achieved segment count.
Result bounds_cmd(const Source& src, const Options& o);
std::string bounds_header();

/// Runs `f` over all sources with up to o.jobs threads; results in input order.
template <class F>
std::vector<Result> fan_out(const std::vector<Source>& srcs, int jobs, F f);

/// Worst exit code: Failure beats Unchecked beats Certified.
int combine(const std::vector<Result>& rs);

/// Path for input i when several inputs share --out/--svg: a directory, else the path itself.
std::string output_path(const std::string& base, const std::string& ref, std::size_t count, const char* ext);

}  // namespace segdraw::cli

#include "commands_fan_out.hpp"
