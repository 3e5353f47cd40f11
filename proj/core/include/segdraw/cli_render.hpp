#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "segdraw/graph_model.hpp"
#include "segdraw/metrics_verify.hpp"

namespace segdraw {

/// Text drawing file:
///   # graph: <ref>
///   # algorithm: <id>
///   # seed: <seed>
///   n <count>
///   v <id> <x> <y>
///   e <u> <v>
///   # summary: <SegmentReport::summary_line()>
struct DrawingFile {
    std::string graph_ref;
    std::string algorithm;
    std::string seed;
    GridDrawing drawing;
    std::string summary;
};

DrawingFile make_drawing_file(const GridDrawing& d, const SegmentReport& r, std::string graph_ref,
                              std::string algorithm, std::string seed = "none");
std::string serialize(const DrawingFile& f);
DrawingFile parse_drawing_file(std::string_view text);

struct VerifyOutcome {
    SegmentReport report;
    /// `field: stored -> recomputed` for every summary field that differs.
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty() && report.planar; }
};

/// Recomputes the report and compares it with the stored summary.
VerifyOutcome verify_drawing_file(const DrawingFile& f, int monotone_cap = 10);

struct SvgStyle {
    double scale = 20.0;
    double margin = 20.0;
    double vertex_radius = 3.0;
    double stroke_width = 2.0;
};

/// One polyline per maximal segment, one circle per vertex; y grows upward in the stored drawing.
std::string render_svg(const GridDrawing& d, const SvgStyle& style = {});

}  // namespace segdraw
