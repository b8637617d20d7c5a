#pragma once

#include <string>
#include <vector>

#include "trop/count.hpp"

namespace trop {

// One SVG per counted curve: bounded edges as segments, unbounded ends
// clipped at a bounding box padded past every vertex and marked point,
// marked points as labeled crosses, vertices annotated with their valency.
// Returns the written file paths ("<stem>_curve<i>.svg").
std::vector<std::string> render_curves_svg(const CountResult& result,
                                           const std::string& out_dir,
                                           const std::string& stem = "curve");

std::string curve_svg_document(const CountedCurve& curve, const PointConfiguration& points);

}  // namespace trop
