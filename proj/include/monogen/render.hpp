#pragma once

// Column diagrams of complexes and visibility diagrams.

#include <string>
#include <vector>

#include "monogen/core.hpp"
#include "monogen/genfunc.hpp"

namespace monogen {

/// One row per vertex, one column per maximal simplex; '#' filled, '.' empty.
std::string render_ascii(const Complex& k);
/// Same layout as render_ascii. Output depends only on k.
std::string render_svg(const Complex& k);
/// Rows are output cells, columns are inputs.
std::string render_ascii(const VisibilityDiagram& d, const std::vector<std::string>& input_names);

}  // namespace monogen
