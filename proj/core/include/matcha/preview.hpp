#pragma once

#include <string>

#include "matcha/pipeline.hpp"

namespace matcha {

enum class PreviewFormat { Terminal, Html };

/// Renders the label grouped by category: collected/shared flags, purposes,
/// ephemeral/required markers, the by-app/by-library note, and provenance
/// links. Inert flows get an explanation section; pending libraries get an
/// export-blocked banner. HTML output is one self-contained file.
std::string render_preview(const ProjectAnalysis& analysis, PreviewFormat format);

}  // namespace matcha
