#pragma once

#include <string>
#include <vector>

#include "nischeck/gap.hpp"

namespace nischeck {

/// Inferred memberships of the individual restricted to classes that carry an
/// EquivalentClasses definition — the compliance classes. Sorted.
std::vector<Iri> compliant_classes(const KnowledgeBase& kb, const TypeMap& types,
                                   const Iri& individual);

/// Plain-text report: inferred compliances plus the gap table
/// (article | task | object). Byte-stable for identical inputs.
std::string render_text(const GapReport& report, const std::vector<Iri>& compliant);

/// Just the gap table.
std::string render_table(const GapReport& report);

/// JSON object with keys individual, target, compliant, gaps, satisfied in
/// that order.
std::string render_json(const GapReport& report, const std::vector<Iri>& compliant);

} // namespace nischeck
