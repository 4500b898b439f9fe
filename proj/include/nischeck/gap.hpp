#pragma once

#include <string>
#include <vector>

#include "nischeck/reasoner.hpp"

namespace nischeck {

/// One required measure: the article class it comes from, the task property,
/// and the target rendered as text (a class curie, or "max 3" for a facet).
struct GapRow {
    Iri article;
    Iri task;
    std::string object;
    auto operator<=>(const GapRow&) const = default;
};

/// Differential compliance report for one individual against one target
/// class: `rows` are the missing measures, `satisfied` the met ones; together
/// they cover every restriction conjunct reachable from the target's
/// definition, disjointly.
struct GapReport {
    Iri individual;
    Iri target;
    std::vector<GapRow> rows;      // sorted by (article, task, object)
    std::vector<GapRow> satisfied; // same order
};

/// Unfolds the target's definition into its article classes and reports each
/// restriction conjunct the individual fails to satisfy. Conjuncts without a
/// restriction-style definition (e.g. a bare base class) are skipped. Throws
/// UndefinedTargetError / UnknownIndividualError.
GapReport gap_analysis(const KnowledgeBase& kb, const SubsumptionMap& subs, const TypeMap& types,
                       const Iri& individual, const Iri& target);

/// Convenience overload that realizes the KB first.
GapReport gap_analysis(const KnowledgeBase& kb, const SubsumptionMap& subs, const Iri& individual,
                       const Iri& target);

} // namespace nischeck
