#include <algorithm>

#include "nischeck/gap.hpp"

namespace nischeck {

namespace {

std::string render_object(const ClassExpression& filler) {
    if (filler.kind() == ClassExpression::Kind::Named)
        return filler.head().to_string();
    return filler.to_string();
}

} // namespace

GapReport gap_analysis(const KnowledgeBase& kb, const SubsumptionMap& subs, const TypeMap& types,
                       const Iri& individual, const Iri& target) {
    if (!kb.is_declared(individual, DeclKind::Individual))
        throw UnknownIndividualError("unknown individual " + individual.to_string());
    std::optional<ClassExpression> definition = kb.definition_of(target);
    if (!definition)
        throw UndefinedTargetError("target " + target.to_string() +
                                   " has no EquivalentClasses definition");

    GapReport report{individual, target, {}, {}};

    // Two-level unfolding: the target's named conjuncts are the article
    // classes; their restriction conjuncts are the required measures.
    // Conjuncts without a restriction-style definition (the bare base class)
    // contribute nothing.
    for (const ClassExpression& conjunct : definition->conjunct_list()) {
        if (conjunct.kind() != ClassExpression::Kind::Named)
            continue;
        const Iri& article = conjunct.head();
        std::optional<ClassExpression> article_def = kb.definition_of(article);
        if (!article_def)
            continue;
        for (const ClassExpression& inner : article_def->conjunct_list()) {
            GapRow row;
            row.article = article;
            if (inner.kind() == ClassExpression::Kind::ObjectSome) {
                row.task = inner.head();
                row.object = render_object(inner.filler());
            } else if (inner.kind() == ClassExpression::Kind::DataFacet) {
                row.task = inner.head();
                row.object = facet_keyword(inner.facet()) + " " + std::to_string(inner.bound());
            } else {
                continue;
            }
            bool met = entails_instance(kb, subs, types, individual, inner);
            (met ? report.satisfied : report.rows).push_back(std::move(row));
        }
    }

    std::sort(report.rows.begin(), report.rows.end());
    std::sort(report.satisfied.begin(), report.satisfied.end());
    return report;
}

GapReport gap_analysis(const KnowledgeBase& kb, const SubsumptionMap& subs, const Iri& individual,
                       const Iri& target) {
    return gap_analysis(kb, subs, realize(kb, subs), individual, target);
}

} // namespace nischeck
