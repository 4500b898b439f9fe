#pragma once

#include <map>
#include <set>
#include <vector>

#include "nischeck/knowledge_base.hpp"

namespace nischeck {

/// Subsumption closure over named classes: reflexive, transitively closed,
/// deterministic iteration order. Also carries the reflexive-transitive
/// sub-property closure the instance rules consult.
class SubsumptionMap {
public:
    SubsumptionMap() = default;
    SubsumptionMap(std::set<std::pair<Iri, Iri>> class_pairs,
                   std::set<std::pair<Iri, Iri>> property_pairs);

    bool subsumed(const Iri& sub, const Iri& sup) const;
    bool property_subsumed(const Iri& sub, const Iri& sup) const;

    const std::set<std::pair<Iri, Iri>>& pairs() const { return class_pairs_; }
    const std::set<std::pair<Iri, Iri>>& property_pairs() const { return property_pairs_; }

    std::vector<Iri> supers_of(const Iri& cls) const;
    /// Direct (non-transitive) named superclasses, for hierarchy dumps.
    std::vector<Iri> direct_supers_of(const Iri& cls) const;
    std::vector<Iri> classes() const;

private:
    std::set<std::pair<Iri, Iri>> class_pairs_;
    std::set<std::pair<Iri, Iri>> property_pairs_;
};

/// Inferred individual -> named class memberships; closed under the
/// subsumption map, contains all asserted class assertions.
class TypeMap {
public:
    TypeMap() = default;
    explicit TypeMap(std::map<Iri, std::set<Iri>> entries);

    bool has(const Iri& individual, const Iri& cls) const;
    const std::set<Iri>& types_of(const Iri& individual) const;
    const std::map<Iri, std::set<Iri>>& entries() const { return entries_; }

private:
    std::map<Iri, std::set<Iri>> entries_;
};

/// Saturation-based classification: least fixpoint of the structural
/// subsumption rules over named classes and definition conjuncts.
SubsumptionMap classify(const KnowledgeBase& kb);

/// Realization: least fixpoint of the instance rules. `subs` must be
/// classify(kb).
TypeMap realize(const KnowledgeBase& kb, const SubsumptionMap& subs);

/// True iff the individual satisfies the expression under the instance rules,
/// evaluated against an already-computed type map. Throws
/// UnknownIndividualError for an undeclared individual.
bool entails_instance(const KnowledgeBase& kb, const SubsumptionMap& subs, const TypeMap& types,
                      const Iri& individual, const ClassExpression& expr);

/// Convenience overload that realizes the KB first.
bool entails_instance(const KnowledgeBase& kb, const SubsumptionMap& subs, const Iri& individual,
                      const ClassExpression& expr);

} // namespace nischeck
