#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nischeck/axiom.hpp"
#include "nischeck/iri.hpp"
#include "nischeck/rdf.hpp"

namespace nischeck {

/// In-memory knowledge base: TBox axioms plus ABox assertions, with
/// subject/property indexes over the ABox and a deterministic RDF triple view.
///
/// Build single-writer, then freeze(); all reads on a frozen KB are safe to
/// run concurrently.
class KnowledgeBase {
public:
    KnowledgeBase();
    explicit KnowledgeBase(PrefixMap prefixes);

    const PrefixMap& prefixes() const { return prefixes_; }
    void bind_prefix(const std::string& label, const std::string& expansion);

    /// Adds an axiom (idempotent). Expressions are normalized. Declarations
    /// for every referenced IRI are inserted automatically. Throws
    /// DuplicateDefinitionError / CyclicPropertyHierarchyError.
    void add(const Axiom& axiom);
    /// Adds an assertion (idempotent) plus auto-declarations.
    void add(const Assertion& assertion);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    /// Union of axioms, assertions and prefixes.
    void merge(const KnowledgeBase& other);

    const std::set<Axiom>& tbox() const { return tbox_; }
    const std::set<Assertion>& abox() const { return abox_; }

    bool is_declared(const Iri& iri, DeclKind kind) const;
    std::vector<Iri> declared(DeclKind kind) const;

    /// The unique EquivalentClasses definition of a class, if any.
    std::optional<ClassExpression> definition_of(const Iri& cls) const;
    /// Asserted SubClassOf superexpressions of a class.
    std::vector<ClassExpression> told_superclasses(const Iri& cls) const;
    /// Asserted SubPropertyOf edges (sub, sup), self-loops dropped.
    std::vector<std::pair<Iri, Iri>> sub_property_edges() const;

    const std::set<Assertion>& assertions_by_subject(const Iri& subject) const;
    const std::set<Assertion>& assertions_by_property(const Iri& property) const;
    /// Objects b with (property, subject, b) in the ABox.
    std::vector<Iri> object_successors(const Iri& subject, const Iri& property) const;
    /// Values v with (property, subject, v) in the ABox.
    std::vector<long long> data_values(const Iri& subject, const Iri& property) const;

    /// Deterministic triple lowering of the whole KB: identical calls produce
    /// identical triples including blank-node labels.
    std::vector<Triple> rdf_view() const;

    /// Structural equality of axiom and assertion sets (prefixes ignored).
    bool same_content(const KnowledgeBase& other) const {
        return tbox_ == other.tbox_ && abox_ == other.abox_;
    }

private:
    void require_mutable() const;
    void declare(DeclKind kind, const Iri& iri);
    void declare_expression_iris(const ClassExpression& expr);
    void check_property_acyclic(const Iri& sub, const Iri& sup) const;

    PrefixMap prefixes_;
    bool frozen_ = false;
    std::set<Axiom> tbox_;
    std::set<Assertion> abox_;
    std::set<std::pair<int, Iri>> decls_; // (DeclKind, iri)
    std::map<Iri, ClassExpression> definitions_;
    std::map<Iri, std::set<Assertion>> by_subject_;
    std::map<Iri, std::set<Assertion>> by_property_;
    std::map<Iri, std::set<Iri>> prop_sups_; // asserted SubPropertyOf adjacency
};

} // namespace nischeck
