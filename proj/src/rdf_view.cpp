#include <algorithm>

#include "nischeck/knowledge_base.hpp"

namespace nischeck {

namespace {

// Lowers axioms/assertions to triples. Blank labels are sequential in the
// (sorted) traversal order, so the view is reproducible call to call.
class Lowering {
public:
    explicit Lowering(const KnowledgeBase& kb) : kb_(kb) {}

    std::vector<Triple> run() {
        for (const auto& ax : kb_.tbox())
            lower(ax);
        for (const auto& as : kb_.abox())
            lower(as);
        std::sort(triples_.begin(), triples_.end());
        triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
        return std::move(triples_);
    }

private:
    BlankNode fresh() { return BlankNode{"b" + std::to_string(counter_++)}; }

    void emit(Term s, Iri p, Term o) { triples_.push_back({std::move(s), std::move(p), std::move(o)}); }

    Iri facet_predicate(Facet f) const {
        switch (f) {
        case Facet::MaxInclusive:
            return vocab::xsd_max_inclusive();
        case Facet::MinInclusive:
            return vocab::xsd_min_inclusive();
        case Facet::Exact:
            return vocab::owl_has_value();
        }
        return vocab::owl_has_value();
    }

    /// Node for an expression in object position.
    Term node_for(const ClassExpression& e) {
        switch (e.kind()) {
        case ClassExpression::Kind::Named:
            return e.head();
        case ClassExpression::Kind::ObjectSome: {
            BlankNode r = fresh();
            emit(r, vocab::rdf_type(), vocab::owl_restriction());
            emit(r, vocab::owl_on_property(), e.head());
            emit(r, vocab::owl_some_values_from(), node_for(e.filler()));
            return r;
        }
        case ClassExpression::Kind::DataFacet: {
            BlankNode r = fresh();
            emit(r, vocab::rdf_type(), vocab::owl_restriction());
            emit(r, vocab::owl_on_property(), e.head());
            emit(r, facet_predicate(e.facet()), IntLiteral{e.bound()});
            return r;
        }
        case ClassExpression::Kind::Intersection:
            return intersection_node(e.conjuncts());
        }
        return e.head();
    }

    Term intersection_node(const std::vector<ClassExpression>& conjuncts) {
        BlankNode a = fresh();
        emit(a, vocab::owl_intersection_of(), list_of(conjuncts));
        return a;
    }

    /// rdf:first/rdf:rest chain; one cell per element.
    Term list_of(const std::vector<ClassExpression>& elems) {
        Term head = vocab::rdf_nil();
        std::vector<BlankNode> cells;
        cells.reserve(elems.size());
        for (size_t i = 0; i < elems.size(); ++i)
            cells.push_back(fresh());
        for (size_t i = 0; i < elems.size(); ++i) {
            emit(cells[i], vocab::rdf_first(), node_for(elems[i]));
            emit(cells[i], vocab::rdf_rest(),
                 i + 1 < elems.size() ? Term(cells[i + 1]) : Term(vocab::rdf_nil()));
        }
        return elems.empty() ? head : Term(cells.front());
    }

    void lower(const Axiom& ax) {
        if (const auto* d = std::get_if<DeclarationAxiom>(&ax)) {
            switch (d->kind) {
            case DeclKind::Class:
                emit(d->iri, vocab::rdf_type(), vocab::owl_class());
                break;
            case DeclKind::ObjectProperty:
                emit(d->iri, vocab::rdf_type(), vocab::owl_object_property());
                break;
            case DeclKind::DataProperty:
                emit(d->iri, vocab::rdf_type(), vocab::owl_datatype_property());
                break;
            case DeclKind::Individual:
                emit(d->iri, vocab::rdf_type(), vocab::owl_named_individual());
                break;
            }
        } else if (const auto* s = std::get_if<SubClassOfAxiom>(&ax)) {
            emit(s->sub, vocab::rdfs_sub_class_of(), node_for(s->sup));
        } else if (const auto* p = std::get_if<SubPropertyOfAxiom>(&ax)) {
            emit(p->sub, vocab::rdfs_sub_property_of(), p->sup);
        } else {
            // The definition is always lowered through an intersection list,
            // a single conjunct as a one-cell list, so list-walking queries
            // see every definition uniformly.
            const auto& e = std::get<EquivalentClassesAxiom>(ax);
            emit(e.named, vocab::owl_equivalent_class(),
                 intersection_node(e.definition.conjunct_list()));
        }
    }

    void lower(const Assertion& as) {
        if (const auto* c = std::get_if<ClassAssertion>(&as)) {
            emit(c->individual, vocab::rdf_type(), c->cls);
        } else if (const auto* o = std::get_if<ObjectPropertyAssertion>(&as)) {
            emit(o->subject, o->property, o->object);
        } else {
            const auto& d = std::get<DataPropertyAssertion>(as);
            emit(d.subject, d.property, IntLiteral{d.value});
        }
    }

    const KnowledgeBase& kb_;
    std::vector<Triple> triples_;
    int counter_ = 0;
};

} // namespace

std::vector<Triple> KnowledgeBase::rdf_view() const { return Lowering(*this).run(); }

} // namespace nischeck
