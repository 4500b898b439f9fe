#include "nischeck/knowledge_base.hpp"

#include <algorithm>

#include "nischeck/errors.hpp"

namespace nischeck {

KnowledgeBase::KnowledgeBase() : prefixes_(PrefixMap::with_defaults()) {}

KnowledgeBase::KnowledgeBase(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

void KnowledgeBase::bind_prefix(const std::string& label, const std::string& expansion) {
    require_mutable();
    prefixes_.bind(label, expansion);
}

void KnowledgeBase::require_mutable() const {
    if (frozen_)
        throw Error("knowledge base is frozen");
}

void KnowledgeBase::declare(DeclKind kind, const Iri& iri) {
    if (decls_.emplace(static_cast<int>(kind), iri).second)
        tbox_.insert(DeclarationAxiom{kind, iri});
}

void KnowledgeBase::declare_expression_iris(const ClassExpression& expr) {
    switch (expr.kind()) {
    case ClassExpression::Kind::Named:
        declare(DeclKind::Class, expr.head());
        break;
    case ClassExpression::Kind::Intersection:
        for (const auto& c : expr.conjuncts())
            declare_expression_iris(c);
        break;
    case ClassExpression::Kind::ObjectSome:
        declare(DeclKind::ObjectProperty, expr.head());
        declare_expression_iris(expr.filler());
        break;
    case ClassExpression::Kind::DataFacet:
        declare(DeclKind::DataProperty, expr.head());
        break;
    }
}

void KnowledgeBase::check_property_acyclic(const Iri& sub, const Iri& sup) const {
    // Adding sub -> sup closes a cycle iff sup already reaches sub.
    std::vector<Iri> stack{sup};
    std::set<Iri> seen{sup};
    while (!stack.empty()) {
        Iri cur = stack.back();
        stack.pop_back();
        if (cur == sub)
            throw CyclicPropertyHierarchyError("SubPropertyOf(" + sub.to_string() + ", " +
                                               sup.to_string() +
                                               ") would close a property-hierarchy cycle");
        auto it = prop_sups_.find(cur);
        if (it == prop_sups_.end())
            continue;
        for (const Iri& next : it->second)
            if (seen.insert(next).second)
                stack.push_back(next);
    }
}

void KnowledgeBase::add(const Axiom& axiom) {
    require_mutable();
    if (const auto* d = std::get_if<DeclarationAxiom>(&axiom)) {
        if (d->iri.local().empty() && d->iri.expanded().empty())
            throw Error("declaration of an empty IRI");
        declare(d->kind, d->iri);
        return;
    }
    if (const auto* s = std::get_if<SubClassOfAxiom>(&axiom)) {
        SubClassOfAxiom norm{s->sub, s->sup.normalized()};
        if (!tbox_.insert(norm).second)
            return;
        declare(DeclKind::Class, norm.sub);
        declare_expression_iris(norm.sup);
        return;
    }
    if (const auto* p = std::get_if<SubPropertyOfAxiom>(&axiom)) {
        if (p->sub == p->sup)
            return; // reflexive edges carry no information
        if (tbox_.count(axiom))
            return;
        check_property_acyclic(p->sub, p->sup);
        tbox_.insert(axiom);
        prop_sups_[p->sub].insert(p->sup);
        declare(DeclKind::ObjectProperty, p->sub);
        declare(DeclKind::ObjectProperty, p->sup);
        return;
    }
    const auto& e = std::get<EquivalentClassesAxiom>(axiom);
    EquivalentClassesAxiom norm{e.named, e.definition.normalized()};
    auto it = definitions_.find(norm.named);
    if (it != definitions_.end()) {
        if (it->second == norm.definition)
            return;
        throw DuplicateDefinitionError("class " + norm.named.to_string() +
                                       " already has an EquivalentClasses definition");
    }
    definitions_.emplace(norm.named, norm.definition);
    tbox_.insert(norm);
    declare(DeclKind::Class, norm.named);
    declare_expression_iris(norm.definition);
}

void KnowledgeBase::add(const Assertion& assertion) {
    require_mutable();
    if (!abox_.insert(assertion).second)
        return;
    if (const auto* c = std::get_if<ClassAssertion>(&assertion)) {
        declare(DeclKind::Class, c->cls);
        declare(DeclKind::Individual, c->individual);
        by_subject_[c->individual].insert(assertion);
    } else if (const auto* o = std::get_if<ObjectPropertyAssertion>(&assertion)) {
        declare(DeclKind::ObjectProperty, o->property);
        declare(DeclKind::Individual, o->subject);
        declare(DeclKind::Individual, o->object);
        by_subject_[o->subject].insert(assertion);
        by_property_[o->property].insert(assertion);
    } else {
        const auto& d = std::get<DataPropertyAssertion>(assertion);
        declare(DeclKind::DataProperty, d.property);
        declare(DeclKind::Individual, d.subject);
        by_subject_[d.subject].insert(assertion);
        by_property_[d.property].insert(assertion);
    }
}

void KnowledgeBase::merge(const KnowledgeBase& other) {
    require_mutable();
    prefixes_.merge(other.prefixes_);
    for (const auto& ax : other.tbox_)
        add(ax);
    for (const auto& as : other.abox_)
        add(as);
}

bool KnowledgeBase::is_declared(const Iri& iri, DeclKind kind) const {
    return decls_.count({static_cast<int>(kind), iri}) != 0;
}

std::vector<Iri> KnowledgeBase::declared(DeclKind kind) const {
    std::vector<Iri> out;
    for (const auto& [k, iri] : decls_)
        if (k == static_cast<int>(kind))
            out.push_back(iri);
    return out; // decls_ is sorted by (kind, iri)
}

std::optional<ClassExpression> KnowledgeBase::definition_of(const Iri& cls) const {
    auto it = definitions_.find(cls);
    if (it == definitions_.end())
        return std::nullopt;
    return it->second;
}

std::vector<ClassExpression> KnowledgeBase::told_superclasses(const Iri& cls) const {
    std::vector<ClassExpression> out;
    for (const auto& ax : tbox_)
        if (const auto* s = std::get_if<SubClassOfAxiom>(&ax))
            if (s->sub == cls)
                out.push_back(s->sup);
    return out;
}

std::vector<std::pair<Iri, Iri>> KnowledgeBase::sub_property_edges() const {
    std::vector<std::pair<Iri, Iri>> out;
    for (const auto& [sub, sups] : prop_sups_)
        for (const auto& sup : sups)
            out.emplace_back(sub, sup);
    return out;
}

const std::set<Assertion>& KnowledgeBase::assertions_by_subject(const Iri& subject) const {
    static const std::set<Assertion> empty;
    auto it = by_subject_.find(subject);
    return it == by_subject_.end() ? empty : it->second;
}

const std::set<Assertion>& KnowledgeBase::assertions_by_property(const Iri& property) const {
    static const std::set<Assertion> empty;
    auto it = by_property_.find(property);
    return it == by_property_.end() ? empty : it->second;
}

std::vector<Iri> KnowledgeBase::object_successors(const Iri& subject, const Iri& property) const {
    std::vector<Iri> out;
    for (const auto& as : assertions_by_subject(subject))
        if (const auto* o = std::get_if<ObjectPropertyAssertion>(&as))
            if (o->property == property)
                out.push_back(o->object);
    return out;
}

std::vector<long long> KnowledgeBase::data_values(const Iri& subject, const Iri& property) const {
    std::vector<long long> out;
    for (const auto& as : assertions_by_subject(subject))
        if (const auto* d = std::get_if<DataPropertyAssertion>(&as))
            if (d->property == property)
                out.push_back(d->value);
    return out;
}

} // namespace nischeck
