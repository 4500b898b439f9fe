#include "nischeck/axiom.hpp"

namespace nischeck {

namespace {

const char* decl_kind_name(DeclKind k) {
    switch (k) {
    case DeclKind::Class:
        return "Class";
    case DeclKind::ObjectProperty:
        return "ObjectProperty";
    case DeclKind::DataProperty:
        return "DataProperty";
    case DeclKind::Individual:
        return "Individual";
    }
    return "?";
}

} // namespace

std::string to_string(const Axiom& ax) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, DeclarationAxiom>)
                return std::string("Declaration(") + decl_kind_name(a.kind) + ", " +
                       a.iri.to_string() + ")";
            else if constexpr (std::is_same_v<T, SubClassOfAxiom>)
                return "SubClassOf(" + a.sub.to_string() + ", " + a.sup.to_string() + ")";
            else if constexpr (std::is_same_v<T, SubPropertyOfAxiom>)
                return "SubPropertyOf(" + a.sub.to_string() + ", " + a.sup.to_string() + ")";
            else
                return "EquivalentClasses(" + a.named.to_string() + ", " +
                       a.definition.to_string() + ")";
        },
        ax);
}

std::string to_string(const Assertion& as) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ClassAssertion>)
                return "ClassAssertion(" + a.cls.to_string() + ", " + a.individual.to_string() +
                       ")";
            else if constexpr (std::is_same_v<T, ObjectPropertyAssertion>)
                return "ObjectPropertyAssertion(" + a.property.to_string() + ", " +
                       a.subject.to_string() + ", " + a.object.to_string() + ")";
            else
                return "DataPropertyAssertion(" + a.property.to_string() + ", " +
                       a.subject.to_string() + ", " + std::to_string(a.value) + ")";
        },
        as);
}

} // namespace nischeck
