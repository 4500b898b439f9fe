#pragma once

#include <compare>
#include <cstdint>
#include <variant>

#include "nischeck/expression.hpp"
#include "nischeck/iri.hpp"

namespace nischeck {

enum class DeclKind : std::uint8_t { Class, ObjectProperty, DataProperty, Individual };

struct DeclarationAxiom {
    DeclKind kind;
    Iri iri;
    auto operator<=>(const DeclarationAxiom&) const = default;
};

struct SubClassOfAxiom {
    Iri sub;
    ClassExpression sup;
    auto operator<=>(const SubClassOfAxiom&) const = default;
};

struct SubPropertyOfAxiom {
    Iri sub;
    Iri sup;
    auto operator<=>(const SubPropertyOfAxiom&) const = default;
};

struct EquivalentClassesAxiom {
    Iri named;
    ClassExpression definition;
    auto operator<=>(const EquivalentClassesAxiom&) const = default;
};

using Axiom =
    std::variant<DeclarationAxiom, SubClassOfAxiom, SubPropertyOfAxiom, EquivalentClassesAxiom>;

struct ClassAssertion {
    Iri cls;
    Iri individual;
    auto operator<=>(const ClassAssertion&) const = default;
};

struct ObjectPropertyAssertion {
    Iri property;
    Iri subject;
    Iri object;
    auto operator<=>(const ObjectPropertyAssertion&) const = default;
};

struct DataPropertyAssertion {
    Iri property;
    Iri subject;
    long long value;
    auto operator<=>(const DataPropertyAssertion&) const = default;
};

using Assertion = std::variant<ClassAssertion, ObjectPropertyAssertion, DataPropertyAssertion>;

std::string to_string(const Axiom& ax);
std::string to_string(const Assertion& as);

} // namespace nischeck
