#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nischeck/iri.hpp"

namespace nischeck {

struct BlankNode {
    std::string label;
    auto operator<=>(const BlankNode&) const = default;
};

struct IntLiteral {
    long long value;
    auto operator<=>(const IntLiteral&) const = default;
};

using Term = std::variant<Iri, BlankNode, IntLiteral>;

std::string to_string(const Term& t);

struct Triple {
    Term subject;
    Iri predicate;
    Term object;
    auto operator<=>(const Triple&) const = default;
};

/// Fixed RDF/RDFS/OWL/XSD vocabulary used by the triple lowering and the
/// Turtle lifter.
namespace vocab {

extern const std::string kRdfNs;
extern const std::string kRdfsNs;
extern const std::string kOwlNs;
extern const std::string kXsdNs;
extern const std::string kNisNs;

const Iri& rdf_type();
const Iri& rdf_first();
const Iri& rdf_rest();
const Iri& rdf_nil();
const Iri& rdfs_sub_class_of();
const Iri& rdfs_sub_property_of();
const Iri& owl_class();
const Iri& owl_object_property();
const Iri& owl_datatype_property();
const Iri& owl_named_individual();
const Iri& owl_equivalent_class();
const Iri& owl_intersection_of();
const Iri& owl_restriction();
const Iri& owl_on_property();
const Iri& owl_some_values_from();
const Iri& owl_has_value();
const Iri& xsd_int();
const Iri& xsd_integer();
const Iri& xsd_max_inclusive();
const Iri& xsd_min_inclusive();

/// True for IRIs in the rdf/rdfs/owl/xsd namespaces.
bool is_reserved(const Iri& iri);

} // namespace vocab

} // namespace nischeck
