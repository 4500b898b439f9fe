#include "nischeck/rdf.hpp"

namespace nischeck {

std::string to_string(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t))
        return iri->to_string();
    if (const auto* b = std::get_if<BlankNode>(&t))
        return "_:" + b->label;
    return std::to_string(std::get<IntLiteral>(t).value);
}

namespace vocab {

const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const std::string kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
const std::string kOwlNs = "http://www.w3.org/2002/07/owl#";
const std::string kXsdNs = "http://www.w3.org/2001/XMLSchema#";
const std::string kNisNs = "urn:nis#";

namespace {
Iri make(const char* prefix, const char* local, const std::string& ns) {
    return Iri(prefix, local, ns);
}
} // namespace

#define NISCHECK_VOCAB(fn, prefix, local, ns)                                                      \
    const Iri& fn() {                                                                              \
        static const Iri iri = make(prefix, local, ns);                                            \
        return iri;                                                                                \
    }

NISCHECK_VOCAB(rdf_type, "rdf", "type", kRdfNs)
NISCHECK_VOCAB(rdf_first, "rdf", "first", kRdfNs)
NISCHECK_VOCAB(rdf_rest, "rdf", "rest", kRdfNs)
NISCHECK_VOCAB(rdf_nil, "rdf", "nil", kRdfNs)
NISCHECK_VOCAB(rdfs_sub_class_of, "rdfs", "subClassOf", kRdfsNs)
NISCHECK_VOCAB(rdfs_sub_property_of, "rdfs", "subPropertyOf", kRdfsNs)
NISCHECK_VOCAB(owl_class, "owl", "Class", kOwlNs)
NISCHECK_VOCAB(owl_object_property, "owl", "ObjectProperty", kOwlNs)
NISCHECK_VOCAB(owl_datatype_property, "owl", "DatatypeProperty", kOwlNs)
NISCHECK_VOCAB(owl_named_individual, "owl", "NamedIndividual", kOwlNs)
NISCHECK_VOCAB(owl_equivalent_class, "owl", "equivalentClass", kOwlNs)
NISCHECK_VOCAB(owl_intersection_of, "owl", "intersectionOf", kOwlNs)
NISCHECK_VOCAB(owl_restriction, "owl", "Restriction", kOwlNs)
NISCHECK_VOCAB(owl_on_property, "owl", "onProperty", kOwlNs)
NISCHECK_VOCAB(owl_some_values_from, "owl", "someValuesFrom", kOwlNs)
NISCHECK_VOCAB(owl_has_value, "owl", "hasValue", kOwlNs)
NISCHECK_VOCAB(xsd_int, "xsd", "int", kXsdNs)
NISCHECK_VOCAB(xsd_integer, "xsd", "integer", kXsdNs)
NISCHECK_VOCAB(xsd_max_inclusive, "xsd", "maxInclusive", kXsdNs)
NISCHECK_VOCAB(xsd_min_inclusive, "xsd", "minInclusive", kXsdNs)

#undef NISCHECK_VOCAB

bool is_reserved(const Iri& iri) {
    const std::string& x = iri.expanded();
    return x.starts_with(kRdfNs) || x.starts_with(kRdfsNs) || x.starts_with(kOwlNs) ||
           x.starts_with(kXsdNs);
}

} // namespace vocab

} // namespace nischeck
