#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nischeck/iri.hpp"

namespace nischeck {

enum class Facet : std::uint8_t { MaxInclusive, MinInclusive, Exact };

std::string facet_keyword(Facet f); // "max" / "min" / "exact"

/// A class expression of the supported fragment: a named class, an
/// intersection, an existential object restriction, or an integer data facet.
class ClassExpression {
public:
    enum class Kind : std::uint8_t { Named, Intersection, ObjectSome, DataFacet };

    static ClassExpression named(Iri cls);
    static ClassExpression intersection(std::vector<ClassExpression> conjuncts);
    static ClassExpression object_some(Iri property, ClassExpression filler);
    static ClassExpression data_facet(Iri property, Facet facet, long long bound);

    Kind kind() const { return kind_; }
    bool is(Kind k) const { return kind_ == k; }

    /// Named: the class. ObjectSome/DataFacet: the property.
    const Iri& head() const { return head_; }
    const std::vector<ClassExpression>& conjuncts() const; // Intersection only
    const ClassExpression& filler() const;                 // ObjectSome only
    Facet facet() const { return facet_; }                 // DataFacet only
    long long bound() const { return bound_; }             // DataFacet only

    /// Flattens nested intersections, drops duplicate conjuncts, sorts
    /// conjuncts by head IRI, and collapses singleton intersections.
    /// Idempotent.
    ClassExpression normalized() const;

    /// Conjunct list view: the conjuncts for an intersection, else {*this}.
    std::vector<ClassExpression> conjunct_list() const;

    bool operator==(const ClassExpression& other) const;
    std::strong_ordering operator<=>(const ClassExpression& other) const;

    /// Compact human-readable rendering ("adopt some NationalCybersecurityStrategy").
    std::string to_string() const;

private:
    ClassExpression() = default;

    Kind kind_ = Kind::Named;
    Iri head_;
    std::vector<ClassExpression> children_; // Intersection: conjuncts; ObjectSome: 1 filler
    Facet facet_ = Facet::MaxInclusive;
    long long bound_ = 0;
};

inline ClassExpression normalize(const ClassExpression& e) { return e.normalized(); }

} // namespace nischeck
