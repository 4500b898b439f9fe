#include "nischeck/expression.hpp"

#include <algorithm>
#include <utility>

#include "nischeck/errors.hpp"

namespace nischeck {

std::string facet_keyword(Facet f) {
    switch (f) {
    case Facet::MaxInclusive:
        return "max";
    case Facet::MinInclusive:
        return "min";
    case Facet::Exact:
        return "exact";
    }
    return "?";
}

ClassExpression ClassExpression::named(Iri cls) {
    ClassExpression e;
    e.kind_ = Kind::Named;
    e.head_ = std::move(cls);
    return e;
}

ClassExpression ClassExpression::intersection(std::vector<ClassExpression> conjuncts) {
    if (conjuncts.empty())
        throw Error("intersection requires at least one conjunct");
    ClassExpression e;
    e.kind_ = Kind::Intersection;
    e.children_ = std::move(conjuncts);
    return e;
}

ClassExpression ClassExpression::object_some(Iri property, ClassExpression filler) {
    ClassExpression e;
    e.kind_ = Kind::ObjectSome;
    e.head_ = std::move(property);
    e.children_.push_back(std::move(filler));
    return e;
}

ClassExpression ClassExpression::data_facet(Iri property, Facet facet, long long bound) {
    ClassExpression e;
    e.kind_ = Kind::DataFacet;
    e.head_ = std::move(property);
    e.facet_ = facet;
    e.bound_ = bound;
    return e;
}

const std::vector<ClassExpression>& ClassExpression::conjuncts() const {
    if (kind_ != Kind::Intersection)
        throw Error("conjuncts() on a non-intersection expression");
    return children_;
}

const ClassExpression& ClassExpression::filler() const {
    if (kind_ != Kind::ObjectSome)
        throw Error("filler() on a non-restriction expression");
    return children_.front();
}

namespace {

void flatten_into(const ClassExpression& e, std::vector<ClassExpression>& out) {
    if (e.kind() == ClassExpression::Kind::Intersection) {
        for (const auto& c : e.conjuncts())
            flatten_into(c, out);
    } else {
        out.push_back(e);
    }
}

} // namespace

ClassExpression ClassExpression::normalized() const {
    switch (kind_) {
    case Kind::Named:
    case Kind::DataFacet:
        return *this;
    case Kind::ObjectSome:
        return object_some(head_, children_.front().normalized());
    case Kind::Intersection: {
        std::vector<ClassExpression> flat;
        for (const auto& c : children_)
            flatten_into(c.normalized(), flat);
        // Conjuncts ordered by head IRI, full structural compare as tie-break.
        std::sort(flat.begin(), flat.end(), [](const ClassExpression& a, const ClassExpression& b) {
            if (auto c = a.head() <=> b.head(); c != 0)
                return c < 0;
            return a < b;
        });
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        if (flat.size() == 1)
            return flat.front();
        return intersection(std::move(flat));
    }
    }
    return *this;
}

std::vector<ClassExpression> ClassExpression::conjunct_list() const {
    if (kind_ == Kind::Intersection)
        return children_;
    return {*this};
}

bool ClassExpression::operator==(const ClassExpression& other) const {
    return (*this <=> other) == 0;
}

std::strong_ordering ClassExpression::operator<=>(const ClassExpression& other) const {
    if (auto c = kind_ <=> other.kind_; c != 0)
        return c;
    if (auto c = head_ <=> other.head_; c != 0)
        return c;
    if (kind_ == Kind::DataFacet) {
        if (auto c = facet_ <=> other.facet_; c != 0)
            return c;
        return bound_ <=> other.bound_;
    }
    const size_t n = std::min(children_.size(), other.children_.size());
    for (size_t i = 0; i < n; ++i)
        if (auto c = children_[i] <=> other.children_[i]; c != 0)
            return c;
    return children_.size() <=> other.children_.size();
}

std::string ClassExpression::to_string() const {
    switch (kind_) {
    case Kind::Named:
        return head_.to_string();
    case Kind::ObjectSome:
        return head_.to_string() + " some " + children_.front().to_string();
    case Kind::DataFacet:
        return head_.to_string() + " " + facet_keyword(facet_) + " " + std::to_string(bound_);
    case Kind::Intersection: {
        std::string out = "(";
        for (size_t i = 0; i < children_.size(); ++i) {
            if (i)
                out += " and ";
            out += children_[i].to_string();
        }
        return out + ")";
    }
    }
    return "?";
}

} // namespace nischeck
