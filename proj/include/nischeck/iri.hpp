#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace nischeck {

/// A resolved IRI. Keeps the prefixed spelling (`nis` + `MemberState`) for
/// serialization, but identity is the expanded form only: two Iris compare
/// equal exactly when their expansions are byte-equal.
class Iri {
public:
    Iri() = default;
    Iri(std::string prefix, std::string local, std::string_view prefix_expansion);

    /// An IRI with no known prefixed spelling (serialized as <...>).
    static Iri opaque(std::string expanded);

    const std::string& prefix() const { return prefix_; }
    const std::string& local() const { return local_; }
    const std::string& expanded() const { return expanded_; }
    bool has_curie() const { return !prefix_.empty() || !local_.empty(); }

    /// "nis:MemberState" when a prefixed spelling is known, "<...>" otherwise.
    std::string to_string() const;

    bool operator==(const Iri& other) const { return expanded_ == other.expanded_; }
    std::strong_ordering operator<=>(const Iri& other) const {
        return expanded_ <=> other.expanded_;
    }

private:
    std::string prefix_;
    std::string local_;
    std::string expanded_;
};

/// Namespace prefix table. Later bindings for the same label win, as in Turtle.
class PrefixMap {
public:
    /// rdf, rdfs, owl, xsd.
    static PrefixMap builtins();
    /// builtins plus `nis` -> urn:nis#.
    static PrefixMap with_defaults();

    void bind(const std::string& label, const std::string& expansion);
    std::optional<std::string> expansion_of(const std::string& label) const;
    bool has(const std::string& label) const;

    /// Build an Iri from a prefixed name; throws UnknownPrefixError.
    Iri make(const std::string& label, const std::string& local) const;

    /// Build an Iri from a full IRI, recovering a prefixed spelling when some
    /// bound namespace is a prefix of it (longest expansion wins).
    Iri from_expanded(const std::string& full) const;

    /// Parse "prefix:local" or "<full-iri>"; throws UnknownPrefixError.
    Iri resolve(const std::string& text) const;

    const std::map<std::string, std::string>& entries() const { return map_; }

    /// Union with another map; conflicting expansions for one label throw.
    void merge(const PrefixMap& other);

private:
    std::map<std::string, std::string> map_;
};

} // namespace nischeck

template <>
struct std::hash<nischeck::Iri> {
    size_t operator()(const nischeck::Iri& iri) const noexcept {
        return std::hash<std::string>{}(iri.expanded());
    }
};
