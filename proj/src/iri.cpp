#include "nischeck/iri.hpp"

#include <utility>

#include "nischeck/errors.hpp"
#include "nischeck/rdf.hpp"

namespace nischeck {

Iri::Iri(std::string prefix, std::string local, std::string_view prefix_expansion)
    : prefix_(std::move(prefix)), local_(std::move(local)) {
    expanded_.reserve(prefix_expansion.size() + local_.size());
    expanded_.append(prefix_expansion);
    expanded_.append(local_);
}

Iri Iri::opaque(std::string expanded) {
    Iri iri;
    iri.expanded_ = std::move(expanded);
    return iri;
}

std::string Iri::to_string() const {
    if (has_curie())
        return prefix_ + ":" + local_;
    return "<" + expanded_ + ">";
}

PrefixMap PrefixMap::builtins() {
    PrefixMap pm;
    pm.bind("rdf", vocab::kRdfNs);
    pm.bind("rdfs", vocab::kRdfsNs);
    pm.bind("owl", vocab::kOwlNs);
    pm.bind("xsd", vocab::kXsdNs);
    return pm;
}

PrefixMap PrefixMap::with_defaults() {
    PrefixMap pm = builtins();
    pm.bind("nis", vocab::kNisNs);
    return pm;
}

void PrefixMap::bind(const std::string& label, const std::string& expansion) {
    map_[label] = expansion;
}

std::optional<std::string> PrefixMap::expansion_of(const std::string& label) const {
    auto it = map_.find(label);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

bool PrefixMap::has(const std::string& label) const { return map_.count(label) != 0; }

Iri PrefixMap::make(const std::string& label, const std::string& local) const {
    auto exp = expansion_of(label);
    if (!exp)
        throw UnknownPrefixError("unknown prefix '" + label + ":'");
    return Iri(label, local, *exp);
}

Iri PrefixMap::from_expanded(const std::string& full) const {
    const std::string* best_label = nullptr;
    const std::string* best_exp = nullptr;
    for (const auto& [label, exp] : map_) {
        if (full.size() > exp.size() && full.compare(0, exp.size(), exp) == 0) {
            if (!best_exp || exp.size() > best_exp->size()) {
                best_label = &label;
                best_exp = &exp;
            }
        }
    }
    if (best_label)
        return Iri(*best_label, full.substr(best_exp->size()), *best_exp);
    return Iri::opaque(full);
}

Iri PrefixMap::resolve(const std::string& text) const {
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
        return from_expanded(text.substr(1, text.size() - 2));
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UnknownPrefixError("expected a prefixed name or <iri>, got '" + text + "'");
    return make(text.substr(0, colon), text.substr(colon + 1));
}

void PrefixMap::merge(const PrefixMap& other) {
    for (const auto& [label, exp] : other.map_) {
        auto it = map_.find(label);
        if (it == map_.end())
            map_.emplace(label, exp);
        else if (it->second != exp)
            throw Error("conflicting expansions for prefix '" + label + ":': <" + it->second +
                        "> vs <" + exp + ">");
    }
}

} // namespace nischeck
