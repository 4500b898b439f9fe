#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "nischeck/report.hpp"

namespace nischeck {

std::vector<Iri> compliant_classes(const KnowledgeBase& kb, const TypeMap& types,
                                   const Iri& individual) {
    std::vector<Iri> out;
    for (const Iri& cls : types.types_of(individual))
        if (kb.definition_of(cls))
            out.push_back(cls);
    return out;
}

namespace {

std::string format_table(const std::vector<GapRow>& rows) {
    static const std::string headers[3] = {"article", "task", "object"};
    size_t width[3] = {headers[0].size(), headers[1].size(), headers[2].size()};
    std::vector<std::array<std::string, 3>> cells;
    for (const GapRow& r : rows) {
        cells.push_back({r.article.to_string(), r.task.to_string(), r.object});
        for (int i = 0; i < 3; ++i)
            width[i] = std::max(width[i], cells.back()[static_cast<size_t>(i)].size());
    }
    auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
        std::ostringstream os;
        os << "  " << a << std::string(width[0] - a.size(), ' ') << " | " << b
           << std::string(width[1] - b.size(), ' ') << " | " << c << "\n";
        return os.str();
    };
    std::string out = line(headers[0], headers[1], headers[2]);
    for (const auto& row : cells)
        out += line(row[0], row[1], row[2]);
    return out;
}

} // namespace

std::string render_table(const GapReport& report) {
    if (report.rows.empty())
        return "no missing measures\n";
    return format_table(report.rows);
}

std::string render_text(const GapReport& report, const std::vector<Iri>& compliant) {
    std::ostringstream os;
    os << "individual: " << report.individual.to_string() << "\n";
    os << "target: " << report.target.to_string() << "\n";
    os << "compliant with:";
    if (compliant.empty())
        os << " none\n";
    else {
        os << "\n";
        for (const Iri& cls : compliant)
            os << "  " << cls.to_string() << "\n";
    }
    os << "satisfied measures: " << report.satisfied.size() << "\n";
    if (report.rows.empty()) {
        os << "missing measures: none\n";
    } else {
        os << "missing measures (" << report.rows.size() << "):\n";
        os << format_table(report.rows);
    }
    return os.str();
}

std::string render_json(const GapReport& report, const std::vector<Iri>& compliant) {
    nlohmann::ordered_json doc;
    doc["individual"] = report.individual.to_string();
    doc["target"] = report.target.to_string();
    doc["compliant"] = nlohmann::ordered_json::array();
    for (const Iri& cls : compliant)
        doc["compliant"].push_back(cls.to_string());
    auto rows_json = [](const std::vector<GapRow>& rows) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const GapRow& r : rows)
            arr.push_back({{"article", r.article.to_string()},
                           {"task", r.task.to_string()},
                           {"object", r.object}});
        return arr;
    };
    doc["gaps"] = rows_json(report.rows);
    doc["satisfied"] = rows_json(report.satisfied);
    return doc.dump(2) + "\n";
}

} // namespace nischeck
