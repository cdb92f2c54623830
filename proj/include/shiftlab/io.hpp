/**
 * File formats: the facet-list text format (one facet per line, optional
 * "n=<int>" line pinning the ground set) and the JSON form
 * {"n": int, "facets": [[int]]}.
 */

#ifndef SHIFTLAB_IO_HPP
#define SHIFTLAB_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "complex.hpp"

namespace shiftlab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Facet-list text: whitespace-separated 1-based ids, blank lines ignored,
/// an optional "n=<int>" line pins the ground set.
inline SimplicialComplex parse_facet_list(std::istream& in)
{
    int pinned_n = -1;
    std::vector<Face> facets;
    int max_label = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
                trimmed += c;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty())
            continue;
        if (trimmed.rfind("n=", 0) == 0) {
            try {
                pinned_n = std::stoi(trimmed.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad ground-set line: " + line);
            }
            continue;
        }
        std::istringstream ls(trimmed);
        Face f;
        long long v;
        while (ls >> v) {
            if (v < 1)
                throw ParseError("vertex ids must be positive: " + line);
            f.push_back(static_cast<Vertex>(v));
            max_label = std::max(max_label, static_cast<int>(v));
        }
        if (!ls.eof())
            throw ParseError("unparsable facet line: " + line);
        facets.push_back(std::move(f));
    }
    int n = pinned_n >= 0 ? pinned_n : max_label;
    try {
        return SimplicialComplex::from_facets(n, std::move(facets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline SimplicialComplex parse_facet_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_facet_list(in);
}

inline std::string to_facet_list(const SimplicialComplex& K)
{
    std::ostringstream out;
    out << "n=" << K.ground_size() << "\n";
    for (const auto& f : K.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

inline nlohmann::json complex_to_json(const SimplicialComplex& K)
{
    nlohmann::json j;
    j["n"] = K.ground_size();
    j["facets"] = nlohmann::json::array();
    for (const auto& f : K.facets())
        j["facets"].push_back(f);
    return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.contains("n") || !j.contains("facets"))
        throw ParseError("complex JSON needs fields n and facets");
    std::vector<Face> facets;
    for (const auto& jf : j.at("facets"))
        facets.push_back(jf.get<Face>());
    try {
        return SimplicialComplex::from_facets(j.at("n").get<int>(), std::move(facets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// Sniff JSON vs facet-list by the first non-space character.
inline SimplicialComplex parse_complex(const std::string& text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return complex_from_json(nlohmann::json::parse(text));
        break;
    }
    return parse_facet_list(text);
}

} // namespace shiftlab

#endif
