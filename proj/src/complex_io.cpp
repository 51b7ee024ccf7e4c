#include "conerank/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conerank/error.hpp"

namespace conerank {

using nlohmann::json;
using nlohmann::ordered_json;

SimplicialComplex parse_complex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("complex file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("facets"))
        throw InvalidInput("complex file needs 'vertices' and 'facets' fields");
    try {
        auto names = doc.at("vertices").get<std::vector<std::string>>();
        auto facets = doc.at("facets").get<std::vector<std::vector<std::string>>>();
        return SimplicialComplex::from_named_facets(facets, std::move(names));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed complex file: ") + e.what());
    }
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open complex file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string format_complex(const SimplicialComplex& complex) {
    ordered_json doc;
    doc["vertices"] = complex.names();
    ordered_json facets = ordered_json::array();
    for (auto f : complex.facets())
        if (!f.empty()) facets.push_back(complex.face_names(f));
    doc["facets"] = facets;
    return doc.dump() + "\n";
}

}  // namespace conerank
