#include "twoclose/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twoclose/error.hpp"

namespace twoclose {

using nlohmann::json;

std::string group_to_json(const perm_group& g) {
    json doc;
    doc["degree"] = g.degree();
    json gens = json::array();
    for (const auto& gen : g.generators()) {
        gens.push_back(gen.images());
    }
    doc["generators"] = std::move(gens);
    if (g.name()) doc["name"] = *g.name();
    return doc.dump(2) + "\n";
}

perm_group group_from_json(const std::string& json_text, std::size_t element_cap) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw spec_error(std::string("group JSON: parse failure: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators")) {
        throw spec_error("group JSON: expected object with \"degree\" and \"generators\"");
    }
    if (!doc["degree"].is_number_integer()) {
        throw spec_error("group JSON: \"degree\" must be an integer");
    }
    int degree = doc["degree"].get<int>();
    if (degree < 1) throw spec_error("group JSON: degree must be positive");
    if (!doc["generators"].is_array() || doc["generators"].empty()) {
        throw spec_error("group JSON: \"generators\" must be a nonempty array");
    }
    std::vector<permutation> gens;
    for (const auto& entry : doc["generators"]) {
        if (!entry.is_array()) throw spec_error("group JSON: generator must be an image list");
        std::vector<std::int32_t> images;
        images.reserve(entry.size());
        for (const auto& v : entry) {
            if (!v.is_number_integer()) throw spec_error("group JSON: image must be an integer");
            images.push_back(v.get<std::int32_t>());
        }
        if (static_cast<int>(images.size()) != degree) {
            throw spec_error("group JSON: generator length differs from degree");
        }
        gens.emplace_back(std::move(images));
    }
    perm_group g(degree, std::move(gens), element_cap);
    if (doc.contains("name") && doc["name"].is_string()) {
        return g.with_name(doc["name"].get<std::string>());
    }
    return g;
}

void write_group_file(const perm_group& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw spec_error("cannot open for writing: " + path);
    out << group_to_json(g);
}

perm_group read_group_file(const std::string& path, std::size_t element_cap) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return group_from_json(buffer.str(), element_cap);
}

std::string coloring_to_json(const orbital_coloring& coloring) {
    json doc;
    doc["degree"] = coloring.degree;
    json rows = json::array();
    for (int a = 0; a < coloring.degree; ++a) {
        json row = json::array();
        for (int b = 0; b < coloring.degree; ++b) {
            row.push_back(coloring.at(a, b));
        }
        rows.push_back(std::move(row));
    }
    doc["colors"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace twoclose
