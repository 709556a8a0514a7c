#include "hdx/complex_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hdx/error.hpp"

namespace hdx {

using nlohmann::json;

namespace {

bool is_id(const json& v) {
    return v.is_number_integer() && v.get<long long>() >= 0 &&
           v.get<long long>() <= std::numeric_limits<int>::max();
}

std::string label_text(const json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    throw ParseError("vertex reference must be an integer or a string, got " + v.dump());
}

const json& list_field(const json& doc, const char* name) {
    static const json empty = json::array();
    if (!doc.contains(name)) {
        return empty;
    }
    const json& field = doc.at(name);
    if (!field.is_array()) {
        throw ParseError(std::string("field '") + name + "' must be a list");
    }
    return field;
}

template <std::size_t N>
void check_arity(const json& face, const char* what) {
    if (!face.is_array() || face.size() != N) {
        throw ParseError(std::string(what) + " must list exactly " + std::to_string(N) +
                         " vertices: " + face.dump());
    }
}

}  // namespace

ComplexDocument parse_document(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("complex document must be an object");
    }
    const json& vertices = list_field(doc, "vertices");
    const json& edges = list_field(doc, "edges");
    const json& triangles = list_field(doc, "triangles");
    for (const json& e : edges) check_arity<2>(e, "edge");
    for (const json& t : triangles) check_arity<3>(t, "triangle");

    std::vector<const json*> refs;
    for (const json& v : vertices) refs.push_back(&v);
    for (const json& e : edges) for (const json& v : e) refs.push_back(&v);
    for (const json& t : triangles) for (const json& v : t) refs.push_back(&v);

    ComplexDocument out;
    std::vector<int> ids;
    ids.reserve(refs.size());

    const bool all_ids = std::all_of(refs.begin(), refs.end(), [](const json* v) { return is_id(*v); });
    if (doc.contains("labels")) {
        const json& labels = doc.at("labels");
        if (!labels.is_object()) {
            throw ParseError("field 'labels' must map vertex ids to labels");
        }
        if (!all_ids) {
            throw ParseError("with a 'labels' map every vertex reference must be an integer id");
        }
        int n = 0;
        for (const json* v : refs) {
            ids.push_back(v->get<int>());
            n = std::max(n, ids.back() + 1);
        }
        std::map<int, std::string> named;
        for (const auto& [key, value] : labels.items()) {
            std::size_t used = 0;
            int id = -1;
            try {
                id = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || id < 0) {
                throw ParseError("label key '" + key + "' is not a vertex id");
            }
            named[id] = label_text(value);
            n = std::max(n, id + 1);
        }
        out.vertex_count = n;
        out.labels.resize(static_cast<std::size_t>(n));
        for (int id = 0; id < n; ++id) {
            auto it = named.find(id);
            out.labels[static_cast<std::size_t>(id)] = it != named.end() ? it->second : std::to_string(id);
        }
    } else if (all_ids) {
        int n = 0;
        for (const json* v : refs) {
            ids.push_back(v->get<int>());
            n = std::max(n, ids.back() + 1);
        }
        out.vertex_count = n;
    } else {
        std::map<std::string, int> dense;
        for (const json* v : refs) {
            const std::string label = label_text(*v);
            auto [it, inserted] = dense.emplace(label, static_cast<int>(out.labels.size()));
            if (inserted) {
                out.labels.push_back(label);
            }
            ids.push_back(it->second);
        }
        out.vertex_count = static_cast<int>(out.labels.size());
    }

    std::size_t cursor = vertices.size();
    for (std::size_t i = 0; i < edges.size(); ++i, cursor += 2) {
        out.edges.push_back({ids[cursor], ids[cursor + 1]});
    }
    for (std::size_t i = 0; i < triangles.size(); ++i, cursor += 3) {
        out.triangles.push_back({ids[cursor], ids[cursor + 1], ids[cursor + 2]});
    }
    return out;
}

Complex2 build_complex(const ComplexDocument& doc) {
    return build_from_triangles(doc.triangles, doc.edges, doc.vertex_count, doc.labels);
}

json to_json(const Complex2& complex) {
    json doc = json::object();
    json vertices = json::array();
    for (int v = 0; v < complex.vertex_count(); ++v) {
        vertices.push_back(v);
    }
    json edges = json::array();
    for (const Edge& e : complex.edges()) {
        edges.push_back({e[0], e[1]});
    }
    json triangles = json::array();
    for (const Triangle& t : complex.triangles()) {
        triangles.push_back({t[0], t[1], t[2]});
    }
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    doc["triangles"] = std::move(triangles);
    if (!complex.labels().empty()) {
        json labels = json::object();
        for (std::size_t v = 0; v < complex.labels().size(); ++v) {
            labels[std::to_string(v)] = complex.labels()[v];
        }
        doc["labels"] = std::move(labels);
    }
    return doc;
}

Complex2 complex_from_json(const json& doc) {
    return build_complex(parse_document(doc));
}

std::string serialize(const Complex2& complex) {
    return to_json(complex).dump() + "\n";
}

Complex2 parse_complex(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed complex document: ") + e.what());
    }
    return complex_from_json(doc);
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed document '" + path.string() + "': " + e.what());
    }
}

Complex2 read_complex(const std::filesystem::path& path) {
    return complex_from_json(read_json_file(path));
}

void write_complex(const Complex2& complex, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    out << serialize(complex);
}

}  // namespace hdx
