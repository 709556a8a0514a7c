#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hdx/complex.hpp"

namespace hdx {

/// On-disk complex document (JSON, UTF-8):
///
///   {
///     "vertices":  [0, 1, 2, 3],             optional; lists isolated vertices too
///     "edges":     [[0, 1], ...],            optional extra edges
///     "triangles": [[0, 1, 2], ...],
///     "labels":    {"0": "a", "1": "b", ...} optional id -> label map
///   }
///
/// Vertex references are resolved in one of three ways:
///   * a "labels" map is present: references are integer ids, the map names them;
///   * every reference is a non-negative integer: used as the id directly;
///   * otherwise every reference is a label (integers are read as their decimal
///     text) and labels receive dense ids in order of first appearance, scanning
///     vertices, then edges, then triangles. The mapping is kept in the complex.
///
/// Faces are resolved but not yet closed or de-duplicated.
struct ComplexDocument {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::vector<std::string> labels;
};

ComplexDocument parse_document(const nlohmann::json& doc);

// Builds the complex described by a document (closure rule enforced).
Complex2 build_complex(const ComplexDocument& doc);

nlohmann::json to_json(const Complex2& complex);
Complex2 complex_from_json(const nlohmann::json& doc);

std::string serialize(const Complex2& complex);
Complex2 parse_complex(std::string_view text);

// Throws ParseError when the file is missing or malformed.
nlohmann::json read_json_file(const std::filesystem::path& path);
Complex2 read_complex(const std::filesystem::path& path);
void write_complex(const Complex2& complex, const std::filesystem::path& path);

}  // namespace hdx
