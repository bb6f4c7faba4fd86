#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dnormal/constructions.hpp"
#include "dnormal/graph.hpp"

namespace dnormal {

struct IoError : GeometryError {
    using GeometryError::GeometryError;
};

/// {"dim": d, "points": [[...], ...]}, optionally extended with
/// {"parts": [label, ...]} for partitioned configurations.
nlohmann::json point_set_to_json(const PointSet& ps,
                                 const std::vector<std::size_t>* parts = nullptr);
PointSet point_set_from_json(const nlohmann::json& j, Tolerance tol = {},
                             bool allow_duplicates = false);
/// Reads the optional "parts" array; empty when absent.
std::vector<std::size_t> parts_from_json(const nlohmann::json& j);

/// CSV: one point per row, `dim` columns; dimension inferred from the first
/// row. Rejects ragged rows and non-finite values.
PointSet point_set_from_csv(std::istream& in, Tolerance tol = {},
                            bool allow_duplicates = false);

/// Dispatches on the .csv extension, JSON otherwise.
PointSet read_point_set(const std::string& path, Tolerance tol = {},
                        bool allow_duplicates = false);

/// Like read_point_set, also surfacing the optional part labels (always
/// empty for CSV inputs).
std::pair<PointSet, std::vector<std::size_t>> read_point_set_with_parts(
    const std::string& path, Tolerance tol = {});

nlohmann::json graph_to_json(const DnGraph& g);
nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json trace_to_json(const EmbeddingTrace& trace);

/// One verified configuration per line, append-only.
struct ResultRecord {
    std::size_t dim = 0;
    std::size_t size = 0;
    double margin = 0.0;
    std::uint64_t seed = 0;
    double delta = 0.0;
    std::vector<Vec> points;
};

void append_result_record(const std::string& path, const ResultRecord& rec);
std::vector<ResultRecord> read_result_records(const std::string& path);

/// Re-verifies each record with the geometry predicates and keeps only the
/// genuinely acute ones as lower-bound evidence.
std::vector<AcuteEvidence> acute_evidence_from_records(
    const std::vector<ResultRecord>& records, Tolerance tol = {});

/// Temp file + rename so readers never observe partial output.
void write_text_atomic(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t value);

}  // namespace dnormal
