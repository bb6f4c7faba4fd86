#include "dnormal/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dnormal {

using nlohmann::json;

json point_set_to_json(const PointSet& ps, const std::vector<std::size_t>* parts) {
    json j;
    j["dim"] = ps.dim();
    json pts = json::array();
    for (const Vec& p : ps.points()) pts.push_back(p);
    j["points"] = std::move(pts);
    if (parts) j["parts"] = *parts;
    return j;
}

PointSet point_set_from_json(const json& j, Tolerance tol, bool allow_duplicates) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw IoError("point set JSON needs \"dim\" and \"points\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
        throw IoError("\"dim\" must be a positive integer");
    const auto dim = j["dim"].get<std::size_t>();
    if (!j["points"].is_array()) throw IoError("\"points\" must be an array");
    std::vector<Vec> pts;
    pts.reserve(j["points"].size());
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.size() != dim)
            throw IoError("point row does not match the declared dimension");
        Vec p;
        p.reserve(dim);
        for (const auto& c : row) {
            if (!c.is_number()) throw IoError("non-numeric coordinate");
            p.push_back(c.get<double>());
        }
        pts.push_back(std::move(p));
    }
    try {
        return PointSet(dim, std::move(pts), tol, allow_duplicates);
    } catch (const InvalidPointSet& e) {
        throw IoError(std::string("invalid point set: ") + e.what());
    }
}

std::vector<std::size_t> parts_from_json(const json& j) {
    std::vector<std::size_t> parts;
    if (j.is_object() && j.contains("parts")) {
        for (const auto& v : j["parts"]) {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw IoError("part labels must be positive integers");
            parts.push_back(v.get<std::size_t>());
        }
    }
    return parts;
}

PointSet point_set_from_csv(std::istream& in, Tolerance tol, bool allow_duplicates) {
    std::vector<Vec> pts;
    std::size_t dim = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Vec p;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                if (used != cell.size()) throw IoError("trailing junk in CSV cell");
                p.push_back(v);
            } catch (const std::exception&) {
                throw IoError("non-numeric CSV cell: " + cell);
            }
        }
        if (dim == 0) dim = p.size();
        if (p.size() != dim || dim == 0)
            throw IoError("CSV rows must all have the same positive column count");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw IoError("CSV contains no points");
    try {
        return PointSet(dim, std::move(pts), tol, allow_duplicates);
    } catch (const InvalidPointSet& e) {
        throw IoError(std::string("invalid point set: ") + e.what());
    }
}

PointSet read_point_set(const std::string& path, Tolerance tol, bool allow_duplicates) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return point_set_from_csv(in, tol, allow_duplicates);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return point_set_from_json(j, tol, allow_duplicates);
}

std::pair<PointSet, std::vector<std::size_t>> read_point_set_with_parts(
    const std::string& path, Tolerance tol) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return {read_point_set(path, tol), {}};
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return {point_set_from_json(j, tol), parts_from_json(j)};
}

json graph_to_json(const DnGraph& g) {
    json j;
    j["n"] = g.size();
    j["mode"] = to_string(g.mode().kind);
    if (g.mode().kind == PairMode::Kind::Almost) j["delta"] = g.mode().delta;
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
    j["edges"] = std::move(edges);
    return j;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["pass"] = cert.pass;
    json v = json::array();
    for (const auto& pair : cert.violations) v.push_back({pair[0], pair[1]});
    j["violations"] = std::move(v);
    return j;
}

json trace_to_json(const EmbeddingTrace& trace) {
    json j;
    j["epsilon"] = trace.epsilon;
    json parts = json::array();
    for (const EmbeddingPartTrace& p : trace.parts) {
        json part;
        part["u"] = p.u;
        part["v"] = p.v;
        part["margin"] = p.margin;
        part["radius"] = p.radius;
        part["center"] = p.center;
        part["antipode"] = p.antipode;
        part["segment"] = {p.seg_a, p.seg_b};
        part["thetas"] = p.thetas;
        parts.push_back(std::move(part));
    }
    j["parts"] = std::move(parts);
    return j;
}

void append_result_record(const std::string& path, const ResultRecord& rec) {
    json j;
    j["dim"] = rec.dim;
    j["size"] = rec.size;
    j["margin"] = rec.margin;
    j["seed"] = rec.seed;
    j["delta"] = rec.delta;
    json pts = json::array();
    for (const Vec& p : rec.points) pts.push_back(p);
    j["points"] = std::move(pts);
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open results file " + path);
    out << j.dump() << "\n";
}

std::vector<ResultRecord> read_result_records(const std::string& path) {
    std::vector<ResultRecord> records;
    std::ifstream in(path);
    if (!in) return records;  // absent file = no evidence
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            ResultRecord rec;
            rec.dim = j.value("dim", std::size_t{0});
            rec.size = j.value("size", std::size_t{0});
            rec.margin = j.value("margin", 0.0);
            rec.seed = j.value("seed", std::uint64_t{0});
            rec.delta = j.value("delta", 0.0);
            if (j.contains("points"))
                for (const auto& row : j["points"])
                    rec.points.push_back(row.get<Vec>());
            records.push_back(std::move(rec));
        } catch (const json::exception&) {
            continue;  // torn or malformed line in an append-only log
        }
    }
    return records;
}

std::vector<AcuteEvidence> acute_evidence_from_records(
    const std::vector<ResultRecord>& records, Tolerance tol) {
    std::vector<AcuteEvidence> evidence;
    for (const ResultRecord& rec : records) {
        if (rec.points.size() < 3 || rec.dim == 0) continue;
        try {
            const PointSet ps(rec.dim, rec.points, tol);
            if (all_angles_acute(ps, tol))
                evidence.push_back({ps.size(), ps.dim()});
        } catch (const GeometryError&) {
            // unverifiable record: skip
        }
    }
    return evidence;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string());
        out << content;
        if (!out) throw IoError("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string s = buf.str();
    return fnv1a64(s);
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return s;
}

}  // namespace dnormal
