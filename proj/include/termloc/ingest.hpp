#pragma once

// Loading change requests, gold sets and datasets from flat files.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "termloc/errors.hpp"

namespace termloc {

namespace fs = std::filesystem;

struct ChangeRequest {
    std::string id;
    std::string title;
    std::string description;

    friend bool operator==(const ChangeRequest&, const ChangeRequest&) = default;
};

struct GoldSet {
    std::string request_id;
    std::set<std::string> files; // corpus-relative, forward slashes
};

struct DroppedRequest {
    std::string id;
    std::string reason;
};

struct LoadReport {
    std::vector<DroppedRequest> dropped;
    std::vector<std::string> warnings;
    std::size_t missing_gold_files = 0;
};

struct Dataset {
    std::vector<ChangeRequest> requests;
    std::map<std::string, GoldSet> goldsets;
    fs::path corpus_root;

    const ChangeRequest* find(const std::string& id) const {
        auto it = std::find_if(requests.begin(), requests.end(),
                               [&](const ChangeRequest& r) { return r.id == id; });
        return it == requests.end() ? nullptr : &*it;
    }
};

namespace detail {

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string normalize_path(std::string p) {
    std::replace(p.begin(), p.end(), '\\', '/');
    while (p.rfind("./", 0) == 0)
        p.erase(0, 2);
    return p;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline std::vector<ChangeRequest> parse_requests(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based offset of the failing character
        const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        throw ParseError("requests JSON: line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_array())
        throw ParseError("requests JSON: top-level value must be an array");

    std::vector<ChangeRequest> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& obj = doc[i];
        const std::string where = "requests JSON: element " + std::to_string(i);
        if (!obj.is_object())
            throw ParseError(where + " is not an object");
        if (!obj.contains("id") || !obj["id"].is_string())
            throw ValidationError(where + ": missing string field 'id'");
        if (!obj.contains("title") || !obj["title"].is_string())
            throw ValidationError(where + ": missing string field 'title'");
        ChangeRequest cr;
        cr.id = obj["id"].get<std::string>();
        cr.title = obj["title"].get<std::string>();
        if (obj.contains("description") && !obj["description"].is_null()) {
            if (!obj["description"].is_string())
                throw ValidationError(where + ": 'description' must be a string");
            cr.description = obj["description"].get<std::string>();
        }
        if (cr.id.empty())
            throw ValidationError(where + ": empty id");
        if (cr.title.empty())
            throw ValidationError("request " + cr.id + ": empty title");
        if (!seen.insert(cr.id).second)
            throw ValidationError("duplicate request id '" + cr.id + "'");
        out.push_back(std::move(cr));
    }
    return out;
}

inline std::vector<ChangeRequest> load_requests(const fs::path& path) {
    return parse_requests(detail::read_file(path));
}

inline std::string serialize_requests(const std::vector<ChangeRequest>& requests) {
    auto arr = nlohmann::json::array();
    for (const auto& cr : requests)
        arr.push_back({{"id", cr.id}, {"title", cr.title}, {"description", cr.description}});
    return arr.dump(2) + "\n";
}

struct GoldsetFile {
    std::map<std::string, GoldSet> goldsets;
    std::set<std::string> rejected; // ids whose every gold file was missing
    std::vector<std::string> warnings;
    std::size_t missing_files = 0;
};

/// Parses "<id>\t<path>" lines. Paths that do not exist under corpus_root are
/// dropped with a warning; a request left with no files is omitted.
inline GoldsetFile parse_goldsets(const std::string& text, const fs::path& corpus_root) {
    GoldsetFile out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#')
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ValidationError("goldset line " + std::to_string(lineno) + ": expected <id>TAB<path>");
        auto id = detail::trim(line.substr(0, tab));
        auto rel = detail::normalize_path(detail::trim(line.substr(tab + 1)));
        if (id.empty() || rel.empty())
            throw ValidationError("goldset line " + std::to_string(lineno) + ": empty id or path");
        if (!fs::exists(corpus_root / rel)) {
            ++out.missing_files;
            out.warnings.push_back("goldset line " + std::to_string(lineno) + ": " + rel +
                                   " not found under corpus root (request " + id + ")");
            out.goldsets.try_emplace(id, GoldSet{id, {}});
            continue;
        }
        auto& gs = out.goldsets.try_emplace(id, GoldSet{id, {}}).first->second;
        gs.files.insert(std::move(rel));
    }
    for (auto it = out.goldsets.begin(); it != out.goldsets.end();) {
        if (it->second.files.empty()) {
            out.warnings.push_back("request " + it->first + ": no gold file resolves; gold set rejected");
            out.rejected.insert(it->first);
            it = out.goldsets.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

inline GoldsetFile load_goldsets(const fs::path& path, const fs::path& corpus_root) {
    return parse_goldsets(detail::read_file(path), corpus_root);
}

/// Joins requests with their gold sets. Requests without a usable gold set are
/// dropped and listed in the report; so are gold sets naming unknown requests.
inline Dataset build_dataset(std::vector<ChangeRequest> requests, const GoldsetFile& gold,
                             fs::path corpus_root, LoadReport& report) {
    Dataset ds;
    ds.corpus_root = std::move(corpus_root);
    report.warnings.insert(report.warnings.end(), gold.warnings.begin(), gold.warnings.end());
    report.missing_gold_files += gold.missing_files;

    std::set<std::string> known;
    for (const auto& cr : requests)
        known.insert(cr.id);
    for (const auto& [id, gs] : gold.goldsets)
        if (!known.count(id))
            report.dropped.push_back({id, "gold set names an unknown request"});

    for (auto& cr : requests) {
        auto it = gold.goldsets.find(cr.id);
        if (it == gold.goldsets.end()) {
            report.dropped.push_back(
                {cr.id, gold.rejected.count(cr.id) ? "no gold file exists under the corpus root"
                                                   : "no gold set"});
            continue;
        }
        ds.goldsets.emplace(cr.id, it->second);
        ds.requests.push_back(std::move(cr));
    }
    return ds;
}

} // namespace termloc
