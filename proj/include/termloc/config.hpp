#pragma once

// Declarative run configuration: "key = value" lines, '#' comments.
// Relative paths resolve against the config file's directory.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/index.hpp"
#include "termloc/ingest.hpp"
#include "termloc/strategies.hpp"
#include "termloc/termrank.hpp"

namespace termloc {

struct Config {
    std::filesystem::path corpus_root;
    std::filesystem::path requests_file;
    std::filesystem::path goldset_file;
    std::optional<std::filesystem::path> stoplist_file;
    std::optional<std::filesystem::path> lexicon_file;
    std::optional<std::filesystem::path> reserved_words_file;
    std::filesystem::path index_file; // output of `index`, input of the others
    RankConfig rank;
    Aggregation aggregation = Aggregation::Max;
    std::vector<std::string> extensions = {".java"};
    std::optional<HeuristicWeights> heuristic_weights;
};

namespace detail {

inline double parse_real(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw ValidationError("config: '" + key + "' expects a number, got '" + v + "'");
    return d;
}

inline int parse_int(const std::string& key, const std::string& v) {
    const double d = parse_real(key, v);
    if (d != static_cast<double>(static_cast<int>(d)))
        throw ValidationError("config: '" + key + "' expects an integer, got '" + v + "'");
    return static_cast<int>(d);
}

inline std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (auto t = trim(item); !t.empty())
            out.push_back(t);
    return out;
}

} // namespace detail

inline Config parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    namespace fs = std::filesystem;
    Config cfg;
    std::set<std::string> seen;
    auto resolve = [&](const std::string& key, const std::string& v, bool must_exist) {
        fs::path p(v);
        if (p.is_relative())
            p = base_dir / p;
        p = p.lexically_normal();
        if (must_exist && !fs::exists(p))
            throw ValidationError("config: '" + key + "' path does not exist: " + p.string());
        return p;
    };

    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto t = detail::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
        const auto key = detail::trim(t.substr(0, eq));
        const auto val = detail::trim(t.substr(eq + 1));
        if (!seen.insert(key).second)
            throw ValidationError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");

        if (key == "corpus_root") cfg.corpus_root = resolve(key, val, true);
        else if (key == "requests_file") cfg.requests_file = resolve(key, val, true);
        else if (key == "goldset_file") cfg.goldset_file = resolve(key, val, true);
        else if (key == "stoplist_file") cfg.stoplist_file = resolve(key, val, true);
        else if (key == "lexicon_file") cfg.lexicon_file = resolve(key, val, true);
        else if (key == "reserved_words_file") cfg.reserved_words_file = resolve(key, val, true);
        else if (key == "index_file") cfg.index_file = resolve(key, val, false);
        else if (key == "damping") cfg.rank.damping = detail::parse_real(key, val);
        else if (key == "init_score") cfg.rank.init_score = detail::parse_real(key, val);
        else if (key == "convergence_epsilon") cfg.rank.convergence_epsilon = detail::parse_real(key, val);
        else if (key == "max_iterations") cfg.rank.max_iterations = detail::parse_int(key, val);
        else if (key == "top_k") cfg.rank.top_k = detail::parse_int(key, val);
        else if (key == "extensions") {
            cfg.extensions.clear();
            for (auto e : detail::split_list(val))
                cfg.extensions.push_back(e[0] == '.' ? e : "." + e);
            if (cfg.extensions.empty())
                throw ValidationError("config: 'extensions' is empty");
        } else if (key == "aggregation") {
            if (val == "max") cfg.aggregation = Aggregation::Max;
            else if (val == "sum") cfg.aggregation = Aggregation::Sum;
            else throw ValidationError("config: aggregation must be max or sum, got '" + val + "'");
        } else if (key == "heuristic_weights") {
            const auto parts = detail::split_list(val);
            if (parts.size() != 4)
                throw ValidationError("config: heuristic_weights needs 4 comma-separated numbers");
            HeuristicWeights w{};
            for (std::size_t i = 0; i < 4; ++i)
                w[i] = detail::parse_real(key, parts[i]);
            cfg.heuristic_weights = w;
        } else {
            throw ValidationError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    for (const char* required : {"corpus_root", "requests_file", "goldset_file"})
        if (!seen.count(required))
            throw ValidationError(std::string("config: missing required key '") + required + "'");
    if (cfg.index_file.empty())
        cfg.index_file = (base_dir / "termloc.index").lexically_normal();
    cfg.rank.validate();
    return cfg;
}

inline Config load_config(const std::filesystem::path& path) {
    const auto text = detail::read_file(path);
    return parse_config(text, std::filesystem::absolute(path).parent_path());
}

/// Reserved-word file: one word per line, '#' comments.
inline std::set<std::string> load_word_set(const std::filesystem::path& path) {
    std::set<std::string> out;
    std::istringstream in(detail::read_file(path));
    std::string line;
    while (std::getline(in, line))
        if (auto t = detail::trim(line); !t.empty() && t[0] != '#')
            out.insert(t);
    return out;
}

} // namespace termloc
