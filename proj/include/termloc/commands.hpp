#pragma once

// The CLI workflows as plain functions returning exit codes:
// 0 success, 1 runtime failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "termloc/config.hpp"
#include "termloc/evaluation.hpp"
#include "termloc/index.hpp"
#include "termloc/ingest.hpp"
#include "termloc/method_extractor.hpp"
#include "termloc/pos.hpp"
#include "termloc/preprocess.hpp"
#include "termloc/strategies.hpp"
#include "termloc/termrank.hpp"

namespace termloc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Config-derived services shared by all commands.
struct Workspace {
    Config config;
    std::unique_ptr<StopList> stoplist;
    std::unique_ptr<Lexicon> lexicon;
    std::unique_ptr<LexiconAnnotator> annotator;
    CodeTokenizer tokenizer;

    explicit Workspace(Config cfg) : config(std::move(cfg)) {
        stoplist = std::make_unique<StopList>(config.stoplist_file ? StopList::load(*config.stoplist_file)
                                                                   : StopList::bundled());
        lexicon = std::make_unique<Lexicon>(config.lexicon_file ? Lexicon::load(*config.lexicon_file)
                                                                : Lexicon::bundled());
        annotator = std::make_unique<LexiconAnnotator>(*lexicon);
        tokenizer.stoplist = stoplist.get();
        if (config.reserved_words_file)
            tokenizer.reserved = load_word_set(*config.reserved_words_file);
    }

    TextServices services() const { return {stoplist.get(), annotator.get()}; }

    std::vector<ChangeRequest> requests() const { return load_requests(config.requests_file); }

    Dataset dataset(LoadReport& report) const {
        return build_dataset(requests(), load_goldsets(config.goldset_file, config.corpus_root), config.corpus_root,
                             report);
    }

    CorpusIndex build_index(ExtractStats& stats) const {
        return index_corpus(extract_methods(config.corpus_root, config.extensions, stats), tokenizer);
    }

    /// The snapshot when one exists, otherwise a fresh in-memory index.
    CorpusIndex index() const {
        if (std::filesystem::exists(config.index_file))
            return load_index(config.index_file);
        ExtractStats stats;
        return build_index(stats);
    }
};

struct CommonOptions {
    std::filesystem::path config_path;
    std::optional<int> k;
    std::optional<std::filesystem::path> out_dir;
    unsigned workers = 0; // 0 = available cores
};

namespace detail {

inline unsigned worker_count(unsigned requested) {
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text) || !out.flush())
            throw std::runtime_error("cannot write " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::filesystem::path output_dir(const CommonOptions& opt) {
    return opt.out_dir ? *opt.out_dir : std::filesystem::path("termloc-out");
}

inline std::string valid_strategy_list() {
    std::string s;
    for (const auto& n : strategy_names())
        s += (s.empty() ? "" : ", ") + n;
    return s;
}

inline std::size_t resolve_k(const CommonOptions& opt, std::size_t fallback) {
    if (!opt.k)
        return fallback;
    if (*opt.k < 1)
        throw UsageError("--k must be at least 1");
    return static_cast<std::size_t>(*opt.k);
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

inline void report_load(const LoadReport& rep, std::ostream& err) {
    for (const auto& w : rep.warnings)
        err << "warning: " << w << '\n';
    for (const auto& d : rep.dropped)
        err << "dropped request " << d.id << ": " << d.reason << '\n';
}

struct StrategyEnv {
    StrategyContext ctx;
    std::optional<RequestCorpusStats> request_stats;
};

inline QueryStrategy resolve_strategy(const std::string& name, const Workspace& ws, const CorpusIndex& index,
                                      const std::vector<ChangeRequest>& requests, StrategyEnv& env) {
    env.ctx.services = ws.services();
    env.ctx.rank = ws.config.rank;
    env.ctx.index = &index;
    env.ctx.heuristic_weights = ws.config.heuristic_weights;
    if (name == "heuristic" && !env.request_stats) {
        env.request_stats = RequestCorpusStats::build(requests, env.ctx.services);
    }
    env.ctx.request_stats = env.request_stats ? &*env.request_stats : nullptr;
    if (auto s = make_strategy(name, env.ctx))
        return *s;
    throw UsageError("unknown strategy '" + name + "'; valid names: " + valid_strategy_list());
}

inline void check_strategy_name(const std::string& name) {
    const auto& names = strategy_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown strategy '" + name + "'; valid names: " + valid_strategy_list());
}

} // namespace detail

/// Extracts methods, builds the index and writes the snapshot.
inline int cmd_index(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        Workspace ws(load_config(opt.config_path));
        ExtractStats stats;
        const auto index = ws.build_index(stats);
        for (const auto& w : stats.warnings)
            err << "warning: " << w << '\n';
        if (stats.files_scanned == 0)
            throw std::runtime_error("no source files found under " + ws.config.corpus_root.string());
        save_index(index, ws.config.index_file);
        out << stats.files_scanned << " files, " << stats.methods << " methods, " << stats.fallbacks
            << " fallbacks\n";
        return kExitOk;
    });
}

/// Prints the selected terms of one request, one per line.
inline int cmd_suggest(const CommonOptions& opt, const std::string& request_id, const std::string& variant_name,
                       std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const auto variant = parse_variant(variant_name);
        if (!variant)
            throw UsageError("unknown variant '" + variant_name + "'; valid: strict, textrank-only, posrank-only");
        Workspace ws(load_config(opt.config_path));
        auto cfg = ws.config.rank;
        cfg.top_k = static_cast<int>(detail::resolve_k(opt, static_cast<std::size_t>(cfg.top_k)));
        const auto requests = ws.requests();
        const auto it = std::find_if(requests.begin(), requests.end(),
                                     [&](const ChangeRequest& r) { return r.id == request_id; });
        if (it == requests.end())
            throw UsageError("unknown request id '" + request_id + "'");
        const auto s = suggest(*it, cfg, ws.services(), *variant);
        for (const auto& d : s.diagnostics)
            err << "note: " << d << '\n';
        for (const auto& t : s.query.terms)
            out << t << '\n';
        if (opt.out_dir)
            detail::write_text(*opt.out_dir / ("suggest_" + request_id + "_" + variant_name + ".csv"),
                               s.table.to_csv());
        return kExitOk;
    });
}

/// Runs one request's query and prints the ranked files.
inline int cmd_search(const CommonOptions& opt, const std::string& request_id, const std::string& strategy,
                      std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::check_strategy_name(strategy);
        Workspace ws(load_config(opt.config_path));
        const auto k = detail::resolve_k(opt, 10);
        const auto requests = ws.requests();
        const auto it = std::find_if(requests.begin(), requests.end(),
                                     [&](const ChangeRequest& r) { return r.id == request_id; });
        if (it == requests.end())
            throw UsageError("unknown request id '" + request_id + "'");
        const auto index = ws.index();
        detail::StrategyEnv env;
        const auto strat = detail::resolve_strategy(strategy, ws, index, requests, env);
        const auto query = strat.generator(*it);
        const auto res = search(index, query, k, ws.config.aggregation);
        std::size_t rank = 0;
        for (const auto& f : res.ranked_files)
            out << ++rank << '\t' << f.file_path << '\t' << detail::fmt(f.score, 6) << '\n';
        return kExitOk;
    });
}

namespace detail {

inline EvalReport run_evaluation(const Workspace& ws, const Dataset& ds, const CorpusIndex& index,
                                 const std::string& strategy, std::size_t k, unsigned workers) {
    StrategyEnv env;
    const auto strat = resolve_strategy(strategy, ws, index, ds.requests, env);
    return evaluate(ds, index, strat, k, ws.config.aggregation, workers);
}

inline void write_eval_outputs(const EvalReport& rep, const std::filesystem::path& dir,
                               std::optional<std::size_t> sweep_k) {
    write_text(dir / ("eval_" + rep.strategy_name + ".csv"), eval_report_csv(rep));
    write_text(dir / ("eval_" + rep.strategy_name + ".txt"), eval_report_table(rep));
    if (sweep_k) {
        std::string csv = "k,top_k_accuracy\n";
        for (const auto& [k, acc] : accuracy_sweep(rep, *sweep_k))
            csv += std::to_string(k) + "," + fmt(acc, 4) + "\n";
        write_text(dir / ("accuracy_" + rep.strategy_name + ".csv"), csv);
    }
}

} // namespace detail

inline int cmd_evaluate(const CommonOptions& opt, const std::string& strategy, std::optional<int> sweep_k,
                        std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::check_strategy_name(strategy);
        if (sweep_k && *sweep_k < 1)
            throw UsageError("--sweep-k must be at least 1");
        Workspace ws(load_config(opt.config_path));
        const auto k = detail::resolve_k(opt, 10);
        LoadReport load;
        const auto ds = ws.dataset(load);
        detail::report_load(load, err);
        if (ds.requests.empty())
            throw std::runtime_error("no evaluable requests in the dataset");
        const auto index = ws.index();
        const auto rep = detail::run_evaluation(ws, ds, index, strategy, k, detail::worker_count(opt.workers));
        std::optional<std::size_t> sweep;
        if (sweep_k)
            sweep = static_cast<std::size_t>(*sweep_k);
        detail::write_eval_outputs(rep, detail::output_dir(opt), sweep);
        out << eval_report_table(rep);
        return kExitOk;
    });
}

inline int cmd_compare(const CommonOptions& opt, const std::string& strategy_a, const std::string& strategy_b,
                       std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::check_strategy_name(strategy_a);
        detail::check_strategy_name(strategy_b);
        Workspace ws(load_config(opt.config_path));
        const auto k = detail::resolve_k(opt, 10);
        LoadReport load;
        const auto ds = ws.dataset(load);
        detail::report_load(load, err);
        if (ds.requests.empty())
            throw std::runtime_error("no evaluable requests in the dataset");
        const auto index = ws.index();
        const auto workers = detail::worker_count(opt.workers);
        const auto a = detail::run_evaluation(ws, ds, index, strategy_a, k, workers);
        const auto b = detail::run_evaluation(ws, ds, index, strategy_b, k, workers);
        const auto cmp = compare(a, b);
        const auto dir = detail::output_dir(opt);
        detail::write_eval_outputs(a, dir, std::nullopt);
        detail::write_eval_outputs(b, dir, std::nullopt);
        const auto stem = "compare_" + strategy_a + "_vs_" + strategy_b;
        detail::write_text(dir / (stem + ".csv"), comparison_csv(cmp));
        detail::write_text(dir / (stem + ".txt"), comparison_table(cmp));
        out << comparison_table(cmp);
        return kExitOk;
    });
}

} // namespace termloc
