// termloc: index a corpus, suggest search terms for change requests, and
// evaluate query strategies against gold sets.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "termloc/commands.hpp"

int main(int argc, char** argv) {
    using namespace termloc;

    CLI::App app{"termloc: search-term selection and evaluation for concept location"};
    app.require_subcommand(1);

    CommonOptions opt;
    int k = 0;
    int workers = 0;
    std::string out_dir;
    std::string variant = "strict";
    std::string request_id;
    std::vector<std::string> strategies;
    int sweep_k = 0;

    auto common = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--config", opt.config_path, "configuration file")->required();
        if (with_k)
            sub->add_option("--k", k, "number of terms or results");
    };

    auto* index = app.add_subcommand("index", "extract methods and write the index snapshot");
    common(index, false);

    auto* suggest = app.add_subcommand("suggest", "print the ranked search terms of a request");
    common(suggest, true);
    suggest->add_option("--request", request_id, "change request id")->required();
    suggest->add_option("--variant", variant, "strict | textrank-only | posrank-only");
    suggest->add_option("--out-dir", out_dir, "also write the term score table here");

    auto* search = app.add_subcommand("search", "run a request's query and print the ranked files");
    common(search, true);
    search->add_option("--request", request_id, "change request id")->required();
    search->add_option("--strategy", strategies, "query strategy")->expected(1);

    auto* evaluate = app.add_subcommand("evaluate", "score a query strategy against the gold sets");
    common(evaluate, true);
    evaluate->add_option("--strategy", strategies, "query strategy")->expected(1)->required();
    evaluate->add_option("--out-dir", out_dir, "output directory");
    evaluate->add_option("--workers", workers, "worker threads (default: all cores)");
    evaluate->add_option("--sweep-k", sweep_k, "also write Top-K accuracy for K = 1..N");

    auto* compare = app.add_subcommand("compare", "compare two strategies request by request");
    common(compare, true);
    compare->add_option("--strategy", strategies, "treatment then baseline (give the flag twice)")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->required();
    compare->add_option("--out-dir", out_dir, "output directory");
    compare->add_option("--workers", workers, "worker threads (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (auto* sub : {suggest, search, evaluate, compare})
        if (sub->parsed() && sub->count("--k"))
            opt.k = k;
    if (!out_dir.empty())
        opt.out_dir = out_dir;
    if (workers < 0) {
        std::cerr << "usage error: --workers must be non-negative\n";
        return kExitUsage;
    }
    opt.workers = static_cast<unsigned>(workers);

    if (index->parsed())
        return cmd_index(opt, std::cout, std::cerr);
    if (suggest->parsed())
        return cmd_suggest(opt, request_id, variant, std::cout, std::cerr);
    if (search->parsed())
        return cmd_search(opt, request_id, strategies.empty() ? "strict" : strategies.front(), std::cout,
                          std::cerr);
    if (evaluate->parsed()) {
        std::optional<int> sweep;
        if (evaluate->count("--sweep-k"))
            sweep = sweep_k;
        return cmd_evaluate(opt, strategies.front(), sweep, std::cout, std::cerr);
    }
    if (strategies.size() != 2) {
        std::cerr << "usage error: compare needs exactly two --strategy flags (treatment, baseline)\n";
        return kExitUsage;
    }
    return cmd_compare(opt, strategies[0], strategies[1], std::cout, std::cerr);
}
