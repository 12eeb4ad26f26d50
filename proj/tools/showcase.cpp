// Runs term selection on one change request and prints the score table.
//
//   showcase <requests.json> [request-id]

#include <iostream>

#include "termloc/ingest.hpp"
#include "termloc/termrank.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: showcase <requests.json> [request-id]\n";
        return 2;
    }
    try {
        const auto requests = termloc::load_requests(argv[1]);
        for (const auto& cr : requests) {
            if (argc > 2 && cr.id != argv[2])
                continue;
            const auto s = termloc::suggest(cr);
            std::cout << "request " << cr.id << ": " << cr.title << "\n\n" << s.table.to_csv() << "\nquery:";
            for (const auto& t : s.query.expanded_terms)
                std::cout << ' ' << t;
            std::cout << "\ntextrank iterations " << s.textrank.iterations << ", posrank iterations "
                      << s.posrank.iterations << "\n\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
