#include <iostream>

#include "commands.hpp"
#include "satgame/checks.hpp"
#include "satgame/scores.hpp"

namespace satgame::cli {

namespace {

using checks::CheckCounts;

struct SuiteReport {
    bool all_ok = true;

    void line(const std::string& name, const CheckCounts& c, const std::string& verb) {
        std::cout << name << ": " << c.passed << "/" << c.total << " " << verb;
        if (!c.ok()) {
            std::cout << " FAIL";
            all_ok = false;
            for (std::size_t i = 0; i < c.notes.size() && i < 5; ++i)
                std::cout << "\n  - " << c.notes[i];
        }
        std::cout << "\n";
    }
};

}  // namespace

int cmd_verify(const VerifyArgs& args) {
    SuiteReport report;
    const auto want = [&](const std::string& name) {
        return args.suite == "all" || args.suite == name;
    };
    bool matched = false;

    if (want("structure-scores")) {
        matched = true;
        CheckCounts c;
        c.tally(structure_score(StructureKind::A, 6) == Rational(55, 169),
                "s(A_6) != 55/169");
        c.tally(structure_score(StructureKind::B, 3) == Rational(1, 3), "s(B_3) != 1/3");
        c.tally(structure_score(StructureKind::C, 2) == Rational(1, 3), "s(C_2) != 1/3");
        for (auto kind : {StructureKind::A, StructureKind::B, StructureKind::C}) {
            bool decreasing = true;
            for (long long l = 2; l < 50; ++l)
                if (structure_score(kind, l + 1) >= structure_score(kind, l))
                    decreasing = false;
            c.tally(decreasing, "score table not strictly decreasing");
        }
        report.line("structure-scores", c, "ok");
    }

    if (want("ghrv")) {
        matched = true;
        CheckCounts random_part = checks::ghrv_random(500, args.seed + 17);
        CheckCounts exhaustive = checks::ghrv_exhaustive_small();
        std::cout << "ghrv: " << random_part.passed << "/" << random_part.total
                  << " agree";
        if (!random_part.ok() || !exhaustive.ok()) {
            std::cout << " FAIL";
            report.all_ok = false;
        }
        std::cout << "\n";
    }

    if (want("theorem1-k3")) {
        matched = true;
        report.line("theorem1-k3", checks::theorem1_k3(args.deep ? 6 : 5), "match");
    }

    if (want("solver-oracle")) {
        matched = true;
        report.line("solver-oracle", checks::solver_oracle_sweep(), "equal");
    }

    if (want("first-mover")) {
        matched = true;
        report.line("first-mover", checks::first_mover_independence(5, {2, 3, 4}),
                    "independent");
    }

    if (want("lemma-structure")) {
        matched = true;
        report.line("lemma-structure",
                    checks::terminal_structure_playouts(args.playouts, 12, args.seed),
                    "layered");
    }

    if (want("redblue")) {
        matched = true;
        CheckCounts c;
        const int n = args.deep ? 60 : 30;
        const int k = args.deep ? 12 : 8;
        for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 1}, std::pair{4, 1}}) {
            const auto run = checks::redblue_checkpoint_run(n, k, a, b, args.seed + a * 10 + b);
            c.merge(run.counts);
        }
        report.line("redblue", c, "checkpoints ok");
    }

    if (want("prolonger-phase")) {
        matched = true;
        const int n = args.deep ? 60 : 30;
        report.line("prolonger-phase",
                    checks::structure_strategy_playouts(std::max(1, args.playouts / 4), n,
                                                        {4, 6, 10}, args.seed),
                    "clean");
    }

    if (want("shortener-phase")) {
        matched = true;
        const int n = args.deep ? 60 : 30;
        report.line("shortener-phase",
                    checks::path_strategy_playouts(std::max(1, args.playouts / 4), n,
                                                   {4, 5, 6}, args.seed),
                    "clean");
    }

    if (!matched) {
        std::cerr << "unknown suite: " << args.suite << "\n";
        return exit_usage;
    }
    return report.all_ok ? exit_ok : exit_check_failed;
}

}  // namespace satgame::cli
