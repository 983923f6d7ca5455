#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "satgame/errors.hpp"

namespace cli = satgame::cli;

namespace {

void add_game_flags(CLI::App* cmd, cli::GameFlags& flags) {
    cmd->add_option("--game", flags.game, "game kind: dhom or orient")
        ->check(CLI::IsMember({"dhom", "orient"}));
    cmd->add_option("--n", flags.n, "board size")->required();
    cmd->add_option("--k", flags.k, "forbidden walk length (dhom) / colour bound (orient)")
        ->required();
    cmd->add_option("--bias", flags.bias, "a:b consecutive turns (default 1:1)");
    cmd->add_option("--first", flags.first, "first mover: p or s")
        ->check(CLI::IsMember({"p", "s", "P", "S"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"saturation-game engine, strategies, and exact solver"};
    app.require_subcommand(1);

    cli::SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "exact game value by full search");
    add_game_flags(solve, solve_args.game);
    solve->add_flag("--pv", solve_args.print_pv, "print one optimal line of play");
    solve->add_flag("--no-canonical", solve_args.no_canonical,
                    "key the table on raw boards instead of canonical forms");
    solve->add_flag("--ignore-budget", solve_args.ignore_budget,
                    "lift the hard size budgets (may run for a very long time)");
    solve->add_option("--threads", solve_args.threads, "root-split worker count");
    solve->add_option("--out", solve_args.transcript_out,
                      "write the optimal line as a transcript file");

    cli::PlayArgs play_args;
    CLI::App* play = app.add_subcommand("play", "run one strategy-vs-strategy game");
    add_game_flags(play, play_args.game);
    play->add_option("--p", play_args.prolonger, "maximiser strategy name");
    play->add_option("--s", play_args.shortener, "minimiser strategy name");
    play->add_option("--seed", play_args.seed, "seed for seeded strategies");
    play->add_option("--out", play_args.out, "also write the transcript to this file");
    play->add_option("--dump-board", play_args.dump_board,
                     "write the terminal board in the graph text format");
    play->add_option("--board", play_args.board_in,
                     "resume from a board in the graph text format");
    play->add_option("--interactive", play_args.interactive,
                     "play one side by hand: p or s")
        ->check(CLI::IsMember({"p", "s"}));
    int rb_set = 0, rb_pivot = 0;
    auto* rbs = play->add_option("--rb-set-size", rb_set,
                                 "override the maximiser's target-set size");
    auto* rbp = play->add_option("--rb-pivot-size", rb_pivot,
                                 "override the minimiser's pivot-set size");

    cli::VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", verify_args.suite,
                       "structure-scores | ghrv | theorem1-k3 | solver-oracle | "
                       "first-mover | lemma-structure | redblue | prolonger-phase | "
                       "shortener-phase | all");
    verify->add_option("--seed", verify_args.seed, "base seed");
    verify->add_option("--playouts", verify_args.playouts, "playout count per suite");
    verify->add_flag("--deep", verify_args.deep, "full-scale instances (slow)");

    cli::SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "grid of playouts to CSV (and SVG)");
    sweep->add_option("--game", sweep_args.game, "dhom or orient")
        ->check(CLI::IsMember({"dhom", "orient"}));
    sweep->add_option("--n", sweep_args.n_list, "board sizes, e.g. 8,10 or 6..12");
    sweep->add_option("--k", sweep_args.k_list, "k values");
    sweep->add_option("--a", sweep_args.a_list, "maximiser bias values");
    sweep->add_option("--b", sweep_args.b_list, "minimiser bias values");
    sweep->add_option("--p", sweep_args.prolonger, "maximiser strategy");
    sweep->add_option("--s", sweep_args.shortener, "minimiser strategy");
    sweep->add_option("--seeds", sweep_args.seeds, "seeds per cell");
    sweep->add_option("--seed-base", sweep_args.seed_base, "first seed value");
    sweep->add_option("--out", sweep_args.out, "CSV output path");
    sweep->add_option("--svg", sweep_args.svg, "optional SVG plot path");
    sweep->add_option("--threads", sweep_args.threads, "parallel cells (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return cli::exit_usage;
    }

    try {
        if (*solve) return cli::cmd_solve(solve_args);
        if (*play) {
            if (*rbs) play_args.rb_set_size = rb_set;
            if (*rbp) play_args.rb_pivot_size = rb_pivot;
            return cli::cmd_play(play_args);
        }
        if (*verify) return cli::cmd_verify(verify_args);
        if (*sweep) return cli::cmd_sweep(sweep_args);
    } catch (const satgame::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return cli::exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return cli::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_check_failed;
    }
    return cli::exit_usage;
}
