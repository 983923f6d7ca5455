#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satgame::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

struct GameFlags {
    std::string game = "dhom";
    int n = 4;
    int k = 3;
    std::string bias = "1:1";
    std::string first = "p";
};

struct SolveArgs {
    GameFlags game;
    bool print_pv = false;
    bool no_canonical = false;
    bool ignore_budget = false;
    int threads = 1;
    std::string transcript_out;
};

struct PlayArgs {
    GameFlags game;
    std::string prolonger = "greedy";
    std::string shortener = "greedy";
    std::uint64_t seed = 0;
    std::string out;
    std::string dump_board;
    std::string board_in;
    std::string interactive;  // "", "p" or "s"
    std::optional<int> rb_set_size;
    std::optional<int> rb_pivot_size;
};

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    int playouts = 200;
    bool deep = false;  // include the slow solver instances
};

struct SweepArgs {
    std::string game = "orient";
    std::string n_list = "8";
    std::string k_list = "3";
    std::string a_list = "1";
    std::string b_list = "1";
    std::string prolonger = "greedy";
    std::string shortener = "greedy";
    int seeds = 1;
    std::uint64_t seed_base = 0;
    std::string out = "sweep.csv";
    std::string svg;
    int threads = 0;  // 0: hardware concurrency
};

int cmd_solve(const SolveArgs& args);
int cmd_play(const PlayArgs& args);
int cmd_verify(const VerifyArgs& args);
int cmd_sweep(const SweepArgs& args);

}  // namespace satgame::cli
