#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "satgame/bounds.hpp"
#include "satgame/errors.hpp"
#include "satgame/graph_io.hpp"
#include "satgame/solver.hpp"
#include "satgame/strategy.hpp"
#include "svg.hpp"

namespace satgame::cli {

namespace {

std::pair<int, int> parse_bias(const std::string& bias) {
    const auto colon = bias.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bias must look like a:b, got " + bias);
    return {std::stoi(bias.substr(0, colon)), std::stoi(bias.substr(colon + 1))};
}

Player parse_first(const std::string& first) {
    if (first == "p" || first == "P") return Player::prolonger;
    if (first == "s" || first == "S") return Player::shortener;
    throw std::invalid_argument("first mover must be p or s, got " + first);
}

GameConfig config_from_flags(const GameFlags& f) {
    const auto [a, b] = parse_bias(f.bias);
    const Player first = parse_first(f.first);
    if (f.game == "dhom") return directed_config(f.n, f.k, a, b, first);
    if (f.game == "orient") return orientation_config(f.n, f.k, a, b, first);
    throw std::invalid_argument("game must be dhom or orient, got " + f.game);
}

// "2,4,6" or "4..8" or a single value
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        if (out.empty()) throw std::invalid_argument("empty range: " + text);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + text);
    return out;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

// A strategy driven by stdin; prompts list the legal moves.
class HumanStrategy final : public Strategy {
public:
    std::optional<Move> choose(const GameState& s) override {
        const auto legal = s.legal_moves();
        if (legal.empty()) return std::nullopt;
        std::cout << "board:\n"
                  << (s.is_directed() ? to_text(s.digraph()) : to_text(s.ugraph()));
        std::cout << "legal moves:";
        for (const Move& m : legal) std::cout << " " << m.u << "-" << m.v;
        std::cout << "\n";
        while (true) {
            std::cout << "move> " << std::flush;
            int u, v;
            if (!(std::cin >> u >> v))
                throw strategy_error("end of input while a move was expected");
            const Move m = s.is_directed() ? Move{u, v}
                                           : Move{std::min(u, v), std::max(u, v)};
            if (s.is_legal(m)) return m;
            std::cout << "illegal, pick one of the listed moves\n";
        }
    }

    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<HumanStrategy>(*this);
    }
};

}  // namespace

int cmd_solve(const SolveArgs& args) {
    const GameConfig cfg = config_from_flags(args.game);
    SolveLimits lim;
    lim.use_canonicalization = !args.no_canonical;
    lim.enforce_budget = !args.ignore_budget;
    lim.root_threads = args.threads;
    const SolveResult res = solve(cfg, lim);
    std::cout << "score " << res.score << "\n";
    std::cout << "nodes " << res.nodes_explored << "\n";
    if (args.print_pv) {
        GameState s = GameState::initial(cfg);
        for (const Move& m : res.principal_variation) {
            std::cout << (s.current_player() == Player::prolonger ? "P " : "S ") << m.u
                      << " " << m.v << "\n";
            s = s.after(m);
        }
    }
    if (!args.transcript_out.empty()) {
        Transcript t;
        t.config = cfg;
        GameState s = GameState::initial(cfg);
        for (const Move& m : res.principal_variation) {
            t.moves.emplace_back(s.current_player(), m);
            s = s.after(m);
        }
        t.final_score = s.moves_made();
        write_file(args.transcript_out, to_text(t));
    }
    return exit_ok;
}

int cmd_play(const PlayArgs& args) {
    const GameConfig cfg = config_from_flags(args.game);
    StrategyOptions opts;
    opts.rb_set_size = args.rb_set_size;
    opts.rb_pivot_size = args.rb_pivot_size;

    auto make_side = [&](Player side, const std::string& name) -> std::unique_ptr<Strategy> {
        const std::string tag = side == Player::prolonger ? "p" : "s";
        if (args.interactive == tag) return std::make_unique<HumanStrategy>();
        const std::uint64_t seed =
            side == Player::prolonger ? args.seed : args.seed + 0x9e3779b9ULL;
        return make_strategy(name, cfg, side, seed, opts);
    };

    auto prolonger = make_side(Player::prolonger, args.prolonger);
    auto shortener = make_side(Player::shortener, args.shortener);

    Transcript t;
    try {
        if (!args.board_in.empty()) {
            std::ifstream in(args.board_in);
            if (!in) throw std::invalid_argument("cannot read " + args.board_in);
            std::ostringstream buf;
            buf << in.rdbuf();
            GameState s = cfg.kind == GameKind::directed_hom
                              ? GameState::from_board(cfg, digraph_from_text(buf.str()))
                              : GameState::from_board(cfg, ugraph_from_text(buf.str()));
            t.config = cfg;
            while (true) {
                const Player side = s.current_player();
                Strategy& actor = side == Player::prolonger ? *prolonger : *shortener;
                auto mv = actor.choose(s);
                if (!mv) break;
                GameState next = s.after(*mv);
                prolonger->observe(s, *mv, side);
                shortener->observe(s, *mv, side);
                t.moves.emplace_back(side, *mv);
                s = std::move(next);
            }
            t.final_score = s.moves_made();
            if (!args.dump_board.empty())
                write_file(args.dump_board,
                           cfg.kind == GameKind::directed_hom ? to_text(s.digraph())
                                                              : to_text(s.ugraph()));
        } else {
            t = playout(cfg, *prolonger, *shortener);
            if (!args.dump_board.empty()) {
                GameState end = replay(t);
                write_file(args.dump_board,
                           cfg.kind == GameKind::directed_hom ? to_text(end.digraph())
                                                              : to_text(end.ugraph()));
            }
        }
    } catch (const playout_abort& abort) {
        std::cerr << "playout aborted: " << abort.what() << "\n";
        std::cerr << to_text(abort.partial_transcript);
        return exit_check_failed;
    }

    const std::string text = to_text(t);
    std::cout << text;
    if (!args.out.empty()) write_file(args.out, text);
    return exit_ok;
}

int cmd_sweep(const SweepArgs& args) {
    if (args.game != "dhom" && args.game != "orient")
        throw std::invalid_argument("game must be dhom or orient");
    const bool orient = args.game == "orient";
    const auto ns = parse_int_list(args.n_list);
    const auto ks = parse_int_list(args.k_list);
    const auto as = parse_int_list(args.a_list);
    const auto bs = parse_int_list(args.b_list);
    if (args.seeds < 1) throw std::invalid_argument("seeds must be >= 1");

    struct Cell {
        int n, k, a, b;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n : ns)
        for (int k : ks)
            for (int a : as)
                for (int b : bs)
                    for (int s = 0; s < args.seeds; ++s)
                        cells.push_back({n, k, a, b, args.seed_base + static_cast<std::uint64_t>(s)});

    auto run_cell = [&](const Cell& c) -> std::string {
        const GameConfig cfg = orient ? orientation_config(c.n, c.k, c.a, c.b)
                                      : directed_config(c.n, c.k, c.a, c.b);
        const Transcript t =
            playout_named(cfg, args.prolonger, args.shortener, c.seed);
        const long long score = t.final_score;

        std::string lo, hi, lambda_hat;
        if (orient) {
            const auto [lam_lo, lam_hi] = lambda_bounds(c.a, c.b);
            const auto under = orientation_bound(c.n, c.k, lam_lo);
            const auto over = orientation_bound(c.n, c.k, lam_hi);
            if (!under.vacuous) lo = format_fixed(to_double(under.value), 4);
            if (!over.vacuous) hi = format_fixed(to_double(over.value), 4);
            const double pairs = static_cast<double>(c.n) * (c.n - 1) / 2.0;
            const double gap = 1.0 - static_cast<double>(score) / pairs;
            if (gap > 0) lambda_hat = format_fixed(1.0 / (c.k * gap), 6);
        } else if (c.k <= 2) {
            lo = hi = format_fixed(0.0, 4);
        } else if (c.k == 3) {
            const double v = static_cast<double>(c.n) * c.n / 4;
            lo = hi = format_fixed(std::floor(v), 4);
        } else if (c.n >= c.k) {
            const LowerBound lb = prolonger_bound(c.n, c.k);
            if (!lb.vacuous) lo = format_fixed(to_double(lb.value), 4);
            hi = format_fixed(to_double(shortener_bound(c.n, c.k)), 4);
        }

        std::ostringstream row;
        row << c.n << ',' << c.k << ',' << c.a << ',' << c.b << ',' << args.prolonger
            << ',' << args.shortener << ',' << c.seed << ',' << score << ',' << lo << ','
            << hi << ',' << lambda_hat << '\n';
        return row.str();
    };

    const int workers = args.threads > 0
                            ? args.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::string> rows(cells.size());
    for (std::size_t start = 0; start < cells.size();
         start += static_cast<std::size_t>(workers)) {
        std::vector<std::future<std::string>> batch;
        const std::size_t stop =
            std::min(cells.size(), start + static_cast<std::size_t>(workers));
        for (std::size_t i = start; i < stop; ++i)
            batch.push_back(std::async(std::launch::async, run_cell, cells[i]));
        for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
    }

    std::ostringstream csv;
    csv << "n,k,a,b,strat_p,strat_s,seed,score,bound_lo,bound_hi,lambda_hat\n";
    for (const std::string& r : rows) csv << r;
    write_file(args.out, csv.str());
    std::cout << "wrote " << args.out << " (" << cells.size() << " rows)\n";

    if (!args.svg.empty()) {
        std::vector<PlotPoint> scatter;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            const auto score_field = [&] {
                std::istringstream in(rows[i]);
                std::string field;
                for (int j = 0; j < 8; ++j) std::getline(in, field, ',');
                return std::stod(field);
            }();
            if (orient) {
                const double pairs = static_cast<double>(c.n) * (c.n - 1) / 2.0;
                scatter.push_back({static_cast<double>(c.k), score_field / pairs});
            } else {
                scatter.push_back({static_cast<double>(c.n), score_field});
            }
        }
        std::vector<PlotCurve> curves;
        if (orient) {
            const auto [lam_lo, lam_hi] = lambda_bounds(as.front(), bs.front());
            const Rational conj = conjectured_lambda(as.front(), bs.front());
            auto curve = [&](const Rational& lam, std::string label, std::string colour) {
                if (lam.numerator() == 0) return;
                PlotCurve c{std::move(label), std::move(colour), {}};
                for (int k : ks)
                    c.points.push_back(
                        {static_cast<double>(k), 1.0 - 1.0 / (to_double(lam) * k)});
                curves.push_back(std::move(c));
            };
            curve(lam_lo, "lambda-", "firebrick");
            curve(lam_hi, "lambda+", "darkgreen");
            curve(conj, "conjecture", "goldenrod");
            write_svg(args.svg, "k", "score / C(n,2)", scatter, curves);
        } else {
            write_svg(args.svg, "n", "score", scatter, {});
        }
        std::cout << "wrote " << args.svg << "\n";
    }
    return exit_ok;
}

}  // namespace satgame::cli
