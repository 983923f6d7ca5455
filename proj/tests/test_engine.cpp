#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "satgame/coloring.hpp"
#include "satgame/errors.hpp"
#include "satgame/oracle.hpp"
#include "satgame/strategy.hpp"

using namespace satgame;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("new_game starts empty with the right mover") {
    GameState s = GameState::initial(directed_config(4, 3));
    CHECK(s.moves_made() == 0);
    CHECK(s.digraph().arc_count() == 0);
    CHECK(s.current_player() == Player::prolonger);

    GameState o = GameState::initial(orientation_config(10, 3, 2, 1, Player::shortener));
    CHECK(o.ugraph().edge_count() == 0);
    CHECK(o.current_player() == Player::shortener);

    CHECK_THROWS_AS(GameState::initial(GameConfig{4, GameKind::directed_hom, 3,
                                                  FamilySpec::walk_on_k(3, ContainmentMode::homomorphism),
                                                  0, 1, Player::prolonger}),
                    std::invalid_argument);
}

TEST_CASE("schedule honours bias blocks and first mover") {
    GameConfig cfg = directed_config(8, 4, 2, 3, Player::prolonger);
    GameState s = GameState::initial(cfg);
    CHECK(s.current_player() == Player::prolonger);

    // positions P,P,S,S,S repeating
    const std::vector<Player> expect{Player::prolonger, Player::prolonger,
                                     Player::shortener, Player::shortener,
                                     Player::shortener};
    GameState cur = s;
    for (int i = 0; i < 5; ++i) {
        CHECK(cur.current_player() == expect[static_cast<std::size_t>(i)]);
        cur = cur.after(cur.legal_moves().front());
    }

    GameConfig cfg_s = directed_config(8, 4, 2, 3, Player::shortener);
    GameState t = GameState::initial(cfg_s);
    t = t.after(t.legal_moves().front());
    CHECK(t.moves_made() == 1);
    CHECK(t.current_player() == Player::shortener);  // S,S,S,P,P
}

TEST_CASE("legal moves on the empty 3-board with forbidden 3-walks") {
    GameState s = GameState::initial(directed_config(3, 3));
    CHECK(s.legal_moves().size() == 6);

    GameState after = s.after({0, 1});
    const auto legal = after.legal_moves();
    // cross-check each missing arc against the oracle
    const FamilySpec fam = FamilySpec::walk_on_k(3, ContainmentMode::homomorphism);
    std::vector<Move> expected;
    for (const Arc& a : missing_arcs(after.digraph()))
        if (is_family_free(after.digraph().with_arc(a), fam))
            expected.push_back({a.from, a.to});
    CHECK(legal == expected);
    CHECK(legal == std::vector<Move>{{0, 2}, {2, 1}});
}

TEST_CASE("apply_move splits duplicate from forbidden") {
    GameState s = GameState::initial(directed_config(3, 3)).after({0, 1});
    try {
        s.after({0, 1});
        FAIL("duplicate accepted");
    } catch (const illegal_move_error& e) {
        CHECK(e.why() == illegal_move_error::reason::duplicate);
    }
    try {
        s.after({1, 0});
        FAIL("forbidden accepted");
    } catch (const illegal_move_error& e) {
        CHECK(e.why() == illegal_move_error::reason::forbidden);
    }
    CHECK(s.after({0, 2}).moves_made() == 2);

    GameState p4 = GameState::initial(directed_config(3, 4)).after({0, 1});
    CHECK(p4.after({1, 2}).digraph().has_arc(1, 2));
}

TEST_CASE("terminal positions") {
    GameState s = GameState::initial(directed_config(2, 3)).after({0, 1});
    CHECK(s.is_terminal());

    CHECK_FALSE(GameState::initial(directed_config(3, 3)).is_terminal());

    // complete bipartite 2+2, all arcs one way
    GameState b = GameState::initial(directed_config(4, 3));
    for (Move m : {Move{0, 2}, Move{1, 3}, Move{0, 3}, Move{1, 2}}) b = b.after(m);
    CHECK(b.is_terminal());
}

TEST_CASE("orientation legality matches the plain colouring oracle") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 2);
        const int k = 2 + static_cast<int>(rng() % 2);
        GameState s = GameState::initial(orientation_config(n, k));
        while (true) {
            const auto legal = s.legal_moves();
            std::vector<Move> expected;
            for (const Edge& e : missing_edges(s.ugraph()))
                if (chromatic_at_most(s.ugraph().with_edge(e), k))
                    expected.push_back({e.u, e.v});
            CHECK(legal == expected);
            CHECK(s.is_terminal() == legal.empty());
            if (legal.empty()) break;
            s = s.after(legal[rng() % legal.size()]);
        }
        CHECK(is_orientation_saturated(s.ugraph(), k));
    }
}

TEST_CASE("playout reaches known scores") {
    CHECK(playout_named(directed_config(2, 3), "greedy", "greedy", 1).final_score == 1);
    CHECK(playout_named(directed_config(3, 2), "greedy", "greedy", 1).final_score == 0);
    CHECK(playout_named(directed_config(2, 3), "random", "random", 99).final_score == 1);
}

TEST_CASE("random playouts are deterministic under a fixed seed") {
    const Transcript a = playout_named(directed_config(6, 4), "random", "random", 12345);
    const Transcript b = playout_named(directed_config(6, 4), "random", "random", 12345);
    CHECK(to_text(a) == to_text(b));
    const Transcript c = playout_named(directed_config(6, 4), "random", "random", 54321);
    CHECK(to_text(a) != to_text(c));  // overwhelmingly likely
}

TEST_CASE("transcripts replay and round trip") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const Transcript t =
            playout_named(directed_config(5, 4), "random", "random", rng());
        GameState end = replay(t);
        CHECK(end.is_terminal());
        CHECK(end.moves_made() == t.final_score);
        CHECK(to_text(transcript_from_text(to_text(t))) == to_text(t));
    }
}

TEST_CASE("bias blocks run to length unless the game ends inside one") {
    const Transcript t =
        playout_named(directed_config(8, 4, 2, 3), "random", "random", 7);
    int i = 0;
    const int block = 5;
    for (; i + block <= static_cast<int>(t.moves.size()); i += block) {
        for (int j = 0; j < 2; ++j)
            CHECK(t.moves[static_cast<std::size_t>(i + j)].first == Player::prolonger);
        for (int j = 2; j < 5; ++j)
            CHECK(t.moves[static_cast<std::size_t>(i + j)].first == Player::shortener);
    }
    // a partial final block is forfeited at saturation
    CHECK(static_cast<int>(t.moves.size()) == t.final_score);
}

TEST_CASE("transcript text format is frozen") {
    const Transcript t = playout_named(directed_config(4, 3), "greedy", "greedy", 0);
    const std::string golden = read_file(std::string(SATGAME_GOLDEN_DIR) +
                                         "/transcript_dhom_n4_k3_greedy.txt");
    CHECK(to_text(t) == golden);
}

TEST_CASE("orientation playout terminates on a maximal colourable board") {
    const GameConfig cfg = orientation_config(8, 3);
    const Transcript t = playout_named(cfg, "greedy", "greedy", 3);
    GameState end = replay(t);
    CHECK(end.is_terminal());
    CHECK(is_orientation_saturated(end.ugraph(), 3));
    CHECK(t.final_score == end.ugraph().edge_count());
}
