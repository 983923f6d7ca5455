#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "satgame/digraph.hpp"
#include "satgame/family.hpp"
#include "satgame/ugraph.hpp"
#include "satgame/walk_oracle.hpp"

namespace satgame {

enum class Player { prolonger, shortener };

inline Player other(Player p) {
    return p == Player::prolonger ? Player::shortener : Player::prolonger;
}

enum class GameKind { directed_hom, orientation };

// A move: arc u -> v in the directed game, edge {u, v} (u < v) in the
// orientation game.
struct Move {
    int u = 0;
    int v = 0;

    friend bool operator==(const Move&, const Move&) = default;
    friend std::strong_ordering operator<=>(const Move&, const Move&) = default;
};

/**
 * Game rules: board size, kind, forbidden family, bias (the maximiser takes
 * `a` consecutive turns, then the minimiser takes `b`), and who moves first.
 */
struct GameConfig {
    int n = 0;
    GameKind kind = GameKind::directed_hom;
    int k = 0;  // directed: forbidden walk on k vertices; orientation: colour bound
    FamilySpec family = FamilySpec{FamilySpec::WalkOnK{3}, ContainmentMode::homomorphism};
    int bias_prolonger = 1;
    int bias_shortener = 1;
    Player first_mover = Player::prolonger;

    int block_length() const { return bias_prolonger + bias_shortener; }
};

// Walk-avoiding game on the complete digraph: forbids any directed walk on k
// vertices (homomorphism containment).
GameConfig directed_config(int n, int k, int a = 1, int b = 1,
                           Player first = Player::prolonger);

// Directed game with an explicit forbidden family.
GameConfig directed_config_with_family(int n, FamilySpec fam, int a = 1, int b = 1,
                                       Player first = Player::prolonger);

// Orientation game: the undirected board must keep an orientation with no
// directed path on k+1 vertices, i.e. stay k-colourable.
GameConfig orientation_config(int n, int k, int a = 1, int b = 1,
                              Player first = Player::prolonger);

/**
 * Immutable game position. Transitions copy the board (copy-and-insert), so
 * states are safe to share across workers. Directed boards carry longest-path
 * caches making single-arc legality O(1); orientation boards carry a witness
 * colouring so the common legality checks avoid any search.
 */
class GameState {
public:
    static GameState initial(const GameConfig& cfg);

    // Resume from a mid-game board; validates that the board is legal under
    // the config's rules. The move count is the board's edge count.
    static GameState from_board(const GameConfig& cfg, const Digraph& board);
    static GameState from_board(const GameConfig& cfg, const UGraph& board);

    const GameConfig& config() const { return *cfg_; }
    int moves_made() const { return moves_made_; }
    int schedule_pos() const { return moves_made_ % cfg_->block_length(); }
    Player current_player() const;

    bool is_legal(Move m) const;
    std::vector<Move> legal_moves() const;
    bool is_terminal() const;

    // Validated transition; throws illegal_move_error (duplicate vs forbidden).
    GameState after(Move m) const;

    bool is_directed() const { return cfg_->kind == GameKind::directed_hom; }
    const Digraph& digraph() const { return std::get<DirectedBoard>(board_).g; }
    const UGraph& ugraph() const { return std::get<OrientBoard>(board_).g; }

    // Orientation only: a valid k-colouring of the current board.
    const std::vector<std::uint8_t>& witness_colours() const {
        return std::get<OrientBoard>(board_).colour;
    }
    int witness_colour_count() const { return std::get<OrientBoard>(board_).used; }

    const WalkCaches& walk_caches() const { return std::get<DirectedBoard>(board_).caches; }

private:
    struct DirectedBoard {
        Digraph g;
        WalkCaches caches;  // valid when the family is a walk
    };
    struct OrientBoard {
        UGraph g;
        std::vector<std::uint8_t> colour;
        std::vector<bitset_row> colour_members;  // one bitset per colour
        int used = 0;
    };

    GameState(std::shared_ptr<const GameConfig> cfg, std::variant<DirectedBoard, OrientBoard> b)
        : cfg_(std::move(cfg)), board_(std::move(b)) {}

    // nullopt: illegal. Otherwise the witness for g + e (empty vector: keep).
    std::optional<std::vector<std::uint8_t>> orient_edge_witness(Edge e) const;

    std::shared_ptr<const GameConfig> cfg_;
    std::variant<DirectedBoard, OrientBoard> board_;
    int moves_made_ = 0;
};

/**
 * Ordered move list with player attribution and the terminal score. Replaying
 * the moves from the empty board reproduces the terminal position, every
 * prefix staying inside the rules.
 */
struct Transcript {
    GameConfig config;
    std::vector<std::pair<Player, Move>> moves;
    int final_score = 0;
};

// Fixed line format: one header line with the config fields, one
// "P|S u v" line per move, and a terminal "score <t>" line.
std::string to_text(const Transcript& t);
Transcript transcript_from_text(const std::string& text);

// Replays the transcript from the empty board; throws on any illegal prefix
// or score mismatch, returns the terminal state otherwise.
GameState replay(const Transcript& t);

std::string kind_name(GameKind kind);
GameKind kind_from_name(const std::string& name);

}  // namespace satgame
