#include "satgame/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "satgame/coloring.hpp"
#include "satgame/errors.hpp"
#include "satgame/oracle.hpp"

namespace satgame {

namespace {

void validate_config(const GameConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("game config: board size must be >= 1");
    const int cap = cfg.kind == GameKind::directed_hom ? Digraph::max_vertices
                                                       : UGraph::max_vertices;
    if (cfg.n > cap)
        throw std::invalid_argument("game config: board size exceeds representation cap");
    if (cfg.bias_prolonger < 1 || cfg.bias_shortener < 1)
        throw std::invalid_argument("game config: both bias parts must be >= 1");
    if (cfg.k < 1) throw std::invalid_argument("game config: k must be >= 1");
    if (cfg.kind == GameKind::orientation && cfg.k > 255)
        throw std::invalid_argument("game config: colour bound above witness width");
}

}  // namespace

GameConfig directed_config(int n, int k, int a, int b, Player first) {
    GameConfig cfg{n, GameKind::directed_hom, k,
                   FamilySpec::walk_on_k(k, ContainmentMode::homomorphism), a, b, first};
    validate_config(cfg);
    return cfg;
}

GameConfig directed_config_with_family(int n, FamilySpec fam, int a, int b, Player first) {
    fam.mode = ContainmentMode::homomorphism;
    const int k = fam.is_walk() ? fam.walk_k() : 0;
    GameConfig cfg{n, GameKind::directed_hom, std::max(k, 1), std::move(fam), a, b, first};
    validate_config(cfg);
    return cfg;
}

GameConfig orientation_config(int n, int k, int a, int b, Player first) {
    GameConfig cfg{n, GameKind::orientation, k,
                   FamilySpec::walk_on_k(k + 1, ContainmentMode::subdigraph), a, b, first};
    validate_config(cfg);
    return cfg;
}

GameState GameState::initial(const GameConfig& cfg) {
    validate_config(cfg);
    auto shared = std::make_shared<const GameConfig>(cfg);
    if (cfg.kind == GameKind::directed_hom) {
        DirectedBoard b{Digraph(cfg.n), {}};
        b.caches = compute_walk_caches(b.g);
        return GameState(std::move(shared), std::move(b));
    }
    OrientBoard b;
    b.g = UGraph(cfg.n);
    b.colour.assign(static_cast<std::size_t>(cfg.n), 0);
    b.colour_members.assign(static_cast<std::size_t>(cfg.k), bitset_row(cfg.n));
    for (int v = 0; v < cfg.n; ++v) b.colour_members[0].set(v);
    b.used = cfg.n > 0 ? 1 : 0;
    return GameState(std::move(shared), std::move(b));
}

GameState GameState::from_board(const GameConfig& cfg, const Digraph& board) {
    validate_config(cfg);
    if (cfg.kind != GameKind::directed_hom)
        throw std::invalid_argument("from_board: directed board for an orientation game");
    if (board.order() != cfg.n)
        throw std::invalid_argument("from_board: board order mismatch");
    if (!is_family_free(board, cfg.family))
        throw std::invalid_argument("from_board: board already contains a forbidden structure");
    DirectedBoard b{board, compute_walk_caches(board)};
    GameState s(std::make_shared<const GameConfig>(cfg), std::move(b));
    s.moves_made_ = board.arc_count();
    return s;
}

GameState GameState::from_board(const GameConfig& cfg, const UGraph& board) {
    validate_config(cfg);
    if (cfg.kind != GameKind::orientation)
        throw std::invalid_argument("from_board: undirected board for a directed game");
    if (board.order() != cfg.n)
        throw std::invalid_argument("from_board: board order mismatch");
    auto witness = find_k_colouring_decomposed(board, cfg.k);
    if (!witness)
        throw std::invalid_argument("from_board: board is not colourable within the bound");
    OrientBoard b;
    b.g = board;
    b.colour = std::move(*witness);
    b.colour_members.assign(static_cast<std::size_t>(cfg.k), bitset_row(cfg.n));
    bool seen[256] = {};
    for (int v = 0; v < cfg.n; ++v) {
        b.colour_members[b.colour[v]].set(v);
        if (!seen[b.colour[v]]) {
            seen[b.colour[v]] = true;
            ++b.used;
        }
    }
    GameState s(std::make_shared<const GameConfig>(cfg), std::move(b));
    s.moves_made_ = board.edge_count();
    return s;
}

Player GameState::current_player() const {
    const int pos = schedule_pos();
    if (cfg_->first_mover == Player::prolonger)
        return pos < cfg_->bias_prolonger ? Player::prolonger : Player::shortener;
    return pos < cfg_->bias_shortener ? Player::shortener : Player::prolonger;
}

bool GameState::is_legal(Move m) const {
    if (m.u < 0 || m.u >= cfg_->n || m.v < 0 || m.v >= cfg_->n || m.u == m.v) return false;
    if (is_directed()) {
        const auto& b = std::get<DirectedBoard>(board_);
        if (b.g.has_arc(m.u, m.v)) return false;
        if (cfg_->family.is_walk())
            return arc_keeps_walk_free(b.g, b.caches, cfg_->family.walk_k(), m.u, m.v);
        return is_family_free(b.g.with_arc({m.u, m.v}), cfg_->family);
    }
    const auto& b = std::get<OrientBoard>(board_);
    Edge e{m.u, m.v};
    if (b.g.has_edge(e)) return false;
    return orient_edge_witness(e).has_value();
}

std::optional<std::vector<std::uint8_t>> GameState::orient_edge_witness(Edge e) const {
    const auto& b = std::get<OrientBoard>(board_);
    const int k = cfg_->k;
    const int cu = b.colour[e.u];
    const int cv = b.colour[e.v];
    if (cu != cv) return std::vector<std::uint8_t>{};  // witness unchanged

    // Try moving one endpoint to another colour.
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        for (int c = 0; c < k; ++c) {
            if (c == b.colour[y]) continue;
            if (b.colour_members[c].intersects(b.g.neighbours(x))) continue;
            auto witness = b.colour;
            witness[x] = static_cast<std::uint8_t>(c);
            return witness;
        }
    }

    // Cheap refutation: a (k-1)-clique inside the common neighbourhood plus
    // both endpoints forms a (k+1)-clique after the edge.
    {
        bitset_row common = b.g.neighbours(e.u);
        common &= b.g.neighbours(e.v);
        int clique = 0;
        bitset_row cur = common;
        for (int w = cur.next(0); w != -1; w = cur.next(0)) {
            ++clique;
            cur &= b.g.neighbours(w);
        }
        if (clique >= k - 1) return std::nullopt;
    }

    // Exact decision on the extended board.
    return find_k_colouring_decomposed(b.g.with_edge(e), k);
}

GameState GameState::after(Move m) const {
    if (m.u < 0 || m.u >= cfg_->n || m.v < 0 || m.v >= cfg_->n || m.u == m.v)
        throw illegal_move_error(illegal_move_error::reason::out_of_range,
                                 "move endpoints out of range or equal");
    if (is_directed()) {
        const auto& b = std::get<DirectedBoard>(board_);
        if (b.g.has_arc(m.u, m.v))
            throw illegal_move_error(illegal_move_error::reason::duplicate,
                                     "arc already on the board");
        if (!is_legal(m))
            throw illegal_move_error(illegal_move_error::reason::forbidden,
                                     "arc would complete a forbidden structure");
        DirectedBoard nb{b.g.with_arc({m.u, m.v}), {}};
        nb.caches = compute_walk_caches(nb.g);
        GameState next(cfg_, std::move(nb));
        next.moves_made_ = moves_made_ + 1;
        return next;
    }

    const auto& b = std::get<OrientBoard>(board_);
    Edge e{m.u, m.v};
    if (b.g.has_edge(e))
        throw illegal_move_error(illegal_move_error::reason::duplicate,
                                 "edge already on the board");
    auto witness = orient_edge_witness(e);
    if (!witness)
        throw illegal_move_error(illegal_move_error::reason::forbidden,
                                 "edge would make the board non-colourable");

    OrientBoard nb;
    nb.g = b.g.with_edge(e);
    nb.colour = witness->empty() ? b.colour : std::move(*witness);
    nb.colour_members.assign(static_cast<std::size_t>(cfg_->k), bitset_row(cfg_->n));
    bool seen[256] = {};
    nb.used = 0;
    for (int v = 0; v < cfg_->n; ++v) {
        nb.colour_members[nb.colour[v]].set(v);
        if (!seen[nb.colour[v]]) {
            seen[nb.colour[v]] = true;
            ++nb.used;
        }
    }
    GameState next(cfg_, std::move(nb));
    next.moves_made_ = moves_made_ + 1;
    return next;
}

std::vector<Move> GameState::legal_moves() const {
    std::vector<Move> out;
    const int n = cfg_->n;
    if (is_directed()) {
        const auto& b = std::get<DirectedBoard>(board_);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v || b.g.has_arc(u, v)) continue;
                if (is_legal({u, v})) out.push_back({u, v});
            }
        return out;
    }
    const auto& b = std::get<OrientBoard>(board_);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!b.g.has_edge(u, v) && is_legal({u, v})) out.push_back({u, v});
    return out;
}

bool GameState::is_terminal() const {
    const int n = cfg_->n;
    if (is_directed()) {
        const auto& b = std::get<DirectedBoard>(board_);
        if (!cfg_->family.is_walk()) return legal_moves().empty();
        const int k = cfg_->family.walk_k();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && arc_keeps_walk_free(b.g, b.caches, k, u, v)) return false;
        return true;
    }

    // The witness decides: a missing cross-colour pair is playable as-is; if
    // every missing pair is monochromatic the board is complete multipartite,
    // which is terminal exactly when all k colours are in use.
    const auto& b = std::get<OrientBoard>(board_);
    bool any_missing = false;
    for (int u = 0; u < n; ++u) {
        bitset_row missing(n);
        for (int v = u + 1; v < n; ++v) missing.set(v);
        missing.subtract(b.g.neighbours(u));
        if (!missing.any()) continue;
        any_missing = true;
        bitset_row cross = missing;
        cross.subtract(b.colour_members[b.colour[u]]);
        if (cross.any()) return false;
    }
    if (!any_missing) return true;
    return b.used == cfg_->k;
}

std::string kind_name(GameKind kind) {
    return kind == GameKind::directed_hom ? "dhom" : "orient";
}

GameKind kind_from_name(const std::string& name) {
    if (name == "dhom") return GameKind::directed_hom;
    if (name == "orient") return GameKind::orientation;
    throw std::invalid_argument("unknown game kind: " + name);
}

}  // namespace satgame
