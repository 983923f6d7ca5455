#include <sstream>
#include <stdexcept>

#include "satgame/game.hpp"

namespace satgame {

std::string to_text(const Transcript& t) {
    std::ostringstream out;
    const GameConfig& c = t.config;
    out << "game " << kind_name(c.kind) << " n " << c.n << " k " << c.k << " bias "
        << c.bias_prolonger << ":" << c.bias_shortener << " first "
        << (c.first_mover == Player::prolonger ? "P" : "S") << "\n";
    for (const auto& [player, move] : t.moves)
        out << (player == Player::prolonger ? "P" : "S") << " " << move.u << " " << move.v
            << "\n";
    out << "score " << t.final_score << "\n";
    return out.str();
}

Transcript transcript_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag, kind, nk, kk, biask, bias, firstk, first;
    int n = 0, k = 0;
    if (!(in >> tag >> kind >> nk >> n >> kk >> k >> biask >> bias >> firstk >> first) ||
        tag != "game" || nk != "n" || kk != "k" || biask != "bias" || firstk != "first")
        throw std::invalid_argument("transcript: malformed header");

    const auto colon = bias.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("transcript: malformed bias");
    const int a = std::stoi(bias.substr(0, colon));
    const int b = std::stoi(bias.substr(colon + 1));
    const Player fm = first == "P" ? Player::prolonger : Player::shortener;

    Transcript t;
    t.config = kind_from_name(kind) == GameKind::directed_hom
                   ? directed_config(n, k, a, b, fm)
                   : orientation_config(n, k, a, b, fm);

    std::string who;
    while (in >> who) {
        if (who == "score") {
            if (!(in >> t.final_score))
                throw std::invalid_argument("transcript: malformed score line");
            return t;
        }
        Move m;
        if ((who != "P" && who != "S") || !(in >> m.u >> m.v))
            throw std::invalid_argument("transcript: malformed move line");
        t.moves.emplace_back(who == "P" ? Player::prolonger : Player::shortener, m);
    }
    throw std::invalid_argument("transcript: missing score line");
}

GameState replay(const Transcript& t) {
    GameState s = GameState::initial(t.config);
    for (const auto& [player, move] : t.moves) {
        if (s.current_player() != player)
            throw std::invalid_argument("transcript: move attributed to the wrong player");
        s = s.after(move);
    }
    if (s.moves_made() != t.final_score)
        throw std::invalid_argument("transcript: recorded score does not match move count");
    return s;
}

}  // namespace satgame
