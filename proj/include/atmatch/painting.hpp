#ifndef ATMATCH_PAINTING_HPP
#define ATMATCH_PAINTING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "atmatch/exponent.hpp"
#include "atmatch/plane_graph.hpp"

namespace atmatch {

enum class Player { Lister, Painter };

std::string_view player_name(Player p);

struct PaintOptions {
    std::size_t max_vertices = 8;
    std::size_t max_states = 20'000'000;
    // Let Painter answer only with inclusion-maximal admissible sets. Exact:
    // coloured vertices leave the game, so colouring more never hurts Painter.
    bool maximal_replies = true;
};

struct PaintPly {
    Player player = Player::Lister;
    std::vector<VertexId> vertices;  // marked set A, or coloured set X
};

struct PaintResult {
    Player winner = Player::Lister;
    std::vector<PaintPly> principal_variation;  // first plies of optimal play
    std::size_t states = 0;                     // distinct positions solved
};

struct GameState {
    std::uint32_t uncolored = 0;  // bit i = i-th vertex of the graph
    std::vector<int> tokens;      // indexed like the bits
};

// Exact minimax for the d-defective painting game. Each round Lister marks a
// non-empty set A of uncoloured vertices (each loses a token) and Painter
// colours X within A with max degree of G[X] at most d. Lister wins once an
// uncoloured vertex has no token left.
class PaintSolver {
public:
    PaintSolver(const PlaneGraph& g, const ExponentVector& tokens, int d, PaintOptions options = {});

    PaintResult solve();
    GameState initial_state() const;
    bool painter_wins(const GameState& s);
    // A marked set that wins for Lister from `s`, if any.
    std::optional<std::uint32_t> lister_winning_move(const GameState& s);
    // Painter's best reply to `marked`: a winning one when it exists.
    std::uint32_t painter_reply(const GameState& s, std::uint32_t marked);

    std::vector<VertexId> vertices_of(std::uint32_t mask) const;
    std::size_t states() const { return memo_.size(); }

private:
    std::uint64_t key(std::uint32_t uncolored, const std::vector<int>& tokens) const;
    bool win(std::uint32_t uncolored, std::vector<int> tokens);
    bool lost_for_painter(std::uint32_t uncolored, const std::vector<int>& tokens) const;
    const std::vector<std::uint32_t>& replies(std::uint32_t marked);
    GameState after(const GameState& s, std::uint32_t marked, std::uint32_t colored) const;

    PlaneGraph graph_;
    std::vector<VertexId> order_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<int> start_tokens_;
    int defect_;
    PaintOptions options_;
    std::unordered_map<std::uint64_t, bool> memo_;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> reply_cache_;
};

PaintResult paint_solve(const PlaneGraph& g, const ExponentVector& tokens, int d, PaintOptions options = {});

}  // namespace atmatch

#endif
