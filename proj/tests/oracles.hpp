#pragma once
// Slow, literal reference implementations used to cross-check the library.

#include <cstdint>
#include <vector>

#include "gamedep/core.hpp"
#include "gamedep/derivation.hpp"
#include "gamedep/equilibrium.hpp"
#include "gamedep/search.hpp"

namespace oracle {

using gamedep::DependencyGraph;
using gamedep::Game;
using gamedep::PlayerSet;
using gamedep::Rational;
using gamedep::StrategyProfile;

// Payoff read straight off the table layout: scope players in declaration
// order, last one fastest.
inline Rational payoff(const Game& game, std::size_t v, const std::vector<std::uint32_t>& s) {
  const auto& table = game.table(v);
  std::size_t cell = 0;
  for (std::size_t p = 0; p < game.player_count(); ++p) {
    if (!table.scope().contains(p)) continue;
    cell = cell * game.strategy_count(p) + s[p];
  }
  return table.value(cell);
}

// Every profile, every player, every alternative strategy.
inline std::vector<StrategyProfile> equilibria(const Game& game) {
  const std::size_t n = game.player_count();
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) total *= game.strategy_count(v);
  std::vector<StrategyProfile> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> s(n);
    std::uint64_t rest = code;
    for (std::size_t v = n; v-- > 0;) {
      s[v] = static_cast<std::uint32_t>(rest % game.strategy_count(v));
      rest /= game.strategy_count(v);
    }
    bool stable = true;
    for (std::size_t v = 0; v < n && stable; ++v) {
      const Rational here = payoff(game, v, s);
      for (std::uint32_t alt = 0; alt < game.strategy_count(v) && stable; ++alt) {
        auto t = s;
        t[v] = alt;
        if (here < payoff(game, v, t)) stable = false;
      }
    }
    if (stable) out.push_back(StrategyProfile{s});
  }
  return out;
}

// Quadratic pairwise check of A |> B.
inline bool depends(const std::vector<StrategyProfile>& ne, PlayerSet lhs, PlayerSet rhs) {
  for (const auto& s : ne) {
    for (const auto& t : ne) {
      if (gamedep::agrees_on(s, t, lhs) && !gamedep::agrees_on(s, t, rhs)) return false;
    }
  }
  return true;
}

// Saturates the whole atom space 2^n x 2^n under the four schemas applied
// literally: every C for Augmentation, every middle set for Transitivity,
// every cut and every split (A, B) with A,B = lhs for Contiguity.
class NaiveProver {
 public:
  NaiveProver(const DependencyGraph& graph, const gamedep::Hypotheses& hyps)
      : n_(graph.size()), sets_(std::uint64_t{1} << n_), known_(sets_ * sets_, 0) {
    for (std::uint64_t x = 0; x < sets_; ++x) {
      for (std::uint64_t y = 0; y < sets_; ++y) {
        if ((y & ~x) == 0) known_[x * sets_ + y] = 1;
      }
    }
    for (const auto& h : hyps) known_[h.lhs.bits() * sets_ + h.rhs.bits()] = 1;

    std::vector<std::uint64_t> walls(sets_);
    for (std::uint64_t u = 0; u < sets_; ++u) {
      walls[u] = (gamedep::border(graph, PlayerSet(u)) | gamedep::border(graph, graph.vertices() - PlayerSet(u))).bits();
    }

    bool changed = true;
    auto learn = [&](std::uint64_t x, std::uint64_t y) {
      if (!known_[x * sets_ + y]) {
        known_[x * sets_ + y] = 1;
        changed = true;
      }
    };
    while (changed) {
      changed = false;
      for (std::uint64_t x = 0; x < sets_; ++x) {
        for (std::uint64_t y = 0; y < sets_; ++y) {
          if (!known_[x * sets_ + y]) continue;
          for (std::uint64_t c = 0; c < sets_; ++c) learn(x | c, y | c);
          for (std::uint64_t z = 0; z < sets_; ++z) {
            if (known_[y * sets_ + z]) learn(x, z);
          }
          for (std::uint64_t u = 0; u < sets_; ++u) {
            const std::uint64_t w = (sets_ - 1) & ~u;
            if ((y & ~w) != 0) continue;
            // A ranges over subsets of x n u, B over supersets of x - A within x.
            const std::uint64_t au = x & u;
            for (std::uint64_t a = au;; a = (a - 1) & au) {
              const std::uint64_t rest = x & ~a;
              const std::uint64_t spare = a;
              for (std::uint64_t extra = spare;; extra = (extra - 1) & spare) {
                learn(walls[u] | rest | extra, y);
                if (extra == 0) break;
              }
              if (a == 0) break;
            }
          }
        }
      }
    }
  }

  bool derives(PlayerSet lhs, PlayerSet rhs) const { return known_[lhs.bits() * sets_ + rhs.bits()] != 0; }
  std::size_t vertex_count() const { return n_; }

 private:
  std::size_t n_;
  std::uint64_t sets_;
  std::vector<char> known_;
};

// Distance by breadth-first search.
inline std::vector<std::vector<int>> distances(const DependencyGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> queue{s};
    dist[s][s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t w = 0; w < n; ++w) {
        if (graph.adjacent(v, w) && dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

inline bool sparse(const DependencyGraph& graph, PlayerSet set) {
  const auto dist = distances(graph);
  for (std::size_t u : set.members()) {
    for (std::size_t v : set.members()) {
      if (u != v && dist[u][v] >= 0 && dist[u][v] < 3) return false;
    }
  }
  return true;
}

inline DependencyGraph random_graph(gamedep::SplitMix64& rng, std::size_t n, unsigned edge_percent) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  DependencyGraph graph(names);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.below(100) < edge_percent) graph.add_edge(u, v);
    }
  }
  return graph;
}

}  // namespace oracle
