#pragma once

#include <cstdint>

#include "me2c/graph.hpp"

namespace me2c {

// Deterministic 64-bit PRNG (splitmix64). Bounded draws use next() % bound;
// the modulo bias is irrelevant here and the scheme is trivial to port, which
// keeps generated instances reproducible across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

Graph gen_cycle(int n);     // n >= 3
Graph gen_complete(int n);  // n >= 1, edges in lexicographic order
Graph gen_petersen();       // outer C5 0..4, spokes, inner pentagram 5..9

// 3n seeded uniform pair draws, keeping a draw when it is simple and leaves
// both endpoints at degree <= 3.
Graph gen_subcubic_random(int n, std::uint64_t seed);

// Line graph of a seeded random base graph on n vertices (each base pair kept
// with probability 1/2). Line graphs are claw-free by construction.
Graph gen_clawfree_random(int n, std::uint64_t seed);

// Plants the perfect matching {(2i, 2i+1)} on an even n, then adds each other
// pair independently with probability p (resolution 1/1000).
Graph gen_pm_random(int n, double p, std::uint64_t seed);

// Chain of k triangles; consecutive triangles share one vertex and every
// unshared triangle vertex carries one pendant needle. k=1 gives n=6, m=6.
Graph gen_cactus_chain(int k);

}  // namespace me2c
