#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "psylow/bigint.hpp"
#include "psylow/perm.hpp"

namespace psylow {

struct BsgsLevel {
  Point base = 0;
  // strong generators whose stall level is exactly this one; the stabilizer
  // at level k is generated by the union of gens over levels k and deeper
  std::vector<Permutation> gens;
  std::vector<Point> orbit;       // discovery order; orbit[0] == base
  std::vector<int> slot;          // point -> index into transversal, -1 outside the orbit
  std::vector<Permutation> transversal;  // transversal[slot[b]] maps base to b
};

// Deterministic Schreier-Sims stabilizer chain. Each new base point is the
// smallest point moved by the residue that forced the level, so identical
// generator lists always produce identical chains.
class Bsgs {
public:
  Bsgs(unsigned degree, const std::vector<Permutation>& gens);

  unsigned degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool contains(const Permutation& p) const;

  // strips p through the chain starting at level `from`; an identity result
  // for from == 0 means membership
  Permutation sift(Permutation p, std::size_t from = 0) const;

  const std::vector<BsgsLevel>& levels() const { return levels_; }
  std::vector<Point> base_points() const;

private:
  void insert(Permutation r);           // store r at its stall level
  void rebuild_orbit(std::size_t level);
  bool close_level(std::size_t level);  // false if an insertion happened deeper
  void verify_all();

  unsigned degree_;
  std::vector<BsgsLevel> levels_;
  BigInt order_ = 1;
};

// Finite permutation group given by generators. The stabilizer chain is built
// lazily on first use and shared between copies.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> gens);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const Bsgs& bsgs() const;
  const BigInt& order() const { return bsgs().order(); }
  std::uint64_t order_u64() const;  // CapError if the order exceeds 64 bits
  bool contains(const Permutation& p) const;

private:
  struct Lazy;

  unsigned degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Lazy> lazy_;  // shared across copies, built once
};

bool is_abelian(const PermGroup& g);

}  // namespace psylow
