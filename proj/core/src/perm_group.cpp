#include "psylow/perm_group.hpp"

#include <limits>
#include <mutex>

#include "psylow/errors.hpp"
#include "psylow/limits.hpp"

namespace psylow {

namespace {

Point min_moved_point(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p.apply(i) != i) return i;
  throw PreconditionError("identity has no moved point");
}

}  // namespace

Bsgs::Bsgs(unsigned degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw PreconditionError("degree must be in 1.." + std::to_string(kMaxDegree));
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch");
    if (g.is_identity()) continue;
    Permutation r = sift(g);
    if (r.is_identity()) continue;
    insert(std::move(r));
    verify_all();
  }
  order_ = 1;
  for (const auto& lev : levels_) order_ *= lev.orbit.size();
}

// Stores r at its stall level (the first level whose base it moves) and
// refreshes the orbits above it: r joins the effective generator set of every
// level up to the stall, and a point fixed by r can still bridge two orbit
// branches there.
void Bsgs::insert(Permutation r) {
  std::size_t l = 0;
  while (l < levels_.size() && r.apply(levels_[l].base) == levels_[l].base) ++l;
  if (l == levels_.size()) {
    BsgsLevel lev;
    lev.base = min_moved_point(r);
    levels_.push_back(std::move(lev));
  }
  levels_[l].gens.push_back(std::move(r));
  for (std::size_t k = 0; k <= l; ++k) rebuild_orbit(k);
}

void Bsgs::rebuild_orbit(std::size_t level) {
  BsgsLevel& lev = levels_[level];
  lev.orbit.clear();
  lev.transversal.clear();
  lev.slot.assign(degree_, -1);
  lev.orbit.push_back(lev.base);
  lev.slot[lev.base] = 0;
  lev.transversal.emplace_back(degree_);
  for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
    Point b = lev.orbit[i];
    for (std::size_t j = level; j < levels_.size(); ++j) {
      for (const auto& s : levels_[j].gens) {
        Point c = s.apply(b);
        if (lev.slot[c] < 0) {
          lev.slot[c] = static_cast<int>(lev.transversal.size());
          lev.transversal.push_back(compose(s, lev.transversal[lev.slot[b]]));
          lev.orbit.push_back(c);
        }
      }
    }
  }
}

// One verification pass over the Schreier generators of `level`. A failing
// sift inserts the residue (deeper than `level`, since Schreier generators
// fix its base) and returns false so the caller can rebuild its schedule.
bool Bsgs::close_level(std::size_t level) {
  BsgsLevel& lev = levels_[level];
  for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
    Point b = lev.orbit[i];
    const Permutation& ub = lev.transversal[lev.slot[b]];
    for (std::size_t j = level; j < levels_.size(); ++j) {
      for (const auto& s : levels_[j].gens) {
        Point c = s.apply(b);
        Permutation h =
            compose(lev.transversal[lev.slot[c]].inverse(), compose(s, ub));
        if (h.is_identity()) continue;
        Permutation r = sift(std::move(h), level + 1);
        if (r.is_identity()) continue;
        insert(std::move(r));
        return false;
      }
    }
  }
  return true;
}

// Sweeps deepest level first so that every sift below a level under
// verification runs against an already closed subchain; any insertion
// restarts the sweep. Each insertion strictly grows the subgroup the deeper
// chain describes, so the loop terminates.
void Bsgs::verify_all() {
  for (bool clean = false; !clean;) {
    clean = true;
    for (std::size_t k = levels_.size(); k-- > 0;) {
      if (!close_level(k)) {
        clean = false;
        break;
      }
    }
  }
}

Permutation Bsgs::sift(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const BsgsLevel& lev = levels_[l];
    Point b = p.apply(lev.base);
    if (lev.slot[b] < 0) return p;
    p = compose(lev.transversal[lev.slot[b]].inverse(), p);
  }
  return p;
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).is_identity();
}

std::vector<Point> Bsgs::base_points() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& lev : levels_) out.push_back(lev.base);
  return out;
}

struct PermGroup::Lazy {
  std::once_flag once;
  std::shared_ptr<const Bsgs> bsgs;
};

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0 || degree > kMaxDegree)
    throw PreconditionError("degree must be in 1.." + std::to_string(kMaxDegree));
  for (const auto& g : gens_) {
    if (g.degree() != degree_)
      throw PreconditionError("generator degree mismatch");
  }
}

const Bsgs& PermGroup::bsgs() const {
  std::call_once(lazy_->once, [this] {
    lazy_->bsgs = std::make_shared<const Bsgs>(degree_, gens_);
  });
  return *lazy_->bsgs;
}

std::uint64_t PermGroup::order_u64() const {
  const BigInt& n = order();
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw CapError("group order exceeds 64-bit range");
  return n.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& p) const { return bsgs().contains(p); }

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

}  // namespace psylow
