#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psylow/bigint.hpp"
#include "psylow/corpus.hpp"
#include "psylow/counting.hpp"
#include "psylow/element_table.hpp"
#include "psylow/group_spec.hpp"
#include "psylow/limits.hpp"

namespace psylow {

struct CongruenceRow {
  unsigned p = 0;
  unsigned a = 0;
  BigInt count;
  unsigned modulus = 0;  // p for the mod-p law, p^2 for the mod-p^2 law
  unsigned residue = 0;  // count mod modulus
};

// Mod-p law: for every prime power p^a dividing |G|, the number of subgroups
// of order p^a is 1 (mod p). The trivial group yields the single degenerate
// row (p=2, a=0, count=1). The verify_ flavor throws VerificationError on a
// violated row; both return all rows.
std::vector<CongruenceRow> frobenius_rows(const ElementTable& t,
                                          const Limits& lim = {});
std::vector<CongruenceRow> verify_frobenius(const ElementTable& t,
                                            const Limits& lim = {});

// Mod-p^2 law: whenever p^(a+1) divides |G|, the number of subgroups of
// order p^a is 1 or 1+p (mod p^2). Rows cover a = 0..m-1 per prime; a group
// of squarefree order yields no rows.
std::vector<CongruenceRow> kulakoff_hall_rows(const ElementTable& t,
                                              const Limits& lim = {});
std::vector<CongruenceRow> verify_kulakoff_hall(const ElementTable& t,
                                                const Limits& lim = {});

// For odd p with p^2 | |G|: every count of subgroups of order p^a with
// 1 <= a <= m-1 is 1 (mod p^2) exactly when the Sylow p-subgroup is cyclic.
// p = 2 is rejected (the dihedral group of order 8 breaks the equivalence).
struct CyclicCriterionReport {
  unsigned p = 0;
  bool sylow_cyclic = false;
  bool holds = false;
  std::vector<CongruenceRow> rows;  // residues mod p^2 for a = 1..m-1
};
CyclicCriterionReport cyclic_criterion_report(const ElementTable& t,
                                              unsigned p,
                                              const Limits& lim = {});
CyclicCriterionReport verify_cyclic_criterion(const ElementTable& t,
                                              unsigned p,
                                              const Limits& lim = {});

// Sylow counts multiply across direct products: n_p(A x B) = n_p(A) n_p(B).
struct MultiplicativityCheck {
  std::string spec1, spec2;
  unsigned p = 0;
  std::uint64_t n1 = 0, n2 = 0, n12 = 0;
  bool holds = false;
};
MultiplicativityCheck sylow_multiplicativity_check(const GroupSpec& a,
                                                   const GroupSpec& b,
                                                   unsigned p,
                                                   const Limits& lim = {});
MultiplicativityCheck verify_sylow_multiplicativity(const GroupSpec& a,
                                                    const GroupSpec& b,
                                                    unsigned p,
                                                    const Limits& lim = {});

enum class VerdictStatus {
  NotFrobeniusByThm1,  // n != 1 (mod p)
  NotFrobeniusByThm2,  // n mod p^2 outside {1, 1+p} and no Sylow-type witness
  WitnessFound,
  NoWitnessInCorpus,
  KnownPseudo,  // curated: provably not a Frobenius p-number
};
std::string to_string(VerdictStatus s);

struct Witness {
  GroupSpec spec;
  unsigned a = 0;  // the witness has exactly n subgroups of order p^a
};

struct Verdict {
  unsigned p = 0;
  std::uint64_t n = 0;
  VerdictStatus status = VerdictStatus::NoWitnessInCorpus;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

enum class FactKind {
  SylowRealizable,  // known to occur as a Sylow count
  PseudoSylow,      // Frobenius number that is not a Sylow number
  PseudoFrobenius,  // provably not a Frobenius number at all
};

struct KnownFact {
  unsigned p = 0;
  std::optional<std::uint64_t> n;  // empty: every odd n (the p = 2 entry)
  FactKind kind = FactKind::SylowRealizable;
  std::string text;
};

const std::vector<KnownFact>& known_facts();
const KnownFact* find_fact(unsigned p, std::uint64_t n);

// Count profiles over a corpus, computed once per (entry, prime) and reused
// across classification queries.
class CorpusCache {
public:
  explicit CorpusCache(std::vector<CorpusEntry> entries, Limits lim = {});

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  const Limits& limits() const { return lim_; }

  // counts of subgroups of order p^a for a = 0..m in entry i
  const std::vector<BigInt>& counts(std::size_t i, unsigned p);

private:
  std::vector<CorpusEntry> entries_;
  Limits lim_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<BigInt>> cache_;
};

// Deterministic witness search: entries ascending by (order, text), a
// ascending; when n = 1 (mod p^2) a Sylow-type witness is preferred over an
// earlier non-Sylow one. A witness match is independently recounted from a
// freshly built group; contradictions with the curated facts table raise
// VerificationError.
Verdict classify_number(CorpusCache& corpus, unsigned p, std::uint64_t n,
                        std::optional<unsigned> max_a = std::nullopt);

// classify every n <= n_max with n = 1 or 1+p (mod p^2); n_max <= 1000
std::vector<Verdict> scan_range(CorpusCache& corpus, unsigned p,
                                std::uint64_t n_max);

}  // namespace psylow
