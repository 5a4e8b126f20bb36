#include "psylow/verify.hpp"

#include <sstream>

#include "psylow/errors.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

std::string row_text(const CongruenceRow& r, const BigInt& order) {
  std::ostringstream out;
  out << "p=" << r.p << " a=" << r.a << " count=" << r.count << " mod "
      << r.modulus << " = " << r.residue << " (group order " << order << ")";
  return out.str();
}

}  // namespace

std::vector<CongruenceRow> frobenius_rows(const ElementTable& t,
                                          const Limits& lim) {
  std::vector<CongruenceRow> rows;
  if (t.size() == 1) {
    // no prime divides 1; report the one degenerate but valid instance
    rows.push_back(CongruenceRow{2, 0, 1, 2, 1});
    return rows;
  }
  for (auto [p64, m] : factorize(t.size())) {
    unsigned p = static_cast<unsigned>(p64);
    auto profile = count_profile(t, p, lim);
    for (unsigned a = 0; a <= m; ++a) {
      const auto& rep = profile->per_a[a];
      rows.push_back(CongruenceRow{p, a, rep.count, p, rep.mod_p});
    }
  }
  return rows;
}

std::vector<CongruenceRow> verify_frobenius(const ElementTable& t,
                                            const Limits& lim) {
  auto rows = frobenius_rows(t, lim);
  for (const auto& r : rows) {
    if (r.residue != 1)
      throw VerificationError("mod-p congruence violated: " +
                              row_text(r, BigInt(t.size())));
  }
  return rows;
}

std::vector<CongruenceRow> kulakoff_hall_rows(const ElementTable& t,
                                              const Limits& lim) {
  std::vector<CongruenceRow> rows;
  if (t.size() == 1) return rows;
  for (auto [p64, m] : factorize(t.size())) {
    if (m < 1) continue;
    unsigned p = static_cast<unsigned>(p64);
    unsigned p2 = p * p;
    auto profile = count_profile(t, p, lim);
    for (unsigned a = 0; a + 1 <= m; ++a) {
      const auto& rep = profile->per_a[a];
      rows.push_back(CongruenceRow{p, a, rep.count, p2, rep.mod_p2});
    }
  }
  return rows;
}

std::vector<CongruenceRow> verify_kulakoff_hall(const ElementTable& t,
                                                const Limits& lim) {
  auto rows = kulakoff_hall_rows(t, lim);
  for (const auto& r : rows) {
    if (r.residue != 1 && r.residue != 1 + r.p)
      throw VerificationError("mod-p^2 congruence violated: " +
                              row_text(r, BigInt(t.size())));
  }
  return rows;
}

CyclicCriterionReport cyclic_criterion_report(const ElementTable& t,
                                              unsigned p, const Limits& lim) {
  if (!is_prime(p) || p == 2)
    throw PreconditionError(
        "the cyclicity criterion needs an odd prime (p = 2 fails on the "
        "dihedral group of order 8)");
  unsigned m = p_exponent(t.size(), p);
  if (m < 2)
    throw PreconditionError("the cyclicity criterion needs p^2 | |G|");

  CyclicCriterionReport rep;
  rep.p = p;
  SubgroupHandle P = sylow_subgroup(t, p);
  for (auto idx : P.members) {
    if (t.element_order(idx) == P.members.size()) {
      rep.sylow_cyclic = true;
      break;
    }
  }
  auto profile = count_profile(t, p, lim);
  rep.holds = true;
  for (unsigned a = 1; a + 1 <= m; ++a) {
    const auto& r = profile->per_a[a];
    rep.rows.push_back(CongruenceRow{p, a, r.count, p * p, r.mod_p2});
    if ((r.mod_p2 == 1) != rep.sylow_cyclic) rep.holds = false;
  }
  return rep;
}

CyclicCriterionReport verify_cyclic_criterion(const ElementTable& t,
                                              unsigned p, const Limits& lim) {
  auto rep = cyclic_criterion_report(t, p, lim);
  if (!rep.holds) {
    std::ostringstream out;
    out << "cyclicity criterion violated for p=" << p << " on a group of order "
        << t.size() << " (Sylow " << (rep.sylow_cyclic ? "" : "non-")
        << "cyclic)";
    throw VerificationError(out.str());
  }
  return rep;
}

MultiplicativityCheck sylow_multiplicativity_check(const GroupSpec& a,
                                                   const GroupSpec& b,
                                                   unsigned p,
                                                   const Limits& lim) {
  MultiplicativityCheck chk;
  chk.spec1 = a.to_string();
  chk.spec2 = b.to_string();
  chk.p = p;
  ElementTable ta = ElementTable::enumerate(build_group(a), lim);
  ElementTable tb = ElementTable::enumerate(build_group(b), lim);
  GroupSpec prod(GroupSpec::Product{{a, b}});
  ElementTable tp = ElementTable::enumerate(build_group(prod), lim);
  chk.n1 = count_sylow(ta, p, lim);
  chk.n2 = count_sylow(tb, p, lim);
  chk.n12 = count_sylow(tp, p, lim);
  chk.holds = (chk.n12 == chk.n1 * chk.n2);
  return chk;
}

MultiplicativityCheck verify_sylow_multiplicativity(const GroupSpec& a,
                                                    const GroupSpec& b,
                                                    unsigned p,
                                                    const Limits& lim) {
  auto chk = sylow_multiplicativity_check(a, b, p, lim);
  if (!chk.holds) {
    std::ostringstream out;
    out << "Sylow multiplicativity violated for p=" << p << ": n(" << chk.spec1
        << ")=" << chk.n1 << ", n(" << chk.spec2 << ")=" << chk.n2
        << ", but the product has " << chk.n12;
    throw VerificationError(out.str());
  }
  return chk;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::NotFrobeniusByThm1:
      return "NOT_FROBENIUS_BY_THM1";
    case VerdictStatus::NotFrobeniusByThm2:
      return "NOT_FROBENIUS_BY_THM2";
    case VerdictStatus::WitnessFound:
      return "WITNESS_FOUND";
    case VerdictStatus::NoWitnessInCorpus:
      return "NO_WITNESS_IN_CORPUS";
    case VerdictStatus::KnownPseudo:
      return "KNOWN_PSEUDO";
  }
  return "UNKNOWN";
}

const std::vector<KnownFact>& known_facts() {
  static const std::vector<KnownFact> facts = {
      {2, std::nullopt, FactKind::SylowRealizable,
       "classical: every odd number occurs as the number of Sylow "
       "2-subgroups of some finite group"},
      {3, 22, FactKind::PseudoSylow,
       "22 is a Frobenius 3-number but not a Sylow 3-number: no finite group "
       "has exactly 22 Sylow 3-subgroups, although 22 occurs as the number "
       "of order-9 subgroups"},
      {3, 46, FactKind::PseudoFrobenius,
       "46 is a pseudo Frobenius 3-number: 46 = 1 (mod 9), yet no finite "
       "group has exactly 46 subgroups of order 3^a for any a >= 1"},
      {5, 51, FactKind::PseudoFrobenius,
       "51 is a pseudo Frobenius 5-number: 51 = 1 (mod 25), yet no finite "
       "group has exactly 51 subgroups of order 5^a for any a >= 1"},
  };
  return facts;
}

const KnownFact* find_fact(unsigned p, std::uint64_t n) {
  for (const auto& f : known_facts()) {
    if (f.p != p) continue;
    if (f.n.has_value() ? (*f.n == n) : (n % 2 == 1)) return &f;
  }
  return nullptr;
}

CorpusCache::CorpusCache(std::vector<CorpusEntry> entries, Limits lim)
    : entries_(std::move(entries)), lim_(lim) {}

const std::vector<BigInt>& CorpusCache::counts(std::size_t i, unsigned p) {
  auto key = std::make_pair(i, p);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const CorpusEntry& entry = entries_.at(i);
  ElementTable t = ElementTable::enumerate(build_group(entry.spec), lim_);
  auto profile = count_profile(t, p, lim_);
  std::vector<BigInt> counts;
  counts.reserve(profile->per_a.size());
  for (const auto& rep : profile->per_a) counts.push_back(rep.count);
  return cache_.emplace(key, std::move(counts)).first->second;
}

namespace {

constexpr const char* kBoundedNote =
    "bounded search over the corpus only; absence of a witness here is not a "
    "proof of non-realizability";

std::string thm2_note(unsigned p, std::uint64_t n) {
  std::ostringstream out;
  out << "n mod p^2 = " << n % (std::uint64_t{p} * p)
      << " is neither 1 nor 1+p, so by the mod-p^2 congruence no group has n "
         "subgroups of order p^a with p^(a+1) | |G|; only Sylow counts can "
         "realize n";
  return out.str();
}

std::string transfer_note(bool witness_is_sylow) {
  std::string out =
      "n = 1 (mod p^2), so any realization transfers to a Sylow realization: "
      "n is also a Sylow p-number";
  out += witness_is_sylow ? " (the witness shown is of Sylow type)"
                          : " (the smallest corpus witness is not of Sylow "
                            "type; a Sylow-type one exists by the transfer "
                            "theorem)";
  return out;
}

}  // namespace

Verdict classify_number(CorpusCache& corpus, unsigned p, std::uint64_t n,
                        std::optional<unsigned> max_a) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (n == 0) throw PreconditionError("n must be positive");

  Verdict v;
  v.p = p;
  v.n = n;

  if (n % p != 1) {
    v.status = VerdictStatus::NotFrobeniusByThm1;
    std::ostringstream note;
    note << "n mod p = " << n % p
         << " differs from 1; the mod-p congruence rules out every finite "
            "group";
    v.notes.push_back(note.str());
    return v;
  }

  const std::uint64_t p2 = std::uint64_t{p} * p;
  const std::uint64_t r2 = n % p2;
  const bool sylow_only = (r2 != 1 && r2 != 1 + p);
  const KnownFact* fact = find_fact(p, n);

  struct Hit {
    std::size_t entry;
    unsigned a;
    unsigned m;
  };
  std::optional<Hit> first_any, first_sylow;
  for (std::size_t i = 0; i < corpus.entries().size(); ++i) {
    const auto& counts = corpus.counts(i, p);
    const unsigned m = static_cast<unsigned>(counts.size() - 1);
    const unsigned amax = std::min(m, max_a.value_or(m));
    for (unsigned a = 0; a <= amax; ++a) {
      if (sylow_only && a != m) continue;
      if (counts[a] != n) continue;
      if (!first_any) first_any = Hit{i, a, m};
      if (a == m && !first_sylow) {
        first_sylow = Hit{i, a, m};
        break;
      }
    }
    if (first_sylow) break;
    if (first_any && !sylow_only && r2 != 1) break;
  }

  std::optional<Hit> chosen =
      (r2 == 1 && first_sylow) ? first_sylow
                               : (sylow_only ? first_sylow : first_any);

  if (chosen) {
    const CorpusEntry& entry = corpus.entries()[chosen->entry];
    if (fact && fact->kind == FactKind::PseudoFrobenius)
      throw VerificationError(
          "facts table contradiction: found a witness (" + entry.text +
          ", a=" + std::to_string(chosen->a) + ") for the pseudo Frobenius "
          "number n=" + std::to_string(n) + ", p=" + std::to_string(p));
    if (fact && fact->kind == FactKind::PseudoSylow && first_sylow)
      throw VerificationError(
          "facts table contradiction: " +
          corpus.entries()[first_sylow->entry].text + " realizes n=" +
          std::to_string(n) +
          " as a Sylow count, but n is curated as a pseudo Sylow number");
    // independent recount from a fresh build
    ElementTable fresh =
        ElementTable::enumerate(build_group(entry.spec), corpus.limits());
    CountReport recount =
        count_subgroups_of_order(fresh, p, chosen->a, corpus.limits());
    if (recount.count != n)
      throw VerificationError("witness recount mismatch for " + entry.text);

    v.status = VerdictStatus::WitnessFound;
    v.witness = Witness{entry.spec, chosen->a};
    if (sylow_only) v.notes.push_back(thm2_note(p, n));
    if (r2 == 1) v.notes.push_back(transfer_note(chosen->a == chosen->m));
    if (fact) v.notes.push_back(fact->text);
    return v;
  }

  if (fact && fact->kind == FactKind::PseudoFrobenius) {
    v.status = VerdictStatus::KnownPseudo;
    v.notes.push_back(fact->text);
    v.notes.push_back(kBoundedNote);
    return v;
  }
  if (sylow_only) {
    v.status = VerdictStatus::NotFrobeniusByThm2;
    v.notes.push_back(thm2_note(p, n));
    if (fact) v.notes.push_back(fact->text);
    v.notes.push_back(kBoundedNote);
    return v;
  }
  v.status = VerdictStatus::NoWitnessInCorpus;
  if (fact) v.notes.push_back(fact->text);
  v.notes.push_back(kBoundedNote);
  return v;
}

std::vector<Verdict> scan_range(CorpusCache& corpus, unsigned p,
                                std::uint64_t n_max) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (n_max < 1 || n_max > 1000)
    throw PreconditionError("scan range must be 1..1000");
  const std::uint64_t p2 = std::uint64_t{p} * p;
  std::vector<Verdict> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::uint64_t r2 = n % p2;
    if (r2 != 1 && r2 != 1 + p) continue;
    out.push_back(classify_number(corpus, p, n));
  }
  return out;
}

}  // namespace psylow
