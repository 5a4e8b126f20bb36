#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "psylow/corpus.hpp"
#include "psylow/counting.hpp"
#include "psylow/errors.hpp"
#include "psylow/group_spec.hpp"
#include "psylow/hallpoly.hpp"
#include "psylow/json_io.hpp"
#include "psylow/numbers.hpp"
#include "psylow/partition.hpp"
#include "psylow/verify.hpp"

namespace {

using psylow::BigInt;
using psylow::CorpusEntry;
using psylow::ElementTable;
using psylow::GroupSpec;
using psylow::Limits;
using psylow::Partition;

std::vector<CorpusEntry> get_corpus(const std::string& path) {
  if (path.empty()) return psylow::default_corpus();
  return psylow::load_corpus_file(path);
}

void print_report(const psylow::CountReport& r) {
  std::cout << r.spec_text << "  p=" << r.p << "  a=" << r.a << "\n"
            << "count: " << r.count << "\n"
            << "residues: " << r.mod_p << " (mod " << r.p << "), " << r.mod_p2
            << " (mod " << r.p * r.p << ")\n"
            << "sylow order: " << r.sylow_order << "\n"
            << "orbit lengths:";
  for (const auto& o : r.orbits) std::cout << " " << o.length;
  std::cout << "\n";
}

int run_count(const std::string& spec_text, unsigned p, bool a_given,
              unsigned a, bool sylow, bool json, const Limits& lim) {
  if (a_given == sylow)
    throw psylow::ParseError("exactly one of --a and --sylow is required");
  GroupSpec spec = psylow::parse_spec(spec_text);
  ElementTable t = ElementTable::enumerate(psylow::build_group(spec), lim);
  if (sylow) a = psylow::p_exponent(t.size(), p);
  psylow::CountReport r = psylow::count_subgroups_of_order(t, p, a, lim);
  r.spec_text = spec.to_string();
  if (json)
    std::cout << psylow::count_report_json(r) << "\n";
  else
    print_report(r);
  return 0;
}

// frobenius (mod p) and kulakoff-hall (mod p^2) over the corpus, one row per
// valid (group, p, a); --corrupt bumps the first row to prove the checker bites
int run_verify_rows(const std::vector<CorpusEntry>& corpus, bool kh,
                    bool corrupt, const Limits& lim) {
  std::uint64_t rows_total = 0, violations = 0;
  for (const auto& e : corpus) {
    ElementTable t = ElementTable::enumerate(psylow::build_group(e.spec), lim);
    auto rows =
        kh ? psylow::kulakoff_hall_rows(t, lim) : psylow::frobenius_rows(t, lim);
    if (corrupt && !rows.empty()) {
      rows[0].count += 1;
      rows[0].residue = (rows[0].residue + 1) % rows[0].modulus;
      corrupt = false;
    }
    for (const auto& r : rows) {
      ++rows_total;
      bool ok = kh ? (r.residue == 1 || r.residue == 1 + r.p) : (r.residue == 1);
      std::cout << e.text << " p=" << r.p << " a=" << r.a << " count=" << r.count
                << " residue=" << r.residue << " (mod " << r.modulus << ")"
                << (ok ? "" : "  VIOLATION") << "\n";
      if (!ok) ++violations;
    }
  }
  std::cout << (kh ? "kulakoff-hall" : "frobenius") << ": " << rows_total
            << " rows, " << violations << " violation(s)\n";
  return violations ? 1 : 0;
}

int run_verify_cyclic(const std::vector<CorpusEntry>& corpus, bool corrupt,
                      const Limits& lim) {
  std::uint64_t checks = 0, violations = 0;
  for (const auto& e : corpus) {
    ElementTable t = ElementTable::enumerate(psylow::build_group(e.spec), lim);
    for (auto [q, m] : psylow::factorize(t.size())) {
      if (q == 2 || m < 2) continue;
      auto rep = psylow::cyclic_criterion_report(t, static_cast<unsigned>(q), lim);
      bool holds = rep.holds;
      if (corrupt) {
        holds = !holds;
        corrupt = false;
      }
      ++checks;
      std::cout << e.text << " p=" << rep.p
                << " sylow_cyclic=" << (rep.sylow_cyclic ? "yes" : "no")
                << (holds ? "" : "  VIOLATION") << "\n";
      if (!holds) ++violations;
    }
  }
  std::cout << "cyclic criterion: " << checks << " checks, " << violations
            << " violation(s)\n";
  return violations ? 1 : 0;
}

// abelian p-group counts from the closed formula vs the enumeration engine,
// for p in {2,3,5} and every type lambda with p^|lambda| <= 729; types whose
// predicted level sizes exceed the subgroup cap are reported and skipped
int run_verify_hall(bool corrupt, const Limits& lim) {
  std::uint64_t checks = 0, skipped = 0, violations = 0;
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned n = 1;; ++n) {
      std::uint64_t pw = 1;
      bool fits = true;
      for (unsigned i = 0; i < n && fits; ++i) {
        pw *= p;
        if (pw > 729) fits = false;
      }
      if (!fits) break;
      for (const Partition& lam : psylow::partitions_of(n)) {
        std::vector<BigInt> pred(n + 1);
        bool feasible = true;
        for (unsigned a = 0; a <= n; ++a) {
          pred[a] = psylow::hall_count_order(lam, a, p);
          if (pred[a] > lim.max_subgroups) feasible = false;
        }
        if (!feasible) {
          std::cout << "skip p=" << p << " lambda=" << lam.to_string()
                    << " (past the subgroup cap)\n";
          ++skipped;
          continue;
        }
        GroupSpec spec{GroupSpec::AbelianP{p, lam}};
        ElementTable t = ElementTable::enumerate(psylow::build_group(spec), lim);
        auto profile = psylow::count_profile(t, p, lim);
        for (unsigned a = 0; a <= n; ++a) {
          BigInt engine = profile->per_a[a].count;
          if (corrupt) {
            engine += 1;
            corrupt = false;
          }
          bool ok = engine == pred[a];
          ++checks;
          std::cout << spec.to_string() << " a=" << a << " formula=" << pred[a]
                    << " engine=" << engine << (ok ? "" : "  VIOLATION") << "\n";
          if (!ok) ++violations;
        }
      }
    }
  }
  std::cout << "hall-oracle: " << checks << " checks, " << skipped
            << " type(s) skipped, " << violations << " violation(s)\n";
  return violations ? 1 : 0;
}

int run_verify_mult(const std::vector<CorpusEntry>& corpus, bool corrupt,
                    const Limits& lim) {
  std::vector<std::tuple<GroupSpec, GroupSpec, unsigned>> picks;
  picks.emplace_back(psylow::parse_spec("GL2(3)"),
                     psylow::parse_spec("FrobeniusAffine(7,3)"), 3u);

  std::vector<const CorpusEntry*> pool;
  for (const auto& e : corpus)
    if (e.order <= 2000) pool.push_back(&e);
  if (pool.size() < 2)
    throw psylow::PreconditionError("corpus has too few small groups");
  std::mt19937 gen(0x5EED);
  const unsigned primes[3] = {2, 3, 5};
  int guard = 0;
  while (picks.size() < 21) {
    if (++guard > 10000)
      throw psylow::PreconditionError("could not draw small product pairs");
    std::size_t i = gen() % pool.size();
    std::size_t j = gen() % pool.size();
    if (pool[i]->order * pool[j]->order > 100000) continue;
    unsigned p = primes[gen() % 3];
    picks.emplace_back(pool[i]->spec, pool[j]->spec, p);
  }

  std::uint64_t violations = 0;
  for (const auto& [ga, gb, p] : picks) {
    auto c = psylow::sylow_multiplicativity_check(ga, gb, p, lim);
    bool holds = c.holds;
    if (corrupt) {
      holds = !holds;
      corrupt = false;
    }
    std::cout << c.spec1 << " x " << c.spec2 << " p=" << c.p << ": " << c.n1
              << "*" << c.n2 << " vs " << c.n12 << (holds ? "" : "  VIOLATION")
              << "\n";
    if (!holds) ++violations;
  }
  std::cout << "multiplicativity: " << picks.size() << " checks, " << violations
            << " violation(s)\n";
  return violations ? 1 : 0;
}

void print_verdict(const psylow::Verdict& v) {
  std::cout << "p=" << v.p << " n=" << v.n << ": " << to_string(v.status) << "\n";
  if (v.witness)
    std::cout << "  witness: " << v.witness->spec.to_string()
              << "  a=" << v.witness->a << "\n";
  for (const auto& s : v.notes) std::cout << "  note: " << s << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "subgroup counting, congruence checking, and Sylow number "
      "classification for finite permutation groups"};
  app.require_subcommand(1);

  Limits defaults;
  std::uint64_t max_elements = defaults.max_elements;
  std::uint64_t max_subgroups = defaults.max_subgroups;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-elements", max_elements, "element enumeration cap")
        ->capture_default_str();
    cmd->add_option("--max-subgroups", max_subgroups, "per-level subgroup cap")
        ->capture_default_str();
  };

  auto* cmd_count =
      app.add_subcommand("count", "count subgroups of order p^a in a group");
  std::string count_spec;
  unsigned count_p = 0, count_a = 0;
  bool count_sylow_flag = false, count_json = false;
  cmd_count
      ->add_option("spec", count_spec,
                   "group constructor, e.g. AbelianP(3,[2,1,1])")
      ->required();
  cmd_count->add_option("--p", count_p, "prime p")->required();
  auto* count_a_opt =
      cmd_count->add_option("--a", count_a, "count subgroups of order p^a");
  cmd_count
      ->add_flag("--sylow", count_sylow_flag,
                 "count Sylow p-subgroups (a = p-exponent of |G|)")
      ->excludes(count_a_opt);
  cmd_count->add_flag("--json", count_json, "emit the JSON report");
  add_caps(cmd_count);

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the congruence laws over a group corpus");
  std::string theorem, verify_corpus;
  bool corrupt = false;
  cmd_verify
      ->add_option("--theorem", theorem,
                   "frobenius | kulakoff-hall | cyclic | hall-oracle | "
                   "multiplicativity")
      ->required()
      ->check(CLI::IsMember({"frobenius", "kulakoff-hall", "cyclic",
                             "hall-oracle", "multiplicativity"}));
  cmd_verify->add_option("--corpus", verify_corpus,
                         "corpus file (default: built-in corpus)");
  cmd_verify->add_flag("--corrupt", corrupt,
                       "corrupt one count on purpose (harness hook)");
  add_caps(cmd_verify);

  auto* cmd_classify = app.add_subcommand(
      "classify", "classify n as a Sylow/Frobenius p-number over the corpus");
  unsigned classify_p = 0, classify_max_a = 0;
  std::uint64_t classify_n = 0, classify_scan = 0;
  std::string classify_corpus;
  bool classify_json = false;
  cmd_classify->add_option("--p", classify_p, "prime p")->required();
  auto* n_opt = cmd_classify->add_option("--n", classify_n, "single n to classify");
  auto* scan_opt =
      cmd_classify->add_option("--scan", classify_scan,
                               "classify every eligible n up to this bound");
  scan_opt->excludes(n_opt);
  auto* maxa_opt = cmd_classify->add_option(
      "--max-a", classify_max_a, "restrict the witness search to a <= max-a");
  cmd_classify->add_option("--corpus", classify_corpus,
                           "corpus file (default: built-in corpus)");
  cmd_classify->add_flag("--json", classify_json, "emit JSON verdicts");
  add_caps(cmd_classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help and --version exit 0, bad usage exits 2
  }

  try {
    Limits lim{max_elements, static_cast<std::size_t>(max_subgroups)};
    if (*cmd_count)
      return run_count(count_spec, count_p, count_a_opt->count() > 0, count_a,
                       count_sylow_flag, count_json, lim);
    if (*cmd_verify) {
      if (theorem == "hall-oracle") return run_verify_hall(corrupt, lim);
      auto corpus = get_corpus(verify_corpus);
      if (theorem == "frobenius")
        return run_verify_rows(corpus, false, corrupt, lim);
      if (theorem == "kulakoff-hall")
        return run_verify_rows(corpus, true, corrupt, lim);
      if (theorem == "cyclic") return run_verify_cyclic(corpus, corrupt, lim);
      return run_verify_mult(corpus, corrupt, lim);
    }
    // classify
    if ((n_opt->count() > 0) == (scan_opt->count() > 0))
      throw psylow::ParseError("exactly one of --n and --scan is required");
    psylow::CorpusCache cache(get_corpus(classify_corpus), lim);
    if (n_opt->count() > 0) {
      std::optional<unsigned> max_a;
      if (maxa_opt->count() > 0) max_a = classify_max_a;
      auto v = psylow::classify_number(cache, classify_p, classify_n, max_a);
      if (classify_json)
        std::cout << psylow::verdict_json(v) << "\n";
      else
        print_verdict(v);
    } else {
      auto vs = psylow::scan_range(cache, classify_p, classify_scan);
      if (classify_json) {
        std::cout << psylow::verdicts_json(vs) << "\n";
      } else {
        for (const auto& v : vs) {
          std::cout << std::setw(5) << v.n << "  " << to_string(v.status);
          if (v.witness)
            std::cout << "  " << v.witness->spec.to_string()
                      << " (a=" << v.witness->a << ")";
          std::cout << "\n";
        }
      }
    }
    return 0;
  } catch (const psylow::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const psylow::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const psylow::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 4;
  } catch (const psylow::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
