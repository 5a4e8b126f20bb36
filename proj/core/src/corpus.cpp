#include "psylow/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "psylow/errors.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

CorpusEntry make_entry(GroupSpec spec) {
  std::string text = spec.to_string();
  BigInt order = spec.order();
  return CorpusEntry{std::move(spec), std::move(text), std::move(order)};
}

void finalize(std::vector<CorpusEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.text < b.text;
            });
}

}  // namespace

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;

  for (unsigned n = 1; n <= 64; ++n)
    out.push_back(make_entry(GroupSpec(GroupSpec::Cyclic{n})));
  for (unsigned o = 6; o <= 64; o += 2)
    out.push_back(make_entry(GroupSpec(GroupSpec::Dihedral{o})));
  for (unsigned n = 2; n <= 7; ++n)
    out.push_back(make_entry(GroupSpec(GroupSpec::Symmetric{n})));
  for (unsigned n = 3; n <= 7; ++n)
    out.push_back(make_entry(GroupSpec(GroupSpec::Alternating{n})));
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    out.push_back(make_entry(GroupSpec(GroupSpec::GL2{q})));
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned k = 1; ipow(p, k) <= 243; ++k)
      out.push_back(make_entry(GroupSpec(GroupSpec::ElemAbelian{p, k})));
  }
  for (unsigned w = 1; w <= 5; ++w)
    for (const Partition& lambda : partitions_of(w))
      out.push_back(make_entry(GroupSpec(GroupSpec::AbelianP{3, lambda})));
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned q = 3; q <= 100; ++q) {
      if (!is_prime(q) || (q - 1) % p != 0) continue;
      out.push_back(make_entry(GroupSpec(GroupSpec::FrobeniusAffine{q, p})));
    }
  }
  std::vector<GroupSpec> factors{
      GroupSpec(GroupSpec::GL2{3}),
      GroupSpec(GroupSpec::GL2{4}),
      GroupSpec(GroupSpec::GL2{5}),
      GroupSpec(GroupSpec::FrobeniusAffine{7, 3}),
      GroupSpec(GroupSpec::FrobeniusAffine{13, 3}),
      GroupSpec(GroupSpec::FrobeniusAffine{19, 3}),
      GroupSpec(GroupSpec::Alternating{5}),
  };
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      out.push_back(make_entry(
          GroupSpec(GroupSpec::Product{{factors[i], factors[j]}})));

  finalize(out);
  return out;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string text = line.substr(first, last - first + 1);
    try {
      CorpusEntry entry = make_entry(parse_spec(text));
      if (!seen.insert(entry.text).second)
        throw ParseError("duplicate entry " + entry.text);
      out.push_back(std::move(entry));
    } catch (const Error& e) {
      throw ParseError("corpus line " + std::to_string(lineno) + ": " +
                       e.what());
    }
  }
  finalize(out);
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

std::string render_corpus(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) out << e.text << '\n';
  return out.str();
}

}  // namespace psylow
