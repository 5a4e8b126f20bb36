#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psylow/bigint.hpp"
#include "psylow/group_spec.hpp"

namespace psylow {

struct CorpusEntry {
  GroupSpec spec;
  std::string text;  // canonical constructor text
  BigInt order;
};

// The built-in verification corpus, sorted by (order, text):
//   Cyclic(1..64); Dihedral(6, 8, ..., 64); Symmetric(2..7); Alternating(3..7);
//   GL2(q) for q in {2,3,4,5,7,8,9}; ElemAbelian(p,k) for p in {2,3,5} with
//   p^k <= 243; AbelianP(3, lambda) for every partition of weight 1..5;
//   FrobeniusAffine(q,p) for primes q <= 100 and p in {2,3,5} dividing q-1;
//   all pairwise Products of GL2(3), GL2(4), GL2(5), FrobeniusAffine(7,3),
//   FrobeniusAffine(13,3), FrobeniusAffine(19,3), Alternating(5).
std::vector<CorpusEntry> default_corpus();

// One constructor per line; '#' starts a comment, blank lines are skipped.
// Throws ParseError naming the line on any bad or duplicate entry.
// Entries are sorted by (order, text).
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

std::string render_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace psylow
