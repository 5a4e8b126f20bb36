#include "psylow/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "psylow/errors.hpp"

namespace psylow {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned x : parts_)
    if (x == 0) throw PreconditionError("partition parts must be positive");
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    throw PreconditionError("partition parts must be weakly decreasing");
}

Partition Partition::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad partition literal '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw fail("expected '['");
  ++i;
  std::vector<unsigned> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected a number");
      unsigned long v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw fail("part too large");
        ++i;
      }
      if (v == 0) throw fail("parts must be positive");
      parts.push_back(static_cast<unsigned>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing characters");
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw fail("parts must be weakly decreasing");
  return Partition(std::move(parts));
}

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<unsigned> conj(parts_[0], 0);
  for (unsigned row = 0; row < parts_[0]; ++row) {
    unsigned count = 0;
    for (unsigned part : parts_)
      if (part > row) ++count;
    conj[row] = count;
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<unsigned> a{n};
  while (true) {
    out.push_back(Partition(a));
    // rightmost part above 1; everything after it is a tail of ones
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) break;
    --k;
    unsigned rem = static_cast<unsigned>(a.size() - 1 - k) + 1;
    --a[k];
    a.resize(k + 1);
    while (rem > a[k]) {
      a.push_back(a[k]);
      rem -= a[k];
    }
    if (rem > 0) a.push_back(rem);
  }
  return out;
}

}  // namespace psylow
