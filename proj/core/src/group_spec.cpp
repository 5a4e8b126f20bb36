#include "psylow/group_spec.hpp"

#include <cctype>
#include <sstream>

#include "psylow/errors.hpp"
#include "psylow/field.hpp"
#include "psylow/limits.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

unsigned node_degree(const GroupSpec::Node& node) {
  return std::visit(
      [](const auto& v) -> unsigned {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, GroupSpec::AbelianP>) {
          std::uint64_t d = 0;
          for (unsigned part : v.lambda.parts()) d += ipow(v.p, part);
          return static_cast<unsigned>(d);
        } else if constexpr (std::is_same_v<T, GroupSpec::ElemAbelian>) {
          return v.p * v.k;
        } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
          return v.order / 2;
        } else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, GroupSpec::Alternating>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, GroupSpec::GL2>) {
          return v.q * v.q - 1;
        } else if constexpr (std::is_same_v<T, GroupSpec::FrobeniusAffine>) {
          return v.q;
        } else {
          unsigned d = 0;
          for (const auto& f : v.factors) d += f.degree();
          return d;
        }
      },
      node);
}

void validate(const GroupSpec::Node& node) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
          if (v.n < 1) throw PreconditionError("Cyclic needs n >= 1");
        } else if constexpr (std::is_same_v<T, GroupSpec::AbelianP>) {
          if (!is_prime(v.p)) throw PreconditionError("AbelianP needs a prime p");
          if (v.lambda.empty())
            throw PreconditionError("AbelianP needs a nonempty partition");
        } else if constexpr (std::is_same_v<T, GroupSpec::ElemAbelian>) {
          if (!is_prime(v.p))
            throw PreconditionError("ElemAbelian needs a prime p");
          if (v.k < 1) throw PreconditionError("ElemAbelian needs k >= 1");
        } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
          if (v.order < 6 || v.order % 2 != 0)
            throw PreconditionError(
                "Dihedral needs an even order >= 6 (smaller ones have no "
                "faithful polygon action)");
        } else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>) {
          if (v.n < 1) throw PreconditionError("Symmetric needs n >= 1");
        } else if constexpr (std::is_same_v<T, GroupSpec::Alternating>) {
          if (v.n < 3) throw PreconditionError("Alternating needs n >= 3");
        } else if constexpr (std::is_same_v<T, GroupSpec::GL2>) {
          if (!is_prime_power(v.q))
            throw PreconditionError("GL2 needs a prime power q");
        } else if constexpr (std::is_same_v<T, GroupSpec::FrobeniusAffine>) {
          if (!is_prime(v.q) || !is_prime(v.p))
            throw PreconditionError("FrobeniusAffine needs primes q and p");
          if ((v.q - 1) % v.p != 0)
            throw PreconditionError("FrobeniusAffine needs p dividing q-1");
        } else {
          if (v.factors.size() < 2)
            throw PreconditionError("Product needs at least two factors");
        }
      },
      node);
  if (node_degree(node) > kMaxDegree)
    throw PreconditionError("constructed degree exceeds " +
                            std::to_string(kMaxDegree));
}

}  // namespace

GroupSpec::GroupSpec(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {
  validate(*node_);
}

unsigned GroupSpec::degree() const { return node_degree(*node_); }

BigInt GroupSpec::order() const {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, GroupSpec::AbelianP>) {
          BigInt r = 1;
          for (unsigned part : v.lambda.parts())
            for (unsigned i = 0; i < part; ++i) r *= v.p;
          return r;
        } else if constexpr (std::is_same_v<T, GroupSpec::ElemAbelian>) {
          BigInt r = 1;
          for (unsigned i = 0; i < v.k; ++i) r *= v.p;
          return r;
        } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
          return v.order;
        } else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>) {
          return factorial(v.n);
        } else if constexpr (std::is_same_v<T, GroupSpec::Alternating>) {
          return factorial(v.n) / 2;
        } else if constexpr (std::is_same_v<T, GroupSpec::GL2>) {
          BigInt q2 = BigInt(v.q) * v.q;
          return (q2 - 1) * (q2 - v.q);
        } else if constexpr (std::is_same_v<T, GroupSpec::FrobeniusAffine>) {
          return BigInt(v.q) * v.p;
        } else {
          BigInt r = 1;
          for (const auto& f : v.factors) r *= f.order();
          return r;
        }
      },
      *node_);
}

std::string GroupSpec::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        std::ostringstream out;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
          out << "Cyclic(" << v.n << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::AbelianP>) {
          out << "AbelianP(" << v.p << ',' << v.lambda.to_string() << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::ElemAbelian>) {
          out << "ElemAbelian(" << v.p << ',' << v.k << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
          out << "Dihedral(" << v.order << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>) {
          out << "Symmetric(" << v.n << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::Alternating>) {
          out << "Alternating(" << v.n << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::GL2>) {
          out << "GL2(" << v.q << ')';
        } else if constexpr (std::is_same_v<T, GroupSpec::FrobeniusAffine>) {
          out << "FrobeniusAffine(" << v.q << ',' << v.p << ')';
        } else {
          out << "Product(";
          for (std::size_t i = 0; i < v.factors.size(); ++i) {
            if (i) out << ',';
            out << v.factors[i].to_string();
          }
          out << ')';
        }
        return out.str();
      },
      *node_);
}

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad group spec '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned parse_number() {
    skip_ws();
    if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    unsigned long v = 0;
    while (pos_ < text_.size() &&
           isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Partition parse_partition() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    if (pos_ >= text_.size()) fail("unterminated partition literal");
    ++pos_;
    return Partition::parse(text_.substr(start, pos_ - start));
  }

  GroupSpec parse_spec() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (isalnum(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a constructor name");
    expect('(');
    GroupSpec spec = dispatch(name);
    expect(')');
    return spec;
  }

  GroupSpec dispatch(const std::string& name) {
    if (name == "Cyclic") return GroupSpec(GroupSpec::Cyclic{parse_number()});
    if (name == "AbelianP") {
      unsigned p = parse_number();
      expect(',');
      Partition lambda = parse_partition();
      return GroupSpec(GroupSpec::AbelianP{p, std::move(lambda)});
    }
    if (name == "ElemAbelian") {
      unsigned p = parse_number();
      expect(',');
      unsigned k = parse_number();
      return GroupSpec(GroupSpec::ElemAbelian{p, k});
    }
    if (name == "Dihedral") return GroupSpec(GroupSpec::Dihedral{parse_number()});
    if (name == "Symmetric")
      return GroupSpec(GroupSpec::Symmetric{parse_number()});
    if (name == "Alternating")
      return GroupSpec(GroupSpec::Alternating{parse_number()});
    if (name == "GL2") return GroupSpec(GroupSpec::GL2{parse_number()});
    if (name == "FrobeniusAffine") {
      unsigned q = parse_number();
      expect(',');
      unsigned p = parse_number();
      return GroupSpec(GroupSpec::FrobeniusAffine{q, p});
    }
    if (name == "Product") {
      std::vector<GroupSpec> factors;
      factors.push_back(parse_spec());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        factors.push_back(parse_spec());
        skip_ws();
      }
      return GroupSpec(GroupSpec::Product{std::move(factors)});
    }
    fail("unknown constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Permutation> cyclic_gens(unsigned n) {
  if (n == 1) return {Permutation(1)};
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i;
  return {Permutation::from_cycles(n, {cyc})};
}

PermGroup build_node(const GroupSpec::Node& node);

PermGroup build_product(const std::vector<GroupSpec>& factors) {
  unsigned degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (const auto& f : factors) {
    PermGroup part = build_group(f);
    for (const auto& g : part.generators()) {
      std::vector<std::uint16_t> img(degree);
      for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
      for (unsigned i = 0; i < part.degree(); ++i)
        img[offset + i] = static_cast<std::uint16_t>(offset + g.apply(i));
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    offset += part.degree();
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup build_node(const GroupSpec::Node& node) {
  return std::visit(
      [](const auto& v) -> PermGroup {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>) {
          return PermGroup(v.n, cyclic_gens(v.n));
        } else if constexpr (std::is_same_v<T, GroupSpec::AbelianP>) {
          unsigned degree = 0;
          for (unsigned part : v.lambda.parts())
            degree += static_cast<unsigned>(ipow(v.p, part));
          std::vector<Permutation> gens;
          unsigned offset = 0;
          for (unsigned part : v.lambda.parts()) {
            unsigned len = static_cast<unsigned>(ipow(v.p, part));
            std::vector<Point> cyc(len);
            for (unsigned i = 0; i < len; ++i) cyc[i] = offset + i;
            gens.push_back(Permutation::from_cycles(degree, {cyc}));
            offset += len;
          }
          return PermGroup(degree, std::move(gens));
        } else if constexpr (std::is_same_v<T, GroupSpec::ElemAbelian>) {
          unsigned degree = v.p * v.k;
          std::vector<Permutation> gens;
          for (unsigned j = 0; j < v.k; ++j) {
            std::vector<Point> cyc(v.p);
            for (unsigned i = 0; i < v.p; ++i) cyc[i] = j * v.p + i;
            gens.push_back(Permutation::from_cycles(degree, {cyc}));
          }
          return PermGroup(degree, std::move(gens));
        } else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>) {
          unsigned m = v.order / 2;
          std::vector<Point> rot(m);
          for (unsigned i = 0; i < m; ++i) rot[i] = i;
          std::vector<std::uint16_t> refl(m);
          for (unsigned i = 0; i < m; ++i)
            refl[i] = static_cast<std::uint16_t>((m - i) % m);
          return PermGroup(m, {Permutation::from_cycles(m, {rot}),
                               Permutation::from_images(std::move(refl))});
        } else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>) {
          if (v.n == 1) return PermGroup(1, {Permutation(1)});
          if (v.n == 2)
            return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
          std::vector<Point> cyc(v.n);
          for (unsigned i = 0; i < v.n; ++i) cyc[i] = i;
          return PermGroup(v.n, {Permutation::from_cycles(v.n, {{0, 1}}),
                                 Permutation::from_cycles(v.n, {cyc})});
        } else if constexpr (std::is_same_v<T, GroupSpec::Alternating>) {
          Permutation three = Permutation::from_cycles(v.n, {{0, 1, 2}});
          if (v.n == 3) return PermGroup(3, {three});
          std::vector<Point> cyc;
          if (v.n % 2 == 1) {
            for (unsigned i = 0; i < v.n; ++i) cyc.push_back(i);
          } else {
            for (unsigned i = 1; i < v.n; ++i) cyc.push_back(i);
          }
          return PermGroup(v.n,
                           {three, Permutation::from_cycles(v.n, {cyc})});
        } else if constexpr (std::is_same_v<T, GroupSpec::GL2>) {
          FieldTable f = make_field(v.q);
          unsigned degree = v.q * v.q - 1;
          // vector (x, y) != (0, 0) sits at index x*q + y - 1
          auto mat_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
            std::vector<std::uint16_t> img(degree);
            for (unsigned x = 0; x < v.q; ++x) {
              for (unsigned y = 0; y < v.q; ++y) {
                if (x == 0 && y == 0) continue;
                unsigned nx = f.add_of(f.mul_of(a, x), f.mul_of(b, y));
                unsigned ny = f.add_of(f.mul_of(c, x), f.mul_of(d, y));
                img[x * v.q + y - 1] =
                    static_cast<std::uint16_t>(nx * v.q + ny - 1);
              }
            }
            return Permutation::from_images(std::move(img));
          };
          std::vector<Permutation> gens;
          unsigned t = 1;
          for (unsigned j = 0; j < f.k; ++j) {
            // transvections over a basis generate both root subgroups
            gens.push_back(mat_perm(1, t, 0, 1));
            gens.push_back(mat_perm(1, 0, t, 1));
            t = f.mul_of(t, f.primitive);
          }
          gens.push_back(mat_perm(f.primitive, 0, 0, 1));
          return PermGroup(degree, std::move(gens));
        } else if constexpr (std::is_same_v<T, GroupSpec::FrobeniusAffine>) {
          FieldTable f = make_field(v.q);
          unsigned m = f.pow_of(f.primitive, (v.q - 1) / v.p);
          std::vector<std::uint16_t> trans(v.q), mult(v.q);
          for (unsigned x = 0; x < v.q; ++x) {
            trans[x] = f.add_of(x, 1);
            mult[x] = f.mul_of(m, x);
          }
          return PermGroup(v.q, {Permutation::from_images(std::move(trans)),
                                 Permutation::from_images(std::move(mult))});
        } else {
          return build_product(v.factors);
        }
      },
      node);
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

PermGroup build_group(const GroupSpec& spec) { return build_node(spec.node()); }

}  // namespace psylow
