/*
 *   Copyright 2026 the operadica authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#include "operadica/freeoperad.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace operadica {

int PlanarTerm::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const PlanarTerm& c : children) total += c.leaf_count();
  return total;
}

std::string PlanarTerm::code(
    const std::vector<GeneratorSymbol>& symbols) const {
  if (is_leaf()) return ".";
  std::string out = symbols[static_cast<std::size_t>(symbol)].name;
  out.push_back('(');
  for (std::size_t c = 0; c < children.size(); ++c) {
    if (c > 0) out.push_back(',');
    out += children[c].code(symbols);
  }
  out.push_back(')');
  return out;
}

namespace {

//! Grafts into the i-th leaf, counting leaves left to right from `next`.
bool graft_at_leaf(PlanarTerm& s, int i, const PlanarTerm& t, int& next) {
  if (s.is_leaf()) {
    if (++next == i) {
      s = t;
      return true;
    }
    return false;
  }
  for (PlanarTerm& c : s.children) {
    if (graft_at_leaf(c, i, t, next)) return true;
  }
  return false;
}

}  // namespace

PlanarTerm term_graft(const PlanarTerm& s, int i, const PlanarTerm& t) {
  if (i < 1 || i > s.leaf_count()) {
    throw IndexError("leaf position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(s.leaf_count()));
  }
  PlanarTerm out = s;
  int next = 0;
  graft_at_leaf(out, i, t, next);
  return out;
}

namespace {

void validate_term(const PlanarTerm& t,
                   const std::vector<GeneratorSymbol>& symbols) {
  if (t.is_leaf()) {
    if (!t.children.empty()) {
      throw DomainError("a leaf cannot carry children");
    }
    return;
  }
  if (t.symbol >= static_cast<int>(symbols.size())) {
    throw DomainError("term references generator index " +
                      std::to_string(t.symbol) + " outside the signature");
  }
  const GeneratorSymbol& g = symbols[static_cast<std::size_t>(t.symbol)];
  if (static_cast<int>(t.children.size()) != g.arity) {
    throw DomainError("generator " + g.name + " has arity " +
                      std::to_string(g.arity) + " but appears with " +
                      std::to_string(t.children.size()) + " arguments");
  }
  for (const PlanarTerm& c : t.children) validate_term(c, symbols);
}

}  // namespace

Presentation::Presentation(std::string name,
                           std::vector<GeneratorSymbol> symbols,
                           std::vector<TermRelation> relations)
    : name_(std::move(name)),
      symbols_(std::move(symbols)),
      relations_(std::move(relations)) {
  for (const GeneratorSymbol& g : symbols_) {
    if (g.arity < 2) {
      throw DomainError("generator " + g.name + " must have arity >= 2");
    }
    if (g.name.empty()) {
      throw DomainError("generators need nonempty names");
    }
  }
  for (const TermRelation& rel : relations_) {
    validate_term(rel.left, symbols_);
    validate_term(rel.right, symbols_);
    if (rel.left.is_leaf() || rel.right.is_leaf()) {
      throw DomainError("relation sides must contain a generator");
    }
    if (rel.left.leaf_count() != rel.right.leaf_count()) {
      throw DomainError("relation sides have different leaf counts: " +
                        rel.left.code(symbols_) + " vs " +
                        rel.right.code(symbols_));
    }
  }
}

std::string Presentation::relation_text(std::size_t index) const {
  const TermRelation& rel = relations_.at(index);
  return rel.left.code(symbols_) + " = " + rel.right.code(symbols_);
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  for (const GeneratorSymbol& g : symbols_) {
    os << "gen " << g.name << ' ' << g.arity << '\n';
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    os << relation_text(r) << '\n';
  }
  return os.str();
}

std::vector<PlanarTerm> enumerate_terms(
    const std::vector<GeneratorSymbol>& symbols, int arity,
    const ResourceGuard& guard) {
  if (arity < 1) {
    throw DomainError("terms have arity >= 1");
  }
  for (const GeneratorSymbol& g : symbols) {
    if (g.arity < 2) {
      throw DomainError("generator " + g.name + " must have arity >= 2");
    }
  }
  std::vector<std::vector<PlanarTerm>> grades(
      static_cast<std::size_t>(arity) + 1);
  grades[1].push_back(PlanarTerm{});
  for (int n = 2; n <= arity; ++n) {
    std::vector<PlanarTerm>& grade = grades[static_cast<std::size_t>(n)];
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      const int m = symbols[s].arity;
      if (m > n) continue;
      // all ways to split n leaves over m children, each child >= 1
      std::vector<PlanarTerm> stack;
      auto place = [&](auto&& self, int child, int remaining) -> void {
        if (child == m) {
          if (remaining != 0) return;
          PlanarTerm t;
          t.symbol = static_cast<int>(s);
          t.children = stack;
          grade.push_back(std::move(t));
          if (grade.size() > guard.max_elements) {
            throw ResourceError("term enumeration exceeded " +
                                    std::to_string(guard.max_elements) +
                                    " elements at arity " + std::to_string(n),
                                n);
          }
          return;
        }
        const int slack = remaining - (m - child - 1);
        for (int take = 1; take <= slack; ++take) {
          for (const PlanarTerm& piece :
               grades[static_cast<std::size_t>(take)]) {
            stack.push_back(piece);
            self(self, child + 1, remaining - take);
            stack.pop_back();
          }
        }
      };
      place(place, 0, n);
    }
    std::sort(grade.begin(), grade.end(),
              [&](const PlanarTerm& a, const PlanarTerm& b) {
                return a.code(symbols) < b.code(symbols);
              });
  }
  return grades[static_cast<std::size_t>(arity)];
}

Word eval_term(const PlanarTerm& term,
               const std::vector<GeneratorSymbol>& symbols,
               const std::vector<Word>& assignment, const Monoid& monoid) {
  if (term.is_leaf()) return unit(monoid);
  if (term.symbol >= static_cast<int>(assignment.size())) {
    throw DomainError("no word assigned to generator " +
                      symbols[static_cast<std::size_t>(term.symbol)].name);
  }
  Word out = assignment[static_cast<std::size_t>(term.symbol)];
  if (out.arity() != static_cast<int>(term.children.size())) {
    throw DomainError(
        "generator " + symbols[static_cast<std::size_t>(term.symbol)].name +
        " is assigned a word of arity " + std::to_string(out.arity()) +
        " but applied to " + std::to_string(term.children.size()) +
        " arguments");
  }
  // graft right to left so earlier positions stay where they are
  for (std::size_t c = term.children.size(); c-- > 0;) {
    out = graft(out, static_cast<int>(c) + 1,
                eval_term(term.children[c], symbols, assignment, monoid));
  }
  return out;
}

namespace {

//! Binds the hanging subterms of `t` to the leaves of `pattern`, left to
//! right.  Patterns are linear, so positional binding is enough.
bool match(const PlanarTerm& t, const PlanarTerm& pattern,
           std::vector<const PlanarTerm*>& bound) {
  if (pattern.is_leaf()) {
    bound.push_back(&t);
    return true;
  }
  if (t.is_leaf() || t.symbol != pattern.symbol) return false;
  for (std::size_t c = 0; c < pattern.children.size(); ++c) {
    if (!match(t.children[c], pattern.children[c], bound)) return false;
  }
  return true;
}

PlanarTerm substitute(const PlanarTerm& pattern,
                      const std::vector<const PlanarTerm*>& bound,
                      std::size_t& next) {
  if (pattern.is_leaf()) return *bound[next++];
  PlanarTerm out;
  out.symbol = pattern.symbol;
  out.children.reserve(pattern.children.size());
  for (const PlanarTerm& c : pattern.children) {
    out.children.push_back(substitute(c, bound, next));
  }
  return out;
}

void root_rewrites(const PlanarTerm& t, const PlanarTerm& from,
                   const PlanarTerm& to, std::vector<PlanarTerm>& out) {
  std::vector<const PlanarTerm*> bound;
  if (!match(t, from, bound)) return;
  std::size_t next = 0;
  out.push_back(substitute(to, bound, next));
}

//! Every term reachable from `t` by one relation step at one position.
void collect_rewrites(const PlanarTerm& t,
                      const std::vector<TermRelation>& relations,
                      std::vector<PlanarTerm>& out) {
  for (const TermRelation& rel : relations) {
    root_rewrites(t, rel.left, rel.right, out);
    root_rewrites(t, rel.right, rel.left, out);
  }
  for (std::size_t c = 0; c < t.children.size(); ++c) {
    std::vector<PlanarTerm> inner;
    collect_rewrites(t.children[c], relations, inner);
    for (PlanarTerm& r : inner) {
      PlanarTerm whole = t;
      whole.children[c] = std::move(r);
      out.push_back(std::move(whole));
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

QuotientClasses quotient_classes(const Presentation& presentation, int arity,
                                 const ResourceGuard& guard) {
  QuotientClasses out;
  out.terms = enumerate_terms(presentation.symbols(), arity, guard);
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(out.terms.size());
  for (std::size_t t = 0; t < out.terms.size(); ++t) {
    index.emplace(out.terms[t].code(presentation.symbols()), t);
  }
  UnionFind uf(out.terms.size());
  for (std::size_t t = 0; t < out.terms.size(); ++t) {
    std::vector<PlanarTerm> neighbours;
    collect_rewrites(out.terms[t], presentation.relations(), neighbours);
    for (const PlanarTerm& n : neighbours) {
      uf.unite(t, index.at(n.code(presentation.symbols())));
    }
  }
  out.class_of.assign(out.terms.size(), -1);
  for (std::size_t t = 0; t < out.terms.size(); ++t) {
    const std::size_t root = uf.find(t);
    if (out.class_of[root] < 0) {
      out.class_of[root] = static_cast<int>(out.representatives.size());
      out.representatives.push_back(root);
    }
    out.class_of[t] = out.class_of[root];
  }
  return out;
}

bool PresentationReport::sound() const {
  for (const RelationCheck& r : relations) {
    if (!r.holds) return false;
  }
  return true;
}

bool PresentationReport::passed() const {
  if (!sound()) return false;
  for (const ArityCheck& a : arities) {
    if (!a.passed()) return false;
  }
  return true;
}

std::string PresentationReport::to_text() const {
  std::ostringstream os;
  os << "presentation: " << presentation << "\noperad: " << operad << "\n";
  for (const RelationCheck& r : relations) {
    os << "relation " << r.relation << ": " << (r.holds ? "holds" : "FAILS");
    if (!r.witness.empty()) os << " (" << r.witness << ")";
    os << "\n";
  }
  for (const ArityCheck& a : arities) {
    os << "arity " << a.arity << ": terms " << a.terms << ", classes "
       << a.classes << ", closure " << a.closure << " -> "
       << (a.passed() ? "ok" : "FAIL");
    if (!a.passed()) {
      if (a.classes != a.closure) {
        os << " (classes " << a.classes << " != closure " << a.closure << ")";
      }
      if (!a.well_defined) os << " (relations do not hold in context)";
      if (!a.injective) os << " (distinct classes collide)";
      if (!a.surjective) os << " (closure words missed)";
    }
    if (!a.witness.empty()) os << " [" << a.witness << "]";
    os << "\n";
  }
  os << "status: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

PresentationReport verify_presentation(const Presentation& presentation,
                                       const OperadFamily& family,
                                       int max_arity,
                                       const ResourceGuard& guard) {
  const std::vector<GeneratorSymbol>& symbols = presentation.symbols();
  if (symbols.size() > family.generators.size()) {
    throw DomainError("presentation has " + std::to_string(symbols.size()) +
                      " generators but " + family.name + " only has " +
                      std::to_string(family.generators.size()));
  }
  std::vector<Word> assignment;
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    const Word& w = family.generators[s];
    if (w.arity() != symbols[s].arity) {
      throw DomainError("generator " + symbols[s].name + " has arity " +
                        std::to_string(symbols[s].arity) +
                        " but its assigned word (" + w.to_text() +
                        ") has arity " + std::to_string(w.arity()));
    }
    assignment.push_back(w);
  }

  PresentationReport report;
  report.presentation = presentation.name();
  report.operad = family.name;

  for (std::size_t r = 0; r < presentation.relations().size(); ++r) {
    const TermRelation& rel = presentation.relations()[r];
    RelationCheck check;
    check.relation = presentation.relation_text(r);
    const Word lhs = eval_term(rel.left, symbols, assignment, family.monoid);
    const Word rhs = eval_term(rel.right, symbols, assignment, family.monoid);
    if (!(lhs == rhs)) {
      check.holds = false;
      check.witness =
          "left -> (" + lhs.to_text() + "), right -> (" + rhs.to_text() + ")";
    }
    report.relations.push_back(std::move(check));
  }

  const GradedSet closure = generate(family, max_arity, guard);
  for (int n = 1; n <= max_arity; ++n) {
    ArityCheck check;
    check.arity = n;
    const QuotientClasses qc = quotient_classes(presentation, n, guard);
    check.terms = static_cast<long long>(qc.terms.size());
    check.classes = qc.class_count();
    check.closure = static_cast<long long>(closure.grade(n).size());

    std::vector<std::optional<Word>> class_word(
        static_cast<std::size_t>(qc.class_count()));
    std::vector<Letters> reached;
    for (std::size_t t = 0; t < qc.terms.size(); ++t) {
      const Word value =
          eval_term(qc.terms[t], symbols, assignment, family.monoid);
      auto& slot = class_word[static_cast<std::size_t>(qc.class_of[t])];
      if (!slot.has_value()) {
        slot = value;
        reached.push_back(value.letters());
      } else if (!(*slot == value) && check.well_defined) {
        check.well_defined = false;
        check.witness = "terms " + qc.terms[qc.representatives[static_cast<
                            std::size_t>(qc.class_of[t])]]
                                       .code(symbols) +
                        " and " + qc.terms[t].code(symbols) +
                        " share a class but evaluate to (" +
                        slot->to_text() + ") and (" + value.to_text() + ")";
      }
    }

    std::sort(reached.begin(), reached.end());
    const std::size_t distinct =
        static_cast<std::size_t>(std::unique(reached.begin(), reached.end()) -
                                 reached.begin());
    reached.resize(distinct);
    check.injective = distinct == static_cast<std::size_t>(check.classes);
    if (!check.injective && check.witness.empty()) {
      check.witness = "only " + std::to_string(distinct) + " distinct words for " +
                      std::to_string(check.classes) + " classes";
    }
    check.surjective = reached == closure.grade(n);
    if (!check.surjective && check.witness.empty()) {
      for (const Letters& letters : closure.grade(n)) {
        if (!std::binary_search(reached.begin(), reached.end(), letters)) {
          check.witness =
              "(" + letters_to_text(letters) + ") is in the closure but no "
              "term evaluates to it";
          break;
        }
      }
      if (check.witness.empty()) {
        for (const Letters& letters : reached) {
          if (!closure.contains(n, letters)) {
            check.witness = "(" + letters_to_text(letters) +
                            ") evaluates from a term but is outside the "
                            "closure";
            break;
          }
        }
      }
    }
    report.arities.push_back(std::move(check));
  }
  return report;
}

Presentation derive_quadratic_relations(const OperadFamily& family,
                                        const std::string& name) {
  std::vector<GeneratorSymbol> symbols;
  for (std::size_t g = 0; g < family.generators.size(); ++g) {
    GeneratorSymbol sym;
    sym.name = g < 26 ? std::string(1, static_cast<char>('a' + g))
                      : "g" + std::to_string(g);
    sym.arity = family.generators[g].arity();
    symbols.push_back(std::move(sym));
  }
  // group the two-node terms g(..., h, ...) by their evaluated word
  std::map<Letters, std::vector<PlanarTerm>> groups;
  for (std::size_t g = 0; g < family.generators.size(); ++g) {
    const int m = family.generators[g].arity();
    for (int i = 1; i <= m; ++i) {
      for (std::size_t h = 0; h < family.generators.size(); ++h) {
        PlanarTerm inner;
        inner.symbol = static_cast<int>(h);
        inner.children.assign(
            static_cast<std::size_t>(family.generators[h].arity()),
            PlanarTerm{});
        PlanarTerm outer;
        outer.symbol = static_cast<int>(g);
        outer.children.assign(static_cast<std::size_t>(m), PlanarTerm{});
        outer.children[static_cast<std::size_t>(i - 1)] = std::move(inner);
        const Word value =
            eval_term(outer, symbols, family.generators, family.monoid);
        groups[value.letters()].push_back(std::move(outer));
      }
    }
  }
  std::vector<TermRelation> relations;
  for (auto& [letters, terms] : groups) {
    if (terms.size() < 2) continue;
    std::sort(terms.begin(), terms.end(),
              [&](const PlanarTerm& a, const PlanarTerm& b) {
                return a.code(symbols) < b.code(symbols);
              });
    for (std::size_t t = 1; t < terms.size(); ++t) {
      relations.push_back(TermRelation{terms[0], terms[t]});
    }
  }
  return Presentation(name, std::move(symbols), std::move(relations));
}

namespace {

PlanarTerm leaf() { return PlanarTerm{}; }

PlanarTerm node(int symbol, std::vector<PlanarTerm> children) {
  PlanarTerm t;
  t.symbol = symbol;
  t.children = std::move(children);
  return t;
}

//! g(x, y) with generator g of arity 2, child planted at `slot`.
TermRelation pair2(int g1, int i1, int h1, int g2, int i2, int h2) {
  auto build = [](int g, int i, int h) {
    return i == 1 ? node(g, {node(h, {leaf(), leaf()}), leaf()})
                  : node(g, {leaf(), node(h, {leaf(), leaf()})});
  };
  return TermRelation{build(g1, i1, h1), build(g2, i2, h2)};
}

}  // namespace

Presentation presentation_preset(const std::string& name) {
  const std::vector<GeneratorSymbol> two_binary = {{"a", 2}, {"b", 2}};
  const std::vector<GeneratorSymbol> three_binary = {{"a", 2},
                                                     {"b", 2},
                                                     {"c", 2}};
  if (name == "comp") {
    return Presentation(name, two_binary,
                        {pair2(0, 1, 0, 0, 2, 0), pair2(1, 1, 0, 0, 2, 1),
                         pair2(1, 1, 1, 1, 2, 0), pair2(0, 1, 1, 1, 2, 1)});
  }
  if (name == "scomp") {
    return Presentation(
        name, three_binary,
        {pair2(0, 1, 0, 0, 2, 0), pair2(0, 2, 1, 1, 1, 0),
         pair2(0, 2, 2, 2, 1, 0), pair2(0, 1, 1, 1, 2, 2),
         pair2(1, 1, 1, 1, 2, 0), pair2(1, 2, 1, 2, 1, 1),
         pair2(0, 1, 2, 2, 2, 1), pair2(1, 1, 2, 2, 2, 2),
         pair2(2, 1, 2, 2, 2, 0)});
  }
  if (name == "schr") {
    return Presentation(
        name, three_binary,
        {pair2(0, 1, 0, 0, 2, 0), pair2(1, 1, 0, 0, 2, 1),
         pair2(1, 1, 1, 1, 2, 0), pair2(0, 1, 2, 2, 2, 0),
         pair2(2, 1, 0, 2, 2, 2), pair2(1, 1, 2, 2, 2, 1),
         pair2(0, 1, 1, 0, 2, 2)});
  }
  if (name == "motz") {
    const std::vector<GeneratorSymbol> symbols = {{"a", 2}, {"b", 3}};
    const auto a = [](PlanarTerm x, PlanarTerm y) {
      return node(0, {std::move(x), std::move(y)});
    };
    const auto b = [](PlanarTerm x, PlanarTerm y, PlanarTerm z) {
      return node(1, {std::move(x), std::move(y), std::move(z)});
    };
    std::vector<TermRelation> relations;
    relations.push_back(
        {a(a(leaf(), leaf()), leaf()), a(leaf(), a(leaf(), leaf()))});
    relations.push_back({a(b(leaf(), leaf(), leaf()), leaf()),
                         b(leaf(), leaf(), a(leaf(), leaf()))});
    relations.push_back({b(a(leaf(), leaf()), leaf(), leaf()),
                         a(leaf(), b(leaf(), leaf(), leaf()))});
    relations.push_back({b(b(leaf(), leaf(), leaf()), leaf(), leaf()),
                         b(leaf(), leaf(), b(leaf(), leaf(), leaf()))});
    return Presentation(name, symbols, std::move(relations));
  }
  if (name == "fcat-two-gen") {
    return Presentation(name, two_binary,
                        {pair2(0, 1, 0, 0, 2, 0), pair2(1, 1, 0, 0, 2, 1),
                         pair2(1, 1, 1, 1, 2, 0)});
  }
  if (name == "and-quadratic") {
    return Presentation(name, two_binary,
                        {pair2(0, 1, 0, 0, 2, 0), pair2(0, 2, 1, 1, 1, 0),
                         pair2(1, 1, 1, 1, 2, 0)});
  }
  if (name == "dias") {
    const std::vector<GeneratorSymbol> symbols = {{"l", 2}, {"r", 2}};
    return Presentation(name, symbols,
                        {pair2(0, 1, 0, 0, 2, 0), pair2(0, 2, 0, 0, 2, 1),
                         pair2(0, 1, 1, 1, 2, 0), pair2(1, 1, 0, 1, 1, 1),
                         pair2(1, 2, 1, 1, 1, 1)});
  }
  throw UsageError("unknown presentation preset '" + name +
                   "' (expected one of: comp, scomp, schr, motz, "
                   "fcat-two-gen, and-quadratic, dias)");
}

std::vector<std::string> presentation_preset_names() {
  return {"comp", "scomp",         "schr", "motz",
          "fcat-two-gen", "and-quadratic", "dias"};
}

namespace {

class TermParser {
 public:
  TermParser(const std::string& line, std::vector<GeneratorSymbol>& symbols,
             bool symbols_fixed)
      : text_(line), symbols_(symbols), symbols_fixed_(symbols_fixed) {}

  PlanarTerm parse_side() {
    PlanarTerm t = parse_term();
    skip_spaces();
    return t;
  }

  bool at(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      throw UsageError("expected '" + std::string(1, c) + "' at column " +
                       std::to_string(pos_ + 1) + " in: " + text_);
    }
    ++pos_;
  }

  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  PlanarTerm parse_term() {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      return PlanarTerm{};
    }
    const std::string name = parse_name();
    expect('(');
    std::vector<PlanarTerm> children;
    children.push_back(parse_term());
    while (at(',')) {
      ++pos_;
      children.push_back(parse_term());
    }
    expect(')');
    const int arity = static_cast<int>(children.size());
    return node(resolve(name, arity), std::move(children));
  }

  std::string parse_name() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      throw UsageError("expected a generator name or '.' at column " +
                       std::to_string(pos_ + 1) + " in: " + text_);
    }
    return text_.substr(start, pos_ - start);
  }

  int resolve(const std::string& name, int arity) {
    for (std::size_t s = 0; s < symbols_.size(); ++s) {
      if (symbols_[s].name == name) {
        if (symbols_[s].arity != arity) {
          throw UsageError("generator " + name + " declared with arity " +
                           std::to_string(symbols_[s].arity) +
                           " but used with " + std::to_string(arity) +
                           " arguments");
        }
        return static_cast<int>(s);
      }
    }
    if (symbols_fixed_) {
      throw UsageError("generator " + name +
                       " is not declared by any gen line");
    }
    symbols_.push_back(GeneratorSymbol{name, arity});
    return static_cast<int>(symbols_.size()) - 1;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::vector<GeneratorSymbol>& symbols_;
  bool symbols_fixed_;
};

}  // namespace

Presentation parse_presentation(const std::string& text,
                                const std::string& name) {
  std::vector<GeneratorSymbol> symbols;
  std::vector<std::string> relation_lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;  // blank
    if (first == "gen") {
      std::string gen_name;
      int arity = 0;
      if (!(probe >> gen_name >> arity)) {
        throw UsageError("malformed gen line (want: gen <name> <arity>): " +
                         line);
      }
      for (const GeneratorSymbol& g : symbols) {
        if (g.name == gen_name) {
          throw UsageError("generator " + gen_name + " declared twice");
        }
      }
      symbols.push_back(GeneratorSymbol{gen_name, arity});
      continue;
    }
    relation_lines.push_back(line);
  }
  const bool fixed = !symbols.empty();
  std::vector<TermRelation> relations;
  for (const std::string& rel_line : relation_lines) {
    TermParser parser(rel_line, symbols, fixed);
    PlanarTerm left = parser.parse_side();
    parser.expect('=');
    PlanarTerm right = parser.parse_side();
    if (!parser.done()) {
      throw UsageError("trailing input after relation: " + rel_line);
    }
    relations.push_back(TermRelation{std::move(left), std::move(right)});
  }
  return Presentation(name, std::move(symbols), std::move(relations));
}

}  // namespace operadica
