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

//! Free planar terms over a generator signature, congruences given by
//! term relations, and verification that a presentation matches a word
//! family exactly.

#pragma once

#include <string>
#include <vector>

#include "operadica/closure.hpp"
#include "operadica/word.hpp"

namespace operadica {

//! One formal generator: a name and an arity (always >= 2).
struct GeneratorSymbol {
  std::string name;
  int arity = 2;
};

//! A planar tree whose internal nodes are generator indices; leaves are
//! argument slots.  Terms compare via their canonical code.
struct PlanarTerm {
  int symbol = -1;  // index into the signature; -1 marks a leaf
  std::vector<PlanarTerm> children;

  bool is_leaf() const { return symbol < 0; }
  int leaf_count() const;
  //! Prefix rendering, e.g. "a(a(.,.),.)"; doubles as the canonical key.
  std::string code(const std::vector<GeneratorSymbol>& symbols) const;
};

//! Grafts `t` into the i-th leaf (1-indexed, left to right) of `s`.
PlanarTerm term_graft(const PlanarTerm& s, int i, const PlanarTerm& t);

//! An oriented pair of terms with the same leaf count, used as an
//! unoriented congruence relation.
struct TermRelation {
  PlanarTerm left;
  PlanarTerm right;
};

//! A signature plus a list of relations.
class Presentation {
 public:
  Presentation(std::string name, std::vector<GeneratorSymbol> symbols,
               std::vector<TermRelation> relations);

  const std::string& name() const { return name_; }
  const std::vector<GeneratorSymbol>& symbols() const { return symbols_; }
  const std::vector<TermRelation>& relations() const { return relations_; }
  std::string relation_text(std::size_t index) const;
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<GeneratorSymbol> symbols_;
  std::vector<TermRelation> relations_;
};

//! All planar terms with `arity` leaves, sorted by code.
std::vector<PlanarTerm> enumerate_terms(
    const std::vector<GeneratorSymbol>& symbols, int arity,
    const ResourceGuard& guard = {});

//! Interprets a term in the word operad: leaves become the unit and node
//! `g(t_1, ..., t_m)` grafts the evaluated children into `assignment[g]`.
Word eval_term(const PlanarTerm& term,
               const std::vector<GeneratorSymbol>& symbols,
               const std::vector<Word>& assignment, const Monoid& monoid);

//! Terms of one arity partitioned by the congruence the relations
//! generate (single rewrite steps at arbitrary subterm positions, closed
//! under transitivity).
struct QuotientClasses {
  std::vector<PlanarTerm> terms;             // sorted by code
  std::vector<int> class_of;                 // term index -> class id
  std::vector<std::size_t> representatives;  // class id -> least term index
  long long class_count() const {
    return static_cast<long long>(representatives.size());
  }
};

QuotientClasses quotient_classes(const Presentation& presentation, int arity,
                                 const ResourceGuard& guard = {});

//! Per-relation soundness under the positional assignment.
struct RelationCheck {
  std::string relation;
  bool holds = true;
  std::string witness;
};

//! Per-arity comparison of the presented quotient with the closure.
struct ArityCheck {
  int arity = 0;
  long long terms = 0;
  long long classes = 0;
  long long closure = 0;
  bool well_defined = true;
  bool injective = true;
  bool surjective = true;
  std::string witness;

  bool passed() const {
    return well_defined && injective && surjective && classes == closure;
  }
};

struct PresentationReport {
  std::string presentation;
  std::string operad;
  std::vector<RelationCheck> relations;
  std::vector<ArityCheck> arities;

  bool sound() const;
  bool passed() const;
  std::string to_text() const;
};

//! Assigns presentation symbols to the family's generators positionally
//! (symbol j to generator j; arities must agree), checks every relation,
//! and compares quotient classes with closure grades for each arity up to
//! `max_arity`.
PresentationReport verify_presentation(const Presentation& presentation,
                                       const OperadFamily& family,
                                       int max_arity,
                                       const ResourceGuard& guard = {});

//! All forced identifications between two-node terms: pairs g(..h..) that
//! evaluate to the same word.  Each group contributes relations equating
//! its members with its least member.
Presentation derive_quadratic_relations(const OperadFamily& family,
                                        const std::string& name);

//! Built-in presentations; throws UsageError for an unknown name.
Presentation presentation_preset(const std::string& name);
std::vector<std::string> presentation_preset_names();

//! Parses the presentation file format: one relation per line in prefix
//! notation ("a(a(.,.),.) = a(.,a(.,.))"), optional "gen <name> <arity>"
//! lines fixing symbol order, '#' comments.
Presentation parse_presentation(const std::string& text,
                                const std::string& name);

}  // namespace operadica
