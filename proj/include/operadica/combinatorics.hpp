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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "operadica/closure.hpp"
#include "operadica/family_id.hpp"
#include "operadica/word.hpp"

namespace operadica {

// --- counting ---------------------------------------------------------

//! Plane binary bracketings: catalan(0) = catalan(1) = 1, catalan(3) = 5.
long long catalan(int m);

//! (k+1)-ary plane trees with m internal nodes; fuss_catalan(1, m) is
//! catalan(m).
long long fuss_catalan(int k, int m);

//! Lattice paths with steps +1/0/-1 from 0 to 0 staying nonnegative;
//! motzkin(0..) = 1, 1, 2, 4, 9, 21, ...
long long motzkin(int m);

//! Plane trees with m leaves whose internal nodes all have >= 2 children;
//! super_catalan(1..) = 1, 1, 3, 11, 45, 197, ...  Computed by the tree
//! decomposition (root splits into >= 2 subtrees), not a closed form.
long long super_catalan(int m);

//! Ordered set partitions of an m-set: 1, 1, 3, 13, 75, 541, ...
long long ordered_bell(int m);

//! Single-source animals on the square lattice: every cell reachable from
//! the origin by up/right steps inside the animal.  Counted by direct
//! canonical-order backtracking for m <= 8; larger sizes fall back to
//! directed_animal_recurrence (the two agree on 1..8 by test).
long long directed_animal_count(int m);

//! The same numbers through an independent route: prefixes of length m-1
//! of nonnegative +1/0/-1 lattice paths, computed by dynamic programming.
long long directed_animal_recurrence(int m);

//! b^e in exact integer arithmetic.
long long power(long long b, int e);

//! Expected size of the family's arity-n slice, under the size conventions
//! the families use: APE(n) pairs with plane trees with n nodes, Motz(n)
//! with paths of n-1 steps, Schr(n) with leaf count n+1, FCat^k(n) with
//! trees with n internal nodes, AnD(n) with animals of n cells.
//! Throws DomainError for TN, whose slices are infinite.
long long oracle_count(FamilyId id, int k, int n);

// --- objects ----------------------------------------------------------

struct MotzkinPath {
  std::string steps;  // over {'U', 'F', 'D'}; empty path allowed
};

struct Composition {
  std::vector<long long> parts;  // all >= 1
};

struct SegmentedComposition {
  std::vector<std::vector<long long>> segments;  // nonempty parts >= 1
};

struct PlaneTree {
  std::vector<PlaneTree> children;
};

//! Full b-ary tree: every internal node has exactly `branching` children.
struct KAryTree {
  int branching = 0;
  bool leaf = true;
  std::vector<KAryTree> children;
};

//! Plane tree whose internal nodes all have >= 2 children.
struct SchroederTree {
  bool leaf = true;
  std::vector<SchroederTree> children;
};

using CombObject = std::variant<MotzkinPath, Composition, SegmentedComposition,
                                PlaneTree, KAryTree, SchroederTree>;

//! Canonical text rendering; equal objects render equally and distinct
//! objects differently, so renderings double as hash keys.
std::string render(const CombObject& object);

//! The combinatorial object a family member encodes:
//!   Motz   -> Motzkin path read off the letter differences
//!   Comp   -> composition, one part per maximal run 0 1^j
//!   SComp  -> segmented composition (0 starts a segment, 2 a part, 1 extends)
//!   APE    -> plane tree from its preorder depth sequence
//!   FCat^k -> full (k+1)-ary tree via the leaf-gap sequence
//!   Schr   -> tree built by splitting at the letters equal to the depth
//! Throws DomainError for words outside the family or unsupported families.
CombObject word_to_object(FamilyId id, int k, const Word& x);

struct BijectivityReport {
  std::string family;
  int arity = 0;
  long long members = 0;
  long long distinct_objects = 0;
  long long oracle = 0;
  bool injective = false;
  bool full_image = false;
  std::string collision_witness;  // two words mapping to one object

  bool passed() const { return injective && full_image; }
  std::string to_text() const;
};

//! Maps the family's whole arity-n slice (from generate) through
//! word_to_object and checks injectivity by rendering collisions plus
//! image-size agreement with oracle_count.
BijectivityReport bijectivity_report(FamilyId id, int k,
                                     const OperadFamily& family, int n,
                                     const ResourceGuard& guard = {});

}  // namespace operadica
