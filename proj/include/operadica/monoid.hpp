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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "operadica/error.hpp"

namespace operadica {

//! Elements of every carrier are represented as 64-bit integers; for mod-k
//! the carrier is the set of canonical residues {0, ..., k-1}.
using Element = long long;

enum class MonoidKind {
  NatAdd,    // (N, +, 0)
  IntAdd,    // (Z, +, 0)
  Mod,       // (Z/kZ, +, 0), canonical residues
  BoolMult,  // ({0, 1}, *, 1)
  Custom     // test fixtures; product supplied by the caller
};

//! A monoid with an integer carrier.  Value type: copies are cheap and
//! equality is by kind (and modulus for mod-k).
class Monoid {
 public:
  static Monoid nat_add();
  static Monoid int_add();
  static Monoid mod(Element k);
  static Monoid bool_mult();

  //! Carrier, identity and product supplied by the caller.  Meant for test
  //! fixtures (for instance a deliberately non-associative product); custom
  //! monoids compare equal only by name.
  static Monoid custom(std::string name, Element identity,
                       std::function<Element(Element, Element)> product,
                       std::function<bool(Element)> contains);

  //! Parses "nat-add", "int-add", "mod:<k>" or "bool-mult".
  static Monoid parse(std::string_view spec);

  MonoidKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  Element identity() const noexcept { return identity_; }

  //! Modulus of a mod-k monoid; zero for every other kind.
  Element modulus() const noexcept { return modulus_; }

  bool contains(Element v) const;
  bool finite() const noexcept;

  //! All elements of a finite carrier, ascending.
  std::vector<Element> carrier() const;

  //! The monoid product.  Both operands must lie in the carrier.
  Element combine(Element a, Element b) const;

  friend bool operator==(const Monoid& a, const Monoid& b);
  friend bool operator!=(const Monoid& a, const Monoid& b) { return !(a == b); }

 private:
  struct CustomOps {
    std::function<Element(Element, Element)> product;
    std::function<bool(Element)> contains;
  };

  Monoid(MonoidKind kind, Element modulus, std::string name, Element identity);

  MonoidKind kind_;
  Element modulus_;
  std::string name_;
  Element identity_;
  std::shared_ptr<const CustomOps> custom_;
};

//! combine(m, a, b) is the product a * b in m.
inline Element combine(const Monoid& m, Element a, Element b) {
  return m.combine(a, b);
}

enum class MorphismKind { Identity, ModReduction, Table };

//! A monoid morphism between two carriers.  Construction validates the
//! morphism laws as far as they are checkable (exhaustively for finite
//! sources, structurally otherwise).
class MonoidMorphism {
 public:
  static MonoidMorphism identity(Monoid m);

  //! Reduction x -> x mod k.  Valid from nat-add and int-add for any k >= 1,
  //! and from mod-m whenever k divides m.
  static MonoidMorphism mod_reduction(Monoid source, Element k);

  //! Explicit value table for a finite source.  The table must be total,
  //! send identity to identity and respect products (checked exhaustively).
  static MonoidMorphism table(Monoid source, Monoid target,
                              std::map<Element, Element> values);

  MorphismKind kind() const noexcept { return kind_; }
  const Monoid& source() const noexcept { return source_; }
  const Monoid& target() const noexcept { return target_; }

  Element apply(Element a) const;

 private:
  MonoidMorphism(MorphismKind kind, Monoid source, Monoid target);

  MorphismKind kind_;
  Monoid source_;
  Monoid target_;
  std::shared_ptr<const std::map<Element, Element>> values_;
};

inline Element apply_morphism(const MonoidMorphism& theta, Element a) {
  return theta.apply(a);
}

}  // namespace operadica
