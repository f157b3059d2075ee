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

#include "operadica/monoid.hpp"

#include <charconv>
#include <utility>

namespace operadica {

namespace {

Element parse_integer(std::string_view text, const std::string& what) {
  Element value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("cannot parse " + what + " from \"" + std::string(text) +
                      "\"");
  }
  return value;
}

}  // namespace

Monoid::Monoid(MonoidKind kind, Element modulus, std::string name,
               Element identity)
    : kind_(kind),
      modulus_(modulus),
      name_(std::move(name)),
      identity_(identity) {}

Monoid Monoid::nat_add() { return Monoid(MonoidKind::NatAdd, 0, "nat-add", 0); }

Monoid Monoid::int_add() { return Monoid(MonoidKind::IntAdd, 0, "int-add", 0); }

Monoid Monoid::mod(Element k) {
  if (k < 1) {
    throw DomainError("mod-k monoid requires k >= 1");
  }
  return Monoid(MonoidKind::Mod, k, "mod:" + std::to_string(k), 0);
}

Monoid Monoid::bool_mult() {
  return Monoid(MonoidKind::BoolMult, 0, "bool-mult", 1);
}

Monoid Monoid::custom(std::string name, Element identity,
                      std::function<Element(Element, Element)> product,
                      std::function<bool(Element)> contains) {
  Monoid m(MonoidKind::Custom, 0, std::move(name), identity);
  auto ops = std::make_shared<CustomOps>();
  ops->product = std::move(product);
  ops->contains = std::move(contains);
  m.custom_ = std::move(ops);
  if (!m.contains(identity)) {
    throw DomainError("custom monoid identity lies outside its carrier");
  }
  return m;
}

Monoid Monoid::parse(std::string_view spec) {
  if (spec == "nat-add") return nat_add();
  if (spec == "int-add") return int_add();
  if (spec == "bool-mult") return bool_mult();
  constexpr std::string_view prefix = "mod:";
  if (spec.substr(0, prefix.size()) == prefix) {
    try {
      return mod(parse_integer(spec.substr(prefix.size()), "modulus"));
    } catch (const DomainError& e) {
      // malformed spec text is a usage problem, not a math one
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown monoid \"" + std::string(spec) +
                   "\"; expected nat-add, int-add, mod:<k> or bool-mult");
}

bool Monoid::contains(Element v) const {
  switch (kind_) {
    case MonoidKind::NatAdd:
      return v >= 0;
    case MonoidKind::IntAdd:
      return true;
    case MonoidKind::Mod:
      return v >= 0 && v < modulus_;
    case MonoidKind::BoolMult:
      return v == 0 || v == 1;
    case MonoidKind::Custom:
      return custom_->contains(v);
  }
  return false;
}

bool Monoid::finite() const noexcept {
  return kind_ == MonoidKind::Mod || kind_ == MonoidKind::BoolMult;
}

std::vector<Element> Monoid::carrier() const {
  switch (kind_) {
    case MonoidKind::Mod: {
      std::vector<Element> all(static_cast<std::size_t>(modulus_));
      for (Element v = 0; v < modulus_; ++v) all[static_cast<std::size_t>(v)] = v;
      return all;
    }
    case MonoidKind::BoolMult:
      return {0, 1};
    default:
      throw DomainError("carrier() requires a finite monoid, got " + name_);
  }
}

Element Monoid::combine(Element a, Element b) const {
  if (!contains(a) || !contains(b)) {
    throw DomainError("operand outside the carrier of " + name_);
  }
  switch (kind_) {
    case MonoidKind::NatAdd:
    case MonoidKind::IntAdd:
      return a + b;
    case MonoidKind::Mod:
      return (a + b) % modulus_;
    case MonoidKind::BoolMult:
      return a * b;
    case MonoidKind::Custom:
      return custom_->product(a, b);
  }
  return 0;
}

bool operator==(const Monoid& a, const Monoid& b) {
  return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.name_ == b.name_;
}

MonoidMorphism::MonoidMorphism(MorphismKind kind, Monoid source, Monoid target)
    : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

MonoidMorphism MonoidMorphism::identity(Monoid m) {
  Monoid copy = m;
  return MonoidMorphism(MorphismKind::Identity, std::move(m), std::move(copy));
}

MonoidMorphism MonoidMorphism::mod_reduction(Monoid source, Element k) {
  if (k < 1) {
    throw DomainError("mod-reduction requires k >= 1");
  }
  switch (source.kind()) {
    case MonoidKind::NatAdd:
    case MonoidKind::IntAdd:
      break;
    case MonoidKind::Mod:
      if (source.modulus() % k != 0) {
        throw DomainError("mod-reduction from " + source.name() + " to mod:" +
                          std::to_string(k) + " is not a morphism");
      }
      break;
    default:
      throw DomainError("mod-reduction is not defined on " + source.name());
  }
  return MonoidMorphism(MorphismKind::ModReduction, std::move(source),
                        Monoid::mod(k));
}

MonoidMorphism MonoidMorphism::table(Monoid source, Monoid target,
                                     std::map<Element, Element> values) {
  if (!source.finite()) {
    throw DomainError("table morphisms require a finite source monoid");
  }
  const std::vector<Element> all = source.carrier();
  for (Element v : all) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw DomainError("table morphism is not total on " + source.name());
    }
    if (!target.contains(it->second)) {
      throw DomainError("table morphism image outside the carrier of " +
                        target.name());
    }
  }
  if (values.at(source.identity()) != target.identity()) {
    throw DomainError("table morphism does not preserve the identity");
  }
  for (Element a : all) {
    for (Element b : all) {
      if (values.at(source.combine(a, b)) !=
          target.combine(values.at(a), values.at(b))) {
        throw DomainError("table morphism does not respect the product at (" +
                          std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  MonoidMorphism theta(MorphismKind::Table, std::move(source),
                       std::move(target));
  theta.values_ =
      std::make_shared<const std::map<Element, Element>>(std::move(values));
  return theta;
}

Element MonoidMorphism::apply(Element a) const {
  if (!source_.contains(a)) {
    throw DomainError("morphism argument outside the carrier of " +
                      source_.name());
  }
  switch (kind_) {
    case MorphismKind::Identity:
      return a;
    case MorphismKind::ModReduction: {
      const Element k = target_.modulus();
      return ((a % k) + k) % k;
    }
    case MorphismKind::Table:
      return values_->at(a);
  }
  return a;
}

}  // namespace operadica
