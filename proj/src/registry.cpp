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

#include "operadica/registry.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace operadica {

namespace {

OperadFamily make_family(const std::string& name, const Monoid& m,
                         const std::vector<Letters>& generator_letters,
                         ClosureMode mode = ClosureMode::NonSymmetric) {
  std::vector<Word> generators;
  generators.reserve(generator_letters.size());
  for (const Letters& letters : generator_letters) {
    generators.emplace_back(m, letters);
  }
  return OperadFamily(name, m, std::move(generators), mode);
}

OperadInfo characterized(const std::string& name, FamilyId id, int k,
                         std::optional<OperadFamily> family) {
  OperadInfo info;
  info.name = name;
  info.id = id;
  info.k = k;
  info.predicate.emplace(id, k);
  info.monoid = info.predicate->monoid();
  info.family = std::move(family);
  return info;
}

OperadInfo word_operad(const std::string& name, FamilyId id,
                       const Monoid& m) {
  OperadInfo info;
  info.name = name;
  info.id = id;
  info.monoid = m;
  info.full_word_operad = true;
  return info;
}

std::optional<int> parse_fcat_parameter(const std::string& name) {
  if (name.rfind("fcat:", 0) != 0) return std::nullopt;
  const std::string digits = name.substr(5);
  int k = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 0) {
    throw UsageError("bad fcat parameter in '" + name +
                     "' (expected fcat:<k> with k >= 0)");
  }
  return k;
}

}  // namespace

std::vector<std::string> operad_names() {
  return {"end",  "fp",    "mt",  "ape", "fcat:<k>", "schr", "motz",
          "comp", "scomp", "and", "dias", "tn",      "tn2",  "tn3"};
}

OperadInfo lookup_operad(const std::string& name) {
  const Monoid nat = Monoid::nat_add();
  if (name == "end") {
    return characterized(name, FamilyId::End, 0, std::nullopt);
  }
  if (name == "fp") {
    return characterized(name, FamilyId::FP, 0, std::nullopt);
  }
  if (name == "mt") {
    return characterized(
        name, FamilyId::MT, 0,
        make_family(name, nat, {{0, 0}, {0, 1}}, ClosureMode::Symmetric));
  }
  if (name == "ape") {
    return characterized(name, FamilyId::APE, 0,
                         make_family(name, nat, {{0, 1}}));
  }
  if (const std::optional<int> k = parse_fcat_parameter(name)) {
    std::vector<Letters> generators;
    for (Element v = 0; v <= *k; ++v) generators.push_back({0, v});
    return characterized(name, FamilyId::FCat, *k,
                         make_family(name, nat, generators));
  }
  if (name == "schr") {
    return characterized(name, FamilyId::Schr, 0,
                         make_family(name, nat, {{0, 0}, {0, 1}, {1, 0}}));
  }
  if (name == "motz") {
    return characterized(name, FamilyId::Motz, 0,
                         make_family(name, nat, {{0, 0}, {0, 1, 0}}));
  }
  if (name == "comp") {
    return characterized(name, FamilyId::Comp, 0,
                         make_family(name, Monoid::mod(2), {{0, 0}, {0, 1}}));
  }
  if (name == "scomp") {
    return characterized(
        name, FamilyId::SComp, 0,
        make_family(name, Monoid::mod(3), {{0, 0}, {0, 1}, {0, 2}}));
  }
  if (name == "and") {
    OperadInfo info;
    info.name = name;
    info.id = FamilyId::AnD;
    info.monoid = Monoid::mod(3);
    info.family = make_family(name, info.monoid, {{0, 0}, {0, 1}});
    return info;
  }
  if (name == "dias") {
    return characterized(
        name, FamilyId::Dias, 0,
        make_family(name, Monoid::bool_mult(), {{1, 0}, {0, 1}}));
  }
  if (name == "tn") return word_operad(name, FamilyId::TN, nat);
  if (name == "tn2") return word_operad(name, FamilyId::TN2, Monoid::mod(2));
  if (name == "tn3") return word_operad(name, FamilyId::TN3, Monoid::mod(3));
  try {
    const Monoid m = Monoid::parse(name);
    return word_operad(m.name(), FamilyId::TN, m);
  } catch (const UsageError&) {
    // fall through to the listing below
  }
  std::ostringstream os;
  os << "unknown operad '" << name << "' (expected one of:";
  for (const std::string& known : operad_names()) os << ' ' << known;
  os << ", or a monoid spec such as mod:5)";
  throw UsageError(os.str());
}

namespace {

std::vector<Letters> carrier_slice(const Monoid& m, int arity,
                                   const ResourceGuard& guard,
                                   const std::string& name) {
  const std::vector<Element> alphabet = m.carrier();
  std::vector<Letters> out;
  Letters current(static_cast<std::size_t>(arity), alphabet.front());
  std::vector<std::size_t> digits(static_cast<std::size_t>(arity), 0);
  for (;;) {
    out.push_back(current);
    if (out.size() > guard.max_elements) {
      throw ResourceError("enumeration of " + name + " exceeded " +
                              std::to_string(guard.max_elements) +
                              " elements at arity " + std::to_string(arity),
                          arity);
    }
    std::size_t p = static_cast<std::size_t>(arity);
    while (p-- > 0) {
      if (++digits[p] < alphabet.size()) {
        current[p] = alphabet[digits[p]];
        break;
      }
      digits[p] = 0;
      current[p] = alphabet.front();
    }
    if (p == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace

std::vector<Letters> operad_slice(const OperadInfo& info, int arity,
                                  const ResourceGuard& guard) {
  if (arity < 1) {
    throw DomainError("slices start at arity 1");
  }
  if (info.family.has_value()) {
    return generate(*info.family, arity, guard).grade(arity);
  }
  if (info.predicate.has_value()) {
    return info.predicate->slice(arity);
  }
  if (info.full_word_operad && info.monoid.finite()) {
    return carrier_slice(info.monoid, arity, guard, info.name);
  }
  throw DomainError("operad " + info.name +
                    " has infinitely many words per arity; there is nothing "
                    "finite to enumerate");
}

std::vector<long long> operad_counts(const OperadInfo& info, int max_arity,
                                     const ResourceGuard& guard) {
  std::vector<long long> out;
  if (info.family.has_value()) {
    return generate(*info.family, max_arity, guard).counts();
  }
  for (int n = 1; n <= max_arity; ++n) {
    out.push_back(static_cast<long long>(operad_slice(info, n, guard).size()));
  }
  return out;
}

std::vector<long long> operad_oracle(const OperadInfo& info, int max_arity) {
  std::vector<long long> out;
  if (info.full_word_operad) {
    if (!info.monoid.finite()) {
      throw DomainError("operad " + info.name +
                        " has no finite counting oracle");
    }
    const long long base = static_cast<long long>(info.monoid.carrier().size());
    for (int n = 1; n <= max_arity; ++n) out.push_back(power(base, n));
    return out;
  }
  for (int n = 1; n <= max_arity; ++n) {
    out.push_back(oracle_count(info.id, info.k, n));
  }
  return out;
}

MembershipResult operad_membership(const OperadInfo& info, const Word& x,
                                   const ResourceGuard& guard) {
  if (x.monoid() != info.monoid) {
    throw DomainError("operad " + info.name + " holds words over " +
                      info.monoid.name() + ", got " + x.monoid().name());
  }
  if (info.predicate.has_value()) {
    return info.predicate->membership(x);
  }
  if (info.full_word_operad) {
    return MembershipResult{};  // every word over the monoid belongs
  }
  MembershipResult result;
  if (!contains(*info.family, x, guard)) {
    result.member = false;
    result.clause = "produced by the generators of " + info.name;
  }
  return result;
}

const OperadFamily& require_family(const OperadInfo& info) {
  if (!info.family.has_value()) {
    throw DomainError("operad " + info.name +
                      " has no finite generating set registered");
  }
  return *info.family;
}

MonoidMorphism parse_map(const std::string& spec, const Monoid& source) {
  if (spec == "identity") {
    return MonoidMorphism::identity(source);
  }
  if (spec.rfind("mod:", 0) == 0) {
    const std::string digits = spec.substr(4);
    Element k = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) {
      throw UsageError("bad map '" + spec +
                       "' (expected identity or mod:<k> with k >= 1)");
    }
    return MonoidMorphism::mod_reduction(source, k);
  }
  throw UsageError("unknown map '" + spec +
                   "' (expected identity or mod:<k>)");
}

std::string MorphismComparison::to_text() const {
  std::ostringstream os;
  os << "from: " << from << "\nto: " << to << "\nmap: " << map
     << "\nimage counts:";
  for (long long c : image_counts) os << ' ' << c;
  os << "\ntarget counts:";
  for (long long c : target_counts) os << ' ' << c;
  os << "\ncontained: " << (contained ? "yes" : "no")
     << "\nequal: " << (equal ? "yes" : "no") << "\n";
  if (!witness.empty()) os << "witness: " << witness << "\n";
  return os.str();
}

MorphismComparison compare_image(const OperadInfo& from,
                                 const MonoidMorphism& theta,
                                 const OperadInfo& to, int max_arity,
                                 const ResourceGuard& guard) {
  if (theta.source() != from.monoid) {
    throw DomainError("map starts at " + theta.source().name() + " but " +
                      from.name + " holds words over " + from.monoid.name());
  }
  if (theta.target() != to.monoid) {
    throw DomainError("map lands in " + theta.target().name() + " but " +
                      to.name + " holds words over " + to.monoid.name());
  }
  MorphismComparison report;
  report.from = from.name;
  report.to = to.name;
  report.map = theta.kind() == MorphismKind::Identity
                   ? "identity"
                   : "mod:" + std::to_string(theta.target().modulus());
  report.max_arity = max_arity;

  const GradedSet image =
      image_under(theta, require_family(from), max_arity, guard);
  for (int n = 1; n <= max_arity; ++n) {
    const std::vector<Letters>& got = image.grade(n);
    const std::vector<Letters> want = operad_slice(to, n, guard);
    report.image_counts.push_back(static_cast<long long>(got.size()));
    report.target_counts.push_back(static_cast<long long>(want.size()));
    const bool sub =
        std::includes(want.begin(), want.end(), got.begin(), got.end());
    if (!sub && report.contained) {
      report.contained = false;
      for (const Letters& letters : got) {
        if (!std::binary_search(want.begin(), want.end(), letters)) {
          report.witness = "image word (" + letters_to_text(letters) +
                           ") of arity " + std::to_string(n) +
                           " lies outside " + to.name;
          break;
        }
      }
    }
    if (got != want && report.equal) {
      report.equal = false;
      if (sub && report.witness.empty()) {
        for (const Letters& letters : want) {
          if (!std::binary_search(got.begin(), got.end(), letters)) {
            report.witness = "(" + letters_to_text(letters) + ") of arity " +
                             std::to_string(n) + " is in " + to.name +
                             " but not in the image";
            break;
          }
        }
      }
    }
  }
  return report;
}

std::string preset_default_operad(const std::string& preset) {
  if (preset == "comp") return "comp";
  if (preset == "scomp") return "scomp";
  if (preset == "schr") return "schr";
  if (preset == "motz") return "motz";
  if (preset == "fcat-two-gen") return "fcat:1";
  if (preset == "and-quadratic") return "and";
  if (preset == "dias") return "dias";
  throw UsageError("no default operad for preset '" + preset + "'");
}

}  // namespace operadica
