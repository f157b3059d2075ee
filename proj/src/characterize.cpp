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

#include "operadica/characterize.hpp"

#include <algorithm>
#include <sstream>

namespace operadica {

namespace {

Monoid predicate_monoid(FamilyId id) {
  switch (id) {
    case FamilyId::End:
    case FamilyId::FP:
    case FamilyId::MT:
    case FamilyId::APE:
    case FamilyId::FCat:
    case FamilyId::Schr:
    case FamilyId::Motz:
      return Monoid::nat_add();
    case FamilyId::Comp:
      return Monoid::mod(2);
    case FamilyId::SComp:
      return Monoid::mod(3);
    case FamilyId::Dias:
      return Monoid::bool_mult();
    default:
      throw DomainError("family " + family_name(id) +
                        " has no letterwise characterization");
  }
}

MembershipResult fail(std::string clause, int position) {
  MembershipResult r;
  r.member = false;
  r.clause = std::move(clause);
  r.position = position;
  return r;
}

MembershipResult pass() { return MembershipResult{}; }

MembershipResult check_end(const Letters& v) {
  const Element bound = static_cast<Element>(v.size()) - 1;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] > bound) {
      return fail("x_i <= n - 1", static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_fp(const Letters& v) {
  Letters sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (sorted[p] > static_cast<Element>(p)) {
      return fail("x_(i) <= i - 1 after sorting", static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_mt(const Letters& v) {
  const Element top = *std::max_element(v.begin(), v.end());
  std::vector<bool> present(static_cast<std::size_t>(top) + 1, false);
  for (Element letter : v) present[static_cast<std::size_t>(letter)] = true;
  for (Element value = 0; value <= top; ++value) {
    if (!present[static_cast<std::size_t>(value)]) {
      return fail("value " + std::to_string(value) +
                      " in 0..max(x) does not occur",
                  0);
    }
  }
  return pass();
}

MembershipResult check_ape(const Letters& v) {
  if (v.front() != 0) return fail("x_1 = 0", 1);
  for (std::size_t p = 1; p < v.size(); ++p) {
    if (v[p] < 1) return fail("1 <= x_{i+1}", static_cast<int>(p) + 1);
    if (v[p] > v[p - 1] + 1) {
      return fail("x_{i+1} <= x_i + 1", static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_fcat(int k, const Letters& v) {
  if (v.front() != 0) return fail("x_1 = 0", 1);
  for (std::size_t p = 1; p < v.size(); ++p) {
    if (v[p] < 0) return fail("0 <= x_{i+1}", static_cast<int>(p) + 1);
    if (v[p] > v[p - 1] + k) {
      return fail("x_{i+1} <= x_i + " + std::to_string(k),
                  static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_schr(const Letters& v) {
  if (std::find(v.begin(), v.end(), 0) == v.end()) {
    return fail("letter 0 occurs", 0);
  }
  for (std::size_t p = 0; p < v.size(); ++p) {
    const Element b = v[p];
    if (b == 0) continue;
    bool ok = false;
    for (std::size_t q = p; q-- > 0;) {
      if (v[q] < b) {
        ok = v[q] == b - 1;
        break;
      }
    }
    if (!ok) {
      for (std::size_t q = p + 1; q < v.size(); ++q) {
        if (v[q] < b) {
          ok = v[q] == b - 1;
          break;
        }
      }
    }
    if (!ok) {
      return fail("a nearest smaller neighbour of x_i equals x_i - 1",
                  static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_motz(const Letters& v) {
  if (v.front() != 0) return fail("x_1 = 0", 1);
  if (v.back() != 0) return fail("x_n = 0", static_cast<int>(v.size()));
  for (std::size_t p = 1; p < v.size(); ++p) {
    const Element d = v[p] - v[p - 1];
    if (d > 1 || d < -1) {
      return fail("|x_{i+1} - x_i| <= 1", static_cast<int>(p) + 1);
    }
  }
  return pass();
}

MembershipResult check_first_zero(const Letters& v) {
  if (v.front() != 0) return fail("x_1 = 0", 1);
  return pass();
}

MembershipResult check_dias(const Letters& v) {
  int ones = 0;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] == 1 && ++ones == 2) {
      return fail("exactly one letter equals 1", static_cast<int>(p) + 1);
    }
  }
  if (ones == 0) return fail("exactly one letter equals 1", 0);
  return pass();
}

}  // namespace

FamilyPredicate::FamilyPredicate(FamilyId id, int k)
    : id_(id), k_(k), monoid_(predicate_monoid(id)) {
  if (id != FamilyId::FCat && k != 0) {
    throw DomainError("family " + family_name(id) + " takes no parameter");
  }
  if (id == FamilyId::FCat && k < 0) {
    throw DomainError("fcat requires parameter k >= 0");
  }
}

MembershipResult FamilyPredicate::membership(const Word& x) const {
  if (x.monoid() != monoid_) {
    throw DomainError("family " + name() + " expects words over " +
                      monoid_.name() + ", got " + x.monoid().name());
  }
  const Letters& v = x.letters();
  switch (id_) {
    case FamilyId::End:
      return check_end(v);
    case FamilyId::FP:
      return check_fp(v);
    case FamilyId::MT:
      return check_mt(v);
    case FamilyId::APE:
      return check_ape(v);
    case FamilyId::FCat:
      return check_fcat(k_, v);
    case FamilyId::Schr:
      return check_schr(v);
    case FamilyId::Motz:
      return check_motz(v);
    case FamilyId::Comp:
    case FamilyId::SComp:
      return check_first_zero(v);
    case FamilyId::Dias:
      return check_dias(v);
    default:
      throw DomainError("unreachable");
  }
}

namespace {

//! Depth-first extension for the prefix-closed families; candidate ranges
//! are exact, so no final filter is needed.
void extend_ape(Letters& prefix, int arity, std::vector<Letters>& out) {
  if (static_cast<int>(prefix.size()) == arity) {
    out.push_back(prefix);
    return;
  }
  for (Element v = 1; v <= prefix.back() + 1; ++v) {
    prefix.push_back(v);
    extend_ape(prefix, arity, out);
    prefix.pop_back();
  }
}

void extend_fcat(int k, Letters& prefix, int arity, std::vector<Letters>& out) {
  if (static_cast<int>(prefix.size()) == arity) {
    out.push_back(prefix);
    return;
  }
  for (Element v = 0; v <= prefix.back() + k; ++v) {
    prefix.push_back(v);
    extend_fcat(k, prefix, arity, out);
    prefix.pop_back();
  }
}

//! The height cap x_p <= n - p forces the final descent to 0, so every
//! completed word ends at 0 automatically.
void extend_motz(Letters& prefix, int arity, std::vector<Letters>& out) {
  const int p = static_cast<int>(prefix.size());
  if (p == arity) {
    out.push_back(prefix);
    return;
  }
  const Element last = prefix.back();
  for (Element v = std::max<Element>(0, last - 1); v <= last + 1; ++v) {
    if (v > arity - (p + 1)) continue;
    prefix.push_back(v);
    extend_motz(prefix, arity, out);
    prefix.pop_back();
  }
}

std::vector<Letters> filtered_odometer(const FamilyPredicate& pred,
                                       const std::vector<Element>& alphabet,
                                       int arity) {
  std::vector<Letters> out;
  Letters current(static_cast<std::size_t>(arity), alphabet.front());
  std::vector<std::size_t> digits(static_cast<std::size_t>(arity), 0);
  const Monoid& m = pred.monoid();
  for (;;) {
    if (pred.contains(Word(m, current))) out.push_back(current);
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

std::vector<Letters> FamilyPredicate::slice(int arity) const {
  if (arity < 1) {
    throw DomainError("slice requires arity >= 1");
  }
  std::vector<Letters> out;
  Letters prefix = {0};
  switch (id_) {
    case FamilyId::APE:
      extend_ape(prefix, arity, out);
      return out;
    case FamilyId::FCat:
      extend_fcat(k_, prefix, arity, out);
      return out;
    case FamilyId::Motz:
      extend_motz(prefix, arity, out);
      return out;
    default:
      break;
  }
  std::vector<Element> alphabet;
  if (monoid_.finite()) {
    alphabet = monoid_.carrier();
  } else {
    for (Element v = 0; v < static_cast<Element>(arity); ++v) {
      alphabet.push_back(v);
    }
  }
  return filtered_odometer(*this, alphabet, arity);
}

long long FamilyPredicate::slice_size(int arity) const {
  return static_cast<long long>(slice(arity).size());
}

std::string CrossValidation::to_text() const {
  std::ostringstream os;
  os << "family: " << family << "\nmax arity: " << max_arity
     << "\npredicate counts:";
  for (long long c : predicate_counts) os << ' ' << c;
  os << "\nclosure counts:";
  for (long long c : closure_counts) os << ' ' << c;
  os << "\nstatus: " << (agree ? "agree" : "disagree") << "\n";
  if (!witness.empty()) os << "witness: " << witness << "\n";
  return os.str();
}

CrossValidation cross_validate(const FamilyPredicate& predicate,
                               const OperadFamily& family, int max_arity,
                               const ResourceGuard& guard) {
  if (predicate.monoid() != family.monoid) {
    throw DomainError("predicate and closure use different monoids");
  }
  CrossValidation report;
  report.family = predicate.name();
  report.max_arity = max_arity;
  const GradedSet closure = generate(family, max_arity, guard);
  for (int n = 1; n <= max_arity; ++n) {
    const std::vector<Letters> wanted = predicate.slice(n);
    const std::vector<Letters>& got = closure.grade(n);
    report.predicate_counts.push_back(static_cast<long long>(wanted.size()));
    report.closure_counts.push_back(static_cast<long long>(got.size()));
    if (wanted == got) continue;
    report.agree = false;
    if (!report.witness.empty()) continue;
    // both sides are sorted, so walk them together for the first difference
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < wanted.size() && b < got.size() && wanted[a] == got[b]) {
      ++a;
      ++b;
    }
    std::ostringstream os;
    if (b < got.size() && (a == wanted.size() || got[b] < wanted[a])) {
      const MembershipResult r =
          predicate.membership(Word(family.monoid, got[b]));
      os << "closure contains (" << letters_to_text(got[b]) << ") at arity "
         << n << " but the characterization rejects it";
      if (!r.clause.empty()) os << " (fails: " << r.clause << ")";
    } else {
      os << "the characterization admits (" << letters_to_text(wanted[a])
         << ") at arity " << n << " but closure never produces it";
    }
    report.witness = os.str();
  }
  return report;
}

}  // namespace operadica
