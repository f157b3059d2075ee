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

#include "operadica/axioms.hpp"

#include <random>
#include <sstream>

namespace operadica {

namespace {

//! Deterministic bounded draws; avoids std::uniform_int_distribution whose
//! output is implementation-defined.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long long below(long long n) {
    return static_cast<long long>(gen() % static_cast<std::uint64_t>(n));
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(hi - lo + 1));
  }
};

std::string show(const Word& w) { return "(" + w.to_text() + ")"; }

std::string show(const Permutation& s) {
  std::ostringstream os;
  os << "[";
  for (int j = 1; j <= s.degree(); ++j) {
    if (j > 1) os << ",";
    os << s.image(j);
  }
  os << "]";
  return os.str();
}

//! Morphisms out of m that the functoriality checks exercise.
std::vector<MonoidMorphism> functoriality_morphisms(const Monoid& m) {
  std::vector<MonoidMorphism> out;
  switch (m.kind()) {
    case MonoidKind::NatAdd:
      out.push_back(MonoidMorphism::mod_reduction(m, 2));
      out.push_back(MonoidMorphism::mod_reduction(m, 3));
      break;
    case MonoidKind::IntAdd:
      out.push_back(MonoidMorphism::mod_reduction(m, 2));
      break;
    case MonoidKind::Mod:
      out.push_back(MonoidMorphism::identity(m));
      for (Element d = 1; d < m.modulus(); ++d) {
        if (m.modulus() % d == 0) {
          out.push_back(MonoidMorphism::mod_reduction(m, d));
        }
      }
      break;
    case MonoidKind::BoolMult:
      out.push_back(MonoidMorphism::identity(m));
      out.push_back(
          MonoidMorphism::table(m, Monoid::mod(1), {{0, 0}, {1, 0}}));
      break;
    case MonoidKind::Custom:
      out.push_back(MonoidMorphism::identity(m));
      break;
  }
  return out;
}

class Checker {
 public:
  explicit Checker(const Monoid& m) : m_(m), morphisms_(functoriality_morphisms(m)) {}

  //! One axiom instance; remembers the first counterexample per axiom.
  void instance(AxiomCheck& c, bool ok, const std::string& detail) {
    ++c.cases;
    if (!ok && c.passed) {
      c.passed = false;
      c.counterexample = detail;
    }
  }

  void sequential(AxiomCheck& c, const Word& x, int i, const Word& y, int j,
                  const Word& z) {
    const Word lhs = graft(graft(x, i, y), i - 1 + j, z);
    const Word rhs = graft(x, i, graft(y, j, z));
    std::ostringstream os;
    os << "x=" << show(x) << " i=" << i << " y=" << show(y) << " j=" << j
       << " z=" << show(z);
    instance(c, lhs == rhs, os.str());
  }

  void parallel(AxiomCheck& c, const Word& x, int i, const Word& y, int j,
                const Word& z) {
    // pre: i < j <= arity(x)
    const Word lhs = graft(graft(x, j, z), i, y);
    const Word rhs = graft(graft(x, i, y), j + y.arity() - 1, z);
    std::ostringstream os;
    os << "x=" << show(x) << " i=" << i << " y=" << show(y) << " j=" << j
       << " z=" << show(z);
    instance(c, lhs == rhs, os.str());
  }

  void units(AxiomCheck& left, AxiomCheck& right, const Word& x) {
    const Word e = unit(m_);
    instance(left, graft(e, 1, x) == x, "x=" + show(x));
    for (int i = 1; i <= x.arity(); ++i) {
      instance(right, graft(x, i, e) == x,
               "x=" + show(x) + " i=" + std::to_string(i));
    }
  }

  void right_action(AxiomCheck& c, const Word& x, const Permutation& s,
                    const Permutation& t) {
    const Word lhs = act(act(x, s), t);
    const Word rhs = act(x, s.compose(t));
    instance(c, lhs == rhs,
             "x=" + show(x) + " sigma=" + show(s) + " tau=" + show(t));
  }

  void action_identity(AxiomCheck& c, const Word& x) {
    instance(c, act(x, Permutation::identity(x.arity())) == x, "x=" + show(x));
  }

  void equivariance_outer(AxiomCheck& c, const Word& x, const Permutation& s,
                          int i, const Word& y) {
    const Word lhs = graft(act(x, s), i, y);
    const Word rhs = act(graft(x, s.image(i), y),
                         block_substitution(s, i, y.arity()));
    std::ostringstream os;
    os << "x=" << show(x) << " sigma=" << show(s) << " i=" << i
       << " y=" << show(y);
    instance(c, lhs == rhs, os.str());
  }

  void equivariance_inner(AxiomCheck& c, const Word& x, int i, const Word& y,
                          const Permutation& t) {
    const Word lhs = graft(x, i, act(y, t));
    const Word rhs = act(graft(x, i, y), block_inner(x.arity(), i, t));
    std::ostringstream os;
    os << "x=" << show(x) << " i=" << i << " y=" << show(y)
       << " tau=" << show(t);
    instance(c, lhs == rhs, os.str());
  }

  void functoriality_graft(AxiomCheck& c, const Word& x, int i,
                           const Word& y) {
    for (const MonoidMorphism& theta : morphisms_) {
      const Word lhs = map_word(theta, graft(x, i, y));
      const Word rhs = graft(map_word(theta, x), i, map_word(theta, y));
      std::ostringstream os;
      os << "theta=" << theta.target().name() << " x=" << show(x)
         << " i=" << i << " y=" << show(y);
      instance(c, lhs == rhs, os.str());
    }
  }

  void functoriality_action(AxiomCheck& c, const Word& x,
                            const Permutation& s) {
    for (const MonoidMorphism& theta : morphisms_) {
      const Word lhs = map_word(theta, act(x, s));
      const Word rhs = act(map_word(theta, x), s);
      instance(c, lhs == rhs,
               "theta=" + theta.target().name() + " x=" + show(x) +
                   " sigma=" + show(s));
    }
  }

 private:
  const Monoid& m_;
  std::vector<MonoidMorphism> morphisms_;
};

AxiomReport run_exhaustive(const Monoid& m, int max_arity) {
  AxiomReport report;
  report.monoid = m.name();
  report.mode = "exhaustive";
  report.max_arity = max_arity;

  std::vector<Word> words;
  for (int n = 1; n <= max_arity; ++n) {
    for (Word& w : all_words(m, n)) words.push_back(std::move(w));
  }
  std::vector<std::vector<Permutation>> perms(
      static_cast<std::size_t>(max_arity) + 1);
  for (int n = 1; n <= max_arity; ++n) {
    perms[static_cast<std::size_t>(n)] = all_permutations(n);
  }

  Checker checker(m);
  auto named = [](const char* axiom) {
    AxiomCheck c;
    c.axiom = axiom;
    return c;
  };
  AxiomCheck seq = named("sequential"), par = named("parallel"),
             ul = named("unit-left"), ur = named("unit-right"),
             ra = named("right-action"), ai = named("action-identity"),
             eo = named("equivariance-outer"), ei = named("equivariance-inner"),
             fg = named("functoriality-graft"),
             fa = named("functoriality-action");

  for (const Word& x : words) {
    checker.units(ul, ur, x);
    checker.action_identity(ai, x);
    const auto& sx = perms[static_cast<std::size_t>(x.arity())];
    for (const Permutation& s : sx) {
      checker.functoriality_action(fa, x, s);
      for (const Permutation& t : sx) checker.right_action(ra, x, s, t);
    }
    for (const Word& y : words) {
      for (int i = 1; i <= x.arity(); ++i) {
        for (const Word& z : words) {
          for (int j = 1; j <= y.arity(); ++j) {
            checker.sequential(seq, x, i, y, j, z);
          }
          for (int j = i + 1; j <= x.arity(); ++j) {
            checker.parallel(par, x, i, y, j, z);
          }
        }
        for (const Permutation& s : sx) checker.equivariance_outer(eo, x, s, i, y);
        for (const Permutation& t :
             perms[static_cast<std::size_t>(y.arity())]) {
          checker.equivariance_inner(ei, x, i, y, t);
        }
        checker.functoriality_graft(fg, x, i, y);
      }
    }
  }

  report.checks = {seq, par, ul, ur, ra, ai, eo, ei, fg, fa};
  return report;
}

Word sample_word(Rng& rng, const Monoid& m, int arity) {
  Letters letters(static_cast<std::size_t>(arity));
  for (auto& v : letters) {
    switch (m.kind()) {
      case MonoidKind::NatAdd:
        v = rng.below(10);
        break;
      case MonoidKind::IntAdd:
        v = rng.below(19) - 9;
        break;
      case MonoidKind::Mod:
        v = rng.below(m.modulus());
        break;
      case MonoidKind::BoolMult:
        v = rng.below(2);
        break;
      case MonoidKind::Custom:
        v = rng.below(10);
        break;
    }
  }
  return Word(m, std::move(letters));
}

Permutation sample_permutation(Rng& rng, int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) line[static_cast<std::size_t>(j - 1)] = j;
  for (int j = n - 1; j >= 1; --j) {
    const int k = static_cast<int>(rng.below(j + 1));
    std::swap(line[static_cast<std::size_t>(j)],
              line[static_cast<std::size_t>(k)]);
  }
  return Permutation(std::move(line));
}

AxiomReport run_sampled(const Monoid& m, long long samples, std::uint64_t seed,
                        int max_arity) {
  AxiomReport report;
  report.monoid = m.name();
  report.mode = "sampled";
  report.max_arity = max_arity;
  report.samples = samples;

  Rng rng(seed);
  Checker checker(m);
  auto named = [](const char* axiom) {
    AxiomCheck c;
    c.axiom = axiom;
    return c;
  };
  AxiomCheck seq = named("sequential"), par = named("parallel"),
             ul = named("unit-left"), ur = named("unit-right"),
             ra = named("right-action"), ai = named("action-identity"),
             eo = named("equivariance-outer"), ei = named("equivariance-inner"),
             fg = named("functoriality-graft"),
             fa = named("functoriality-action");

  for (long long s = 0; s < samples; ++s) {
    const Word x = sample_word(rng, m, rng.range(1, max_arity));
    const Word y = sample_word(rng, m, rng.range(1, max_arity));
    const Word z = sample_word(rng, m, rng.range(1, max_arity));
    const int i = rng.range(1, x.arity());
    const int j = rng.range(1, y.arity());
    const Permutation sx = sample_permutation(rng, x.arity());
    const Permutation tx = sample_permutation(rng, x.arity());
    const Permutation ty = sample_permutation(rng, y.arity());

    checker.sequential(seq, x, i, y, j, z);
    if (i < x.arity()) {
      checker.parallel(par, x, i, y, rng.range(i + 1, x.arity()), z);
    }
    checker.units(ul, ur, x);
    checker.right_action(ra, x, sx, tx);
    checker.action_identity(ai, x);
    checker.equivariance_outer(eo, x, sx, i, y);
    checker.equivariance_inner(ei, x, i, y, ty);
    checker.functoriality_graft(fg, x, i, y);
    checker.functoriality_action(fa, x, sx);
  }

  report.checks = {seq, par, ul, ur, ra, ai, eo, ei, fg, fa};
  return report;
}

}  // namespace

bool AxiomReport::all_passed() const {
  for (const AxiomCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  os << "monoid: " << monoid << "\nmode: " << mode
     << "\nmax arity: " << max_arity << "\n";
  if (mode == "sampled") os << "samples: " << samples << "\n";
  for (const AxiomCheck& c : checks) {
    os << c.axiom << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.cases
       << " cases)";
    if (!c.passed) os << "\n  counterexample: " << c.counterexample;
    os << "\n";
  }
  os << "status: " << (all_passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::vector<Word> all_words(const Monoid& m, int arity) {
  if (arity < 1) {
    throw DomainError("word enumeration requires arity >= 1");
  }
  const std::vector<Element> carrier = m.carrier();  // throws if infinite
  std::vector<Word> out;
  Letters current(static_cast<std::size_t>(arity), carrier.front());
  std::vector<std::size_t> odometer(static_cast<std::size_t>(arity), 0);
  for (;;) {
    for (int p = 0; p < arity; ++p) {
      current[static_cast<std::size_t>(p)] =
          carrier[odometer[static_cast<std::size_t>(p)]];
    }
    out.emplace_back(m, current);
    int p = arity - 1;
    while (p >= 0 && odometer[static_cast<std::size_t>(p)] + 1 == carrier.size()) {
      odometer[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++odometer[static_cast<std::size_t>(p)];
  }
  return out;
}

AxiomReport check_operad_axioms(const Monoid& m, long long samples,
                                std::uint64_t seed, int max_arity) {
  if (max_arity < 1) {
    throw DomainError("axiom check requires max_arity >= 1");
  }
  if (samples < 0) {
    throw DomainError("sample count must be >= 0");
  }
  if (samples == 0) {
    if (!m.finite()) {
      throw DomainError("exhaustive axiom check requires a finite monoid; " +
                        m.name() + " needs samples > 0");
    }
    return run_exhaustive(m, max_arity);
  }
  return run_sampled(m, samples, seed, max_arity);
}

}  // namespace operadica
