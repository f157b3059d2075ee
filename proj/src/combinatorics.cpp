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

#include "operadica/combinatorics.hpp"

#include <limits>
#include <sstream>
#include <unordered_map>

namespace operadica {

namespace {

long long checked(unsigned __int128 v, const char* what) {
  if (v > static_cast<unsigned __int128>(
              std::numeric_limits<long long>::max())) {
    throw DomainError(std::string(what) + " overflows 64-bit arithmetic");
  }
  return static_cast<long long>(v);
}

//! binomial(N, r) by the multiplicative formula; every intermediate
//! division is exact.
long long binomial(int N, int r) {
  if (r < 0 || r > N) return 0;
  if (r > N - r) r = N - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(N - r + i);
    acc = acc / static_cast<unsigned __int128>(i);
  }
  return checked(acc, "binomial");
}

void require_size(int m, const char* what) {
  if (m < 0) {
    throw DomainError(std::string(what) + " undefined for negative size " +
                      std::to_string(m));
  }
}

}  // namespace

std::string family_name(FamilyId id, int k) {
  switch (id) {
    case FamilyId::End:
      return "end";
    case FamilyId::FP:
      return "fp";
    case FamilyId::MT:
      return "mt";
    case FamilyId::APE:
      return "ape";
    case FamilyId::FCat:
      return "fcat:" + std::to_string(k);
    case FamilyId::Schr:
      return "schr";
    case FamilyId::Motz:
      return "motz";
    case FamilyId::Comp:
      return "comp";
    case FamilyId::SComp:
      return "scomp";
    case FamilyId::AnD:
      return "and";
    case FamilyId::Dias:
      return "dias";
    case FamilyId::TN:
      return "tn";
    case FamilyId::TN2:
      return "tn2";
    case FamilyId::TN3:
      return "tn3";
  }
  return "?";
}

long long catalan(int m) {
  require_size(m, "catalan");
  static std::vector<long long> memo = {1};
  for (int t = static_cast<int>(memo.size()); t <= m; ++t) {
    long long sum = 0;
    for (int i = 0; i < t; ++i) sum += memo[i] * memo[t - 1 - i];
    memo.push_back(sum);
  }
  return memo[static_cast<std::size_t>(m)];
}

long long fuss_catalan(int k, int m) {
  require_size(m, "fuss_catalan");
  if (k < 0) {
    throw DomainError("fuss_catalan requires k >= 0");
  }
  // (k+1)-ary trees with m internal nodes: binom((k+1)m, m) / (km + 1).
  return binomial((k + 1) * m, m) / (static_cast<long long>(k) * m + 1);
}

long long motzkin(int m) {
  require_size(m, "motzkin");
  static std::vector<long long> memo = {1, 1};
  for (int t = static_cast<int>(memo.size()); t <= m; ++t) {
    long long sum = memo[t - 1];
    for (int i = 0; i <= t - 2; ++i) sum += memo[i] * memo[t - 2 - i];
    memo.push_back(sum);
  }
  return memo[static_cast<std::size_t>(m)];
}

long long super_catalan(int m) {
  if (m < 1) {
    throw DomainError("super_catalan counts trees with >= 1 leaf");
  }
  // trees[t]: trees with t leaves; seqs[j][t]: j-tuples of trees with t
  // leaves in total.  A tree with t >= 2 leaves is a root with >= 2 subtrees.
  std::vector<long long> trees(static_cast<std::size_t>(m) + 1, 0);
  trees[1] = 1;
  for (int t = 2; t <= m; ++t) {
    std::vector<std::vector<long long>> seqs(
        static_cast<std::size_t>(t) + 1,
        std::vector<long long>(static_cast<std::size_t>(t) + 1, 0));
    seqs[0][0] = 1;
    for (int j = 1; j <= t; ++j) {
      for (int total = j; total <= t; ++total) {
        long long sum = 0;
        for (int first = 1; first <= total - j + 1 && first < t; ++first) {
          sum += trees[static_cast<std::size_t>(first)] *
                 seqs[static_cast<std::size_t>(j - 1)]
                     [static_cast<std::size_t>(total - first)];
        }
        seqs[static_cast<std::size_t>(j)][static_cast<std::size_t>(total)] =
            sum;
      }
    }
    long long with_root = 0;
    for (int j = 2; j <= t; ++j) {
      with_root += seqs[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
    }
    trees[static_cast<std::size_t>(t)] = with_root;
  }
  return trees[static_cast<std::size_t>(m)];
}

long long ordered_bell(int m) {
  require_size(m, "ordered_bell");
  std::vector<long long> memo(static_cast<std::size_t>(m) + 1, 0);
  memo[0] = 1;
  for (int t = 1; t <= m; ++t) {
    long long sum = 0;
    for (int first = 1; first <= t; ++first) {
      sum += binomial(t, first) * memo[static_cast<std::size_t>(t - first)];
    }
    memo[static_cast<std::size_t>(t)] = sum;
  }
  return memo[static_cast<std::size_t>(m)];
}

namespace {

//! Canonical-order growth: each animal corresponds to one strictly
//! increasing choice sequence of frontier indices, so no animal is counted
//! twice.  Cells live in the quadrant reachable from the origin.
class AnimalCounter {
 public:
  explicit AnimalCounter(int size) : size_(size) {
    seen_.assign(kGrid * kGrid, false);
    frontier_.push_back(0);
    seen_[cell(0, 0)] = true;
  }

  long long run() {
    descend(0, 0);
    return count_;
  }

 private:
  static constexpr int kGrid = 12;

  static int cell(int x, int y) { return x * kGrid + y; }

  void descend(std::size_t start, int chosen) {
    for (std::size_t idx = start; idx < frontier_.size(); ++idx) {
      if (chosen + 1 == size_) {
        ++count_;
        continue;
      }
      const int c = frontier_[idx];
      const int x = c / kGrid;
      const int y = c % kGrid;
      const std::size_t mark = frontier_.size();
      enqueue(x, y + 1);
      enqueue(x + 1, y);
      descend(idx + 1, chosen + 1);
      while (frontier_.size() > mark) {
        seen_[static_cast<std::size_t>(frontier_.back())] = false;
        frontier_.pop_back();
      }
    }
  }

  void enqueue(int x, int y) {
    const int c = cell(x, y);
    if (!seen_[static_cast<std::size_t>(c)]) {
      seen_[static_cast<std::size_t>(c)] = true;
      frontier_.push_back(c);
    }
  }

  int size_;
  long long count_ = 0;
  std::vector<int> frontier_;
  std::vector<bool> seen_;
};

}  // namespace

long long directed_animal_count(int m) {
  if (m < 1) {
    throw DomainError("animals have >= 1 cell");
  }
  if (m > 8) {
    throw DomainError("direct animal enumeration is capped at 8 cells");
  }
  return AnimalCounter(m).run();
}

long long directed_animal_recurrence(int m) {
  if (m < 1) {
    throw DomainError("animals have >= 1 cell");
  }
  const int steps = m - 1;
  std::vector<long long> heights(static_cast<std::size_t>(steps) + 2, 0);
  heights[0] = 1;
  for (int s = 1; s <= steps; ++s) {
    std::vector<long long> next(heights.size(), 0);
    for (std::size_t h = 0; h + 1 < heights.size(); ++h) {
      if (heights[h] == 0) continue;
      if (h > 0) next[h - 1] += heights[h];
      next[h] += heights[h];
      next[h + 1] += heights[h];
    }
    heights = std::move(next);
  }
  long long total = 0;
  for (long long v : heights) total += v;
  return total;
}

long long power(long long b, int e) {
  if (e < 0) {
    throw DomainError("power requires a nonnegative exponent");
  }
  unsigned __int128 acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= static_cast<unsigned __int128>(b);
  }
  return checked(acc, "power");
}

long long oracle_count(FamilyId id, int k, int n) {
  if (n < 1) {
    throw DomainError("oracle_count requires arity >= 1");
  }
  switch (id) {
    case FamilyId::End:
      return power(n, n);
    case FamilyId::FP:
      return power(n + 1, n - 1);
    case FamilyId::MT:
      return ordered_bell(n);
    case FamilyId::APE:
      return catalan(n - 1);
    case FamilyId::FCat:
      return fuss_catalan(k, n);
    case FamilyId::Schr:
      return super_catalan(n + 1);
    case FamilyId::Motz:
      return motzkin(n - 1);
    case FamilyId::Comp:
      return power(2, n - 1);
    case FamilyId::SComp:
      return power(3, n - 1);
    case FamilyId::AnD:
      return n <= 8 ? directed_animal_count(n) : directed_animal_recurrence(n);
    case FamilyId::Dias:
      return n;
    case FamilyId::TN2:
      return power(2, n);
    case FamilyId::TN3:
      return power(3, n);
    case FamilyId::TN:
      throw DomainError("tn has infinitely many words per arity");
  }
  throw DomainError("unknown family");
}

namespace {

void render_plane(const PlaneTree& t, std::ostream& os) {
  os << '(';
  for (const PlaneTree& c : t.children) render_plane(c, os);
  os << ')';
}

void render_kary(const KAryTree& t, std::ostream& os) {
  if (t.leaf) {
    os << '.';
    return;
  }
  os << '(';
  for (const KAryTree& c : t.children) render_kary(c, os);
  os << ')';
}

void render_schroeder(const SchroederTree& t, std::ostream& os) {
  if (t.leaf) {
    os << '.';
    return;
  }
  os << '(';
  for (const SchroederTree& c : t.children) render_schroeder(c, os);
  os << ')';
}

}  // namespace

std::string render(const CombObject& object) {
  std::ostringstream os;
  if (const auto* path = std::get_if<MotzkinPath>(&object)) {
    os << (path->steps.empty() ? "-" : path->steps);
  } else if (const auto* comp = std::get_if<Composition>(&object)) {
    for (std::size_t p = 0; p < comp->parts.size(); ++p) {
      if (p > 0) os << '+';
      os << comp->parts[p];
    }
  } else if (const auto* seg = std::get_if<SegmentedComposition>(&object)) {
    for (std::size_t s = 0; s < seg->segments.size(); ++s) {
      if (s > 0) os << '|';
      for (std::size_t p = 0; p < seg->segments[s].size(); ++p) {
        if (p > 0) os << '+';
        os << seg->segments[s][p];
      }
    }
  } else if (const auto* plane = std::get_if<PlaneTree>(&object)) {
    render_plane(*plane, os);
  } else if (const auto* kary = std::get_if<KAryTree>(&object)) {
    render_kary(*kary, os);
  } else if (const auto* schr = std::get_if<SchroederTree>(&object)) {
    render_schroeder(*schr, os);
  }
  return os.str();
}

namespace {

void require_monoid(const Word& x, const Monoid& expected, FamilyId id,
                    int k) {
  if (x.monoid() != expected) {
    throw DomainError("family " + family_name(id, k) + " expects words over " +
                      expected.name() + ", got " + x.monoid().name());
  }
}

DomainError not_member(FamilyId id, int k, const Word& x,
                       const std::string& why) {
  return DomainError("(" + x.to_text() + ") is not in " + family_name(id, k) +
                     ": " + why);
}

CombObject motzkin_object(const Word& x) {
  const Letters& v = x.letters();
  if (v.front() != 0) throw not_member(FamilyId::Motz, 0, x, "x_1 = 0 fails");
  if (v.back() != 0) throw not_member(FamilyId::Motz, 0, x, "x_n = 0 fails");
  MotzkinPath path;
  for (std::size_t p = 0; p + 1 < v.size(); ++p) {
    const Element d = v[p + 1] - v[p];
    if (d == 1) {
      path.steps.push_back('U');
    } else if (d == 0) {
      path.steps.push_back('F');
    } else if (d == -1) {
      path.steps.push_back('D');
    } else {
      throw not_member(FamilyId::Motz, 0, x, "|x_i - x_{i+1}| <= 1 fails");
    }
  }
  return path;
}

CombObject composition_object(const Word& x) {
  const Letters& v = x.letters();
  if (v.front() != 0) throw not_member(FamilyId::Comp, 0, x, "x_1 = 0 fails");
  Composition comp;
  for (Element letter : v) {
    if (letter == 0) {
      comp.parts.push_back(1);
    } else {
      ++comp.parts.back();
    }
  }
  return comp;
}

CombObject segmented_object(const Word& x) {
  const Letters& v = x.letters();
  if (v.front() != 0) throw not_member(FamilyId::SComp, 0, x, "x_1 = 0 fails");
  SegmentedComposition seg;
  for (Element letter : v) {
    if (letter == 0) {
      seg.segments.push_back({1});
    } else if (letter == 2) {
      seg.segments.back().push_back(1);
    } else {
      ++seg.segments.back().back();
    }
  }
  return seg;
}

CombObject plane_tree_object(const Word& x) {
  const Letters& v = x.letters();
  if (v.front() != 0) throw not_member(FamilyId::APE, 0, x, "x_1 = 0 fails");
  // v is the preorder depth sequence; each next node attaches at depth
  // between 1 and previous depth + 1.
  PlaneTree root;
  std::vector<PlaneTree*> path = {&root};
  for (std::size_t p = 1; p < v.size(); ++p) {
    const Element depth = v[p];
    if (depth < 1 ||
        depth > static_cast<Element>(path.size())) {
      throw not_member(FamilyId::APE, 0, x,
                       "1 <= x_{i+1} <= x_i + 1 fails at position " +
                           std::to_string(p + 1));
    }
    path.resize(static_cast<std::size_t>(depth));
    path.back()->children.emplace_back();
    path.push_back(&path.back()->children.back());
  }
  return root;
}

//! Leaf gaps d_i = x_i + k - x_{i+1} give the preorder of a full
//! (k+1)-ary tree: internal node i, then d_i leaves, with x_n + k + 1
//! trailing leaves.
CombObject kary_tree_object(int k, const Word& x) {
  const Letters& v = x.letters();
  if (v.front() != 0) throw not_member(FamilyId::FCat, k, x, "x_1 = 0 fails");
  std::string types;
  for (std::size_t p = 0; p < v.size(); ++p) {
    types.push_back('I');
    if (p + 1 < v.size()) {
      const Element gap = v[p] + k - v[p + 1];
      if (gap < 0) {
        throw not_member(FamilyId::FCat, k, x, "x_{i+1} <= x_i + k fails");
      }
      types.append(static_cast<std::size_t>(gap), 'L');
    } else {
      types.append(static_cast<std::size_t>(v.back() + k + 1), 'L');
    }
  }
  std::size_t pos = 0;
  // recursive preorder read; consumes exactly one subtree
  auto build = [&](auto&& self) -> KAryTree {
    if (pos >= types.size()) {
      throw not_member(FamilyId::FCat, k, x, "truncated tree encoding");
    }
    KAryTree node;
    node.branching = k + 1;
    if (types[pos++] == 'L') {
      return node;
    }
    node.leaf = false;
    node.children.reserve(static_cast<std::size_t>(k) + 1);
    for (int c = 0; c <= k; ++c) node.children.push_back(self(self));
    return node;
  };
  KAryTree root = build(build);
  if (pos != types.size()) {
    throw not_member(FamilyId::FCat, k, x, "overlong tree encoding");
  }
  return root;
}

//! Letters equal to the current depth split the leaf row; each maximal
//! strictly deeper run becomes one child subtree.
SchroederTree schroeder_build(const Letters& v, std::size_t lo, std::size_t hi,
                              Element depth, FamilyId id, const Word& x) {
  if (lo == hi) {
    return SchroederTree{};  // single leaf
  }
  SchroederTree node;
  node.leaf = false;
  std::size_t block = lo;
  bool found = false;
  for (std::size_t p = lo; p < hi; ++p) {
    if (v[p] < depth) {
      throw not_member(id, 0, x, "letter below its block depth");
    }
    if (v[p] == depth) {
      found = true;
      node.children.push_back(
          schroeder_build(v, block, p, depth + 1, id, x));
      block = p + 1;
    }
  }
  if (!found) {
    throw not_member(id, 0, x,
                     "a block has no letter at its depth (no occurrence of " +
                         std::to_string(depth) + ")");
  }
  node.children.push_back(schroeder_build(v, block, hi, depth + 1, id, x));
  return node;
}

CombObject schroeder_object(const Word& x) {
  return schroeder_build(x.letters(), 0, x.letters().size(), 0, FamilyId::Schr,
                         x);
}

}  // namespace

CombObject word_to_object(FamilyId id, int k, const Word& x) {
  switch (id) {
    case FamilyId::Motz:
      require_monoid(x, Monoid::nat_add(), id, 0);
      return motzkin_object(x);
    case FamilyId::Comp:
      require_monoid(x, Monoid::mod(2), id, 0);
      return composition_object(x);
    case FamilyId::SComp:
      require_monoid(x, Monoid::mod(3), id, 0);
      return segmented_object(x);
    case FamilyId::APE:
      require_monoid(x, Monoid::nat_add(), id, 0);
      return plane_tree_object(x);
    case FamilyId::FCat:
      require_monoid(x, Monoid::nat_add(), id, k);
      return kary_tree_object(k, x);
    case FamilyId::Schr:
      require_monoid(x, Monoid::nat_add(), id, 0);
      return schroeder_object(x);
    default:
      throw DomainError("no object map for family " + family_name(id, k));
  }
}

std::string BijectivityReport::to_text() const {
  std::ostringstream os;
  os << "family: " << family << "\narity: " << arity
     << "\nmembers: " << members << "\ndistinct objects: " << distinct_objects
     << "\noracle: " << oracle << "\ninjective: " << (injective ? "yes" : "no")
     << "\nfull image: " << (full_image ? "yes" : "no") << "\n";
  if (!collision_witness.empty()) {
    os << "collision: " << collision_witness << "\n";
  }
  os << "status: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

BijectivityReport bijectivity_report(FamilyId id, int k,
                                     const OperadFamily& family, int n,
                                     const ResourceGuard& guard) {
  BijectivityReport report;
  report.family = family_name(id, k);
  report.arity = n;
  report.oracle = oracle_count(id, k, n);

  const GradedSet closure = generate(family, n, guard);
  std::unordered_map<std::string, Letters> first_for;
  for (const Letters& letters : closure.grade(n)) {
    const Word w(family.monoid, letters);
    const std::string key = render(word_to_object(id, k, w));
    ++report.members;
    auto [it, inserted] = first_for.emplace(key, letters);
    if (!inserted && report.collision_witness.empty()) {
      report.collision_witness = "(" + letters_to_text(it->second) +
                                 ") and (" + letters_to_text(letters) +
                                 ") both map to " + key;
    }
  }
  report.distinct_objects = static_cast<long long>(first_for.size());
  report.injective = report.distinct_objects == report.members;
  report.full_image = report.distinct_objects == report.oracle;
  return report;
}

}  // namespace operadica
