/**
 * @file category.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/category.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace gradalg {

std::string lattice_arrow_id(const std::vector<long>& point) {
  if (point.size() == 1) return std::to_string(point[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(point[i]);
  }
  return s + ")";
}

void IndexCategory::index_arrows() {
  arrow_index_.clear();
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (!arrow_index_.emplace(arrows_[i].id, static_cast<int>(i)).second)
      throw Error(ErrorKind::StructureError, "duplicate arrow id '" + arrows_[i].id + "'");
  }
}

int IndexCategory::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end())
    throw Error(ErrorKind::StructureError, "unknown arrow '" + id + "'");
  return it->second;
}

std::optional<int> IndexCategory::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int IndexCategory::identity_arrow(const std::string& object) const {
  auto it = identity_of_.find(object);
  if (it == identity_of_.end())
    throw Error(ErrorKind::StructureError, "no identity for object '" + object + "'");
  return it->second;
}

bool IndexCategory::is_identity(int idx) const {
  const Arrow& a = arrows_[idx];
  auto it = identity_of_.find(a.src);
  return it != identity_of_.end() && it->second == idx;
}

bool IndexCategory::composable(int alpha, int beta) const {
  return arrows_[alpha].src == arrows_[beta].tgt;
}

std::optional<int> IndexCategory::compose(int alpha, int beta) const {
  if (!composable(alpha, beta))
    throw Error(ErrorKind::StructureError,
                "arrows not composable: " + arrows_[alpha].id + " . " + arrows_[beta].id);
  int r = compose_[alpha][beta];
  if (r == kOutOfWindow) return std::nullopt;
  if (r == kNotComposable)
    throw Error(ErrorKind::StructureError, "composition table hole for composable pair " +
                                               arrows_[alpha].id + " . " + arrows_[beta].id);
  return r;
}

std::vector<std::pair<int, int>> IndexCategory::factorizations(int gamma) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    for (std::size_t b = 0; b < arrows_.size(); ++b)
      if (composable(a, b) && compose_[a][b] == gamma) out.emplace_back(a, b);
  return out;
}

bool IndexCategory::right_divisor(int gamma, int beta) const {
  if (gamma < 0 || gamma >= static_cast<int>(arrows_.size()) || beta < 0 ||
      beta >= static_cast<int>(arrows_.size()))
    throw Error(ErrorKind::StructureError, "right_divisor: arrow out of range");
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (composable(a, beta) && compose_[a][beta] == gamma) return true;
  return false;
}

const std::vector<long>& IndexCategory::lattice_point(int idx) const {
  if (kind_ != CategoryKind::CommutativeMonoidWindow)
    throw Error(ErrorKind::StructureError, "lattice_point on a non-window category");
  return points_[idx];
}

bool IndexCategory::poset_leq(const std::string& a, const std::string& b) const {
  if (kind_ != CategoryKind::PosetInterval)
    throw Error(ErrorKind::StructureError, "poset_leq on a non-poset category");
  auto it = leq_.find({a, b});
  return it != leq_.end() && it->second;
}

IndexCategory IndexCategory::explicit_finite(
    std::vector<std::string> objects, std::vector<Arrow> arrows,
    std::map<std::string, std::string> identities,
    const std::vector<std::array<std::string, 3>>& composition) {
  IndexCategory c;
  c.kind_ = CategoryKind::ExplicitFinite;
  c.objects_ = std::move(objects);
  std::sort(c.objects_.begin(), c.objects_.end());
  c.arrows_ = std::move(arrows);
  std::sort(c.arrows_.begin(), c.arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  c.index_arrows();
  std::set<std::string> object_set(c.objects_.begin(), c.objects_.end());
  for (const auto& a : c.arrows_)
    if (!object_set.count(a.src) || !object_set.count(a.tgt))
      throw Error(ErrorKind::StructureError, "arrow '" + a.id + "' references unknown object");
  for (const auto& [obj, id] : identities) {
    if (!object_set.count(obj))
      throw Error(ErrorKind::StructureError, "identity for unknown object '" + obj + "'");
    int idx = c.arrow_index(id);
    if (c.arrows_[idx].src != obj || c.arrows_[idx].tgt != obj)
      throw Error(ErrorKind::StructureError, "identity arrow '" + id + "' has wrong endpoints");
    c.identity_of_[obj] = idx;
  }
  if (c.identity_of_.size() != c.objects_.size())
    throw Error(ErrorKind::StructureError, "every object needs an identity arrow");
  c.compose_.assign(c.arrows_.size(), std::vector<int>(c.arrows_.size(), kNotComposable));
  for (const auto& t : composition) {
    int a = c.arrow_index(t[0]), b = c.arrow_index(t[1]), r = c.arrow_index(t[2]);
    if (!c.composable(a, b))
      throw Error(ErrorKind::StructureError,
                  "composition entry for non-composable pair " + t[0] + " . " + t[1]);
    c.compose_[a][b] = r;
  }
  // identity compositions may be omitted from the table
  for (std::size_t a = 0; a < c.arrows_.size(); ++a)
    for (std::size_t b = 0; b < c.arrows_.size(); ++b) {
      if (!c.composable(a, b) || c.compose_[a][b] != kNotComposable) continue;
      if (c.is_identity(a))
        c.compose_[a][b] = static_cast<int>(b);
      else if (c.is_identity(b))
        c.compose_[a][b] = static_cast<int>(a);
    }
  return c;
}

IndexCategory IndexCategory::from_group(const std::vector<std::string>& elements,
                                        const std::vector<std::vector<std::string>>& table) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n)
    throw Error(ErrorKind::NotAGroup, "Cayley table shape mismatch");
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(elements[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::NotAGroup, "duplicate element '" + elements[i] + "'");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::NotAGroup, "Cayley table shape mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      auto it = idx.find(table[i][j]);
      if (it == idx.end())
        throw Error(ErrorKind::NotAGroup, "table entry '" + table[i][j] + "' is not an element");
      t[i][j] = it->second;
    }
  }
  // identity
  int e = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      ok = ok && t[i][j] == static_cast<int>(j) && t[j][i] == static_cast<int>(j);
    if (ok) {
      e = static_cast<int>(i);
      break;
    }
  }
  if (e < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  // associativity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          throw Error(ErrorKind::NotAGroup, "associativity fails at (" + elements[i] + "," +
                                                elements[j] + "," + elements[k] + ")");
  // inverses
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inv = false;
    for (std::size_t j = 0; j < n; ++j) has_inv = has_inv || (t[i][j] == e && t[j][i] == e);
    if (!has_inv) throw Error(ErrorKind::NotAGroup, "no inverse for '" + elements[i] + "'");
  }

  IndexCategory c;
  c.kind_ = CategoryKind::FiniteGroup;
  c.objects_ = {"*"};
  for (const auto& el : elements) c.arrows_.push_back(Arrow{el, "*", "*"});
  c.index_arrows();
  c.identity_of_["*"] = e;
  c.compose_.assign(n, std::vector<int>(n, kNotComposable));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.compose_[i][j] = t[i][j];
  return c;
}

IndexCategory IndexCategory::from_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq) {
  std::set<std::string> elems(elements.begin(), elements.end());
  if (elems.size() != elements.size())
    throw Error(ErrorKind::NotAPoset, "duplicate poset elements");
  std::map<std::pair<std::string, std::string>, bool> rel;
  for (const auto& e : elems) rel[{e, e}] = true;
  for (const auto& [a, b] : leq) {
    if (!elems.count(a) || !elems.count(b))
      throw Error(ErrorKind::NotAPoset, "relation references unknown element");
    rel[{a, b}] = true;
  }
  // transitive closure, then axiom checks
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : elems)
      for (const auto& b : elems) {
        if (!rel.count({a, b})) continue;
        for (const auto& cc : elems)
          if (rel.count({b, cc}) && !rel.count({a, cc})) {
            rel[{a, cc}] = true;
            changed = true;
          }
      }
  }
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (a != b && rel.count({a, b}) && rel.count({b, a}))
        throw Error(ErrorKind::NotAPoset, "antisymmetry fails on {" + a + ", " + b + "}");

  IndexCategory c;
  c.kind_ = CategoryKind::PosetInterval;
  c.objects_.assign(elems.begin(), elems.end());
  // exactly one arrow b<-a per related pair a <= b, id "b|a" ("from a to b")
  for (const auto& [pair, _] : rel) {
    const auto& [a, b] = pair;
    c.arrows_.push_back(Arrow{b + "|" + a, a, b});
  }
  std::sort(c.arrows_.begin(), c.arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  c.index_arrows();
  for (const auto& e : elems) c.identity_of_[e] = c.arrow_index(e + "|" + e);
  const std::size_t n = c.arrows_.size();
  c.compose_.assign(n, std::vector<int>(n, kNotComposable));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.composable(i, j))
        c.compose_[i][j] = c.arrow_index(c.arrows_[i].tgt + "|" + c.arrows_[j].src);
  c.leq_ = std::move(rel);
  return c;
}

IndexCategory IndexCategory::monoid_window(std::size_t rank, LatticeKind lattice,
                                           const std::vector<std::vector<long>>& window) {
  if (rank == 0 || window.empty())
    throw Error(ErrorKind::WindowError, "window must be nonempty with positive rank");
  std::set<std::vector<long>> pts;
  for (const auto& p : window) {
    if (p.size() != rank) throw Error(ErrorKind::WindowError, "window point of wrong rank");
    if (lattice == LatticeKind::Nat)
      for (long x : p)
        if (x < 0) throw Error(ErrorKind::WindowError, "Nat window contains a negative point");
    pts.insert(p);
  }
  if (lattice == LatticeKind::Nat) {
    // downward closure under componentwise <=
    for (const auto& p : pts) {
      std::vector<long> q = p;
      for (std::size_t i = 0; i < rank; ++i) {
        if (q[i] == 0) continue;
        q[i] -= 1;
        if (!pts.count(q))
          throw Error(ErrorKind::WindowError,
                      "Nat window is not downward closed (missing " + lattice_arrow_id(q) + ")");
        q[i] += 1;
      }
    }
  }
  std::vector<long> zero(rank, 0);
  if (!pts.count(zero))
    throw Error(ErrorKind::WindowError, "window must contain the identity point 0");

  IndexCategory c;
  c.kind_ = CategoryKind::CommutativeMonoidWindow;
  c.lattice_ = lattice;
  c.rank_ = rank;
  c.objects_ = {"*"};
  // canonical order: lexicographic on coordinates (set order)
  for (const auto& p : pts) {
    c.arrows_.push_back(Arrow{lattice_arrow_id(p), "*", "*"});
    c.points_.push_back(p);
  }
  c.index_arrows();
  c.identity_of_["*"] = c.arrow_index(lattice_arrow_id(zero));
  const std::size_t n = c.arrows_.size();
  c.compose_.assign(n, std::vector<int>(n, kNotComposable));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> s(rank);
      for (std::size_t k = 0; k < rank; ++k) s[k] = c.points_[i][k] + c.points_[j][k];
      auto it = pts.find(s);
      c.compose_[i][j] =
          it == pts.end() ? kOutOfWindow : c.arrow_index(lattice_arrow_id(s));
    }
  return c;
}

CategoryReport IndexCategory::validate() const {
  CategoryReport rep;
  auto add = [&](const std::string& code, const std::string& msg) {
    rep.violations.push_back(CategoryViolation{code, msg});
  };
  const std::size_t n = arrows_.size();
  // totality on composable pairs (non-window kinds)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!composable(a, b)) continue;
      int r = compose_[a][b];
      if (r == kNotComposable)
        add("totality",
            "no composite for composable pair " + arrows_[a].id + " . " + arrows_[b].id);
      else if (r >= 0) {
        if (arrows_[r].src != arrows_[b].src || arrows_[r].tgt != arrows_[a].tgt)
          add("endpoints", "composite " + arrows_[r].id + " of " + arrows_[a].id + " . " +
                               arrows_[b].id + " has wrong endpoints");
      }
    }
  // identity laws
  for (const auto& obj : objects_) {
    auto it = identity_of_.find(obj);
    if (it == identity_of_.end()) {
      add("identity", "object '" + obj + "' has no identity arrow");
      continue;
    }
    int e = it->second;
    for (std::size_t a = 0; a < n; ++a) {
      if (arrows_[a].tgt == obj && compose_[e][a] != static_cast<int>(a))
        add("identity", "1_" + obj + " . " + arrows_[a].id + " != " + arrows_[a].id);
      if (arrows_[a].src == obj && compose_[a][e] != static_cast<int>(a))
        add("identity", arrows_[a].id + " . 1_" + obj + " != " + arrows_[a].id);
    }
  }
  // associativity on triples whose pairwise composites stay representable
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!composable(a, b)) continue;
      int ab = compose_[a][b];
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (!composable(b, cc)) continue;
        int bc = compose_[b][cc];
        if (ab < 0 || bc < 0) continue;  // clipped: skip, not representable
        int left = compose_[ab][cc];
        int right = compose_[a][bc];
        if (left != right)
          add("associativity", "(" + arrows_[a].id + " . " + arrows_[b].id + ") . " +
                                   arrows_[cc].id + " != " + arrows_[a].id + " . (" +
                                   arrows_[b].id + " . " + arrows_[cc].id + ")");
      }
    }
  return rep;
}

ArrowSequenceReport IndexCategory::check_sequence_condition(
    const std::vector<int>& algebra_support) const {
  ArrowSequenceReport r;
  switch (kind_) {
    case CategoryKind::ExplicitFinite:
      r.condition = SequenceCondition::Main0SequenceCondition;
      r.verdict = SequenceVerdict::Holds;
      r.justification = "finitely many arrows: every infinite sequence repeats an element";
      return r;
    case CategoryKind::FiniteGroup:
      r.condition = SequenceCondition::Main0SequenceCondition;
      r.verdict = SequenceVerdict::Holds;
      r.justification =
          "finite group with finite algebra support (" + std::to_string(algebra_support.size()) +
          " arrows): nonvanishing divisor spaces force beta_1 beta_n^{-1} into the support, "
          "which is finite, so some arrow repeats";
      return r;
    case CategoryKind::PosetInterval:
      r.condition = SequenceCondition::Main1RightDivisorChains;
      r.verdict = SequenceVerdict::Holds;
      r.justification =
          "finite poset: all intervals are artinian, so right-divisor chains stabilize";
      return r;
    case CategoryKind::CommutativeMonoidWindow:
      if (lattice_ == LatticeKind::Nat) {
        r.condition = SequenceCondition::Main1RightDivisorChains;
        r.verdict = SequenceVerdict::Holds;
        r.justification =
            "Nat^k is an artinian ordered monoid with least element 0: right-divisor chains "
            "descend and stabilize";
      } else {
        r.condition = SequenceCondition::Main0SequenceCondition;
        r.verdict = SequenceVerdict::NotDecidableForKind;
        r.justification =
            "Int^k window: the ambient group is infinite and the truncation proves nothing";
      }
      return r;
  }
  throw Error(ErrorKind::StructureError, "unknown category kind");
}

}  // namespace gradalg
