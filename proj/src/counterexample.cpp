/**
 * @file counterexample.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/counterexample.hpp"

#include <algorithm>
#include <thread>

namespace gradalg {

int WindowScene::arrow(long k) const { return cat->arrow_index(std::to_string(k)); }

std::size_t WindowScene::free_index(long k, long l) const {
  const auto& elems = free_cover.basis.at(arrow(k));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].alg_arrow == arrow(k - l) && elems[i].v_arrow == arrow(l)) return i;
  }
  throw Error(ErrorKind::StructureError, "free basis element not found");
}

WindowScene build_scene(long d, const Field& field) {
  if (d < 1) throw Error(ErrorKind::StructureError, "window radius must be >= 1");
  std::vector<std::vector<long>> window;
  for (long k = -d; k <= 3 * d; ++k) window.push_back({k});
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::monoid_window(1, LatticeKind::Int, window));

  auto alg = std::make_shared<GradedAlgebra>(cat, field);
  for (long k = 0; k <= 2 * d; ++k)
    alg->set_component(cat->arrow_index(std::to_string(k)), {"a" + std::to_string(k)});
  for (long i = 0; i <= 2 * d; ++i)
    for (long j = 0; j <= 2 * d; ++j) {
      if (i + j > 3 * d) continue;  // absorbed by the window
      int ai = cat->arrow_index(std::to_string(i));
      int aj = cat->arrow_index(std::to_string(j));
      if (i + j <= 2 * d)
        alg->set_product(ai, aj, 0, 0, vec_unit(field, 1, 0));
    }
  alg->set_local_unit("*", vec_unit(field, 1, 0));

  auto x = std::make_shared<GradedModule>(alg);
  for (long k = -d; k <= d; ++k)
    x->set_component(cat->arrow_index(std::to_string(k)), {"x" + std::to_string(k)});
  for (long k = 0; k <= 2 * d; ++k)
    for (long l = -d; l <= d; ++l) {
      if (k + l > 3 * d) continue;
      int ak = cat->arrow_index(std::to_string(k));
      int xl = cat->arrow_index(std::to_string(l));
      if (k + l >= -d && k + l <= d)
        x->set_action(ak, xl, 0, 0, vec_unit(field, 1, 0));
    }

  FreeModule fc = free_module(alg, x->space());
  GradedHom f = counit(fc, x);
  return WindowScene{d, cat, alg, x, std::move(fc), std::move(f)};
}

GradedHom endo_from_triangle(const WindowScene& s, const LambdaTriangle& lambda) {
  const Field& field = s.algebra->field();
  const long d = s.d;
  GradedHom e(s.free_cover.module, s.free_cover.module);
  for (const auto& [arrow_idx, elems] : s.free_cover.basis) {
    Matrix comp(field, elems.size(), elems.size());
    // degree n of this component
    long n = std::stol(s.cat->arrow(arrow_idx).id);
    for (std::size_t col = 0; col < elems.size(); ++col) {
      long l = std::stol(s.cat->arrow(elems[col].v_arrow).id);
      // e(a_{n-l} (x) x_l) = sum_{m <= l} lambda_{l,m} a_{n-m} (x) x_m, clipped
      for (long m = -d; m <= l; ++m) {
        if (n - m > 2 * d) continue;  // algebra component vanishes
        const Scalar& c = lambda.at(l, m);
        if (c.is_zero()) continue;
        comp.at(s.free_index(n, m), col) = c;
      }
    }
    if (!comp.is_zero()) e.set_component(arrow_idx, comp);
  }
  return e;
}

LambdaTriangle triangle_of_endo(const WindowScene& s, const GradedHom& e) {
  const long d = s.d;
  const Field& field = s.algebra->field();
  LambdaTriangle lambda;
  lambda.d = d;
  for (long k = -d; k <= d; ++k) {
    Matrix comp = e.component(s.arrow(k));
    std::size_t col = s.free_index(k, k);  // a_0 (x) x_k
    std::vector<Scalar> row;
    for (long l = -d; l <= k; ++l) row.push_back(comp.at(s.free_index(k, l), col));
    lambda.rows.push_back(row);
  }
  // the triangle must reproduce e everywhere (equivariance shape)
  GradedHom rebuilt = endo_from_triangle(s, lambda);
  if (!(rebuilt == e))
    throw Error(ErrorKind::NotEquivariant,
                "endomorphism is not determined by its values on a_0 (x) x_k");
  (void)field;
  return lambda;
}

IdempotentAnalysis idempotent_diagonal_check(const WindowScene& s, const GradedHom& e) {
  const long d = s.d;
  IdempotentAnalysis out;
  out.lambda = triangle_of_endo(s, e);

  // e^2 = e on the interior |k| <= d-1, expressed through the triangle
  for (long k = -(d - 1); k <= d - 1; ++k) {
    for (long m = -d; m <= k; ++m) {
      Scalar sum = Scalar::zero(s.algebra->field());
      for (long l = m; l <= k; ++l) sum += out.lambda.at(k, l) * out.lambda.at(l, m);
      if (sum != out.lambda.at(k, m)) {
        out.diagonal_idempotent = false;
        out.failures.push_back(k);
        break;
      }
    }
  }
  if (!out.diagonal_idempotent)
    throw Error(ErrorKind::NotIdempotentOnInterior,
                "e^2 differs from e at interior degree " + std::to_string(out.failures.front()));

  for (long k = -d; k <= d; ++k)
    if (out.lambda.at(k, k).is_one()) out.diagonal_one.push_back(k);
  return out;
}

namespace {

// leading nonzero index of row k (largest l with lambda_{k,l} != 0), or d+1
long leading_index(const LambdaTriangle& t, long k) {
  for (long l = k; l >= -t.d; --l)
    if (!t.at(k, l).is_zero()) return l;
  return t.d + 1;
}

}  // namespace

DescentReport min_element_propagation(const WindowScene& s, const IdempotentAnalysis& a) {
  const long d = s.d;
  // precondition: f o e = f on |k| <= d, i.e. every row sums to 1
  for (long k = -d; k <= d; ++k) {
    Scalar sum = Scalar::zero(s.algebra->field());
    for (long l = -d; l <= k; ++l) sum += a.lambda.at(k, l);
    if (!sum.is_one())
      throw Error(ErrorKind::StructureError,
                  "analysis does not satisfy f o e = f at degree " + std::to_string(k));
  }

  DescentReport out;
  for (long start : a.diagonal_one) {
    std::vector<DescentStep> chain;
    long k = start;
    // a descent step needs e^2 = e at k-1, available while k >= 2-d
    while (k >= 2 - d) {
      long l = leading_index(a.lambda, k - 1);
      if (l > k - 1) {
        // row k-1 vanished: cannot happen under f o e = f
        out.all_reach_edge = false;
        break;
      }
      if (!a.lambda.at(l, l).is_one()) {
        out.interior_minimal_elements += 1;
        out.all_reach_edge = false;
        break;
      }
      chain.push_back(DescentStep{k, l});
      k = l;
    }
    out.max_depth = std::max(out.max_depth, chain.size());
    out.chains.push_back(std::move(chain));
  }
  return out;
}

namespace {

struct RawSearch {
  long d;
  std::uint32_t p;
  std::size_t rows;           // 2d + 1
  // triangle rows in raw digits; row index r = k + d, length r + 1
  std::vector<std::vector<std::uint8_t>> lambda;

  bool row_sum_ok(std::size_t r) const {
    std::uint32_t sum = 0;
    for (std::uint8_t v : lambda[r]) sum += v;
    return sum % p == 1;
  }

  // e^2 = e at generator degree k = r - d (uses rows <= r): checks
  // sum_{l=m}^{k} lambda_{k,l} lambda_{l,m} = lambda_{k,m} for all m <= k
  bool idempotent_row_ok(std::size_t r) const {
    for (std::size_t m = 0; m <= r; ++m) {
      std::uint32_t sum = 0;
      for (std::size_t l = m; l <= r; ++l)
        sum += static_cast<std::uint32_t>(lambda[r][l]) * lambda[l][m];
      if (sum % p != lambda[r][m]) return false;
    }
    return true;
  }
};

struct PartitionResult {
  std::uint64_t count = 0;
  std::uint64_t min_max_depth = ~0ull;
  bool all_diag = true;
  bool all_edge = true;
  std::uint64_t interior_minimal = 0;
  std::vector<std::vector<std::vector<std::uint8_t>>> sample;
};

// analysis of one admissible raw triangle
void analyze_candidate(const RawSearch& rs, PartitionResult& out, std::size_t sample_limit) {
  const long d = rs.d;
  // I and interior diagonal idempotency
  std::vector<long> diag_one;
  bool diag_ok = true;
  for (long k = -d; k <= d; ++k) {
    std::uint8_t v = rs.lambda[k + d][k + d];
    if (v == 1) diag_one.push_back(k);
    if (k >= -(d - 1) && k <= d - 1 && static_cast<std::uint32_t>(v) * v % rs.p != v)
      diag_ok = false;
  }
  auto leading = [&](long k) -> long {
    for (long l = k; l >= -d; --l)
      if (rs.lambda[k + d][l + d] != 0) return l;
    return d + 1;
  };
  std::uint64_t max_depth = 0;
  for (long start : diag_one) {
    long k = start;
    std::uint64_t depth = 0;
    while (k >= 2 - d) {
      long l = leading(k - 1);
      if (l > k - 1 || rs.lambda[l + d][l + d] != 1) {
        out.all_edge = false;
        out.interior_minimal += 1;
        break;
      }
      ++depth;
      k = l;
    }
    max_depth = std::max(max_depth, depth);
  }
  out.count += 1;
  out.all_diag = out.all_diag && diag_ok;
  out.min_max_depth = std::min(out.min_max_depth, max_depth);
  if (out.sample.size() < sample_limit) out.sample.push_back(rs.lambda);
}

// DFS over rows 0 .. rows-2 (the top row is fixed by the partition)
void dfs_rows(RawSearch& rs, std::size_t r, PartitionResult& out, std::size_t sample_limit) {
  const std::size_t last = rs.rows - 1;
  if (r == last) {
    analyze_candidate(rs, out, sample_limit);
    return;
  }
  const std::size_t len = r + 1;
  std::vector<std::uint8_t>& row = rs.lambda[r];
  row.assign(len, 0);
  // odometer over the row; the e^2 row check applies at degrees |k| <= d-1,
  // i.e. rows 1 <= r <= 2d-1 (row 0 is pinned by its sum alone)
  while (true) {
    if (rs.row_sum_ok(r) && (r == 0 || rs.idempotent_row_ok(r)))
      dfs_rows(rs, r + 1, out, sample_limit);
    std::size_t i = 0;
    while (i < len && ++row[i] == rs.p) row[i++] = 0;
    if (i == len) break;
  }
}

}  // namespace

SearchReport brute_force_split_search(long d, const Field& field, unsigned threads,
                                      std::size_t sample_limit) {
  if (field.is_rationals() || (field.characteristic() != 2 && field.characteristic() != 3))
    throw Error(ErrorKind::SearchSpaceTooLarge, "search runs over F_2 or F_3 only");
  if (d < 1 || d > 3)
    throw Error(ErrorKind::SearchSpaceTooLarge, "search supports 1 <= d <= 3");

  const std::uint32_t p = field.characteristic();
  const std::size_t rows = 2 * d + 1;

  // partitions: admissible assignments of the top-degree row (row sum = 1);
  // the top row enters no interior idempotency constraint
  std::vector<std::vector<std::uint8_t>> tops;
  {
    std::vector<std::uint8_t> top(rows, 0);
    while (true) {
      std::uint32_t sum = 0;
      for (auto v : top) sum += v;
      if (sum % p == 1) tops.push_back(top);
      std::size_t i = 0;
      while (i < rows && ++top[i] == p) top[i++] = 0;
      if (i == rows) break;
    }
  }

  const unsigned worker_count = std::max(1u, std::min<unsigned>(threads, tops.size()));
  std::vector<PartitionResult> results(tops.size());
  auto run_slice = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      RawSearch rs;
      rs.d = d;
      rs.p = p;
      rs.rows = rows;
      rs.lambda.assign(rows, {});
      rs.lambda[rows - 1] = tops[t];
      dfs_rows(rs, 0, results[t], sample_limit);
    }
  };
  if (worker_count == 1) {
    run_slice(0, tops.size());
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (tops.size() + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(tops.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(run_slice, begin, end);
    }
    for (auto& th : workers) th.join();
  }

  SearchReport report;
  report.d = d;
  report.field_char = p;
  std::uint64_t min_depth = ~0ull;
  for (const auto& r : results) {  // deterministic merge in partition order
    report.admissible_count += r.count;
    report.all_diagonal_idempotent = report.all_diagonal_idempotent && r.all_diag;
    report.all_descents_reach_edge = report.all_descents_reach_edge && r.all_edge;
    report.interior_minimal_found += r.interior_minimal;
    if (r.count > 0) min_depth = std::min(min_depth, r.min_max_depth);
    for (const auto& raw : r.sample) {
      if (report.sample.size() >= sample_limit) break;
      LambdaTriangle t;
      t.d = d;
      for (std::size_t rr = 0; rr < rows; ++rr) {
        std::vector<Scalar> row;
        for (std::uint8_t v : raw[rr]) row.push_back(Scalar::from_int(field, v));
        t.rows.push_back(row);
      }
      report.sample.push_back(std::move(t));
    }
  }
  report.min_max_descent_depth = min_depth == ~0ull ? 0 : min_depth;
  return report;
}

}  // namespace gradalg
