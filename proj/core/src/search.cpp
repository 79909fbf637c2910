// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "darboux/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <thread>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

std::map<Monomial, std::size_t, GrlexDesc> index_of(
    const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, GrlexDesc> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Poly poly_from_coords(const RatRow& coords,
                      const std::vector<Monomial>& basis) {
  Poly p;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) p += Poly::term(ParamPoly(coords[i]), basis[i]);
  return p;
}

bool result_less(const DarbouxResult& l, const DarbouxResult& r) {
  if (l.degree != r.degree) return l.degree < r.degree;
  int c = compare_canonical(l.f, r.f);
  if (c != 0) return c < 0;
  return compare_canonical(l.cofactor, r.cofactor) < 0;
}

}  // namespace

CascadeOperators CascadeOperators::split(const Field& x) {
  return {x.homogeneous_part(1), x.homogeneous_part(2)};
}

ParamMatrix CascadeOperators::a_matrix(int j) const {
  auto basis = homogeneous_basis(j);
  auto idx = index_of(basis);
  ParamMatrix m(basis.size(), std::vector<ParamPoly>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    Poly image = lie_derivative(linear, Poly::term(ParamPoly(Rat(1)), basis[col]));
    for (const auto& [mono, c] : image.terms()) m[idx.at(mono)][col] = c;
  }
  return m;
}

ParamMatrix CascadeOperators::n_matrix(int j) const {
  auto src = homogeneous_basis(j);
  auto tgt = homogeneous_basis(j + 1);
  auto idx = index_of(tgt);
  ParamMatrix m(tgt.size(), std::vector<ParamPoly>(src.size()));
  for (std::size_t col = 0; col < src.size(); ++col) {
    Poly image =
        lie_derivative(quadratic, Poly::term(ParamPoly(Rat(1)), src[col]));
    for (const auto& [mono, c] : image.terms()) m[idx.at(mono)][col] = c;
  }
  return m;
}

ParamMatrix build_N_matrix(const Field& x, int j) {
  if (j < 0) throw Error("negative slice degree");
  return CascadeOperators::split(x).n_matrix(j);
}

std::vector<ParamPoly> candidate_cofactors(const Field& x, int degree_bound) {
  if (!x.linear_part_is_diagonal())
    throw Error(
        "candidate cofactor enumeration needs a diagonal linear part; "
        "specialize the field and use the rational-spectrum fallback");
  auto lin = x.linear_matrix();
  std::set<ParamPoly> vals;
  for (int ex = 0; ex <= degree_bound; ++ex)
    for (int ey = 0; ey + ex <= degree_bound; ++ey)
      for (int ez = 0; ez + ey + ex <= degree_bound; ++ez) {
        ParamPoly v = lin[0][0].scaled(Rat(ex)) + lin[1][1].scaled(Rat(ey)) +
                      lin[2][2].scaled(Rat(ez));
        vals.insert(v);
      }
  return {vals.begin(), vals.end()};
}

std::vector<Rat> candidate_cofactors_specialized(const Field& x,
                                                 int degree_bound) {
  if (!x.is_param_free())
    throw Error("candidate cofactor specialization requires fixed parameters");
  auto lin = x.linear_matrix();
  std::set<Rat> vals;
  if (x.linear_part_is_diagonal()) {
    Rat l0 = lin[0][0].constant_value();
    Rat l1 = lin[1][1].constant_value();
    Rat l2 = lin[2][2].constant_value();
    for (int ex = 0; ex <= degree_bound; ++ex)
      for (int ey = 0; ey + ex <= degree_bound; ++ey)
        for (int ez = 0; ez + ey + ex <= degree_bound; ++ez)
          vals.insert(Rat(ex) * l0 + Rat(ey) * l1 + Rat(ez) * l2);
    return {vals.begin(), vals.end()};
  }

  // Non-diagonal fallback: the slice operators' eigenvalues are the sums
  // <m, lambda> over the eigenvalues lambda of the 3x3 linear part, so the
  // rational ones come from rational roots plus full conjugate packets of
  // the characteristic cubic.
  Rat m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = lin[i][j].constant_value();
  Rat tr = m[0][0] + m[1][1] + m[2][2];
  Rat minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] +
               m[0][0] * m[2][2] - m[0][2] * m[2][0] +
               m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CubicSpectrum spec = rational_cubic_spectrum(-tr, minors, -det);

  vals.insert(Rat(0));
  if (spec.cubic_triple_sum) {
    for (int k = 1; 3 * k <= degree_bound; ++k)
      vals.insert(Rat(k) * *spec.cubic_triple_sum);
  } else {
    const auto& roots = spec.rational;
    std::vector<int> exps(roots.size(), 0);
    // Enumerate exponents over rational roots plus (optionally) the number
    // of whole conjugate pairs of the irreducible quadratic factor.
    int pair_weight = spec.quadratic_pair_sum ? 2 : 0;
    std::vector<int> stack(roots.size() + (pair_weight ? 1 : 0), 0);
    std::size_t n = stack.size();
    while (true) {
      int total = 0;
      for (std::size_t i = 0; i < roots.size(); ++i) total += stack[i];
      if (pair_weight) total += 2 * stack[n - 1];
      if (total <= degree_bound) {
        Rat v(0);
        for (std::size_t i = 0; i < roots.size(); ++i)
          v += Rat(stack[i]) * roots[i];
        if (pair_weight) v += Rat(stack[n - 1]) * *spec.quadratic_pair_sum;
        vals.insert(v);
      }
      // odometer increment with early cut at the degree bound
      std::size_t pos = 0;
      while (pos < n) {
        ++stack[pos];
        int t = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) t += stack[i];
        if (pair_weight) t += 2 * stack[n - 1];
        if (t <= degree_bound) break;
        stack[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  }
  return {vals.begin(), vals.end()};
}

std::vector<Poly> cascade_solve(const Field& x, int d, const Rat& c0,
                                const std::map<char, Rat>& params) {
  if (d < 1) throw Error("top degree must be at least 1");
  Field xs = specialize(x, params);
  if (!xs.is_param_free())
    throw Error("cascade requires all parameters fixed");
  int rise = std::max(0, xs.degree() - 1);
  if (d + rise > max_total_degree())
    throw DegreeOverflowError("search degree " + std::to_string(d) +
                              " needs monomials above the configured cap");

  auto src = monomial_basis(d);
  auto tgt = monomial_basis(d + rise);
  auto tgt_idx = index_of(tgt);

  RatMatrix m(tgt.size(), RatRow(src.size(), Rat(0)));
  for (std::size_t col = 0; col < src.size(); ++col) {
    Poly image =
        lie_derivative(xs, Poly::term(ParamPoly(Rat(1)), src[col])) -
        Poly::term(ParamPoly(c0), src[col]);
    for (const auto& [mono, c] : image.terms())
      m[tgt_idx.at(mono)][col] = c.constant_value();
  }

  std::vector<Poly> out;
  for (const RatRow& v : nullspace(m)) {
    Poly f = poly_from_coords(v, src);
    if (f.degree() == d) out.push_back(f.monic());
  }
  return out;
}

bool verify_darboux(const Field& x, const Poly& f, const Poly& k) {
  return (lie_derivative(x, f) - k * f).is_zero();
}

std::optional<Poly> extract_constant_cofactor(const Field& x, const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  Poly lf = lie_derivative(x, f);
  if (lf.is_zero()) return Poly();
  if (!(lf.leading_monomial() == f.leading_monomial())) return std::nullopt;
  if (!f.leading_coeff().is_constant()) return std::nullopt;
  ParamPoly k =
      lf.leading_coeff() * ParamPoly(Rat(1) / f.leading_coeff().constant_value());
  Poly kp{k};
  if ((lf - kp * f).is_zero()) return kp;
  return std::nullopt;
}

std::vector<DarbouxResult> find_darboux(const Field& x, int degree_bound,
                                        const std::map<char, Rat>& params) {
  if (degree_bound < 1) throw Error("degree bound must be at least 1");
  Field xs = specialize(x, params);
  if (!xs.is_param_free())
    throw Error("search requires all parameters fixed; see parameter_sweep");

  // The builtin family admits only even-degree solutions (the top layer
  // lives in the kernel of the degree-raising operator, which is spanned by
  // quadrics), so odd top degrees are skipped for it.
  const bool even_only = xs.is_builtin_d2();

  // The (d, c0) tasks are independent over immutable inputs, so they run on
  // a small thread pool; determinism comes from collecting in task order and
  // sorting canonically afterwards (the arithmetic itself is exact).
  struct Task {
    int d;
    Rat c0;
  };
  std::vector<Task> tasks;
  for (int d = even_only ? 2 : 1; d <= degree_bound; d += even_only ? 2 : 1)
    for (const Rat& c0 : candidate_cofactors_specialized(xs, d))
      tasks.push_back({d, c0});

  std::vector<std::vector<Poly>> solutions(tasks.size());
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned jobs = std::min<unsigned>(hw, 8u);
  if (tasks.size() < 2 || jobs < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      solutions[i] = cascade_solve(xs, tasks[i].d, tasks[i].c0);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        solutions[i] = cascade_solve(xs, tasks[i].d, tasks[i].c0);
      }
    };
    std::vector<std::future<void>> futures;
    for (unsigned j = 0; j < jobs; ++j)
      futures.push_back(std::async(std::launch::async, worker));
    for (auto& fut : futures) fut.get();
  }

  std::vector<DarbouxResult> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (const Poly& f : solutions[i]) {
      if (!seen.insert(f.str()).second) continue;
      DarbouxResult r;
      r.f = f;
      r.cofactor = Poly(ParamPoly(tasks[i].c0));
      r.degree = tasks[i].d;
      r.first_integral = tasks[i].c0.is_zero();
      if (!verify_darboux(xs, r.f, r.cofactor))
        throw Error("internal error: unverified search result " + f.str());
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), result_less);
  reduce_to_generators(out, xs);
  return out;
}

GeneratorSet reduce_to_generators(std::vector<DarbouxResult>& results,
                                  const Field& x) {
  std::sort(results.begin(), results.end(), result_less);
  GeneratorSet gens;

  for (DarbouxResult& r : results) {
    if (!r.f.is_param_free() || !r.cofactor.is_param_free())
      throw Error("generator reduction runs on specialized results");
    if (!verify_darboux(x, r.f, r.cofactor))
      throw Error("generator reduction expects verified pairs; " +
                  r.f.str() + " fails for this field");

    // Candidate decompositions: products of already-kept generators whose
    // degrees fit and whose cofactors add up to r's cofactor, plus the
    // constant 1 (cofactor zero). Membership in their span covers both
    // product and same-cofactor-sum redundancy.
    std::vector<Poly> products;
    std::vector<std::string> labels;
    std::vector<int> exps(gens.generators.size(), 0);
    while (true) {
      int deg = 0;
      for (std::size_t i = 0; i < exps.size(); ++i)
        deg += exps[i] * gens.generators[i].degree;
      if (deg <= r.degree) {
        Poly cof;
        for (std::size_t i = 0; i < exps.size(); ++i)
          cof += Rat(exps[i]) * gens.generators[i].cofactor;
        if (cof == r.cofactor) {
          Poly prod(Rat(1));
          std::string label;
          for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            prod = prod * gens.generators[i].f.pow(exps[i]);
            if (!label.empty()) label += "*";
            label += "(" + gens.generators[i].f.str() + ")";
            if (exps[i] > 1) label += "^" + std::to_string(exps[i]);
          }
          if (label.empty()) label = "1";
          products.push_back(prod);
          labels.push_back(label);
        }
      }
      // odometer over generator exponents, bounded by the degree budget
      std::size_t pos = 0;
      while (pos < exps.size()) {
        ++exps[pos];
        int dg = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
          dg += exps[i] * gens.generators[i].degree;
        if (dg <= r.degree) break;
        exps[pos] = 0;
        ++pos;
      }
      if (pos == exps.size()) break;
    }

    bool derived = false;
    if (!products.empty()) {
      std::vector<RatRow> cols;
      cols.reserve(products.size());
      auto to_rat_row = [&](const Poly& p) {
        auto coords = coeff_vector(p, r.degree);
        RatRow row(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
          row[i] = coords[i].constant_value();
        return row;
      };
      for (const Poly& p : products) cols.push_back(to_rat_row(p));
      auto combo = solve_linear_combination(cols, to_rat_row(r.f));
      if (combo) {
        derived = true;
        std::string note = r.f.str() + " = ";
        bool first = true;
        for (std::size_t i = 0; i < combo->size(); ++i) {
          if ((*combo)[i].is_zero()) continue;
          if (!first) note += " + ";
          first = false;
          if ((*combo)[i] == Rat(1) && labels[i] != "1")
            note += labels[i];
          else
            note += (*combo)[i].str() + (labels[i] == "1" ? "" : "*" + labels[i]);
        }
        gens.closure_notes.push_back(std::move(note));
      }
    }

    r.generator = !derived;
    if (r.generator) gens.generators.push_back(r);
  }
  return gens;
}

std::vector<SweepRow> parameter_sweep(
    const Field& x, int degree_bound,
    const std::vector<std::pair<Rat, Rat>>& grid_in) {
  // Deduplicated grid, deterministic order.
  std::vector<std::pair<Rat, Rat>> grid;
  for (const auto& p : grid_in)
    if (std::find(grid.begin(), grid.end(), p) == grid.end())
      grid.push_back(p);
  if (grid.empty()) throw Error("empty parameter grid");

  // Pool of generator polynomials found anywhere on the grid.
  std::vector<Poly> pool;
  std::vector<std::string> pool_keys;
  std::vector<Field> specialized;
  specialized.reserve(grid.size());
  for (const auto& [av, bv] : grid)
    specialized.push_back(specialize(x, {{'a', av}, {'b', bv}}));
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    auto results =
        find_darboux(x, degree_bound, {{'a', grid[gi].first}, {'b', grid[gi].second}});
    for (const auto& r : results) {
      if (!r.generator) continue;
      std::string key = r.f.str();
      if (std::find(pool_keys.begin(), pool_keys.end(), key) ==
          pool_keys.end()) {
        pool_keys.push_back(key);
        pool.push_back(r.f);
      }
    }
  }

  struct Condition {
    std::string name;
    ParamPoly va, vb;
  };
  const std::vector<Condition> conditions = {
      {"none", ParamPoly::symbol_a(), ParamPoly::symbol_b()},
      {"a=1", ParamPoly(Rat(1)), ParamPoly::symbol_b()},
      {"b=1", ParamPoly::symbol_a(), ParamPoly(Rat(1))},
      {"a=b", ParamPoly::symbol_a(), ParamPoly::symbol_a()},
  };
  auto on_locus = [](const Condition& c, const std::pair<Rat, Rat>& p) {
    if (c.name == "none") return true;
    if (c.name == "a=1") return p.first == Rat(1);
    if (c.name == "b=1") return p.second == Rat(1);
    return p.first == p.second;
  };

  std::vector<SweepRow> rows;
  for (std::size_t pi = 0; pi < pool.size(); ++pi) {
    const Poly& f = pool[pi];
    std::vector<bool> support(grid.size(), false);
    int support_count = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      if (extract_constant_cofactor(specialized[gi], f)) {
        support[gi] = true;
        ++support_count;
      }
    }

    SweepRow row;
    row.polynomial = f;
    row.support_count = support_count;
    row.condition = "unclassified";
    for (const Condition& cond : conditions) {
      bool match = true;
      for (std::size_t gi = 0; gi < grid.size(); ++gi)
        if (support[gi] != on_locus(cond, grid[gi])) {
          match = false;
          break;
        }
      if (!match || support_count == 0) continue;
      Field xc = substitute_params(x, cond.va, cond.vb);
      auto k = extract_constant_cofactor(xc, f);
      if (!k) continue;  // support coincidence without a symbolic identity
      row.condition = cond.name;
      row.cofactor = *k;
      row.verified = true;
      bool fi = true;
      for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (!support[gi]) continue;
        ParamPoly kc = k->is_zero() ? ParamPoly() : k->leading_coeff();
        if (!kc.eval(grid[gi].first, grid[gi].second).is_zero()) fi = false;
      }
      row.first_integral = fi;
      break;
    }
    rows.push_back(std::move(row));
  }

  auto cond_rank = [](const std::string& c) {
    if (c == "a=1") return 0;
    if (c == "b=1") return 1;
    if (c == "a=b") return 2;
    if (c == "none") return 3;
    return 4;
  };
  std::sort(rows.begin(), rows.end(), [&](const SweepRow& l, const SweepRow& r) {
    if (cond_rank(l.condition) != cond_rank(r.condition))
      return cond_rank(l.condition) < cond_rank(r.condition);
    return compare_canonical(l.polynomial, r.polynomial) < 0;
  });
  return rows;
}

}  // namespace darboux
