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

#include "darboux/poly.hpp"

#include <sstream>

namespace darboux {

namespace {
int g_max_total_degree = 16;
}

int max_total_degree() { return g_max_total_degree; }

void set_max_total_degree(int bound) {
  if (bound < 1) throw Error("max total degree must be positive");
  g_max_total_degree = bound;
}

int grlex_cmp(const Monomial& l, const Monomial& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree() ? -1 : 1;
  if (l.x != r.x) return l.x < r.x ? -1 : 1;
  if (l.y != r.y) return l.y < r.y ? -1 : 1;
  if (l.z != r.z) return l.z < r.z ? -1 : 1;
  return 0;
}

Poly::Poly(const ParamPoly& c) {
  if (!c.is_zero()) terms_[{0, 0, 0}] = c;
}

Poly Poly::variable(int axis) {
  Monomial m;
  switch (axis) {
    case 0: m.x = 1; break;
    case 1: m.y = 1; break;
    case 2: m.z = 1; break;
    default: throw Error("variable axis out of range");
  }
  return term(ParamPoly(Rat(1)), m);
}

Poly Poly::term(ParamPoly c, Monomial m) {
  if (m.x < 0 || m.y < 0 || m.z < 0) throw Error("negative exponent");
  if (m.degree() > g_max_total_degree)
    throw DegreeOverflowError("monomial degree " + std::to_string(m.degree()) +
                              " exceeds cap " +
                              std::to_string(g_max_total_degree));
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool Poly::is_param_free() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

void Poly::add_term(const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{m1.x + m2.x, m1.y + m2.y, m1.z + m2.z};
      if (m.degree() > g_max_total_degree)
        throw DegreeOverflowError("product degree " +
                                  std::to_string(m.degree()) + " exceeds cap " +
                                  std::to_string(g_max_total_degree));
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

Poly Poly::scaled(const ParamPoly& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Poly r(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

Poly Poly::partial(int axis) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = axis == 0 ? m.x : axis == 1 ? m.y : m.z;
    if (e == 0) continue;
    Monomial d = m;
    if (axis == 0) --d.x;
    else if (axis == 1) --d.y;
    else --d.z;
    r.add_term(d, c.scaled(Rat(e)));
  }
  return r;
}

std::vector<std::pair<int, Poly>> Poly::homogeneous_components() const {
  std::map<int, Poly> by_degree;
  for (const auto& [m, c] : terms_) by_degree[m.degree()] += term(c, m);
  std::vector<std::pair<int, Poly>> out;
  out.reserve(by_degree.size());
  for (auto& [d, p] : by_degree) out.emplace_back(d, std::move(p));
  return out;
}

Poly Poly::homogeneous_component(int deg) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == deg) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::compose_linear(const Mat3& mat) const {
  // Linear forms replacing x, y, z, with powers cached per exponent seen.
  std::array<Poly, 3> forms;
  for (int i = 0; i < 3; ++i) {
    Poly f;
    for (int j = 0; j < 3; ++j)
      f += Poly::variable(j).scaled(ParamPoly(mat[i][j]));
    forms[i] = f;
  }
  std::array<std::map<int, Poly>, 3> powers;
  auto power_of = [&](int axis, int e) -> const Poly& {
    auto it = powers[axis].find(e);
    if (it == powers[axis].end())
      it = powers[axis].emplace(e, forms[axis].pow(e)).first;
    return it->second;
  };
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    if (m.x) t = t * power_of(0, m.x);
    if (m.y) t = t * power_of(1, m.y);
    if (m.z) t = t * power_of(2, m.z);
    r += t;
  }
  return r;
}

Poly Poly::substituted_params(const ParamPoly& va, const ParamPoly& vb) const {
  Poly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.substituted(va, vb));
  return r;
}

Rat Poly::eval(const std::array<Rat, 3>& at) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    if (!c.is_constant())
      throw Error("evaluating polynomial with free parameters");
    Rat t = c.constant_value();
    for (int i = 0; i < m.x; ++i) t *= at[0];
    for (int i = 0; i < m.y; ++i) t *= at[1];
    for (int i = 0; i < m.z; ++i) t *= at[2];
    sum += t;
  }
  return sum;
}

Monomial Poly::leading_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const ParamPoly& Poly::leading_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  const ParamPoly& lead = leading_coeff();
  if (!lead.is_constant())
    throw Error("cannot normalize: leading coefficient depends on parameters");
  Rat inv = Rat(1) / lead.constant_value();
  return scaled(ParamPoly(inv));
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  auto piece = [&s](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  piece("x", m.x);
  piece("y", m.y);
  piece("z", m.z);
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // A single constant term with a parameter-dependent coefficient prints
  // bare (no parentheses): cofactors like "2*a" stay readable.
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0})
    return terms_.begin()->second.str();

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string vars = monomial_str(m);
    std::string body;
    int sign = 1;
    if (c.is_constant()) {
      Rat v = c.constant_value();
      sign = v.sign();
      Rat mag = v.abs();
      if (vars.empty()) body = mag.str();
      else if (mag == Rat(1)) body = vars;
      else body = mag.str() + "*" + vars;
    } else if (c.terms().size() == 1) {
      // single parameter term: pull the sign out, no parentheses
      const auto& [pe, pc] = *c.terms().begin();
      sign = pc.sign();
      ParamPoly mag = ParamPoly::monomial(pe.a, pe.b, pc.abs());
      body = mag.str();
      if (!vars.empty()) body += "*" + vars;
    } else {
      sign = 1;
      body = "(" + c.str() + ")";
      if (!vars.empty()) body += "*" + vars;
    }
    if (first) {
      if (sign < 0) out << "-";
      first = false;
    } else {
      out << (sign < 0 ? " - " : " + ");
    }
    out << body;
  }
  return out.str();
}

int compare_canonical(const Poly& l, const Poly& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree() ? -1 : 1;
  auto li = l.terms().begin();
  auto ri = r.terms().begin();
  for (; li != l.terms().end() && ri != r.terms().end(); ++li, ++ri) {
    int c = grlex_cmp(li->first, ri->first);
    if (c != 0) return -c;  // larger leading monomial sorts first
    if (li->second != ri->second) return li->second < ri->second ? -1 : 1;
  }
  if (li != l.terms().end()) return 1;
  if (ri != r.terms().end()) return -1;
  return 0;
}

std::vector<Monomial> homogeneous_basis(int degree) {
  std::vector<Monomial> out;
  for (int x = degree; x >= 0; --x)
    for (int y = degree - x; y >= 0; --y)
      out.push_back({x, y, degree - x - y});
  return out;
}

std::vector<Monomial> monomial_basis(int max_degree) {
  std::vector<Monomial> out;
  for (int d = max_degree; d >= 0; --d) {
    auto slice = homogeneous_basis(d);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::vector<ParamPoly> coeff_vector(const Poly& p, int degree_bound) {
  if (p.degree() > degree_bound)
    throw DegreeOverflowError("polynomial degree " +
                              std::to_string(p.degree()) +
                              " exceeds basis bound " +
                              std::to_string(degree_bound));
  auto basis = monomial_basis(degree_bound);
  std::vector<ParamPoly> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = p.terms().find(basis[i]);
    if (it != p.terms().end()) out[i] = it->second;
  }
  return out;
}

Poly from_coeff_vector(const std::vector<ParamPoly>& coords, int degree_bound) {
  auto basis = monomial_basis(degree_bound);
  if (coords.size() != basis.size())
    throw Error("coefficient vector length does not match basis size");
  Poly p;
  for (std::size_t i = 0; i < basis.size(); ++i)
    p += Poly::term(coords[i], basis[i]);
  return p;
}

}  // namespace darboux
