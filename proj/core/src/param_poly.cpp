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

#include "darboux/param_poly.hpp"

#include <sstream>

namespace darboux {

ParamPoly ParamPoly::monomial(int ea, int eb, const Rat& c) {
  ParamPoly p;
  if (ea < 0 || eb < 0) throw Error("negative parameter exponent");
  if (!c.is_zero()) p.terms_[{ea, eb}] = c;
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0};
}

Rat ParamPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw Error("parameter polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int ParamPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool ParamPoly::uses_a() const {
  for (const auto& [e, c] : terms_)
    if (e.a > 0) return true;
  return false;
}

bool ParamPoly::uses_b() const {
  for (const auto& [e, c] : terms_)
    if (e.b > 0) return true;
  return false;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  r += o;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ParamExp e{e1.a + e2.a, e1.b + e2.b};
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rat c = c1 * c2;
        if (!c.is_zero()) r.terms_.emplace(e, c);
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ParamPoly ParamPoly::scaled(const Rat& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

bool ParamPoly::operator<(const ParamPoly& o) const {
  auto l = terms_.begin();
  auto r = o.terms_.begin();
  ParamExpDesc before;
  for (; l != terms_.end() && r != o.terms_.end(); ++l, ++r) {
    if (l->first != r->first) return before(l->first, r->first);
    if (l->second != r->second) return l->second < r->second;
  }
  return l == terms_.end() && r != o.terms_.end();
}

ParamPoly ParamPoly::substituted(const ParamPoly& va, const ParamPoly& vb) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    ParamPoly term(c);
    for (int i = 0; i < e.a; ++i) term = term * va;
    for (int i = 0; i < e.b; ++i) term = term * vb;
    r += term;
  }
  return r;
}

Rat ParamPoly::eval(const Rat& a, const Rat& b) const {
  Rat r(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < e.a; ++i) t *= a;
    for (int i = 0; i < e.b; ++i) t *= b;
    r += t;
  }
  return r;
}

namespace {

std::string exp_str(const ParamExp& e) {
  std::string s;
  if (e.a > 0) {
    s += "a";
    if (e.a > 1) s += "^" + std::to_string(e.a);
  }
  if (e.b > 0) {
    if (!s.empty()) s += "*";
    s += "b";
    if (e.b > 1) s += "^" + std::to_string(e.b);
  }
  return s;
}

}  // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string vars = exp_str(e);
    if (vars.empty()) {
      out << mag.str();
    } else if (mag == Rat(1)) {
      out << vars;
    } else {
      out << mag.str() << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace darboux
