#include "hodgekit/poly.hpp"

#include <stdexcept>

namespace hodgekit {

int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::monomial(int nvars, const Mono& m, const Rat& c) {
  if ((int)m.size() != nvars) throw std::invalid_argument("monomial arity mismatch");
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, mono_degree(m));
  return d;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rat Poly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  Poly p = *this;
  for (const auto& [m, c] : o.t_) p.add_term(m, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  Poly p = *this;
  for (const auto& [m, c] : o.t_) p.add_term(m, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  Poly p(nvars_);
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      Mono m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      p.add_term(m, c1 * c2);
    }
  return p;
}

Poly Poly::scaled(const Rat& s) const {
  Poly p(nvars_);
  if (s == 0) return p;
  for (const auto& [m, c] : t_) p.add_term(m, c * s);
  return p;
}

Poly Poly::truncated(int max_total_degree) const {
  Poly p(nvars_);
  for (const auto& [m, c] : t_)
    if (mono_degree(m) <= max_total_degree) p.add_term(m, c);
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(nvars_, Rat(1));
  Poly b = *this;
  while (e) {
    if (e & 1u) acc = acc * b;
    b = b * b;
    e >>= 1u;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if ((int)images.size() != nvars_) throw std::invalid_argument("substitute arity mismatch");
  int target_vars = images.empty() ? 0 : images[0].nvars();
  Poly out(target_vars);
  for (const auto& [m, c] : t_) {
    Poly term = Poly::constant(target_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) term = term * images[i];
    out = out + term;
  }
  return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if ((int)point.size() != nvars_) throw std::invalid_argument("eval arity mismatch");
  Rat out = 0;
  for (const auto& [m, c] : t_) {
    Rat v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    out += v;
  }
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      s += "*" + var_names[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

Series1 series_mul(const Series1& a, const Series1& b) {
  int d = std::min(a.max_degree(), b.max_degree());
  Series1 r(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series1 series_inv(const Series1& a) {
  if (a[0] != 1) throw std::invalid_argument("series_inv: constant term must be 1");
  int d = a.max_degree();
  Series1 b(d);
  b[0] = 1;
  for (int k = 1; k <= d; ++k) {
    Rat s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s;
  }
  return b;
}

}  // namespace hodgekit
