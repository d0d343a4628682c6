#include "hodgekit/genus.hpp"

#include <stdexcept>

namespace hodgekit::genus {

namespace {

// total-degree truncated product
Poly mul_trunc(const Poly& a, const Poly& b, int max_degree) {
  Poly out(a.nvars());
  for (const auto& [m1, c1] : a.terms()) {
    int d1 = mono_degree(m1);
    for (const auto& [m2, c2] : b.terms()) {
      if (d1 + mono_degree(m2) > max_degree) continue;
      Mono m(m1);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Poly homogeneous_part(const Poly& p, int degree) {
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (mono_degree(m) == degree) out.add_term(m, c);
  return out;
}

// elementary symmetric polynomial e_k(x_1..x_r)
Poly elementary(int k, int roots) {
  Poly out(roots);
  if (k == 0) return Poly::constant(roots, Rat(1));
  std::vector<int> idx(k);
  // iterate k-subsets of {0..roots-1}
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > roots) return out;
  while (true) {
    Mono m(roots, 0);
    for (int i : idx) m[i] = 1;
    out.add_term(m, Rat(1));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == roots - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

bool is_symmetric(const Poly& p) {
  // invariance under adjacent transpositions generates the symmetric group
  int r = p.nvars();
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<Poly> images;
    for (int j = 0; j < r; ++j) {
      int k = (j == i) ? i + 1 : (j == i + 1 ? i : j);
      images.push_back(Poly::variable(r, k));
    }
    if (!(p.substitute(images) == p)) return false;
  }
  return true;
}

}  // namespace

Series1 ahat_univariate(int max_degree) {
  // (e^{x/2} - e^{-x/2}) / x = sum_j x^{2j} / (4^j (2j+1)!)
  Series1 h(max_degree);
  Rat four_pow = 1;
  for (int j = 0; 2 * j <= max_degree; ++j) {
    h[2 * j] = Rat(1) / (four_pow * factorial_rat(2 * j + 1));
    four_pow *= 4;
  }
  return series_inv(h);
}

Series1 todd_univariate(int max_degree) {
  // (1 - e^{-x}) / x = sum_{m>=1} (-1)^{m-1} x^{m-1} / m!
  Series1 g(max_degree);
  for (int m = 1; m - 1 <= max_degree; ++m) {
    Rat c = Rat(1) / factorial_rat(m);
    g[m - 1] = (m % 2 == 1) ? c : -c;
  }
  return series_inv(g);
}

Series1 exp_univariate(const Rat& lambda, int max_degree) {
  Series1 s(max_degree);
  Rat pow = 1;
  for (int k = 0; k <= max_degree; ++k) {
    s[k] = pow / factorial_rat(k);
    pow *= lambda;
  }
  return s;
}

GenusSeries from_univariate(const Series1& f, int roots, int max_degree) {
  if (f[0] != 1) throw std::invalid_argument("genus: defining series must have f(0) = 1");
  if (f.max_degree() < max_degree)
    throw std::invalid_argument("genus: defining series truncated below requested degree");
  GenusSeries g;
  g.roots = roots;
  g.max_degree = max_degree;
  g.symmetric = true;
  g.terms = Poly::constant(roots, Rat(1));
  for (int i = 0; i < roots; ++i) {
    Poly fi(roots);
    for (int k = 0; k <= max_degree; ++k) {
      if (f[k] == 0) continue;
      Mono m(roots, 0);
      m[i] = k;
      fi.add_term(m, f[k]);
    }
    g.terms = mul_trunc(g.terms, fi, max_degree);
  }
  return g;
}

GenusSeries product(const GenusSeries& a, const GenusSeries& b) {
  if (a.roots != b.roots || a.max_degree != b.max_degree)
    throw std::invalid_argument("genus product: root count or truncation mismatch");
  GenusSeries g;
  g.roots = a.roots;
  g.max_degree = a.max_degree;
  g.symmetric = a.symmetric && b.symmetric;
  g.terms = mul_trunc(a.terms, b.terms, a.max_degree);
  return g;
}

GenusSeries sqrt(const GenusSeries& a) {
  if (a.terms.coeff(Mono(a.roots, 0)) != 1)
    throw std::invalid_argument("genus sqrt: constant term must be 1");
  // solve s*s = a degree by degree: 2 s_d = a_d - sum_{0<k<d} s_k s_{d-k}
  std::vector<Poly> s(a.max_degree + 1, Poly(a.roots));
  s[0] = Poly::constant(a.roots, Rat(1));
  for (int d = 1; d <= a.max_degree; ++d) {
    Poly rhs = homogeneous_part(a.terms, d);
    for (int k = 1; k < d; ++k) rhs = rhs - s[k] * s[d - k];
    s[d] = rhs.scaled(rat(1, 2));
  }
  GenusSeries g;
  g.roots = a.roots;
  g.max_degree = a.max_degree;
  g.symmetric = a.symmetric;
  g.terms = Poly(a.roots);
  for (int d = 0; d <= a.max_degree; ++d) g.terms = g.terms + s[d];
  return g;
}

GenusSeries exp_linear(const Rat& lambda, int roots, int max_degree) {
  return from_univariate(exp_univariate(lambda, max_degree), roots, max_degree);
}

GenusSeries truncate(const GenusSeries& a, int max_degree) {
  if (max_degree > a.max_degree) throw std::invalid_argument("truncate: cannot extend a series");
  GenusSeries g = a;
  g.max_degree = max_degree;
  g.terms = a.terms.truncated(max_degree);
  return g;
}

bool todd_relation_holds(int roots, int max_degree) {
  GenusSeries td = from_univariate(todd_univariate(max_degree), roots, max_degree);
  GenusSeries ahat = from_univariate(ahat_univariate(max_degree), roots, max_degree);
  GenusSeries rhs = product(exp_linear(rat(1, 2), roots, max_degree), ahat);
  return td == rhs;
}

Poly to_chern_basis(const GenusSeries& s) {
  if (!s.symmetric || !is_symmetric(s.terms))
    throw std::invalid_argument("to_chern_basis: input is not symmetric");
  int r = s.roots;
  std::vector<Poly> elem(r + 1, Poly(r));
  for (int k = 0; k <= r; ++k) elem[k] = elementary(k, r);

  Poly rest = s.terms;
  Poly out(r);  // variables c_1..c_r
  while (!rest.is_zero()) {
    // leading monomial in lex order has nonincreasing exponents for a
    // symmetric polynomial
    auto it = rest.terms().rbegin();
    Mono lead = it->first;
    Rat c = it->second;
    Mono cmono(r, 0);
    Poly prod = Poly::constant(r, Rat(1));
    for (int i = 0; i < r; ++i) {
      int e = lead[i] - (i + 1 < r ? lead[i + 1] : 0);
      if (e < 0) throw std::invalid_argument("to_chern_basis: non-symmetric leading term");
      cmono[i] = e;
      for (int k = 0; k < e; ++k) prod = prod * elem[i + 1];
    }
    out.add_term(cmono, c);
    rest = rest - prod.scaled(c);
  }
  return out;
}

Poly chern_to_roots(const Poly& p, int roots) {
  std::vector<Poly> images;
  for (int k = 1; k <= p.nvars(); ++k) images.push_back(elementary(k, roots));
  return p.substitute(images);
}

}  // namespace hodgekit::genus
