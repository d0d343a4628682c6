#pragma once

#include "hodgekit/poly.hpp"

namespace hodgekit::genus {

// Defining univariate series, obtained by exact truncated division.
// ahat:  x / (e^{x/2} - e^{-x/2})
// todd:  x / (1 - e^{-x})
Series1 ahat_univariate(int max_degree);
Series1 todd_univariate(int max_degree);
Series1 exp_univariate(const Rat& lambda, int max_degree);

// Multiplicative genus as a truncated symmetric series in Chern roots
// x_1..x_r, all total degrees <= max_degree.
struct GenusSeries {
  int roots = 0;
  int max_degree = 0;
  bool symmetric = false;
  Poly terms;  // nvars = roots

  bool operator==(const GenusSeries& o) const {
    return roots == o.roots && max_degree == o.max_degree && terms == o.terms;
  }
};

// Product over roots of f(x_i); requires f(0) = 1.
GenusSeries from_univariate(const Series1& f, int roots, int max_degree);

GenusSeries product(const GenusSeries& a, const GenusSeries& b);
// Unique square root with constant term 1; requires a's constant term to be 1.
GenusSeries sqrt(const GenusSeries& a);
// exp(lambda * (x_1 + ... + x_r))
GenusSeries exp_linear(const Rat& lambda, int roots, int max_degree);
GenusSeries truncate(const GenusSeries& a, int max_degree);

// td = exp(c1/2) * ahat at the given truncation
bool todd_relation_holds(int roots, int max_degree);

// Rewrite of a symmetric series in the elementary symmetric polynomials
// c_1..c_r, graded with deg c_i = i.
Poly to_chern_basis(const GenusSeries& s);
// expand a polynomial in c_1..c_r back into the roots (test/oracle path)
Poly chern_to_roots(const Poly& p, int roots);

}  // namespace hodgekit::genus
