#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgekit/rational.hpp"

namespace hodgekit {

// Exponent vector; length = number of variables.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);

// Sparse multivariate polynomial over Rat. Monomials ordered by std::map's
// lexicographic vector order, which keeps all printing deterministic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, const Mono& m, const Rat& c);

  int nvars() const { return nvars_; }
  const std::map<Mono, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;

  void add_term(const Mono& m, const Rat& c);
  Rat coeff(const Mono& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

  Poly truncated(int max_total_degree) const;
  Poly pow(unsigned e) const;

  // substitute variable i -> images[i]; all images share one variable set
  Poly substitute(const std::vector<Poly>& images) const;

  Rat eval(const std::vector<Rat>& point) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_ = 0;
  std::map<Mono, Rat> t_;
};

// Truncated univariate power series, coefficient of x^k at index k.
struct Series1 {
  std::vector<Rat> c;

  explicit Series1(int max_degree = 0) : c(std::size_t(max_degree) + 1, Rat(0)) {}
  int max_degree() const { return (int)c.size() - 1; }
  const Rat& operator[](int k) const { return c[k]; }
  Rat& operator[](int k) { return c[k]; }
};

Series1 series_mul(const Series1& a, const Series1& b);
// multiplicative inverse of a series with a[0] = 1
Series1 series_inv(const Series1& a);

}  // namespace hodgekit
