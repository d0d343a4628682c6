#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hodgekit/rational.hpp"

namespace hodgekit::exterior {

// Odd vector space with basis e_1..e_n and dual basis e^1..e^n.
struct OddSpace {
  int dim;

  explicit OddSpace(int n) : dim(n) {
    if (n < 1 || n > 30) throw std::invalid_argument("OddSpace dimension out of range");
  }
  bool operator==(const OddSpace& o) const { return dim == o.dim; }
};

enum class Variance { polyvector, form };

// Element of Lambda^* V (polyvector) or Lambda^* V^* (form), with exact
// rational coefficients indexed by strictly increasing basis subsets.
// Subsets are stored as bitmasks; bit i stands for index i+1.
class ExtElem {
 public:
  ExtElem(OddSpace space, Variance var) : space_(space), var_(var) {}

  static ExtElem zero(OddSpace s, Variance v) { return ExtElem(s, v); }
  static ExtElem unit(OddSpace s, Variance v);
  static ExtElem basis_monomial(OddSpace s, Variance v, std::uint32_t mask, const Rat& c = Rat(1));

  const OddSpace& space() const { return space_; }
  Variance variance() const { return var_; }
  const std::map<std::uint32_t, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // homogeneous degree; -1 for 0 or inhomogeneous elements
  int homogeneous_degree() const;

  void add_term(std::uint32_t mask, const Rat& c);
  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem scaled(const Rat& s) const;
  bool operator==(const ExtElem& o) const;

  std::string to_string() const;

 private:
  OddSpace space_;
  Variance var_;
  std::map<std::uint32_t, Rat> terms_;
};

// Exterior product; both factors must live on the same space with the same
// variance. Basis monomials concatenate with the Koszul sign, repeats kill.
ExtElem wedge(const ExtElem& a, const ExtElem& b);

// w -| beta for a polyvector w and a form beta. Single vectors act as
// antiderivations, e_i -| (e^j1 ^ ... ^ e^jq) = sum_t (-1)^(t-1) delta_i^jt (...),
// and multivectors contract outermost-first: (u ^ v) -| beta = u -| (v -| beta).
ExtElem contract_into_form(const ExtElem& w, const ExtElem& beta);

// beta' -| w for a form beta' and a polyvector w, with the graded-symmetric
// sign convention e^j -| e_i = -delta_i^j. (alpha ^ gamma) -| w = alpha -| (gamma -| w).
ExtElem contract_into_poly(const ExtElem& beta_prime, const ExtElem& w);

// Checks (-1)^l (beta' -| w) -| beta == beta' ^ (w -| beta) for a top-degree
// form beta and homogeneous beta' of degree l. Throws if beta is not the top
// degree or beta' is inhomogeneous.
bool top_contraction_identity(const OddSpace& space, const ExtElem& beta, const ExtElem& beta_prime,
                              const ExtElem& w);

}  // namespace hodgekit::exterior
