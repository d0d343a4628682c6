#include "hodgekit/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace hodgekit::exterior {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// parity of #{(i,j) : i in a, j in b, i > j}; the Koszul sign of merging
// the sorted word of a in front of the sorted word of b
int koszul_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    int j = std::countr_zero(m);
    inversions += popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

void check_same_space(const ExtElem& a, const ExtElem& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("exterior: space mismatch");
}

// single contraction step shared by both directions: direction index i
// removed from mask with the antiderivation sign, extra factor for the
// covector-into-vector rule
void contract_single(std::map<std::uint32_t, Rat>& acc, int i, const Rat& extra) {
  std::map<std::uint32_t, Rat> out;
  const std::uint32_t bit = 1u << i;
  for (const auto& [mask, c] : acc) {
    if (!(mask & bit)) continue;
    int below = popcount(mask & (bit - 1));
    Rat v = c * extra;
    if (below & 1) v = -v;
    auto [it, fresh] = out.emplace(mask & ~bit, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  acc.swap(out);
}

// nested multi-index contraction: (u ^ v) -| x = u -| (v -| x), so the
// highest index of the sorted word is applied first
ExtElem contract_nested(const ExtElem& left, const ExtElem& right, Variance result_var,
                        const Rat& single_factor) {
  ExtElem out(right.space(), result_var);
  for (const auto& [lmask, lc] : left.terms()) {
    std::map<std::uint32_t, Rat> acc;
    for (const auto& [rmask, rc] : right.terms()) acc.emplace(rmask, rc);
    for (std::uint32_t m = lmask; m;) {
      int i = 31 - std::countl_zero(m);
      contract_single(acc, i, single_factor);
      m &= ~(1u << i);
      if (acc.empty()) break;
    }
    for (const auto& [mask, c] : acc) out.add_term(mask, lc * c);
  }
  return out;
}

}  // namespace

ExtElem ExtElem::unit(OddSpace s, Variance v) {
  ExtElem e(s, v);
  e.add_term(0, Rat(1));
  return e;
}

ExtElem ExtElem::basis_monomial(OddSpace s, Variance v, std::uint32_t mask, const Rat& c) {
  if (mask >> s.dim) throw std::invalid_argument("basis monomial index out of range");
  ExtElem e(s, v);
  e.add_term(mask, c);
  return e;
}

int ExtElem::homogeneous_degree() const {
  int d = -1;
  for (const auto& [mask, c] : terms_) {
    int k = popcount(mask);
    if (d == -1)
      d = k;
    else if (d != k)
      return -1;
  }
  return d;
}

void ExtElem::add_term(std::uint32_t mask, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  check_same_space(*this, o);
  if (var_ != o.var_) throw std::invalid_argument("exterior: variance mismatch");
  ExtElem e = *this;
  for (const auto& [m, c] : o.terms_) e.add_term(m, c);
  return e;
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + o.scaled(Rat(-1)); }

ExtElem ExtElem::scaled(const Rat& s) const {
  ExtElem e(space_, var_);
  if (s == 0) return e;
  for (const auto& [m, c] : terms_) e.add_term(m, c * s);
  return e;
}

bool ExtElem::operator==(const ExtElem& o) const {
  return space_ == o.space_ && var_ == o.var_ && terms_ == o.terms_;
}

std::string ExtElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mask, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    for (std::uint32_t m = mask; m; m &= m - 1) {
      int i = std::countr_zero(m);
      s += (var_ == Variance::form ? "^e" : "_e") + std::to_string(i + 1);
    }
  }
  return s;
}

ExtElem wedge(const ExtElem& a, const ExtElem& b) {
  check_same_space(a, b);
  if (a.variance() != b.variance()) throw std::invalid_argument("wedge: variance mismatch");
  ExtElem out(a.space(), a.variance());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Rat c = ca * cb;
      if (koszul_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

ExtElem contract_into_form(const ExtElem& w, const ExtElem& beta) {
  check_same_space(w, beta);
  if (w.variance() != Variance::polyvector || beta.variance() != Variance::form)
    throw std::invalid_argument("contract_into_form: variance mismatch");
  return contract_nested(w, beta, Variance::form, Rat(1));
}

ExtElem contract_into_poly(const ExtElem& beta_prime, const ExtElem& w) {
  check_same_space(beta_prime, w);
  if (beta_prime.variance() != Variance::form || w.variance() != Variance::polyvector)
    throw std::invalid_argument("contract_into_poly: variance mismatch");
  return contract_nested(beta_prime, w, Variance::polyvector, Rat(-1));
}

bool top_contraction_identity(const OddSpace& space, const ExtElem& beta, const ExtElem& beta_prime,
                              const ExtElem& w) {
  if (beta.homogeneous_degree() != space.dim)
    throw std::invalid_argument("top_contraction_identity: beta must have top degree");
  int l = beta_prime.homogeneous_degree();
  if (l < 0) throw std::invalid_argument("top_contraction_identity: beta' must be homogeneous");
  ExtElem lhs = contract_into_form(contract_into_poly(beta_prime, w), beta);
  if (l & 1) lhs = lhs.scaled(Rat(-1));
  ExtElem rhs = wedge(beta_prime, contract_into_form(w, beta));
  return lhs == rhs;
}

}  // namespace hodgekit::exterior
