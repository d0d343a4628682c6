#include "hodgekit/exterior.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"

using namespace hodgekit;
using namespace hodgekit::exterior;

namespace {

// Independent slow oracle on index sequences instead of bitmasks. The rules
// are expanded literally, one vector at a time, with bubble-sort signs.
using Word = std::vector<int>;
using SeqElem = std::vector<std::pair<Word, Rat>>;

void seq_add(SeqElem& e, Word w, Rat c) {
  // sort with sign, drop repeats
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      std::swap(w[j], w[j - 1]);
      c = -c;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return;
  for (auto& [wi, ci] : e)
    if (wi == w) {
      ci += c;
      return;
    }
  if (c != 0) e.push_back({w, c});
}

SeqElem seq_normalize(const SeqElem& e) {
  SeqElem out;
  for (const auto& [w, c] : e) seq_add(out, w, c);
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& t) { return t.second == 0; }),
            out.end());
  std::sort(out.begin(), out.end());
  return out;
}

SeqElem seq_wedge(const SeqElem& a, const SeqElem& b) {
  SeqElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      seq_add(out, w, ca * cb);
    }
  return seq_normalize(out);
}

// single vector e_i into a form word: sum_t (-1)^(t-1) delta_i^{j_t} (drop slot t)
SeqElem seq_contract_one(int i, const SeqElem& beta, const Rat& extra) {
  SeqElem out;
  for (const auto& [w, c] : beta) {
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t] != i) continue;
      Word rest;
      for (std::size_t s = 0; s < w.size(); ++s)
        if (s != t) rest.push_back(w[s]);
      Rat v = c * extra;
      if (t % 2 == 1) v = -v;
      seq_add(out, rest, v);
    }
  }
  return seq_normalize(out);
}

// (u ^ v) -| beta = u -| (v -| beta): expand the left word from its last letter
SeqElem seq_contract(const Word& left, SeqElem right, const Rat& extra) {
  for (auto it = left.rbegin(); it != left.rend(); ++it) right = seq_contract_one(*it, right, extra);
  return right;
}

SeqElem from_elem(const ExtElem& e) {
  SeqElem out;
  for (const auto& [mask, c] : e.terms()) {
    Word w;
    for (int i = 0; i < 30; ++i)
      if (mask & (1u << i)) w.push_back(i + 1);
    out.push_back({w, c});
  }
  return seq_normalize(out);
}

ExtElem to_elem(const SeqElem& e, OddSpace s, Variance v) {
  ExtElem out(s, v);
  for (const auto& [w, c] : e) {
    std::uint32_t mask = 0;
    for (int i : w) mask |= 1u << (i - 1);
    out.add_term(mask, c);
  }
  return out;
}

ExtElem mono(OddSpace s, Variance v, std::initializer_list<int> idx) {
  std::uint32_t mask = 0;
  for (int i : idx) mask |= 1u << (i - 1);
  return ExtElem::basis_monomial(s, v, mask);
}

}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("wedge basics") {
    OddSpace s(4);
    auto f = [&](std::initializer_list<int> idx) { return mono(s, Variance::form, idx); };
    CHECK(wedge(f({1}), f({1})).is_zero());
    CHECK(wedge(f({2}), f({1})) == f({1, 2}).scaled(rat(-1)));
    CHECK(wedge(f({1, 2}), f({3, 4})) == f({1, 2, 3, 4}));
  }

  TEST_CASE("contraction single rules") {
    OddSpace s(2);
    auto e1 = mono(s, Variance::polyvector, {1});
    auto e12f = mono(s, Variance::form, {1, 2});
    CHECK(contract_into_form(e1, e12f) == mono(s, Variance::form, {2}));
    CHECK(contract_into_form(e1, ExtElem::unit(s, Variance::form)).is_zero());

    // (e_2 ^ e_1) -| (e^1 ^ e^2) = 1, expanded by the nested single-vector rule
    auto w = wedge(mono(s, Variance::polyvector, {2}), mono(s, Variance::polyvector, {1}));
    CHECK(contract_into_form(w, e12f) == ExtElem::unit(s, Variance::form));

    // e^2 -| (e_2 ^ e_1) = -e_1
    auto p21 = wedge(mono(s, Variance::polyvector, {2}), mono(s, Variance::polyvector, {1}));
    CHECK(contract_into_poly(mono(s, Variance::form, {2}), p21) ==
          mono(s, Variance::polyvector, {1}).scaled(rat(-1)));
    // e^1 -| e_1 = -1, the graded-symmetry sign
    CHECK(contract_into_poly(mono(s, Variance::form, {1}), mono(s, Variance::polyvector, {1})) ==
          ExtElem::unit(s, Variance::polyvector).scaled(rat(-1)));
    // 1 -| w = w
    CHECK(contract_into_poly(ExtElem::unit(s, Variance::form), p21) == p21);
  }

  TEST_CASE("degree-one graded symmetry") {
    OddSpace s(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        auto lhs = contract_into_form(mono(s, Variance::polyvector, {i}), mono(s, Variance::form, {j}));
        auto rhs = contract_into_poly(mono(s, Variance::form, {j}), mono(s, Variance::polyvector, {i}));
        CHECK(lhs == to_elem(from_elem(rhs), s, Variance::form).scaled(rat(-1)));
      }
  }

  TEST_CASE("contraction agrees with the sequence oracle") {
    for (int n = 1; n <= 4; ++n) {
      OddSpace s(n);
      for (std::uint32_t wm = 0; wm < (1u << n); ++wm)
        for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
          auto w = ExtElem::basis_monomial(s, Variance::polyvector, wm);
          auto beta = ExtElem::basis_monomial(s, Variance::form, bm);
          auto got = contract_into_form(w, beta);
          Word lw;
          for (int i = 0; i < n; ++i)
            if (wm & (1u << i)) lw.push_back(i + 1);
          auto expect = seq_contract(lw, from_elem(beta), rat(1));
          CHECK(from_elem(got) == expect);

          auto bp = ExtElem::basis_monomial(s, Variance::form, wm);
          auto v = ExtElem::basis_monomial(s, Variance::polyvector, bm);
          auto got2 = contract_into_poly(bp, v);
          auto expect2 = seq_contract(lw, from_elem(v), rat(-1));
          CHECK(from_elem(got2) == expect2);
        }
    }
  }

  TEST_CASE("worked top-degree instance n=2") {
    OddSpace s(2);
    auto beta = mono(s, Variance::form, {1, 2});
    auto bp = mono(s, Variance::form, {2});
    auto w = wedge(mono(s, Variance::polyvector, {2}), mono(s, Variance::polyvector, {1}));
    CHECK(top_contraction_identity(s, beta, bp, w));
    // both sides equal e^2
    auto lhs = contract_into_form(contract_into_poly(bp, w), beta).scaled(rat(-1));
    CHECK(lhs == mono(s, Variance::form, {2}));
    CHECK(wedge(bp, contract_into_form(w, beta)) == mono(s, Variance::form, {2}));
  }

  TEST_CASE("degree-zero beta' reduces to w -| beta") {
    OddSpace s(3);
    auto beta = mono(s, Variance::form, {1, 2, 3});
    auto one = ExtElem::unit(s, Variance::form);
    for (std::uint32_t wm = 0; wm < 8; ++wm) {
      auto w = ExtElem::basis_monomial(s, Variance::polyvector, wm);
      CHECK(top_contraction_identity(s, beta, one, w));
    }
  }

  TEST_CASE("top contraction identity exhaustive n<=4") {
    for (int n = 1; n <= 4; ++n) {
      OddSpace s(n);
      auto beta = ExtElem::basis_monomial(s, Variance::form, (1u << n) - 1);
      for (std::uint32_t bp = 0; bp < (1u << n); ++bp)
        for (std::uint32_t wm = 0; wm < (1u << n); ++wm)
          CHECK(top_contraction_identity(s, beta, ExtElem::basis_monomial(s, Variance::form, bp),
                                         ExtElem::basis_monomial(s, Variance::polyvector, wm)));
    }
  }

  TEST_CASE("wedge associative and graded-commutative, exhaustive n<=5") {
    for (int n = 4; n <= 5; ++n) {
      OddSpace s(n);
      for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
          auto ea = ExtElem::basis_monomial(s, Variance::form, a);
          auto eb = ExtElem::basis_monomial(s, Variance::form, b);
          int pq = std::popcount(a) * std::popcount(b);
          auto ab = wedge(ea, eb);
          auto ba = wedge(eb, ea);
          CHECK(ab == ((pq % 2) ? ba.scaled(rat(-1)) : ba));
          for (std::uint32_t c = 0; c < (1u << n); ++c) {
            auto ec = ExtElem::basis_monomial(s, Variance::form, c);
            CHECK(wedge(ab, ec) == wedge(ea, wedge(eb, ec)));
          }
        }
    }
  }

  TEST_CASE("module action of the wedge on contractions, n<=4") {
    for (int n = 2; n <= 4; ++n) {
      OddSpace s(n);
      for (std::uint32_t u = 0; u < (1u << n); ++u)
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
          if (u & v) continue;
          auto eu = ExtElem::basis_monomial(s, Variance::polyvector, u);
          auto ev = ExtElem::basis_monomial(s, Variance::polyvector, v);
          auto uv = wedge(eu, ev);
          for (std::uint32_t b = 0; b < (1u << n); ++b) {
            auto beta = ExtElem::basis_monomial(s, Variance::form, b);
            CHECK(contract_into_form(uv, beta) ==
                  contract_into_form(eu, contract_into_form(ev, beta)));
          }
        }
    }
  }

  TEST_CASE("errors") {
    OddSpace s2(2), s3(3);
    auto a = ExtElem::unit(s2, Variance::form);
    auto b = ExtElem::unit(s3, Variance::form);
    CHECK_THROWS_AS((void)wedge(a, b), std::invalid_argument);
    CHECK_THROWS_AS((void)wedge(a, ExtElem::unit(s2, Variance::polyvector)), std::invalid_argument);
    CHECK_THROWS_AS((void)contract_into_form(a, a), std::invalid_argument);
    // beta not of top degree
    CHECK_THROWS_AS((void)top_contraction_identity(s2, mono(s2, Variance::form, {1}),
                                                   ExtElem::unit(s2, Variance::form),
                                                   ExtElem::unit(s2, Variance::polyvector)),
                    std::invalid_argument);
  }
}
