#include <catch_amalgamated.hpp>

#include "thinloop/cartan.hpp"

using namespace thinloop;

namespace {

// Pascal's triangle mod p, independent of Lucas.
std::uint32_t pascal(std::int64_t a, std::int64_t b, std::uint32_t p) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::vector<std::uint32_t> row{1};
  for (std::int64_t n = 1; n <= a; ++n) {
    std::vector<std::uint32_t> next(n + 1, 1);
    for (std::int64_t k = 1; k < n; ++k) next[k] = (row[k - 1] + row[k]) % p;
    row = std::move(next);
  }
  return row[b];
}

std::size_t idx(const CartanParams& c, std::int64_t i, std::int64_t j) { return monomial_index(c, i, j); }

}  // namespace

TEST_CASE("binomials mod p") {
  CHECK(binom_mod_p(7, 3, 5) == 0);
  CHECK(binom_mod_p(9, 0, 5) == 1);
  CHECK(binom_mod_p(1, -1, 3) == 0);
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::int64_t a = 0; a < 60; ++a)
      for (std::int64_t b = 0; b <= a; ++b) CHECK(binom_mod_p(a, b, p) == pascal(a, b, p));
}

TEST_CASE("Poisson coefficients") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(coeff_N(2, 0, 0, 1, p) == p - 1);
  for (std::int64_t j = 0; j < 5; ++j)
    for (std::int64_t l = 0; l < 5; ++l) {
      CHECK(coeff_N(0, j, 0, l, 5) == 0);
      // x^(-1) vanishes; one x factor leaves a single y binomial
      CHECK(coeff_Nprime(0, j, 0, l, 5) == 0);
      const std::int64_t jl = j + l - 1;
      CHECK(coeff_Nprime(1, j, 0, l, 5) == (5 - pascal(jl, j, 5)) % 5);
      CHECK(coeff_Nprime(0, j, 1, l, 5) == pascal(jl, l, 5));
    }
}

TEST_CASE("Poisson bracket matches the divided-power oracle") {
  for (auto [p, n1, n2] : std::vector<std::array<std::uint32_t, 3>>{{3, 1, 1}, {3, 1, 2}, {5, 1, 1}, {2, 1, 2}}) {
    const CartanParams c{p, n1, n2};
    const auto f = Field::create(p);
    const DividedPowers dp(*f, c);
    const auto t = build_H2_second_derived(p, n1, n2, f);
    for (std::size_t a = 0; a < t.dim(); ++a)
      for (std::size_t b = a + 1; b < t.dim(); ++b) {
        const auto& la = t.label(a);
        const auto& lb = t.label(b);
        long long i, j, k, l;
        REQUIRE(std::sscanf(la.c_str(), "x%lldy%lld", &i, &j) == 2);
        REQUIRE(std::sscanf(lb.c_str(), "x%lldy%lld", &k, &l) == 2);
        const auto br = dp.poisson(dp.monomial(i, j), dp.monomial(k, l));
        const auto got = t.basis_bracket(a, b);
        for (std::size_t m = 0; m < t.dim(); ++m) {
          long long u, v;
          std::sscanf(t.label(m).c_str(), "x%lldy%lld", &u, &v);
          CHECK(got[m] == br[idx(c, u, v)]);
        }
      }
  }
}

TEST_CASE("Zassenhaus algebra") {
  const auto w = build_W1n(3, 1);
  CHECK(w.dim() == 3);
  CHECK(w.basis_bracket(0, 2) == Coeffs{0, 1, 0});
  CHECK(w.basis_bracket(1, 2) == Coeffs{0, 0, 1});
  CHECK(build_W1n(2, 2).dim() == 4);
  CHECK(build_W1n_derived(2, 2).dim() == 3);
  CHECK(validate_table(build_W1n(3, 2)).ok);
  CHECK_THROWS_AS(build_W1n(4, 1), Error);
}

TEST_CASE("group basis of W(1;n)") {
  const auto f3 = Field::create(3);
  const auto z = zassenhaus_group_basis(3, 1, f3);
  // [e_1, e_2] = e_0
  CHECK(z.table.basis_bracket(1, 2) == Coeffs{1, 0, 0});
  CHECK(z.table.basis_bracket(1, 1) == Coeffs{0, 0, 0});
  const auto conj = change_basis(build_W1n(3, 1, f3), z.transition, z.table.labels());
  CHECK(conj.same_constants(z.table));
  CHECK_THROWS_AS(zassenhaus_group_basis(3, 2, f3), Error);
}

TEST_CASE("Hamiltonian algebras") {
  CHECK(build_H2_second_derived(3, 1, 1).dim() == 7);
  CHECK(build_H2_second_derived(5, 1, 1).dim() == 23);
  CHECK(validate_table(build_H2_second_derived(3, 1, 2)).ok);
  CHECK(build_H2_second_derived(3, 1, 2).dim() == 25);
  CHECK(build_H2_phi_tau_derived(2, 1, 1).dim() == 3);
  CHECK(validate_table(build_H2_phi_tau_derived(3, 1, 1)).ok);
  CHECK(build_H2_phi_tau_derived(3, 1, 1).dim() == 8);
}

TEST_CASE("H(2;n;Phi(1)) special brackets") {
  const CartanParams c{3, 1, 1};
  const auto f = Field::create(3);
  const auto h = build_H2_phi1(3, 1, 1, f);
  CHECK(h.dim() == 9);
  // {y, ybar} = 2 xbar ybar
  Coeffs want(9, 0);
  want[idx(c, 2, 2)] = 2;
  CHECK(h.basis_bracket(idx(c, 0, 1), idx(c, 0, 2)) == want);
  // {1, ybar} = -xbar y
  want.assign(9, 0);
  want[idx(c, 2, 1)] = 2;
  CHECK(h.basis_bracket(idx(c, 0, 0), idx(c, 0, 2)) == want);
  // every bracket agrees with the divided-power oracle
  const DividedPowers dp(*f, c);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b) {
      const auto br = dp.poisson_phi1(dp.monomial(a / 3, a % 3), dp.monomial(b / 3, b % 3), f->one());
      CHECK(h.basis_bracket(a, b) == br);
    }
  const auto hhat = build_H2_phi1(3, 1, 1, f, f->zero());
  CHECK(center(Subspace::full(hhat)).dim() == 1);
}

TEST_CASE("Albert-Frank algebras") {
  const auto f9 = Field::create(3, 2);
  const auto g = f9->elements();
  const std::vector<FieldElement> zero(g.size(), f9->zero());
  const auto af = build_albert_frank(f9, g, zero);
  const auto z = zassenhaus_group_basis(3, 2, f9);
  CHECK(af.same_constants(z.table));

  std::vector<FieldElement> th;
  for (const auto& a : g) th.push_back(frobenius(a) - a);
  CHECK(validate_table(build_albert_frank(f9, g, th)).ok);

  std::vector<FieldElement> sq;
  for (const auto& a : g) sq.push_back(a * a);
  CHECK_THROWS_AS(build_albert_frank(f9, g, sq), Error);
  std::vector<FieldElement> partial(g.begin(), g.begin() + 4);
  CHECK_THROWS_AS(build_albert_frank(f9, partial, std::vector<FieldElement>(4, f9->zero())), Error);
}
