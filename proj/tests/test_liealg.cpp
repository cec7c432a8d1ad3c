#include <catch_amalgamated.hpp>

#include "thinloop/cartan.hpp"
#include "thinloop/grading.hpp"
#include "thinloop/liealg.hpp"

using namespace thinloop;

namespace {

// [a,b] = c, [a,c] = a, [b,c] = 0: the Jacobi sum on (a,b,c) is c.
StructureTable broken_table() {
  auto f = Field::create(3);
  StructureTable t(f, {"a", "b", "c"});
  t.add_term(0, 1, 2, 1u);
  t.add_term(0, 2, 0, 1u);
  return t;
}

StructureTable abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return StructureTable(Field::create(3), labels);
}

}  // namespace

TEST_CASE("brackets in W(1;1)") {
  const auto w = build_W1n(3, 1);
  // E_-1, E_0, E_1 at indices 0, 1, 2
  const auto e = [&](int i) { return Element::basis(w, std::size_t(i + 1)); };
  CHECK(bracket(e(-1), e(1)) == e(0));
  CHECK(bracket(e(0), e(1)) == e(1));
  CHECK(bracket(e(1), e(1)).is_zero());
  CHECK(bracket(e(1), e(0)) == e(1) * w.field().from_int(-1));
}

TEST_CASE("validate_table") {
  CHECK(validate_table(build_W1n(3, 2)).ok);
  const auto rep = validate_table(broken_table());
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations.front() == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(validate_table(abelian(1)).ok);
}

TEST_CASE("subspaces") {
  const auto w = build_W1n(3, 2);
  const auto s = Subspace::basis_span(w, {0, 2});
  CHECK(s.dim() == 2);
  CHECK(s.contains(Element::basis(w, 2)));
  CHECK_FALSE(s.contains(Element::basis(w, 1)));
  const auto t = Subspace::basis_span(w, {2, 3});
  CHECK(Subspace::sum(s, t).dim() == 3);
  CHECK(Subspace::intersection(s, t).dim() == 1);
  CHECK(Subspace::intersection(s, t).contains(Element::basis(w, 2)));
}

TEST_CASE("generated subalgebras") {
  const auto h = build_H2_phi1(3, 1, 1);
  CHECK(subalgebra_generated(h, {}).dim() == 0);

  // X = x, Y = ybar generate everything
  const CartanParams c{3, 1, 1};
  const auto all = subalgebra_generated(
      h, {Element::basis(h, monomial_index(c, 1, 0)), Element::basis(h, monomial_index(c, 0, c.tau2()))});
  CHECK(all.dim() == 9);
}

TEST_CASE("derived subalgebras") {
  const auto w = build_W1n(2, 2);
  const auto d = derived_subalgebra(Subspace::full(w));
  CHECK(d.dim() == 3);
  CHECK_FALSE(d.contains(Element::basis(w, 3)));  // E_2
  CHECK(derived_subalgebra(Subspace::full(abelian(3))).dim() == 0);
  CHECK(derived_subalgebra(Subspace::full(build_H2_phi1(2, 1, 1))).dim() == 3);
  CHECK_THROWS_AS(derived_subalgebra(Subspace::basis_span(build_W1n(3, 1), {0, 2})), Error);
}

TEST_CASE("centers and quotients") {
  auto f3 = Field::create(3);
  const auto hhat = build_H2_phi1(3, 1, 1, f3, f3->zero());
  const auto z = center(Subspace::full(hhat));
  REQUIRE(z.dim() == 1);
  CHECK(z.contains(Element::basis(hhat, 0)));  // the constant
  const auto q = quotient_by_ideal(hhat, z);
  CHECK(q.dim() == 8);
  CHECK(validate_table(q).ok);

  auto f9 = Field::create(3, 2);
  CHECK(center(Subspace::full(build_H2_phi1(3, 1, 1, f9))).dim() == 0);
  CHECK(center(Subspace::full(abelian(2))).dim() == 2);

  const auto w = build_W1n(3, 1);
  CHECK(quotient_by_ideal(w, Subspace(w)).same_constants(w));
  CHECK_THROWS_AS(quotient_by_ideal(w, Subspace::basis_span(w, {0})), Error);
}

TEST_CASE("centralizers") {
  const auto w = build_W1n(3, 2);
  CHECK(centralizer_in(Subspace::full(w), Subspace(w)).dim() == w.dim());
  // E_-1 commutes only with itself
  const auto c = centralizer_in(Subspace::full(w), Subspace::basis_span(w, {0}));
  CHECK(c.dim() == 1);
}

TEST_CASE("change of basis") {
  const auto w = build_W1n(3, 1);
  std::vector<Coeffs> rows = {Element::basis(w, 0).coeffs(), Element::basis(w, 1).coeffs(),
                              (Element::basis(w, 2) + Element::basis(w, 0)).coeffs()};
  const auto t = change_basis(w, rows, {"a", "b", "c"});
  CHECK(validate_table(t).ok);
  std::vector<Coeffs> dependent = {rows[0], rows[0], rows[1]};
  CHECK_THROWS_AS(change_basis(w, dependent, {"a", "b", "c"}), Error);
  std::vector<Coeffs> not_closed = {rows[0], rows[2]};
  CHECK_THROWS_AS(change_basis(w, not_closed, {"a", "c"}), Error);
}

TEST_CASE("gradings") {
  const auto h = build_H2_phi1(3, 1, 1);
  auto d = grade_mixed({3, 1, 1});
  CHECK(validate_grading(h, d));
  d.degrees[4] = d.normalize(d.degrees[4] + 1);
  CHECK_FALSE(validate_grading(h, d));
  DegreeMap any{5, {1, 2, 3}};
  CHECK(validate_grading(abelian(3), any));
}

TEST_CASE("structure maps") {
  const auto w = build_W1n(3, 2);
  std::vector<Coeffs> id, zero;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    id.push_back(Element::basis(w, i).coeffs());
    zero.push_back(Coeffs(w.dim(), 0));
  }
  CHECK(check_structure_map(w, w, id));
  CHECK_FALSE(check_structure_map(w, w, zero));
}

TEST_CASE("element arithmetic and table mismatch") {
  const auto a = build_W1n(3, 1), b = build_W1n(3, 1);
  const auto u = Element::basis(a, 0), v = Element::basis(b, 1);
  CHECK_THROWS_AS(u + v, Error);
  CHECK((u - u).is_zero());
  CHECK(bracket(u, u).is_zero());
}
