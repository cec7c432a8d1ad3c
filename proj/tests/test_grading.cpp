#include <catch_amalgamated.hpp>

#include "thinloop/grading.hpp"

using namespace thinloop;

namespace {

std::vector<FieldElement> outside_prime(const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& a : f.elements())
    if (!in_prime_field(a)) out.push_back(a);
  return out;
}

struct Case {
  std::uint32_t p, k, n2;
};

const std::vector<Case> kCases = {{3, 2, 1}, {5, 2, 1}, {3, 2, 2}, {2, 2, 2}, {7, 2, 1}};

}  // namespace

TEST_CASE("monomial grading") {
  const CartanParams c{3, 1, 1};
  const auto d = grade_mixed(c);
  CHECK(d.modulus == 6);
  CHECK(d.degree(monomial_index(c, 1, 0)) == 1);
  CHECK(d.degree(monomial_index(c, 0, 2)) == 1);
  std::vector<std::size_t> dims;
  for (std::int64_t k = 1; k <= 6; ++k) dims.push_back(d.indices_of_degree(k).size());
  CHECK(dims == std::vector<std::size_t>{2, 1, 2, 1, 2, 1});
  for (auto [p, n1, n2] : std::vector<std::array<std::uint32_t, 3>>{{3, 1, 1}, {5, 1, 1}, {3, 1, 2}, {3, 2, 1}, {2, 1, 2}})
    CHECK(validate_grading(build_H2_phi1(p, n1, n2), grade_mixed({p, n1, n2})));
}

TEST_CASE("toral parameters") {
  auto f9 = Field::create(3, 2);
  CHECK_THROWS_AS(params_from_mu3(f9->one()), Error);
  CHECK_THROWS_AS(params_from_mu3(-f9->one()), Error);
  try {
    params_from_mu3(f9->one());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Mu3InPrimeField);
  }
  // Z^3 - Z - 1 splits over F_27
  auto f27 = Field::create(3, 3);
  CHECK(rho_roots(f27->one(), f27->one()).size() == 3);
  const auto t = make_toral_params(f27->one(), f27->one());
  CHECK(t.pi == f27->one());
  CHECK((t.rho.pow(3) - t.rho - f27->one()).is_zero());
  CHECK_THROWS_AS(make_toral_params(f27->one(), f27->one(), f27->one()), Error);
  // and has no root in F_3 or F_9
  CHECK(rho_roots(f9->one(), f9->one()).empty());
  auto f3 = Field::create(3);
  try {
    make_toral_params(f3->one(), f3->one());
    FAIL("expected NoRootInField");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInField);
  }
}

TEST_CASE("third-type round trip") {
  for (const auto& cs : kCases) {
    auto f = Field::create(cs.p, cs.k);
    for (const auto& mu : outside_prime(*f)) {
      const auto t = params_from_mu3(mu);
      CHECK(third_type(t) == mu);
      CHECK((t.rho.pow(cs.p) - t.pi * t.rho - f->one()).is_zero());
      CHECK(t.pi == t.sigma.pow(cs.p - 1));
    }
  }
}

TEST_CASE("toral element") {
  const CartanParams c{3, 1, 1};
  auto f27 = Field::create(3, 3);
  const auto h = build_H2_phi1(3, 1, 1, f27);
  const auto e1 = toral_element(h, c, make_toral_params(f27->one(), f27->one()));
  Coeffs want(9, 0);
  want[monomial_index(c, 0, 1)] = 1;
  want[monomial_index(c, 2, 1)] = 1;
  CHECK(e1.coeffs() == want);
  const auto e0 = toral_element(h, c, make_toral_params(f27->zero(), f27->one(), f27->one()));
  want[monomial_index(c, 2, 1)] = 0;
  CHECK(e0.coeffs() == want);
}

TEST_CASE("eigenbasis") {
  for (const auto& cs : kCases) {
    auto f = Field::create(cs.p, cs.k);
    const CartanParams c{cs.p, 1, cs.n2};
    const auto h = build_H2_phi1(cs.p, 1, cs.n2, f);
    for (const auto& mu : outside_prime(*f)) {
      const auto t = params_from_mu3(mu);
      const auto eb = eigenbasis(h, c, t);
      CHECK(eb.vectors.size() == c.full_dim());
      CHECK(eigen_equation_holds(h, eb));
      CHECK(eigen_bracket_check(eb));
      CHECK(validate_table(eb.table).ok);

      // X = sum (rho + sigma)^i x^(i)
      const auto a = t.rho + t.sigma;
      FieldElement pw = f->one();
      Coeffs x(h.dim(), 0);
      for (std::uint32_t i = 0; i < cs.p; ++i, pw *= a) x[monomial_index(c, i, 0)] = pw.code();
      CHECK(eb.vectors[eb.x_index()] == x);

      // eigenvalues on each slice are (1-j) rho + F_p sigma
      for (std::int64_t j = 0; j < std::int64_t(c.q()); ++j) {
        std::vector<FieldElement> want, got;
        for (std::uint32_t s = 0; s < cs.p; ++s) want.push_back(t.rho * f->from_int(1 - j) + t.sigma * f->from_int(s));
        for (const auto& info : eb.info)
          if (info.r == 1 - j) got.push_back(info.alpha);
        auto key = [](const FieldElement& u, const FieldElement& v) { return u.code() < v.code(); };
        std::sort(want.begin(), want.end(), key);
        std::sort(got.begin(), got.end(), key);
        CHECK(want == got);
      }

      // {e[1-j,alpha], X} = (rho + sigma) e[2-j, alpha + rho + sigma] when 2 - j <= 1
      const Element X = Element::basis(eb.table, eb.x_index());
      const Element Y = Element::basis(eb.table, eb.y_index());
      for (std::size_t v = 0; v < eb.info.size(); ++v) {
        const auto& in = eb.info[v];
        const std::int64_t j = 1 - in.r;
        const Element e = Element::basis(eb.table, v);
        if (j >= 1) {
          const auto target = eb.index(2 - j, in.alpha + a);
          CHECK(bracket(e, X) == Element::basis(eb.table, target) * a);
        }
        if (j >= 2) CHECK(bracket(e, Y).is_zero());
        if (j == 1) {
          const auto b = in.alpha + t.rho * f->from_int(2) + t.sigma;
          const auto target = eb.index(2 - std::int64_t(c.q()), b);
          CHECK(bracket(e, Y) == Element::basis(eb.table, target) * b);
        }
      }

      const auto d = grade_finite(eb);
      CHECK(grade_finite_shift(eb) == 0);
      CHECK(d.modulus == std::int64_t((c.q() - 1) * cs.p));
      CHECK(d.degree(eb.x_index()) == 1);
      CHECK(d.degree(eb.y_index()) == 1);
      CHECK(validate_grading(eb.table, d));
    }
  }
}

TEST_CASE("sigma = 0 and eps = 0 eigenbases") {
  auto f3 = Field::create(3);
  const CartanParams c{3, 1, 1};
  const auto h = build_H2_phi1(3, 1, 1, f3);
  const auto t0 = make_toral_params(f3->zero(), f3->one(), f3->one());
  const auto eb = eigenbasis(h, c, t0);
  CHECK(eb.partial);
  CHECK(eb.vectors.size() == 3);
  CHECK(eigen_equation_holds(h, eb));
  CHECK(validate_grading(eb.table, grade_sigma_zero(eb)));
  CHECK_THROWS_AS(grade_finite(eb), Error);
  const auto gen = subalgebra_generated(h, {Element(h, eb.vectors[eb.x_index()]), Element(h, eb.vectors[eb.y_index()])});
  CHECK(gen.dim() == 3);

  const auto hhat = build_H2_phi1(3, 1, 1, f3, f3->zero());
  const auto te = make_toral_params(f3->one(), f3->zero(), f3->one());
  const auto ebe = eigenbasis(hhat, c, te);
  CHECK(eigen_equation_holds(hhat, ebe));
  CHECK(eigen_bracket_check(ebe));
  // e[1,0] is the constant and spans the center
  const auto z = center(Subspace::full(hhat));
  REQUIRE(z.dim() == 1);
  const auto e10 = ebe.index(1, f3->zero());
  CHECK(z.contains(Element(hhat, ebe.vectors[e10])));
  CHECK(ebe.vectors[e10] == Element::basis(hhat, 0).coeffs());
}
