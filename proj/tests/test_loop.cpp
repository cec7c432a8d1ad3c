#include <catch_amalgamated.hpp>

#include "thinloop/grading.hpp"
#include "thinloop/loop.hpp"
#include "thinloop/runs.hpp"

using namespace thinloop;

namespace {

FieldElement generator_of(const FieldPtr& f) {
  for (const auto& a : f->elements())
    if (!in_prime_field(a)) return a;
  throw std::logic_error("prime field");
}

RunResult finite(std::uint32_t p, std::uint32_t k, std::uint32_t n2, bool intrinsic = false) {
  RunConfig c;
  c.grading = GradingKind::Finite;
  c.p = p;
  c.n2 = n2;
  c.field = Field::create(p, k);
  c.mu3 = generator_of(c.field);
  c.intrinsic_generators = intrinsic;
  return run(c);
}

}  // namespace

TEST_CASE("loop expansion of the monomial grading") {
  const auto h = build_H2_phi1(3, 1, 1);
  const auto e = loop_expand(h, grade_mixed({3, 1, 1}), 12);
  CHECK(e.dims() == std::vector<std::size_t>{2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1});
  CHECK(e.coincidence);
}

TEST_CASE("loop expansion of an abelian base") {
  const StructureTable t(Field::create(3), {"a", "b"});
  const auto e = loop_expand(t, DegreeMap{2, {1, 1}}, 6);
  CHECK(e.dim(1) == 2);
  for (std::int64_t d = 2; d <= 6; ++d) CHECK(e.dim(d) == 0);
  CHECK_THROWS_AS(parameter_k(e, 3), Error);
}

TEST_CASE("generator choice recovers the eigenvectors") {
  for (auto [p, n2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {3, 2}, {7, 1}}) {
    const auto f = Field::create(p, 2);
    const auto t = params_from_mu3(generator_of(f));
    const auto h = build_H2_phi1(p, 1, n2, f);
    const auto eb = eigenbasis(h, {p, 1, n2}, t);
    const auto e = loop_expand(eb.table, grade_finite(eb), 3 * std::int64_t(detail::ipow(p, n2)));
    const auto g = choose_generators(e, detail::ipow(p, n2));
    const auto X = Element::basis(eb.table, eb.x_index()), Y = Element::basis(eb.table, eb.y_index());
    CHECK(Subspace::span(eb.table, std::vector<Element>{Y}).contains(g.Y));
    CHECK(Subspace::span(eb.table, std::vector<Element>{X}).contains(g.X));
  }
}

TEST_CASE("second-diamond certificate and scale invariance") {
  const RunResult r = finite(5, 2, 1);
  REQUIRE(r.report.c_xy);
  CHECK(r.report.c_xx->is_zero());
  CHECK(r.report.c_yy->is_zero());
  CHECK(*r.report.c_yx == -(*r.report.c_xy * r.report.c_xy->field()->from_int(2)));
  CHECK(r.report.certificate_ok);

  const auto e = loop_expand(*r.table, r.degmap, r.depth);
  const auto& f = r.table->field();
  const auto& X = r.report.generators.X;
  const auto& Y = r.report.generators.Y;
  for (const auto& rec : r.report.diamonds.records) {
    if (rec.degree == 1) continue;
    for (std::uint32_t a = 1; a < f.size(); a += 5)
      for (std::uint32_t b = 2; b < f.size(); b += 7) {
        const auto got = classify_type(e.M(rec.degree - 1).vector(0), X * f.from_code(a), Y * f.from_code(b),
                                       e.M(rec.degree), e.M(rec.degree + 1));
        CHECK(got.type_string() == rec.type_string());
      }
  }
}

TEST_CASE("covering") {
  const auto h = build_H2_phi1(3, 1, 1);
  const CartanParams c{3, 1, 1};
  const auto e = loop_expand(h, grade_mixed(c), 12);
  const auto X = Element::basis(h, monomial_index(c, 1, 0)), Y = Element::basis(h, monomial_index(c, 0, 2));
  const auto res = check_covering(e, X, Y);
  CHECK(res.overall == Verdict::Pass);
  CHECK(res.per_degree.size() == 11);
  CHECK(check_covering(e, X, Y, CoveringMode::Enumeration).per_degree ==
        check_covering(e, X, Y, CoveringMode::Criterion).per_degree);

  // X alone does not cover
  const auto bad = check_covering(e, X, Element::zero(h));
  CHECK(bad.overall == Verdict::Fail);
}

TEST_CASE("eps = 0 with rho = 0 is not thin") {
  // {e[1,0], Y} = 0 = {e[0,-sigma], Y}
  auto f = Field::create(3);
  const CartanParams c{3, 1, 1};
  const auto hhat = build_H2_phi1(3, 1, 1, f, f->zero());
  const auto t = make_toral_params(f->one(), f->zero(), f->zero());
  const auto eb = eigenbasis(hhat, c, t);
  const auto X = Element::basis(eb.table, eb.x_index()), Y = Element::basis(eb.table, eb.y_index());
  CHECK(bracket(Element::basis(eb.table, eb.index(1, f->zero())), Y).is_zero());
  CHECK(bracket(Element::basis(eb.table, eb.index(0, -f->one())), Y).is_zero());
  // the generated loop algebra dies after degree 3, so covering holds only vacuously
  const auto d = grade_finite(eb);
  const auto e = loop_expand(eb.table, d, 18);
  CHECK(e.dims() == std::vector<std::size_t>{2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(e.coincidence);
  CHECK(check_covering(e, X, Y).overall == Verdict::Pass);
  RunResult res;
  res.report = thin_report(eb.table, d, 3, 18, Generators{X, Y});
  judge(res, {});
  CHECK_FALSE(res.pass());
  CHECK(res.first_failure == "L_4 = 0: the loop algebra is finite-dimensional");
}

TEST_CASE("monomial grading reports") {
  for (auto [p, n2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    RunConfig cfg;
    cfg.p = p;
    cfg.n2 = n2;
    const RunResult r = run(cfg);
    INFO("p=" << p << " n2=" << n2);
    CHECK(r.pass());
    CHECK(r.mismatches.empty());
    CHECK(r.report.coincidence);
    const std::int64_t q = r.q, n = r.degmap.modulus;
    for (const auto& rec : r.report.diamonds.records) {
      CHECK((rec.degree - 1) % (q - 1) == 0);
      if (rec.degree == 1) continue;
      const bool minus = ((rec.degree - q) % n + n) % n == 0;
      CHECK(rec.type_string() == (minus ? std::to_string(p - 1) : std::string("inf")));
    }
  }
}

TEST_CASE("p = 3 monomial grading to degree 18") {
  RunConfig cfg;
  cfg.depth = 18;
  const RunResult r = run(cfg);
  std::vector<std::string> got;
  for (const auto& rec : r.report.diamonds.records) got.push_back(std::to_string(rec.degree) + ":" + rec.type_string());
  CHECK(got == std::vector<std::string>{"1:-", "3:2", "5:inf", "7:inf", "9:2", "11:inf", "13:inf", "15:2", "17:inf"});
  CHECK(r.report.k->k == 5);
}

TEST_CASE("eigenvector grading reports") {
  for (auto [p, n2] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    const RunResult r = finite(p, 2, n2);
    INFO("p=" << p << " n2=" << n2);
    CHECK(r.pass());
    const FieldElement s = r.params->sigma / r.params->rho;
    const auto& f = *s.field();
    for (const auto& rec : r.report.diamonds.records) {
      CHECK(rec.degree == (rec.ordinal - 1) * (r.q - 1) + 1);
      if (rec.ordinal < 2) continue;
      CHECK(rec.kind == DiamondKind::Genuine);
      CHECK(*rec.type == -f.one() + s * f.from_int(rec.ordinal - 2));
    }
    if (r.q > 3) {
      const RunResult ri = finite(p, 2, n2, true);
      CHECK(ri.pass());
      CHECK(ri.report.generators_intrinsic);
    }
  }
}

TEST_CASE("characteristic two") {
  RunConfig cfg;
  cfg.p = 2;
  cfg.n2 = 2;
  const RunResult m = run(cfg);
  CHECK(m.pass());
  for (const auto& rec : m.report.diamonds.records) {
    if (rec.degree == 1) continue;
    if ((rec.degree - 4) % 6 == 0) {
      CHECK(rec.kind == DiamondKind::Fake1);
    } else {
      CHECK(rec.type_string() == "inf");
    }
  }
  CHECK(m.report.k->k == 4);
  CHECK(m.report.dims[3] == 1);

  const RunResult f = finite(2, 2, 2);
  CHECK(f.pass());
  const auto mu3 = third_type(*f.params);
  for (const auto& rec : f.report.diamonds.records) {
    if (rec.degree == 1) continue;
    if (rec.ordinal % 2 == 0) {
      CHECK(rec.kind == DiamondKind::Fake1);
    } else {
      CHECK(*rec.type == mu3);
    }
  }
}

TEST_CASE("degenerations") {
  for (std::uint32_t p : {3u, 5u}) {
    RunConfig s0;
    s0.grading = GradingKind::SigmaZero;
    s0.p = p;
    const RunResult r = run(s0);
    CHECK(r.pass());
    CHECK(*r.generated_dim == p);
    for (const auto& rec : r.report.diamonds.records)
      if (rec.degree > 1) CHECK(rec.type_string() == std::to_string(p - 1));

    for (std::uint32_t ratio = 1; ratio + 1 < p; ++ratio) {
      RunConfig e0;
      e0.grading = GradingKind::EpsZero;
      e0.p = p;
      e0.ratio = ratio;
      const RunResult re = run(e0);
      INFO("p=" << p << " ratio=" << ratio);
      CHECK(re.pass());
      CHECK(*re.center_dim == 1);
    }
  }
  // p = 3, ratio 1: -1, 0, 1, -1, ... at ordinals 2, 3, 4, 5
  RunConfig e0;
  e0.grading = GradingKind::EpsZero;
  const RunResult r = run(e0);
  std::vector<std::string> kinds;
  for (std::size_t i = 1; i < 5; ++i) kinds.push_back(to_string(r.report.diamonds.records[i].kind));
  CHECK(kinds == std::vector<std::string>{"genuine", "fake0", "fake1", "genuine"});
}

TEST_CASE("centralizer chains and parameter k") {
  const RunResult r5 = finite(5, 2, 1);
  CHECK(r5.report.chains.first_in_hypotheses);
  CHECK(r5.report.chains.first_pass);
  const RunResult r7 = finite(7, 2, 1);
  CHECK(r7.report.chains.second_in_hypotheses);
  CHECK(r7.report.chains.second_pass);
  const RunResult r3 = finite(3, 2, 2);
  CHECK_FALSE(r3.report.chains.proviso.empty());
  CHECK(r3.report.k->k == 9);
  CHECK(r3.report.dims[8] == 2);

  // C_{M_1}(M_{q-1}) is zero
  const auto e = loop_expand(*r5.table, r5.degmap, r5.depth);
  CHECK(centralizer_in(e.M(1), e.M(4)).dim() == 0);
  CHECK(centralizer_in(e.M(1), Subspace(*r5.table)).dim() == 2);
}

TEST_CASE("run configuration errors") {
  RunConfig c;
  c.p = 4;
  CHECK_THROWS_AS(run(c), Error);
  c.p = 2;
  c.n2 = 1;
  CHECK_THROWS_AS(run(c), Error);
  c = RunConfig{};
  c.grading = GradingKind::EpsZero;
  c.ratio = 2;
  CHECK_THROWS_AS(run(c), Error);
  c = RunConfig{};
  c.grading = GradingKind::Finite;
  CHECK_THROWS_AS(run(c), Error);
  CHECK_THROWS_AS(parse_grading("cyclic"), Error);
}
