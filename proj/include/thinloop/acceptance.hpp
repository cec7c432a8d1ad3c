#pragma once

// The acceptance matrix: named rows grouped into ten criteria. Shared by the
// acceptance test binary and the `suite` command.

#include <algorithm>
#include <array>
#include <cstdio>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thinloop/cartan.hpp"
#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/grading.hpp"
#include "thinloop/liealg.hpp"
#include "thinloop/loop.hpp"
#include "thinloop/runs.hpp"

namespace thinloop {

struct RowOutcome {
  bool pass = true;
  std::string detail;
};

struct SuiteRow {
  std::string name;
  int criterion = 0;
  std::vector<std::string> tags;
  double time_limit = 0;  // seconds, 0 = none
  std::function<RowOutcome()> fn;
};

struct RowResult {
  std::string name;
  int criterion = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  const char* title;
  double total_limit;  // seconds, 0 = none
};

inline const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "dimension formulas", 0},
      {2, "Jacobi identity on every constructed table", 30},
      {3, "basis transition for W(1;n)", 0},
      {4, "monomial grading: covering and diamond pattern", 0},
      {5, "eigenvector grading: covering, progression, certificate, chains", 60},
      {6, "third-diamond type round trip", 0},
      {7, "degenerations sigma = 0 and eps = 0", 0},
      {8, "parameter k", 0},
      {9, "characteristic-two isomorphism", 0},
      {10, "property suites", 0},
  };
  return list;
}

namespace detail {

// Collects failures; the outcome passes when nothing was recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  RowOutcome outcome(const std::string& summary = {}) const {
    RowOutcome o;
    o.pass = failed_ == 0;
    std::ostringstream s;
    if (o.pass) {
      s << checks_ << " checks";
      if (!summary.empty()) s << "; " << summary;
    } else {
      s << failed_ << "/" << checks_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline std::string triple(std::uint32_t p, std::uint32_t n1, std::uint32_t n2) {
  return "(" + std::to_string(p) + "," + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

// (p, n1, n2) with n1 + n2 <= 3 and at most 125 monomials.
inline std::vector<std::array<std::uint32_t, 3>> small_hamiltonian_params() {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n1 = 1; n1 <= 2; ++n1)
      for (std::uint32_t n2 = 1; n1 + n2 <= 3; ++n2)
        if (ipow(p, n1 + n2) <= 125) out.push_back({p, n1, n2});
  return out;
}

inline std::vector<FieldElement> outside_prime_field(const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& a : f.elements())
    if (!in_prime_field(a)) out.push_back(a);
  return out;
}

inline RunResult finite_run(const FieldPtr& f, std::uint32_t n2, const FieldElement& mu3) {
  RunConfig c;
  c.grading = GradingKind::Finite;
  c.p = f->p();
  c.n2 = n2;
  c.field = f;
  c.mu3 = mu3;
  return run(c);
}

inline RunResult mixed_run(std::uint32_t p, std::uint32_t n1, std::uint32_t n2) {
  RunConfig c;
  c.p = p;
  c.n1 = n1;
  c.n2 = n2;
  return run(c);
}

// ---- criterion 1 ---------------------------------------------------------

inline RowOutcome dims_W() {
  Checker ck;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}})
    ck.expect(build_W1n(p, n).dim() == ipow(p, n), "W(1;" + std::to_string(n) + ") p=" + std::to_string(p));
  return ck.outcome();
}

inline RowOutcome dims_hamiltonian(int family) {
  Checker ck;
  for (auto [p, n1, n2] : small_hamiltonian_params()) {
    const std::size_t full = ipow(p, n1 + n2);
    std::size_t got = 0, want = 0;
    if (family == 0) {
      got = build_H2_second_derived(p, n1, n2).dim();
      want = full - 2;
    } else if (family == 1) {
      got = build_H2_phi_tau_derived(p, n1, n2).dim();
      want = full - 1;
    } else {
      got = build_H2_phi1(p, n1, n2).dim();
      want = full;
    }
    ck.expect(got == want, triple(p, n1, n2) + " dim " + std::to_string(got) + " != " + std::to_string(want));
  }
  return ck.outcome();
}

// ---- criterion 2 ---------------------------------------------------------

inline void expect_jacobi(Checker& ck, const StructureTable& t, const std::string& name) {
  if (t.dim() > 125) return;
  const auto rep = validate_table(t);
  ck.expect(rep.ok && rep.encoding_ok, name + " (dim " + std::to_string(t.dim()) + ")");
}

inline RowOutcome jacobi_W() {
  Checker ck;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    expect_jacobi(ck, build_W1n(p, n), "W p=" + std::to_string(p) + " n=" + std::to_string(n));
    expect_jacobi(ck, build_W1n_derived(p, n), "W' p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto z = zassenhaus_group_basis(p, n, Field::create(p, n));
    expect_jacobi(ck, z.table, "Zassenhaus p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
  return ck.outcome();
}

inline RowOutcome jacobi_hamiltonian() {
  Checker ck;
  for (auto [p, n1, n2] : small_hamiltonian_params()) {
    const auto name = triple(p, n1, n2);
    expect_jacobi(ck, build_H2_second_derived(p, n1, n2), "H2'' " + name);
    expect_jacobi(ck, build_H2_phi_tau_derived(p, n1, n2), "Htau " + name);
    expect_jacobi(ck, build_H2_phi1(p, n1, n2), "Hphi1 " + name);
    const auto f = Field::create(p);
    expect_jacobi(ck, build_H2_phi1(p, n1, n2, f, f->zero()), "Hphi1 eps=0 " + name);
  }
  return ck.outcome();
}

inline RowOutcome jacobi_eigen_and_albert_frank() {
  Checker ck;
  for (auto [p, k, n2] : std::vector<std::array<std::uint32_t, 3>>{{3, 2, 1}, {5, 2, 1}, {3, 2, 2}, {2, 2, 2}}) {
    const auto f = Field::create(p, k);
    const auto mu = outside_prime_field(*f).front();
    const auto r = finite_run(f, n2, mu);
    expect_jacobi(ck, *r.table, "eigenbasis " + triple(p, 1, n2) + " over F_" + f->describe());
  }
  for (std::uint32_t p : {3u, 5u}) {
    RunConfig c;
    c.grading = GradingKind::EpsZero;
    c.p = p;
    expect_jacobi(ck, *run(c).table, "eps=0 center quotient p=" + std::to_string(p));
  }
  {
    // F_9 with Theta the Frobenius map, and F_8 with Theta the zero map
    const auto f9 = Field::create(3, 2);
    std::vector<FieldElement> g = f9->elements(), th;
    for (const auto& a : g) th.push_back(frobenius(a));
    expect_jacobi(ck, build_albert_frank(f9, g, th), "Albert-Frank F_9");
    const auto f8 = Field::create(2, 3);
    std::vector<FieldElement> g8 = f8->elements(), z8(g8.size(), f8->zero());
    expect_jacobi(ck, build_albert_frank(f8, g8, z8), "Albert-Frank F_8");
  }
  return ck.outcome();
}

// ---- criterion 3 ---------------------------------------------------------

inline RowOutcome transition(std::uint32_t p, std::uint32_t n) {
  Checker ck;
  const auto f = Field::create(p, n);
  const auto z = zassenhaus_group_basis(p, n, f);
  const StructureTable w = build_W1n(p, n, f);
  const StructureTable conj = change_basis(w, z.transition, z.table.labels());
  ck.expect(conj.same_constants(z.table), "conjugated W(1;n) differs from [e_a,e_b] = (b-a) e_{a+b}");
  if (p == 2) {
    const StructureTable wd = build_W1n_derived(p, n, f);
    const Subspace d = derived_subalgebra(Subspace::full(z.table));
    ck.expect(d.dim() == wd.dim(), "derived subalgebra dimension");
    // transition images of the derived subalgebra land in W(1;n)^(1)
    const Subspace wdsub = Subspace::basis_span(w, [&] {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i + 1 < w.dim(); ++i) idx.push_back(i);
      return idx;
    }());
    bool inside = true;
    for (const auto& row : d.rows()) {
      Coeffs img(w.dim(), 0);
      for (std::size_t a = 0; a < row.size(); ++a) axpy(*f, img, row[a], z.transition[a]);
      inside = inside && wdsub.contains(img);
    }
    ck.expect(inside, "derived subalgebra maps into W(1;n)^(1)");
  }
  return ck.outcome();
}

// ---- criteria 4 and 5 ----------------------------------------------------

inline RowOutcome mixed_row(std::uint32_t p, std::uint32_t n1, std::uint32_t n2) {
  Checker ck;
  const RunResult r = mixed_run(p, n1, n2);
  const std::int64_t N = r.degmap.modulus;
  ck.expect(r.depth >= 2 * N, "depth covers two periods");
  ck.expect(r.report.covering.overall == Verdict::Pass, "covering");
  ck.expect(r.report.diamonds.anomalies.empty(), "diamonds only at d = 1 mod (q-1)");
  std::size_t minus_one = 0, inf = 0;
  for (const auto& rec : r.report.diamonds.records) {
    ck.expect(rec.kind == DiamondKind::Genuine, "diamond at " + std::to_string(rec.degree));
    if (rec.degree == 1) continue;
    const bool at_minus = ((rec.degree - r.q) % N + N) % N == 0;
    if (at_minus) {
      ++minus_one;
      ck.expect(rec.typed && !rec.infinite && rec.type && (*rec.type + rec.type->field()->one()).is_zero(),
                "type -1 at " + std::to_string(rec.degree));
    } else {
      ++inf;
      ck.expect(rec.typed && rec.infinite, "type inf at " + std::to_string(rec.degree));
    }
  }
  ck.expect(minus_one >= 2, "at least two type -1 diamonds");
  ck.expect(r.pass(), r.first_failure);
  return ck.outcome(std::to_string(r.report.diamonds.records.size()) + " diamonds to degree " + std::to_string(r.depth));
}

inline RowOutcome finite_row(std::uint32_t p, std::uint32_t k, std::uint32_t n2, bool second_chain) {
  Checker ck;
  const auto f = Field::create(p, k);
  const auto mus = outside_prime_field(*f);
  for (const auto& mu : mus) {
    const RunResult r = finite_run(f, n2, mu);
    const std::string tag = "mu3=" + mu.literal();
    const std::int64_t q = r.q;
    ck.expect(r.report.covering.overall == Verdict::Pass, tag + " covering");
    ck.expect(r.report.diamonds.anomalies.empty(), tag + " no stray diamonds");
    const FieldElement s = r.params->sigma / r.params->rho;
    ck.expect(third_type(*r.params) == mu, tag + " third type");
    std::size_t seen = 0;
    for (const auto& rec : r.report.diamonds.records) {
      ck.expect(rec.degree == (rec.ordinal - 1) * (q - 1) + 1, tag + " slot position");
      if (rec.ordinal == 2) ck.expect(rec.degree == q && rec.kind == DiamondKind::Genuine, tag + " second diamond at q");
      if (rec.ordinal < 2) continue;
      const FieldElement mut = -f->one() + s * f->from_int(rec.ordinal - 2);
      ck.expect(rec.kind == DiamondKind::Genuine && rec.typed && !rec.infinite && *rec.type == mut,
                tag + " mu_" + std::to_string(rec.ordinal));
      ++seen;
    }
    ck.expect(seen >= 3, tag + " at least three typed diamonds");
    ck.expect(r.report.certificate_ok, tag + " second-diamond certificate");
    ck.expect(r.report.chains.first_checked && r.report.chains.first_pass, tag + " first centralizer chain");
    if (second_chain) ck.expect(r.report.chains.second_checked && r.report.chains.second_pass, tag + " second chain");
    ck.expect(r.pass(), tag + " " + r.first_failure);
  }
  return ck.outcome(std::to_string(mus.size()) + " values of mu3 over F_" + f->describe());
}

// ---- criterion 6 ---------------------------------------------------------

inline RowOutcome assigned_type() {
  Checker ck;
  const auto f9 = Field::create(3, 2);
  const auto m9 = outside_prime_field(*f9);
  ck.expect(m9.size() == 6, "six values in F_9 outside F_3");
  for (const auto& mu : m9) ck.expect(third_type(params_from_mu3(mu)) == mu, "F_9 mu3=" + mu.literal());
  const auto f25 = Field::create(5, 2);
  auto m25 = outside_prime_field(*f25);
  std::mt19937 rng(20250101);
  std::shuffle(m25.begin(), m25.end(), rng);
  m25.resize(std::min<std::size_t>(20, m25.size()));
  for (const auto& mu : m25) {
    const ToralParams t = params_from_mu3(mu);
    ck.expect(third_type(t) == mu, "F_25 mu3=" + mu.literal());
    ck.expect((t.rho.pow(5) - t.pi * t.rho - t.eps).is_zero(), "F_25 rho relation mu3=" + mu.literal());
  }
  return ck.outcome();
}

// ---- criterion 7 ---------------------------------------------------------

inline RowOutcome sigma_zero_row(std::uint32_t p) {
  Checker ck;
  RunConfig c;
  c.grading = GradingKind::SigmaZero;
  c.p = p;
  const RunResult r = run(c);
  ck.expect(r.generated_dim && *r.generated_dim == std::size_t(r.q), "generated subalgebra has dimension q");
  std::size_t typed = 0;
  for (const auto& rec : r.report.diamonds.records) {
    if (rec.degree == 1) continue;
    ++typed;
    ck.expect(rec.kind == DiamondKind::Genuine && rec.typed && !rec.infinite &&
                  (*rec.type + rec.type->field()->one()).is_zero(),
              "type -1 at " + std::to_string(rec.degree));
  }
  ck.expect(typed >= 2, "at least two typed diamonds");
  ck.expect(r.pass(), r.first_failure);
  return ck.outcome();
}

inline RowOutcome eps_zero_row(std::uint32_t p) {
  Checker ck;
  std::size_t fakes = 0;
  for (std::uint32_t ratio = 1; ratio < p; ++ratio) {
    if ((ratio + 1) % p == 0) continue;
    RunConfig c;
    c.grading = GradingKind::EpsZero;
    c.p = p;
    c.ratio = ratio;
    const RunResult r = run(c);
    const std::string tag = "ratio " + std::to_string(ratio);
    ck.expect(r.center_dim && *r.center_dim == 1, tag + " one-dimensional center");
    const Field& f = r.table->field();
    const FieldElement s = f.from_int(ratio);
    for (const auto& rec : r.report.diamonds.records) {
      if (rec.degree == 1) continue;
      const FieldElement mu = -f.one() + s * f.from_int(rec.ordinal - 2);
      if (mu.is_zero()) {
        ck.expect(rec.kind == DiamondKind::Fake0, tag + " fake0 at " + std::to_string(rec.degree));
        ++fakes;
      } else if (mu == f.one()) {
        ck.expect(rec.kind == DiamondKind::Fake1, tag + " fake1 at " + std::to_string(rec.degree));
        ++fakes;
      } else {
        ck.expect(rec.kind == DiamondKind::Genuine && rec.typed && !rec.infinite && *rec.type == mu,
                  tag + " type at " + std::to_string(rec.degree));
      }
    }
    ck.expect(r.pass(), tag + " " + r.first_failure);
  }
  return ck.outcome(std::to_string(fakes) + " fake slots");
}

// ---- criterion 8 ---------------------------------------------------------

inline void expect_k(Checker& ck, const RunResult& r, std::size_t dim_k, const std::string& tag) {
  ck.expect(r.report.k.has_value(), tag + " k computed (" + r.report.k_error + ")");
  if (!r.report.k) return;
  ck.expect(r.report.k->k == r.q, tag + " k = " + std::to_string(r.report.k->k) + ", q = " + std::to_string(r.q));
  ck.expect(r.report.dims.size() >= std::size_t(r.q) && r.report.dims[r.q - 1] == dim_k,
            tag + " dim M_k = " + std::to_string(dim_k));
}

inline RowOutcome parameter_k_odd() {
  Checker ck;
  // q = 3 has dim L_3 = 2, outside the hypothesis dim L_3 = 1
  for (auto [p, k, n2] : std::vector<std::array<std::uint32_t, 3>>{{5, 2, 1}, {3, 2, 2}, {7, 2, 1}}) {
    const auto f = Field::create(p, k);
    for (const auto& mu : outside_prime_field(*f)) {
      const RunResult r = finite_run(f, n2, mu);
      ck.expect(r.report.dims.size() >= 3 && r.report.dims[2] == 1, "dim L_3 = 1");
      expect_k(ck, r, 2, triple(p, 1, n2) + " mu3=" + mu.literal());
    }
  }
  return ck.outcome("q = 3 runs excluded: dim L_3 = 2");
}

inline RowOutcome parameter_k_char2() {
  Checker ck;
  expect_k(ck, mixed_run(2, 1, 2), 1, "mixed (2,1,2)");
  const auto f4 = Field::create(2, 2);
  for (const auto& mu : outside_prime_field(*f4)) expect_k(ck, finite_run(f4, 2, mu), 1, "finite q=4 mu3=" + mu.literal());
  return ck.outcome();
}

inline RowOutcome char2_rows() {
  Checker ck;
  const RunResult m = mixed_run(2, 1, 2);
  ck.expect(m.pass(), "mixed (2,1,2): " + m.first_failure);
  const auto f4 = Field::create(2, 2);
  for (const auto& mu : outside_prime_field(*f4)) {
    const RunResult r = finite_run(f4, 2, mu);
    ck.expect(r.pass(), "finite q=4 mu3=" + mu.literal() + ": " + r.first_failure);
  }
  return ck.outcome();
}

// ---- criterion 9 ---------------------------------------------------------

/// x y^(j) -> E_{j-1}, y^(j) -> E_{j+2^n-2}.
inline std::vector<Coeffs> char2_images(const StructureTable& htau, const StructureTable& wd, std::uint32_t n) {
  const std::int64_t q = std::int64_t(ipow(2, n));
  std::vector<Coeffs> images;
  for (const auto& lab : htau.labels()) {
    long long i = 0, j = 0;
    if (std::sscanf(lab.c_str(), "x%lldy%lld", &i, &j) != 2)
      throw Error(ErrorCode::InvalidArgument, "unexpected label " + lab);
    const std::int64_t e = i == 1 ? j - 1 : j + q - 2;
    Coeffs v(wd.dim(), 0);
    v.at(static_cast<std::size_t>(e + 1)) = 1;
    images.push_back(std::move(v));
  }
  return images;
}

inline RowOutcome char2_isomorphism() {
  Checker ck;
  for (std::uint32_t n : {1u, 2u}) {
    const auto f = Field::create(2);
    const StructureTable h = build_H2_phi_tau_derived(2, 1, n, f);
    const StructureTable w = build_W1n_derived(2, n + 1, f);
    ck.expect(h.dim() == w.dim(), "dimensions n=" + std::to_string(n));
    if (h.dim() == w.dim()) ck.expect(check_structure_map(h, w, char2_images(h, w, n)), "isomorphism n=" + std::to_string(n));
  }
  return ck.outcome();
}

// ---- criterion 10 --------------------------------------------------------

inline std::vector<RunResult> oracle_runs() {
  std::vector<RunResult> out;
  for (auto [p, n1, n2] : std::vector<std::array<std::uint32_t, 3>>{{3, 1, 1}, {5, 1, 1}, {3, 1, 2}})
    out.push_back(mixed_run(p, n1, n2));
  for (auto [p, k, n2] : std::vector<std::array<std::uint32_t, 3>>{{3, 2, 1}, {5, 2, 1}, {3, 2, 2}, {7, 2, 1}}) {
    const auto f = Field::create(p, k);
    for (const auto& mu : outside_prime_field(*f)) out.push_back(finite_run(f, n2, mu));
  }
  return out;
}

inline RowOutcome covering_oracles() {
  Checker ck;
  std::size_t slots = 0;
  for (const auto& r : oracle_runs()) {
    const LoopExpansion e = loop_expand(*r.table, r.degmap, r.depth);
    const auto& X = r.report.generators.X;
    const auto& Y = r.report.generators.Y;
    for (const auto& rec : r.report.diamonds.records) {
      if (rec.kind != DiamondKind::Genuine || rec.degree < 2) continue;
      const std::int64_t d = rec.degree;
      const bool en = detail::covers_by_enumeration(*r.table, e.M(d), X, Y, e.M(d + 1));
      const bool cr = detail::covers_by_criterion(*r.table, e.M(d - 1), X, Y, e.M(d + 1));
      ck.expect(en == cr, "degree " + std::to_string(d) + " over F_" + r.table->field().describe());
      ++slots;
    }
    const auto a = check_covering(e, X, Y, CoveringMode::Enumeration);
    const auto b = check_covering(e, X, Y, CoveringMode::Criterion);
    ck.expect(a.per_degree == b.per_degree, "per-degree verdicts over F_" + r.table->field().describe());
  }
  return ck.outcome(std::to_string(slots) + " genuine slots");
}

inline RowOutcome scale_invariance() {
  Checker ck;
  const auto f = Field::create(5, 2);
  const RunResult r = finite_run(f, 1, outside_prime_field(*f).front());
  const LoopExpansion e = loop_expand(*r.table, r.degmap, r.depth);
  const auto& X = r.report.generators.X;
  const auto& Y = r.report.generators.Y;
  std::vector<const DiamondRecord*> slots;
  for (const auto& rec : r.report.diamonds.records)
    if (rec.degree > 1) slots.push_back(&rec);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> nz(1, f->size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElement a = f->from_code(nz(rng)), b = f->from_code(nz(rng));
    const DiamondRecord& ref = *slots[trial % slots.size()];
    const std::int64_t d = ref.degree;
    const DiamondRecord got = classify_type(e.M(d - 1).vector(0), X * a, Y * b, e.M(d), e.M(d + 1));
    ck.expect(got.kind == ref.kind && got.type_string() == ref.type_string(),
              "degree " + std::to_string(d) + " scaled by " + a.literal() + ", " + b.literal());
  }
  return ck.outcome("50 rescalings");
}

inline RowOutcome n_nprime() {
  Checker ck;
  const CartanParams c{3, 1, 1};
  const std::int64_t m1 = 2 * c.tau1(), m2 = 2 * c.tau2();
  std::size_t agree = 0;
  for (std::int64_t i = 0; i <= m1; ++i)
    for (std::int64_t k = 0; k <= m1; ++k)
      for (std::int64_t j = 0; j <= m2; ++j)
        for (std::int64_t l = 0; l <= m2; ++l) {
          if ((i == 0 && k == 0) || (j == 0 && l == 0)) continue;
          ++agree;
          ck.expect(coeff_N(i, j, k, l, 3) == coeff_Nprime(i, j, k, l, 3),
                    "N != N' at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                        std::to_string(l) + ")");
        }
  return ck.outcome(std::to_string(agree) + " index tuples");
}

}  // namespace detail

inline std::vector<SuiteRow> suite_rows() {
  using namespace detail;
  std::vector<SuiteRow> rows;
  auto add = [&](std::string name, int crit, std::vector<std::string> tags, double limit, std::function<RowOutcome()> fn) {
    rows.push_back({std::move(name), crit, std::move(tags), limit, std::move(fn)});
  };
  add("dims-W", 1, {"char2"}, 1, dims_W);
  add("dims-H2-second-derived", 1, {"char2"}, 1, [] { return dims_hamiltonian(0); });
  add("dims-H2-phi-tau", 1, {"char2"}, 1, [] { return dims_hamiltonian(1); });
  add("dims-H2-phi1", 1, {"char2"}, 1, [] { return dims_hamiltonian(2); });
  add("jacobi-W", 2, {"char2"}, 0, jacobi_W);
  add("jacobi-hamiltonian", 2, {"char2"}, 0, jacobi_hamiltonian);
  add("jacobi-eigen-albert-frank", 2, {"char2"}, 0, jacobi_eigen_and_albert_frank);
  add("transition-3-1", 3, {}, 0, [] { return transition(3, 1); });
  add("transition-3-2", 3, {}, 0, [] { return transition(3, 2); });
  add("transition-5-1", 3, {}, 0, [] { return transition(5, 1); });
  add("transition-2-2", 3, {"char2"}, 0, [] { return transition(2, 2); });
  add("mixed-3-1-1", 4, {}, 10, [] { return mixed_row(3, 1, 1); });
  add("mixed-5-1-1", 4, {}, 10, [] { return mixed_row(5, 1, 1); });
  add("mixed-3-1-2", 4, {}, 10, [] { return mixed_row(3, 1, 2); });
  add("finite-3-3", 5, {}, 0, [] { return finite_row(3, 2, 1, false); });
  add("finite-5-5", 5, {}, 0, [] { return finite_row(5, 2, 1, false); });
  add("finite-3-9", 5, {}, 0, [] { return finite_row(3, 2, 2, false); });
  add("finite-7-7", 5, {}, 0, [] { return finite_row(7, 2, 1, true); });
  add("assigned-type", 6, {}, 0, assigned_type);
  add("sigma-zero-3", 7, {}, 0, [] { return sigma_zero_row(3); });
  add("sigma-zero-5", 7, {}, 0, [] { return sigma_zero_row(5); });
  add("eps-zero-3", 7, {}, 0, [] { return eps_zero_row(3); });
  add("eps-zero-5", 7, {}, 0, [] { return eps_zero_row(5); });
  add("parameter-k-odd", 8, {}, 0, parameter_k_odd);
  add("parameter-k-char2", 8, {"char2"}, 0, parameter_k_char2);
  add("char2-runs", 8, {"char2"}, 0, char2_rows);
  add("char2-isomorphism", 9, {"char2"}, 0, char2_isomorphism);
  add("covering-oracles", 10, {}, 0, covering_oracles);
  add("scale-invariance", 10, {}, 0, scale_invariance);
  add("n-nprime", 10, {}, 0, n_nprime);
  return rows;
}

/// Rows whose name or tag equals `only`; all rows when `only` is empty.
/// Throws InvalidArgument listing the valid names when nothing matches.
inline std::vector<SuiteRow> select_rows(const std::string& only) {
  auto rows = suite_rows();
  if (only.empty()) return rows;
  std::vector<SuiteRow> out;
  for (auto& r : rows)
    if (r.name == only || std::find(r.tags.begin(), r.tags.end(), only) != r.tags.end() ||
        "crit" + std::to_string(r.criterion) == only)
      out.push_back(r);
  if (out.empty()) {
    std::string names;
    for (const auto& r : rows) names += " " + r.name;
    throw Error(ErrorCode::InvalidArgument, "unknown row '" + only + "'; valid rows:" + names + " (tags: char2, critN)");
  }
  return out;
}

/// Runs one row, timing it; exceptions count as failures.
inline RowResult run_row(const SuiteRow& row) {
  RowResult res;
  res.name = row.name;
  res.criterion = row.criterion;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const RowOutcome o = row.fn();
    res.pass = o.pass;
    res.detail = o.detail;
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (row.time_limit > 0 && res.seconds > row.time_limit) {
    res.pass = false;
    res.detail += "; took " + std::to_string(res.seconds) + " s, limit " + std::to_string(row.time_limit) + " s";
  }
  return res;
}

}  // namespace thinloop
