#pragma once

// End-to-end runs: build H(2;n;Phi(1)) (or a degeneration), grade it, expand
// the loop algebra and compare the diamonds with the predicted pattern.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thinloop/cartan.hpp"
#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/grading.hpp"
#include "thinloop/liealg.hpp"
#include "thinloop/loop.hpp"

namespace thinloop {

enum class GradingKind { Mixed, Finite, SigmaZero, EpsZero };

inline const char* to_string(GradingKind g) {
  switch (g) {
    case GradingKind::Mixed: return "mixed";
    case GradingKind::Finite: return "finite";
    case GradingKind::SigmaZero: return "sigma-zero";
    case GradingKind::EpsZero: return "eps-zero";
  }
  return "?";
}

inline GradingKind parse_grading(const std::string& s) {
  if (s == "mixed") return GradingKind::Mixed;
  if (s == "finite") return GradingKind::Finite;
  if (s == "sigma-zero") return GradingKind::SigmaZero;
  if (s == "eps-zero") return GradingKind::EpsZero;
  throw Error(ErrorCode::InvalidArgument, "unknown grading '" + s + "' (mixed, finite, sigma-zero, eps-zero)");
}

struct RunConfig {
  GradingKind grading = GradingKind::Mixed;
  std::uint32_t p = 3;
  std::uint32_t n1 = 1;
  std::uint32_t n2 = 1;
  FieldPtr field;                        // defaults to F_p
  std::optional<FieldElement> mu3;       // finite grading
  std::optional<FieldElement> sigma;     // finite grading, overrides mu3
  std::optional<FieldElement> rho;
  std::uint32_t ratio = 1;               // eps-zero: sigma/rho in F_p
  std::optional<std::int64_t> depth;
  bool intrinsic_generators = false;
};

struct RunResult {
  std::shared_ptr<StructureTable> table;  // algebra that is actually looped
  DegreeMap degmap;
  std::int64_t q = 0;
  std::int64_t depth = 0;
  std::optional<ToralParams> params;
  std::optional<FieldElement> step;       // sigma/rho
  std::optional<std::size_t> generated_dim;
  std::optional<std::size_t> center_dim;
  ThinReport report;
  std::vector<std::string> mismatches;    // pattern deviations, empty when it matches
  std::vector<std::string> notes;
  std::string first_failure;              // first failing verdict, empty on PASS

  bool pass() const { return first_failure.empty(); }
};

/// What a slot should hold: kind plus the type for genuine typed diamonds.
struct ExpectedSlot {
  DiamondKind kind = DiamondKind::Genuine;
  bool typed = true;
  bool infinite = false;
  std::optional<FieldElement> type;
};

/// Monomial grading: type -1 at d = q mod (q-1)r, infinity elsewhere; in
/// characteristic two the -1 slots are fake.
inline ExpectedSlot expected_mixed(std::int64_t d, const CartanParams& c, const Field& f) {
  ExpectedSlot e;
  const std::int64_t q = c.q(), n = (q - 1) * c.r();
  if (d == 1) {
    e.typed = false;
    return e;
  }
  if (((d - q) % n + n) % n == 0) {
    if (c.p == 2) {
      e.kind = DiamondKind::Fake1;
      e.typed = false;
    } else {
      e.type = -f.one();
    }
    return e;
  }
  e.infinite = true;
  return e;
}

/// Eigenvector gradings: the t-th slot has mu_t = -1 + (t-2) s, reported as a
/// fake diamond when mu_t is 0 or 1.
inline ExpectedSlot expected_progression(std::int64_t ordinal, const FieldElement& s) {
  ExpectedSlot e;
  if (ordinal == 1) {
    e.typed = false;
    return e;
  }
  const Field& f = *s.field();
  const FieldElement mu = -f.one() + s * f.from_int(ordinal - 2);
  if (mu.is_zero()) {
    e.kind = DiamondKind::Fake0;
    e.typed = false;
  } else if (mu == f.one()) {
    e.kind = DiamondKind::Fake1;
    e.typed = false;
  } else {
    e.type = mu;
  }
  return e;
}

inline bool slot_matches(const DiamondRecord& r, const ExpectedSlot& e) {
  if (r.kind != e.kind) return false;
  if (!e.typed) return !r.typed;
  if (!r.typed) return false;
  if (e.infinite) return r.infinite;
  return !r.infinite && r.type && *r.type == *e.type;
}

inline std::string describe(const ExpectedSlot& e) {
  if (e.kind == DiamondKind::Fake0) return "fake0";
  if (e.kind == DiamondKind::Fake1) return "fake1";
  if (!e.typed) return "genuine";
  if (e.infinite) return "genuine/inf";
  return "genuine/" + e.type->literal();
}

namespace detail {

inline std::int64_t default_depth(const RunConfig& cfg, std::int64_t modulus, std::int64_t q) {
  if (cfg.depth) return *cfg.depth;
  if (const char* env = std::getenv("THINLOOP_DEPTH")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, std::string("THINLOOP_DEPTH must be a positive integer, got '") + env + "'");
  }
  return std::max<std::int64_t>(3 * modulus, 4 * q);
}

inline void validate(const RunConfig& cfg) {
  if (!detail::is_prime(cfg.p)) throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic must be prime");
  if (cfg.n1 < 1 || cfg.n2 < 1) throw Error(ErrorCode::InvalidArgument, "n1 and n2 must be at least 1");
  if (cfg.field && cfg.field->p() != cfg.p)
    throw Error(ErrorCode::FieldMismatch, "field characteristic differs from p");
  const std::uint64_t q = ipow(cfg.p, cfg.n2);
  if (q < 3) throw Error(ErrorCode::InvalidArgument, "q = p^n2 must be at least 3");
  if (cfg.grading != GradingKind::Mixed && cfg.n1 != 1)
    throw Error(ErrorCode::InvalidArgument, "eigenvector gradings need n1 = 1");
  if (cfg.grading == GradingKind::EpsZero && (cfg.ratio % cfg.p == 0 || (cfg.ratio + 1) % cfg.p == 0))
    throw Error(ErrorCode::InvalidArgument, "ratio must be a nonzero element of F_p other than -1");
  if (cfg.depth && *cfg.depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
}

inline FieldElement lift(const FieldElement& a, const FieldPtr& f) {
  if (a.field() != f.get() && !(*a.field() == *f))
    throw Error(ErrorCode::FieldMismatch, "parameter lives in a different field than the run");
  return f->from_code(a.code());
}

}  // namespace detail

/// Compares the diamond scan against the predicted pattern and collects the
/// verdicts; fills mismatches, notes and first_failure.
inline void judge(RunResult& res, const std::vector<ExpectedSlot>& expected) {
  const ThinReport& rep = res.report;
  auto fail = [&](const std::string& what) {
    if (res.first_failure.empty()) res.first_failure = what;
  };
  for (std::size_t d = 0; d < rep.dims.size(); ++d)
    if (rep.dims[d] == 0) {
      fail("L_" + std::to_string(d + 1) + " = 0: the loop algebra is finite-dimensional");
      break;
    }
  if (rep.covering.overall != Verdict::Pass)
    fail("covering FAIL at degree " + std::to_string(rep.covering.first_failure.value_or(-1)));
  for (std::size_t i = 0; i < rep.diamonds.records.size(); ++i) {
    const auto& r = rep.diamonds.records[i];
    if (i >= expected.size()) break;
    if (!slot_matches(r, expected[i]))
      res.mismatches.push_back("degree " + std::to_string(r.degree) + ": expected " + describe(expected[i]) + ", got " +
                               to_string(r.kind) + "/" + r.type_string());
  }
  for (auto d : rep.diamonds.anomalies) res.mismatches.push_back("unexpected diamond at degree " + std::to_string(d));
  if (!res.mismatches.empty()) fail("diamond pattern: " + res.mismatches.front());
  if (!rep.certificate_ok) fail("second-diamond certificate");
  if (rep.chains.first_checked && rep.chains.first_in_hypotheses && !rep.chains.first_pass) fail("first centralizer chain");
  if (rep.chains.second_checked && rep.chains.second_in_hypotheses && !rep.chains.second_pass)
    fail("second centralizer chain");
  if (!rep.chains.proviso.empty()) res.notes.push_back("centralizer chains: " + rep.chains.proviso);
}

inline RunResult run(const RunConfig& cfg) {
  detail::validate(cfg);
  const FieldPtr F = cfg.field ? cfg.field : Field::create(cfg.p);
  const CartanParams c{cfg.p, cfg.n1, cfg.n2};
  RunResult res;
  res.q = c.q();
  std::optional<Generators> declared;
  std::vector<ExpectedSlot> expected;

  auto finish = [&](auto&& expect_at) {
    res.depth = detail::default_depth(cfg, res.degmap.modulus, res.q);
    res.report = thin_report(*res.table, res.degmap, res.q, res.depth,
                             cfg.intrinsic_generators ? std::nullopt : declared);
    for (const auto& r : res.report.diamonds.records) expected.push_back(expect_at(r));
    judge(res, expected);
  };

  switch (cfg.grading) {
    case GradingKind::Mixed: {
      res.table = std::make_shared<StructureTable>(build_H2_phi1(cfg.p, cfg.n1, cfg.n2, F));
      res.degmap = grade_mixed(c);
      declared = Generators{Element::basis(*res.table, monomial_index(c, 1, 0)),
                            Element::basis(*res.table, monomial_index(c, 0, c.tau2()))};
      if (cfg.p == 2) res.notes.push_back("characteristic two: slots d = q mod (q-1)r carry fake diamonds");
      finish([&](const DiamondRecord& r) { return expected_mixed(r.degree, c, *F); });
      break;
    }
    case GradingKind::Finite: {
      ToralParams t;
      if (cfg.sigma) {
        t = make_toral_params(detail::lift(*cfg.sigma, F), F->one(),
                              cfg.rho ? std::optional(detail::lift(*cfg.rho, F)) : std::nullopt);
      } else if (cfg.mu3) {
        t = params_from_mu3(detail::lift(*cfg.mu3, F));
      } else {
        throw Error(ErrorCode::InvalidArgument, "the finite grading needs mu3 or sigma");
      }
      if (t.sigma.is_zero()) throw Error(ErrorCode::InvalidArgument, "sigma = 0 is the sigma-zero grading");
      const StructureTable mono = build_H2_phi1(cfg.p, 1, cfg.n2, F);
      const EigenBasis eb = eigenbasis(mono, c, t);
      res.table = std::make_shared<StructureTable>(eb.table);
      res.degmap = grade_finite(eb);
      res.params = t;
      res.step = t.sigma / t.rho;
      declared = Generators{Element::basis(*res.table, eb.x_index()), Element::basis(*res.table, eb.y_index())};
      if (cfg.p == 2) res.notes.push_back("characteristic two: even-numbered slots carry fake diamonds");
      finish([&](const DiamondRecord& r) { return expected_progression(r.ordinal, *res.step); });
      break;
    }
    case GradingKind::SigmaZero: {
      const ToralParams t = make_toral_params(F->zero(), F->one(), F->one());
      const StructureTable mono = build_H2_phi1(cfg.p, 1, cfg.n2, F);
      const EigenBasis eb = eigenbasis(mono, c, t);
      const Subspace gen = subalgebra_generated(
          mono, {Element(mono, eb.vectors[eb.x_index()]), Element(mono, eb.vectors[eb.y_index()])});
      res.generated_dim = gen.dim();
      res.table = std::make_shared<StructureTable>(eb.table);
      res.degmap = grade_sigma_zero(eb);
      res.params = t;
      res.step = F->zero();
      declared = Generators{Element::basis(*res.table, eb.x_index()), Element::basis(*res.table, eb.y_index())};
      finish([&](const DiamondRecord& r) { return expected_progression(r.ordinal, *res.step); });
      if (*res.generated_dim != std::size_t(res.q) && res.first_failure.empty())
        res.first_failure = "generated subalgebra has dimension " + std::to_string(*res.generated_dim);
      break;
    }
    case GradingKind::EpsZero: {
      const FieldElement ratio = F->from_int(cfg.ratio);
      const ToralParams t = make_toral_params(ratio, F->zero(), F->one());
      const StructureTable mono = build_H2_phi1(cfg.p, 1, cfg.n2, F, F->zero());
      const EigenBasis eb = eigenbasis(mono, c, t);
      const DegreeMap full = grade_finite(eb);
      const Subspace z = center(Subspace::full(eb.table));
      res.center_dim = z.dim();
      if (z.dim() != 1) {
        res.table = std::make_shared<StructureTable>(eb.table);
        res.degmap = full;
        res.first_failure = "center has dimension " + std::to_string(z.dim());
        return res;
      }
      res.table = std::make_shared<StructureTable>(quotient_by_ideal(eb.table, z));
      std::vector<std::int64_t> newidx(eb.table.dim(), -1);
      std::vector<bool> pivot(eb.table.dim(), false);
      for (auto pv : z.pivots()) pivot[pv] = true;
      res.degmap.modulus = full.modulus;
      for (std::size_t i = 0; i < eb.table.dim(); ++i)
        if (!pivot[i]) {
          newidx[i] = static_cast<std::int64_t>(res.degmap.degrees.size());
          res.degmap.degrees.push_back(full.degrees[i]);
        }
      if (newidx[eb.x_index()] < 0 || newidx[eb.y_index()] < 0)
        throw Error(ErrorCode::InvalidGrading, "a generator lies in the center");
      res.params = t;
      res.step = ratio;
      declared = Generators{Element::basis(*res.table, std::size_t(newidx[eb.x_index()])),
                            Element::basis(*res.table, std::size_t(newidx[eb.y_index()]))};
      finish([&](const DiamondRecord& r) { return expected_progression(r.ordinal, *res.step); });
      break;
    }
  }
  return res;
}

}  // namespace thinloop
