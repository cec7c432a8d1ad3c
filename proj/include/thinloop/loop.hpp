#pragma once

// Loop algebras of cyclically graded Lie algebras, and the thinness checks on
// them: covering property, diamond positions and types, centralizer chains
// and the parameter k = dim(L/L^(2)) - 1.
//
// The loop component of degree d is M_d (x) t^d with M_d a subspace of the
// base algebra; only M_d is stored.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/liealg.hpp"

namespace thinloop {

struct LoopExpansion {
  const StructureTable* base = nullptr;
  DegreeMap degmap;
  std::int64_t depth = 0;
  std::vector<Subspace> components;  // components[d - 1] = M_d
  bool coincidence = false;          // M_{N+1} = M_1

  const Subspace& M(std::int64_t d) const { return components.at(static_cast<std::size_t>(d - 1)); }
  std::size_t dim(std::int64_t d) const { return d >= 1 && d <= depth ? M(d).dim() : 0; }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& c : components) out.push_back(c.dim());
    return out;
  }
};

namespace detail {

inline Subspace next_component(const StructureTable& t, const Subspace& cur, const Subspace& first) {
  Subspace out(t);
  for (const auto& a : cur.rows())
    for (const auto& b : first.rows()) out.add(t.bracket(a, b));
  return out;
}

}  // namespace detail

/// M_1 = degree-1 component of the base, M_{d+1} = [M_d, M_1].
inline LoopExpansion loop_expand(const StructureTable& base, const DegreeMap& degmap, std::int64_t depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
  LoopExpansion e;
  e.base = &base;
  e.degmap = degmap;
  e.depth = depth;
  const Subspace first = homogeneous_component(base, degmap, 1);
  Subspace cur = first;
  const std::int64_t reach = std::max<std::int64_t>(depth, degmap.modulus + 1);
  for (std::int64_t d = 1; d <= reach; ++d) {
    if (d <= depth) e.components.push_back(cur);
    if (d == degmap.modulus + 1) e.coincidence = (cur == first);
    if (d < reach) cur = detail::next_component(base, cur, first);
  }
  return e;
}

struct Generators {
  Element X;
  Element Y;
};

/// Y spans C_{M_1}(M_2); X is a complement corrected to X + alpha Y so that
/// [V,X,X] = 0 where V spans M_{q-1}.
inline Generators choose_generators(const LoopExpansion& e, std::int64_t q) {
  const StructureTable& t = *e.base;
  if (e.dim(1) != 2 || e.dim(2) != 1)
    throw Error(ErrorCode::NoAnnihilator, "generator choice needs dim M_1 = 2 and dim M_2 = 1");
  const Subspace c = centralizer_in(e.M(1), e.M(2));
  if (c.dim() != 1)
    throw Error(ErrorCode::NoAnnihilator,
                "C_{M_1}(M_2) has dimension " + std::to_string(c.dim()) + ", expected 1");
  Element Y = c.vector(0);
  Element X = e.M(1).vector(0);
  if (c.contains(X)) X = e.M(1).vector(1);
  if (q >= 3 && q + 1 <= e.depth && e.dim(q - 1) == 1 && e.dim(q + 1) == 1) {
    const Element V = e.M(q - 1).vector(0);
    const Subspace& W = e.M(q + 1);
    auto coef = [&](const Element& u) { return FieldElement(&t.field(), W.coordinates(u.coeffs())[0]); };
    const FieldElement cxx = coef(bracket(V, {X, X})), cxy = coef(bracket(V, {X, Y})),
                       cyx = coef(bracket(V, {Y, X}));
    const FieldElement denom = cxy + cyx;
    if (!cxx.is_zero()) {
      if (denom.is_zero())
        throw Error(ErrorCode::NoAnnihilator, "no X + alpha Y satisfies [V,X,X] = 0");
      X = X + Y * (-cxx / denom);
    }
  }
  return {X, Y};
}

enum class Verdict { Pass, Fail };

inline const char* to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

enum class CoveringMode { Auto, Enumeration, Criterion };

inline constexpr std::uint32_t kEnumerationFieldBound = 729;

struct CoveringResult {
  Verdict overall = Verdict::Pass;
  std::vector<Verdict> per_degree;  // degrees 1..depth-1
  std::optional<std::int64_t> first_failure;
};

namespace detail {

inline bool covers(const StructureTable& t, const Coeffs& u, const Element& X, const Element& Y, const Subspace& next) {
  Subspace s(t);
  s.add(t.bracket(u, X.coeffs()));
  s.add(t.bracket(u, Y.coeffs()));
  return s == next;
}

inline bool covers_by_enumeration(const StructureTable& t, const Subspace& cur, const Element& X, const Element& Y,
                                  const Subspace& next) {
  const Field& f = t.field();
  if (cur.dim() == 1) return covers(t, cur.rows()[0], X, Y, next);
  // projective representatives b1 + c b2 and b2
  if (!covers(t, cur.rows()[1], X, Y, next)) return false;
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    Coeffs u = cur.rows()[0];
    axpy(f, u, c, cur.rows()[1]);
    if (!covers(t, u, X, Y, next)) return false;
  }
  return true;
}

// [V,X,X] = [V,Y,Y] = 0 with [V,X,Y], [V,Y,X] nonzero, next component a line.
inline bool covers_by_criterion(const StructureTable&, const Subspace& prev, const Element& X, const Element& Y,
                                const Subspace& next) {
  if (prev.dim() != 1 || next.dim() != 1) return false;
  const Element V = prev.vector(0);
  return bracket(V, {X, X}).is_zero() && bracket(V, {Y, Y}).is_zero() && !bracket(V, {X, Y}).is_zero() &&
         !bracket(V, {Y, X}).is_zero();
}

}  // namespace detail

/// For every d < depth: each nonzero u in M_d has span([u,X],[u,Y]) = M_{d+1}.
inline CoveringResult check_covering(const LoopExpansion& e, const Element& X, const Element& Y,
                                     CoveringMode mode = CoveringMode::Auto) {
  const StructureTable& t = *e.base;
  CoveringResult res;
  for (std::int64_t d = 1; d < e.depth; ++d) {
    const Subspace& cur = e.M(d);
    const Subspace& next = e.M(d + 1);
    bool ok;
    if (cur.dim() == 0) {
      ok = next.is_zero();
    } else if (cur.dim() == 1) {
      ok = detail::covers(t, cur.rows()[0], X, Y, next);
    } else if (cur.dim() > 2) {
      ok = false;
    } else {
      const bool small = t.field().size() <= kEnumerationFieldBound;
      const bool use_criterion = d > 1 && (mode == CoveringMode::Criterion || (mode == CoveringMode::Auto && !small));
      ok = use_criterion ? detail::covers_by_criterion(t, e.M(d - 1), X, Y, next)
                         : detail::covers_by_enumeration(t, cur, X, Y, next);
    }
    res.per_degree.push_back(ok ? Verdict::Pass : Verdict::Fail);
    if (!ok && !res.first_failure) {
      res.first_failure = d;
      res.overall = Verdict::Fail;
    }
  }
  return res;
}

enum class DiamondKind { Genuine, Fake0, Fake1, None };

inline const char* to_string(DiamondKind k) {
  switch (k) {
    case DiamondKind::Genuine: return "genuine";
    case DiamondKind::Fake0: return "fake0";
    case DiamondKind::Fake1: return "fake1";
    case DiamondKind::None: return "none";
  }
  return "none";
}

struct DiamondRecord {
  std::int64_t degree = 0;
  DiamondKind kind = DiamondKind::None;
  bool typed = false;                 // false for the first diamond and for "none"
  bool infinite = false;              // type infinity
  std::optional<FieldElement> type;   // finite type of a genuine diamond
  std::int64_t ordinal = 0;
  // [V,X,Y] = c1 w and [V,Y,X] = c2 w
  std::optional<FieldElement> c1, c2;

  /// "inf", a coefficient literal, "0"/"1" for fake kinds, "-" when untyped.
  std::string type_string() const {
    if (kind == DiamondKind::Fake0) return "0";
    if (kind == DiamondKind::Fake1) return "1";
    if (!typed) return "-";
    if (infinite) return "inf";
    return type->literal();
  }
};

/// Classifies the slot M_d following the line spanned by V.
inline DiamondRecord classify_type(const Element& V, const Element& X, const Element& Y, const Subspace& slot,
                                   const Subspace& next) {
  const StructureTable& t = slot.table();
  DiamondRecord rec;
  if (slot.dim() == 2) {
    if (next.dim() == 2) throw Error(ErrorCode::ConsecutiveDiamonds, "two consecutive two-dimensional components");
    if (!bracket(V, {X, X}).is_zero() || !bracket(V, {Y, Y}).is_zero())
      throw Error(ErrorCode::MalformedDiamond, "[V,X,X] or [V,Y,Y] does not vanish");
    if (next.dim() != 1) throw Error(ErrorCode::MalformedDiamond, "the component after a diamond must be a line");
    rec.kind = DiamondKind::Genuine;
    rec.typed = true;
    const FieldElement c1{&t.field(), next.coordinates(bracket(V, {X, Y}).coeffs())[0]};
    const FieldElement c2{&t.field(), next.coordinates(bracket(V, {Y, X}).coeffs())[0]};
    rec.c1 = c1;
    rec.c2 = c2;
    if ((c1 + c2).is_zero()) {
      if (c1.is_zero()) throw Error(ErrorCode::MalformedDiamond, "[V,X,Y] and [V,Y,X] both vanish");
      rec.infinite = true;
    } else {
      rec.type = c1 / (c1 + c2);
    }
    return rec;
  }
  if (slot.dim() == 1) {
    const Element vx = bracket(V, X);
    if (vx.is_zero()) {
      rec.kind = DiamondKind::Fake0;
    } else {
      const Subspace xline = Subspace::span(t, std::vector<Element>{X});
      if (centralizer_in(xline, slot).dim() == 1) rec.kind = DiamondKind::Fake1;
    }
  }
  return rec;
}

struct DiamondScan {
  std::vector<DiamondRecord> records;
  std::vector<std::int64_t> anomalies;  // two-dimensional components off the expected slots
};

/// Scans the slots d = 1 mod (q-1) with d + 1 <= depth.
inline DiamondScan detect_diamonds(const LoopExpansion& e, const Element& X, const Element& Y, std::int64_t q) {
  DiamondScan scan;
  const std::int64_t step = q - 1;
  for (std::int64_t d = 1; d <= e.depth; ++d) {
    if (e.dim(d) == 0) break;  // the algebra ends here
    const bool slot = (d - 1) % step == 0;
    if (!slot) {
      if (e.dim(d) == 2) scan.anomalies.push_back(d);
      continue;
    }
    if (d + 1 > e.depth) break;
    DiamondRecord rec;
    if (d == 1) {
      rec.kind = e.dim(1) == 2 ? DiamondKind::Genuine : DiamondKind::None;
    } else {
      if (e.dim(d - 1) != 1) throw Error(ErrorCode::MalformedDiamond, "component before a slot must be a line");
      rec = classify_type(e.M(d - 1).vector(0), X, Y, e.M(d), e.M(d + 1));
    }
    rec.degree = d;
    rec.ordinal = (d - 1) / step + 1;
    scan.records.push_back(rec);
  }
  return scan;
}

struct ChainReport {
  bool first_checked = false;
  bool first_pass = false;
  bool first_in_hypotheses = false;
  bool second_checked = false;
  bool second_pass = false;
  bool second_in_hypotheses = false;
  std::string proviso;
};

/// C_{M_1}(M_d) = <Y> for d = 2..q-2 and for d = q+1..2q-3.
inline ChainReport centralizer_chain(const LoopExpansion& e, const Element& Y, std::int64_t q, std::uint32_t p) {
  ChainReport rep;
  const Subspace line = Subspace::span(*e.base, std::vector<Element>{Y});
  auto run = [&](std::int64_t lo, std::int64_t hi, bool& checked, bool& pass) {
    if (hi > e.depth) return;
    checked = true;
    pass = true;
    for (std::int64_t d = lo; d <= hi; ++d)
      if (!(centralizer_in(e.M(1), e.M(d)) == line)) pass = false;
  };
  run(2, q - 2, rep.first_checked, rep.first_pass);
  run(q + 1, 2 * q - 3, rep.second_checked, rep.second_pass);
  rep.first_in_hypotheses = p % 2 == 1 && q > 3;
  rep.second_in_hypotheses = p > 5 || (p > 3 && q != 5);
  if (!rep.first_in_hypotheses || !rep.second_in_hypotheses)
    rep.proviso = "proviso: outside the hypotheses of the k bound";
  return rep;
}

struct ParameterK {
  std::int64_t k = 0;
  std::vector<std::size_t> codims;  // dim M_d - dim L^(2)_d for d = 1..end
};

/// k = sum_d dim(M_d / L^(2)_d) - 1 with L^(2)_d = sum_{a+b=d, a,b>=2} [M_a, M_b].
/// Needs depth >= 3q and q consecutive vanishing codimensions.
inline ParameterK parameter_k(const LoopExpansion& e, std::int64_t q) {
  if (e.depth < 3 * q) throw Error(ErrorCode::NotStabilized, "parameter k needs depth >= 3q");
  const StructureTable& t = *e.base;
  ParameterK out;
  std::int64_t zeros = 0, total = 0;
  bool nonzero_seen = false;
  for (std::int64_t d = 1; d <= e.depth; ++d) {
    Subspace sec(t);
    for (std::int64_t a = 2; a + 2 <= d; ++a) {
      const std::int64_t b = d - a;
      if (a > b) break;
      for (const auto& u : e.M(a).rows())
        for (const auto& v : e.M(b).rows()) sec.add(t.bracket(u, v));
    }
    const std::size_t codim = e.dim(d) - sec.dim();
    out.codims.push_back(codim);
    total += static_cast<std::int64_t>(codim);
    if (codim == 0) {
      if (nonzero_seen && e.dim(d) > 0 && ++zeros >= q) {
        out.k = total - 1;
        return out;
      }
    } else {
      nonzero_seen = true;
      zeros = 0;
    }
  }
  throw Error(ErrorCode::NotStabilized, "L^(2) did not stabilize within depth " + std::to_string(e.depth));
}

struct ThinReport {
  std::vector<std::size_t> dims;
  DiamondScan diamonds;
  std::optional<ParameterK> k;
  std::string k_error;
  CoveringResult covering;
  ChainReport chains;
  Generators generators;
  bool generators_intrinsic = false;  // chosen by choose_generators
  bool coincidence = false;
  // second-diamond certificate at degree q: [V,X,X], [V,Y,Y], [V,X,Y], [V,Y,X] on M_{q+1}
  std::optional<FieldElement> c_xx, c_yy, c_xy, c_yx;
  bool certificate_ok = false;
};

/// Runs expansion, generator choice (unless given), covering, diamond scan,
/// centralizer chains and parameter k.
inline ThinReport thin_report(const StructureTable& base, const DegreeMap& degmap, std::int64_t q, std::int64_t depth,
                              std::optional<Generators> declared = std::nullopt) {
  ThinReport rep;
  const LoopExpansion e = loop_expand(base, degmap, depth);
  rep.dims = e.dims();
  rep.coincidence = e.coincidence;
  if (declared) {
    rep.generators = *declared;
  } else {
    rep.generators = choose_generators(e, q);
    rep.generators_intrinsic = true;
  }
  const Element& X = rep.generators.X;
  const Element& Y = rep.generators.Y;
  rep.covering = check_covering(e, X, Y);
  rep.diamonds = detect_diamonds(e, X, Y, q);
  rep.chains = centralizer_chain(e, Y, q, base.field().p());
  if (q >= 2 && q + 1 <= depth && e.dim(q - 1) == 1 && e.dim(q + 1) == 1) {
    const Element V = e.M(q - 1).vector(0);
    const Subspace& W = e.M(q + 1);
    auto coef = [&](const Element& u) { return FieldElement(&base.field(), W.coordinates(u.coeffs())[0]); };
    rep.c_xx = coef(bracket(V, {X, X}));
    rep.c_yy = coef(bracket(V, {Y, Y}));
    rep.c_xy = coef(bracket(V, {X, Y}));
    rep.c_yx = coef(bracket(V, {Y, X}));
    // [V,X,X] = 0 = [V,Y,Y] and [V,Y,X] = -2 [V,X,Y]
    rep.certificate_ok = rep.c_xx->is_zero() && rep.c_yy->is_zero() &&
                         *rep.c_yx == -(*rep.c_xy * base.field().from_int(2));
  }
  try {
    rep.k = parameter_k(e, q);
  } catch (const Error& err) {
    rep.k_error = err.what();
  }
  return rep;
}

}  // namespace thinloop
