#pragma once

// Cyclic gradings of H(2;n;Phi(1)): the monomial grading with X = x and
// Y = ybar of degree one, and the grading coming from the eigenvectors of the
// toral element e0 = y + pi xbar y.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinloop/cartan.hpp"
#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/liealg.hpp"

namespace thinloop {

/// Degree of x^(i) y^(j) is (1-q)i - j + q modulo (q-1)r.
inline DegreeMap grade_mixed(const CartanParams& c) {
  const std::int64_t q = c.q(), r = c.r();
  DegreeMap d;
  d.modulus = (q - 1) * r;
  for (std::int64_t i = 0; i < r; ++i)
    for (std::int64_t j = 0; j < q; ++j) d.degrees.push_back(d.normalize((1 - q) * i - j + q));
  return d;
}

struct ToralParams {
  FieldElement sigma;
  FieldElement rho;
  FieldElement pi;   // sigma^(p^n1 - 1)
  FieldElement eps;
  std::uint32_t n1 = 1;
};

/// Roots of Z^(p^n1) - sigma^(p^n1 - 1) Z - eps, in canonical element order.
inline std::vector<FieldElement> rho_roots(const FieldElement& sigma, const FieldElement& eps, std::uint32_t n1 = 1) {
  const Field& f = *sigma.field();
  const std::uint64_t r = detail::ipow(f.p(), n1);
  const FieldElement pi = sigma.pow(r - 1);
  std::vector<FieldElement> coeffs(r + 1, f.zero());
  coeffs[0] = -eps;
  coeffs[1] = -pi;
  coeffs[r] = coeffs[r] + f.one();
  return find_roots(f, coeffs);
}

/// Validated parameters; rho defaults to the first root in canonical order.
inline ToralParams make_toral_params(const FieldElement& sigma, const FieldElement& eps,
                                     std::optional<FieldElement> rho = std::nullopt, std::uint32_t n1 = 1) {
  if (!sigma.same_field(eps)) throw Error(ErrorCode::FieldMismatch, "sigma and eps live in different fields");
  const std::uint64_t r = detail::ipow(sigma.field()->p(), n1);
  ToralParams t;
  t.sigma = sigma;
  t.eps = eps;
  t.n1 = n1;
  t.pi = sigma.pow(r - 1);
  if (sigma.is_zero()) t.pi = sigma.field()->zero();
  if (rho) {
    if (!rho->same_field(sigma)) throw Error(ErrorCode::FieldMismatch, "rho lives in a different field");
    if (!(rho->pow(r) - t.pi * *rho - eps).is_zero())
      throw Error(ErrorCode::InvalidToralParams, "rho^(p^n1) - pi rho - eps must vanish");
    t.rho = *rho;
  } else {
    auto roots = rho_roots(sigma, eps, n1);
    if (roots.empty())
      throw Error(ErrorCode::NoRootInField,
                  "Z^p - pi Z - eps has no root in F_" + sigma.field()->describe() + "; enlarge the field");
    t.rho = roots.front();
  }
  return t;
}

/// Parameters giving third-diamond type mu3 outside the prime field:
/// sigma^p (1/(mu3^p + 1) - 1/(mu3 + 1)) = 1 and rho (mu3 + 1) = sigma.
inline ToralParams params_from_mu3(const FieldElement& mu3) {
  const Field& f = *mu3.field();
  if ((mu3 + f.one()).is_zero()) throw Error(ErrorCode::DenominatorZero, "mu3 = -1 makes mu3 + 1 vanish");
  if (in_prime_field(mu3)) throw Error(ErrorCode::Mu3InPrimeField, "mu3 must lie outside the prime field");
  const FieldElement d = (frobenius(mu3) + f.one()).inverse() - (mu3 + f.one()).inverse();
  const FieldElement sigma = pth_root(d.inverse());
  const FieldElement rho = sigma / (mu3 + f.one());
  return make_toral_params(sigma, f.one(), rho);
}

/// -1 + sigma/rho.
inline FieldElement third_type(const ToralParams& t) { return t.sigma / t.rho - t.sigma.field()->one(); }

/// e0 = y + pi xbar y.
inline Element toral_element(const StructureTable& table, const CartanParams& c, const ToralParams& t) {
  Coeffs v(table.dim(), 0);
  v[monomial_index(c, 0, 1)] = 1;
  v[monomial_index(c, c.tau1(), 1)] = table.field().add(v[monomial_index(c, c.tau1(), 1)], t.pi.code());
  return Element(table, std::move(v));
}

struct EigenLabel {
  std::int64_t r;        // 1 - j
  FieldElement s;        // alpha = r rho + s sigma, s in the subfield of order p^n1
  std::uint32_t s_index; // position of s in canonical order (equals s for n1 = 1)
  FieldElement alpha;
};

struct EigenBasis {
  CartanParams cartan;
  ToralParams params;
  bool partial = false;                  // sigma = 0: one eigenvector per slice
  std::vector<EigenLabel> info;
  std::vector<Coeffs> vectors;           // in monomial coordinates
  StructureTable table;                  // brackets in the eigenbasis

  std::optional<std::size_t> find(std::int64_t r, const FieldElement& alpha) const {
    for (std::size_t a = 0; a < info.size(); ++a)
      if (info[a].r == r && info[a].alpha == alpha) return a;
    return std::nullopt;
  }
  std::size_t index(std::int64_t r, const FieldElement& alpha) const {
    auto a = find(r, alpha);
    if (!a) throw Error(ErrorCode::InvalidArgument, "no eigenvector e[" + std::to_string(r) + "," + alpha.literal() + "]");
    return *a;
  }
  /// X = e[1, rho + sigma], Y = e[2 - q, 2 rho + sigma].
  std::size_t x_index() const { return index(1, params.rho + params.sigma); }
  std::size_t y_index() const {
    const auto& f = *params.rho.field();
    return index(2 - std::int64_t(cartan.q()), params.rho * f.from_int(2) + params.sigma);
  }
};

namespace detail {

inline std::vector<FieldElement> subfield(const Field& f, std::uint32_t n1) {
  const std::uint64_t r = ipow(f.p(), n1);
  std::vector<FieldElement> out;
  for (const auto& a : f.elements())
    if (a.pow(r) == a) out.push_back(a);
  if (out.size() != r)
    throw Error(ErrorCode::InvalidToralParams, "field does not contain a subfield of order " + std::to_string(r));
  return out;
}

}  // namespace detail

/// e[1-j, alpha] = pi j xbar y^(j) + sum_i alpha^i x^(i) y^(j) on H(2;n;Phi(1))
/// (or its eps-deformation), for alpha in (1-j) rho + F_{p^n1} sigma. With
/// sigma = 0 only alpha = (1-j) rho is taken.
inline EigenBasis eigenbasis(const StructureTable& mono, const CartanParams& c, const ToralParams& t) {
  const Field& f = mono.field();
  if (mono.dim() != c.full_dim()) throw Error(ErrorCode::TableMismatch, "table is not on the full monomial basis");
  EigenBasis eb;
  eb.cartan = c;
  eb.params = t;
  eb.partial = t.sigma.is_zero();
  const auto sub = eb.partial ? std::vector<FieldElement>{f.zero()} : detail::subfield(f, c.n1);
  std::vector<std::string> labels;
  for (std::int64_t j = 0; j < std::int64_t(c.q()); ++j) {
    const std::int64_t r = 1 - j;
    for (std::uint32_t si = 0; si < sub.size(); ++si) {
      const FieldElement alpha = t.rho * f.from_int(r) + sub[si] * t.sigma;
      Coeffs v(mono.dim(), 0);
      FieldElement pw = f.one();
      for (std::int64_t i = 0; i <= std::int64_t(c.tau1()); ++i) {
        v[monomial_index(c, i, j)] = pw.code();
        pw *= alpha;
      }
      auto& top = v[monomial_index(c, c.tau1(), j)];
      top = f.add(top, (t.pi * f.from_int(j)).code());
      eb.info.push_back({r, sub[si], si, alpha});
      eb.vectors.push_back(std::move(v));
      labels.push_back("e[" + std::to_string(r) + "," + alpha.literal() + "]");
    }
  }
  eb.table = change_basis(mono, eb.vectors, labels);
  return eb;
}

/// {e0, v} = alpha v for every eigenvector.
inline bool eigen_equation_holds(const StructureTable& mono, const EigenBasis& eb) {
  const Element e0 = toral_element(mono, eb.cartan, eb.params);
  for (std::size_t a = 0; a < eb.vectors.size(); ++a) {
    Coeffs lhs = mono.bracket(e0.coeffs(), eb.vectors[a]);
    Coeffs rhs = eb.vectors[a];
    detail::scale(mono.field(), rhs, eb.info[a].alpha.code());
    if (lhs != rhs) return false;
  }
  return true;
}

/// Compares the eigenbasis table with
/// {e[1-j,a], e[1-l,b]} = (b C(j+l-1, l) - a C(j+l-1, j)) e[2-j-l, a+b],
/// read as zero when 2-j-l is outside [2-q, 1].
inline bool eigen_bracket_check(const EigenBasis& eb) {
  const Field& f = eb.table.field();
  const std::uint32_t p = f.p();
  const std::int64_t q = eb.cartan.q();
  for (std::size_t a = 0; a < eb.info.size(); ++a)
    for (std::size_t b = a + 1; b < eb.info.size(); ++b) {
      const auto& A = eb.info[a];
      const auto& B = eb.info[b];
      const std::int64_t j = 1 - A.r, l = 1 - B.r;
      Coeffs want(eb.table.dim(), 0);
      const std::int64_t rr = 2 - j - l;
      if (rr >= 2 - q && rr <= 1) {
        const FieldElement c = B.alpha * f.from_int(binom_mod_p(j + l - 1, l, p)) -
                               A.alpha * f.from_int(binom_mod_p(j + l - 1, j, p));
        if (!c.is_zero()) {
          auto target = eb.find(rr, A.alpha + B.alpha);
          if (!target) return false;
          want[*target] = c.code();
        }
      }
      if (want != eb.table.basis_bracket(a, b)) return false;
    }
  return true;
}

/// Degree k mod (q-1)p of e[r, r rho + s sigma] with k = r mod (q-1) and
/// k = s mod p, shifted so that X and Y have degree one.
inline DegreeMap grade_finite(const EigenBasis& eb) {
  if (eb.cartan.n1 != 1) throw Error(ErrorCode::InvalidGrading, "the finite grading needs n1 = 1");
  if (eb.partial) throw Error(ErrorCode::InvalidGrading, "the finite grading needs sigma != 0");
  const std::int64_t q = eb.cartan.q(), p = eb.cartan.p;
  DegreeMap d;
  d.modulus = (q - 1) * p;
  for (const auto& e : eb.info) d.degrees.push_back(combine_residues(e.r, e.s_index, q));
  const std::int64_t shift = d.normalize(1 - d.degrees[eb.x_index()]);
  for (auto& k : d.degrees) k = d.normalize(k + shift);
  if (d.degrees[eb.y_index()] != 1)
    throw Error(ErrorCode::InvalidGrading, "no uniform shift puts both X and Y in degree one");
  return d;
}

/// Shift applied by grade_finite (zero whenever (2-q) rho = 2 rho, i.e. always in characteristic p).
inline std::int64_t grade_finite_shift(const EigenBasis& eb) {
  const std::int64_t q = eb.cartan.q(), p = eb.cartan.p;
  const auto& x = eb.info[eb.x_index()];
  const std::int64_t n = (q - 1) * p;
  return (((1 - combine_residues(x.r, x.s_index, q)) % n) + n) % n;
}

/// Grading of the sigma = 0 subalgebra: e[r, r rho] has degree r mod (q-1).
inline DegreeMap grade_sigma_zero(const EigenBasis& eb) {
  const std::int64_t q = eb.cartan.q();
  DegreeMap d;
  d.modulus = q - 1;
  for (const auto& e : eb.info) d.degrees.push_back(d.normalize(e.r));
  return d;
}

}  // namespace thinloop
