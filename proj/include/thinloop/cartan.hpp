#pragma once

// Concrete algebras: Zassenhaus algebras W(1;n) in the E_i and e_alpha bases,
// the graded Hamiltonian algebra H(2;n)^(2), H(2;n;Phi(tau))^(1),
// H(2;n;Phi(1)) with a deformation parameter eps, and Albert-Frank algebras.
//
// Hamiltonian algebras are realized on divided-power monomials
// x^(i) y^(j), 0 <= i < p^n1, 0 <= j < p^n2, ordered row-major in (i, j).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/liealg.hpp"

namespace thinloop {

/// C(a, b) mod p by Lucas' theorem; zero when b < 0, b > a or a < 0.
inline std::uint32_t binom_mod_p(std::int64_t a, std::int64_t b, std::uint32_t p) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::uint64_t result = 1;
  while (a > 0 || b > 0) {
    const std::int64_t ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // small binomial of digits
    std::uint64_t num = 1, den = 1;
    for (std::int64_t t = 0; t < bd; ++t) {
      num = num * static_cast<std::uint64_t>(ad - t) % p;
      den = den * static_cast<std::uint64_t>(t + 1) % p;
    }
    result = result * num % p * detail::inv_mod(static_cast<std::uint32_t>(den), p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(result);
}

inline std::uint32_t coeff_N(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l, std::uint32_t p) {
  const std::uint64_t a = std::uint64_t(binom_mod_p(i + k - 1, i, p)) * binom_mod_p(j + l - 1, j - 1, p) % p;
  const std::uint64_t b = std::uint64_t(binom_mod_p(i + k - 1, i - 1, p)) * binom_mod_p(j + l - 1, j, p) % p;
  return static_cast<std::uint32_t>((a + p - b) % p);
}

inline std::uint32_t coeff_Nprime(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l, std::uint32_t p) {
  const std::uint64_t a = std::uint64_t(binom_mod_p(i + k - 1, i, p)) * binom_mod_p(j + l - 1, l, p) % p;
  const std::uint64_t b = std::uint64_t(binom_mod_p(i + k - 1, k, p)) * binom_mod_p(j + l - 1, j, p) % p;
  return static_cast<std::uint32_t>((a + p - b) % p);
}

struct CartanParams {
  std::uint32_t p = 3;
  std::uint32_t n1 = 1;
  std::uint32_t n2 = 1;

  std::uint32_t r() const { return static_cast<std::uint32_t>(detail::ipow(p, n1)); }  // p^n1
  std::uint32_t q() const { return static_cast<std::uint32_t>(detail::ipow(p, n2)); }  // p^n2
  std::uint32_t tau1() const { return r() - 1; }
  std::uint32_t tau2() const { return q() - 1; }
  std::uint32_t full_dim() const { return r() * q(); }
};

struct Monomial {
  std::int64_t i = 0;
  std::int64_t j = 0;
  bool operator==(const Monomial&) const = default;
};

inline std::string monomial_label(const Monomial& m) {
  return "x" + std::to_string(m.i) + "y" + std::to_string(m.j);
}

/// Row-major position of x^(i) y^(j) among all monomials.
inline std::size_t monomial_index(const CartanParams& c, std::int64_t i, std::int64_t j) {
  return static_cast<std::size_t>(i) * c.q() + static_cast<std::size_t>(j);
}

/// Divided-power polynomials in x, y truncated at tau, as dense coefficient
/// grids. Used as an independent route to the Poisson brackets.
class DividedPowers {
 public:
  DividedPowers(const Field& f, CartanParams c) : f_(f), c_(c) {}

  Coeffs zero() const { return Coeffs(c_.full_dim(), 0); }
  Coeffs monomial(std::int64_t i, std::int64_t j, std::uint32_t coeff = 1) const {
    Coeffs v = zero();
    if (in_range(i, j)) v[monomial_index(c_, i, j)] = coeff;
    return v;
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    Coeffs out = zero();
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!a[s]) continue;
      for (std::size_t t = 0; t < b.size(); ++t) {
        if (!b[t]) continue;
        const std::int64_t i = s / c_.q() + t / c_.q(), j = s % c_.q() + t % c_.q();
        if (!in_range(i, j)) continue;
        const std::uint32_t bin = f_.mul(f_.from_int(binom_mod_p(i, s / c_.q(), c_.p)).code(),
                                         f_.from_int(binom_mod_p(j, s % c_.q(), c_.p)).code());
        auto& o = out[monomial_index(c_, i, j)];
        o = f_.add(o, f_.mul(bin, f_.mul(a[s], b[t])));
      }
    }
    return out;
  }

  /// Partial derivative in x (var = 1) or y (var = 2).
  Coeffs partial(const Coeffs& a, int var) const {
    Coeffs out = zero();
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!a[s]) continue;
      std::int64_t i = s / c_.q(), j = s % c_.q();
      (var == 1 ? i : j) -= 1;
      if (in_range(i, j)) out[monomial_index(c_, i, j)] = a[s];
    }
    return out;
  }

  Coeffs sub(Coeffs a, const Coeffs& b) const {
    detail::axpy(f_, a, f_.neg(1), b);
    return a;
  }

  /// d2(f) d1(g) - d1(f) d2(g)
  Coeffs poisson(const Coeffs& a, const Coeffs& b) const {
    return sub(mul(partial(a, 2), partial(b, 1)), mul(partial(a, 1), partial(b, 2)));
  }

  /// poisson(f, g) + eps * xbar * (d2(f) g - f d2(g))
  Coeffs poisson_phi1(const Coeffs& a, const Coeffs& b, const FieldElement& eps) const {
    Coeffs extra = mul(monomial(c_.tau1(), 0), sub(mul(partial(a, 2), b), mul(a, partial(b, 2))));
    Coeffs out = poisson(a, b);
    detail::axpy(f_, out, eps.code(), extra);
    return out;
  }

  bool in_range(std::int64_t i, std::int64_t j) const {
    return i >= 0 && j >= 0 && i <= std::int64_t(c_.tau1()) && j <= std::int64_t(c_.tau2());
  }

 private:
  const Field& f_;
  CartanParams c_;
};

namespace detail {

inline FieldPtr field_or_prime(const std::optional<FieldPtr>& field, std::uint32_t p) {
  if (field && *field) {
    if ((*field)->p() != p)
      throw Error(ErrorCode::FieldMismatch, "field characteristic differs from p");
    return *field;
  }
  return Field::create(p);
}

}  // namespace detail

/// W(1;n) on E_{-1}, ..., E_{p^n-2} (E_i has index i+1).
inline StructureTable build_W1n(std::uint32_t p, std::uint32_t n, std::optional<FieldPtr> field = std::nullopt) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  FieldPtr f = detail::field_or_prime(field, p);
  const std::int64_t q = static_cast<std::int64_t>(detail::ipow(p, n));
  std::vector<std::string> labels;
  for (std::int64_t i = -1; i <= q - 2; ++i) labels.push_back("E_" + std::to_string(i));
  StructureTable t(f, labels);
  for (std::int64_t i = -1; i <= q - 2; ++i)
    for (std::int64_t j = i + 1; j <= q - 2; ++j) {
      if (i + j < -1 || i + j > q - 2) continue;
      const std::int64_t c = std::int64_t(binom_mod_p(i + j + 1, j, p)) - binom_mod_p(i + j + 1, i, p);
      t.add_term(i + 1, j + 1, i + j + 1, f->from_int(c));
    }
  return t;
}

/// Basis E_i, i != p^n - 2, of the derived algebra W(1;n)^(1) (all of W(1;n) for p odd).
inline StructureTable build_W1n_derived(std::uint32_t p, std::uint32_t n, std::optional<FieldPtr> field = std::nullopt) {
  StructureTable w = build_W1n(p, n, field);
  if (p != 2) return w;
  std::vector<Coeffs> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i + 1 < w.dim(); ++i) {
    basis.push_back(Element::basis(w, i).coeffs());
    labels.push_back(w.label(i));
  }
  return change_basis(w, basis, labels);
}

struct ZassenhausGroupBasis {
  StructureTable table;                // on e_alpha, alpha in canonical field order
  std::vector<Coeffs> transition;      // e_alpha in E_i coordinates
};

inline std::string element_label(const std::string& prefix, const FieldElement& a) {
  return prefix + "[" + a.literal() + "]";
}

/// W(1;n) on the basis e_alpha, alpha in F_{p^n}, with [e_a, e_b] = (b - a) e_{a+b},
/// together with e_alpha = E_{q-2} + sum_{i=-1}^{q-2} alpha^(i+1) E_i (0^0 = 1).
inline ZassenhausGroupBasis zassenhaus_group_basis(std::uint32_t p, std::uint32_t n, const FieldPtr& field) {
  if (field->p() != p || field->size() != detail::ipow(p, n))
    throw Error(ErrorCode::FieldSizeMismatch, "the index field must have exactly p^n elements");
  const auto elems = field->elements();
  std::vector<std::string> labels;
  for (const auto& a : elems) labels.push_back(element_label("e", a));
  StructureTable t(field, labels);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      t.add_term(a, b, (elems[a] + elems[b]).code(), elems[b] - elems[a]);
  std::vector<Coeffs> rows;
  const std::size_t q = elems.size();
  for (const auto& a : elems) {
    Coeffs row(q, 0);
    FieldElement pw = field->one();  // alpha^(i+1), starting at 0^0 = 1
    for (std::size_t idx = 0; idx < q; ++idx) {
      row[idx] = pw.code();
      pw *= a;
    }
    row[q - 1] = field->add(row[q - 1], 1);
    rows.push_back(std::move(row));
  }
  return {std::move(t), std::move(rows)};
}

/// H(2;n)^(2): monomials 0 < (i,j) < tau, bracket N(i,j,k,l) x^(i+k-1) y^(j+l-1).
inline StructureTable build_H2_second_derived(std::uint32_t p, std::uint32_t n1, std::uint32_t n2,
                                              std::optional<FieldPtr> field = std::nullopt) {
  FieldPtr f = detail::field_or_prime(field, p);
  CartanParams c{p, n1, n2};
  std::vector<Monomial> mons;
  std::vector<std::int64_t> pos(c.full_dim(), -1);
  for (std::int64_t i = 0; i <= c.tau1(); ++i)
    for (std::int64_t j = 0; j <= c.tau2(); ++j) {
      if ((i == 0 && j == 0) || (i == c.tau1() && j == c.tau2())) continue;
      pos[monomial_index(c, i, j)] = static_cast<std::int64_t>(mons.size());
      mons.push_back({i, j});
    }
  std::vector<std::string> labels;
  for (const auto& m : mons) labels.push_back(monomial_label(m));
  StructureTable t(f, labels);
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (std::size_t b = a + 1; b < mons.size(); ++b) {
      const auto [i, j] = mons[a];
      const auto [k, l] = mons[b];
      const std::int64_t oi = i + k - 1, oj = j + l - 1;
      if (oi < 0 || oj < 0 || oi > c.tau1() || oj > c.tau2()) continue;
      const std::uint32_t coef = coeff_N(i, j, k, l, p);
      if (coef == 0 || (oi == 0 && oj == 0)) continue;
      const std::int64_t target = pos[monomial_index(c, oi, oj)];
      if (target < 0) throw Error(ErrorCode::InvalidArgument, "bracket leaves H(2;n)^(2)");
      t.add_term(a, b, static_cast<std::size_t>(target), coef);
    }
  return t;
}

/// H(2;n;Phi(tau))^(1) modulo F1: monomials other than 1, bracket
/// N(i,j,k,l) (1 + xbar ybar) x^(i+k-1) y^(j+l-1).
inline StructureTable build_H2_phi_tau_derived(std::uint32_t p, std::uint32_t n1, std::uint32_t n2,
                                               std::optional<FieldPtr> field = std::nullopt) {
  FieldPtr f = detail::field_or_prime(field, p);
  CartanParams c{p, n1, n2};
  std::vector<Monomial> mons;
  for (std::int64_t i = 0; i <= c.tau1(); ++i)
    for (std::int64_t j = 0; j <= c.tau2(); ++j)
      if (i || j) mons.push_back({i, j});
  std::vector<std::string> labels;
  for (const auto& m : mons) labels.push_back(monomial_label(m));
  StructureTable t(f, labels);
  const std::size_t top = mons.size() - 1;  // xbar ybar
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (std::size_t b = a + 1; b < mons.size(); ++b) {
      const auto [i, j] = mons[a];
      const auto [k, l] = mons[b];
      const std::int64_t oi = i + k - 1, oj = j + l - 1;
      if (oi < 0 || oj < 0 || oi > c.tau1() || oj > c.tau2()) continue;
      const std::uint32_t coef = coeff_N(i, j, k, l, p);
      if (coef == 0) continue;
      // (1 + xbar ybar) m is m for m != 1, and xbar ybar modulo F1 for m = 1
      const std::size_t target = (oi == 0 && oj == 0) ? top : monomial_index(c, oi, oj) - 1;
      t.add_term(a, b, target, coef);
    }
  return t;
}

/// H(2;n;Phi(1)) on all monomials (the constant is index 0), with the
/// pure-y brackets scaled by eps. eps = 1 is H(2;n;Phi(1)); eps = 0 is a
/// central extension of H(2;n)^(1).
inline StructureTable build_H2_phi1(std::uint32_t p, std::uint32_t n1, std::uint32_t n2,
                                    std::optional<FieldPtr> field = std::nullopt,
                                    std::optional<FieldElement> eps = std::nullopt) {
  FieldPtr f = detail::field_or_prime(field, p);
  const FieldElement e = eps ? *eps : f->one();
  if (!(*e.field() == *f)) throw Error(ErrorCode::FieldMismatch, "eps lives in a different field");
  CartanParams c{p, n1, n2};
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i <= c.tau1(); ++i)
    for (std::int64_t j = 0; j <= c.tau2(); ++j) labels.push_back(monomial_label({i, j}));
  StructureTable t(f, labels);
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::int64_t i = a / c.q(), j = a % c.q(), k = b / c.q(), l = b % c.q();
      const std::int64_t oj = j + l - 1;
      if (oj < 0 || oj > c.tau2()) continue;
      if (i + k > 0) {
        const std::int64_t oi = i + k - 1;
        if (oi > c.tau1()) continue;
        t.add_term(a, b, monomial_index(c, oi, oj), coeff_N(i, j, k, l, p));
      } else {
        const std::int64_t v = std::int64_t(binom_mod_p(oj, l, p)) - binom_mod_p(oj, j, p);
        t.add_term(a, b, monomial_index(c, c.tau1(), oj), (f->from_int(v) * e).code());
      }
    }
  return t;
}

/// Albert-Frank algebra on u_alpha, alpha in `group`:
/// [u_a, u_b] = (b - a + a Theta(b) - b Theta(a)) u_{a+b}.
inline StructureTable build_albert_frank(const FieldPtr& fp, const std::vector<FieldElement>& group,
                                         const std::vector<FieldElement>& theta) {
  if (group.empty() || theta.size() != group.size())
    throw Error(ErrorCode::InvalidArgument, "theta must give one value per group element");
  const Field& f = *fp;
  std::vector<std::int64_t> pos(f.size(), -1);
  for (std::size_t a = 0; a < group.size(); ++a) {
    if (pos[group[a].code()] >= 0) throw Error(ErrorCode::InvalidArgument, "repeated group element");
    pos[group[a].code()] = static_cast<std::int64_t>(a);
  }
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = 0; b < group.size(); ++b) {
      const std::int64_t s = pos[(group[a] + group[b]).code()];
      if (s < 0) throw Error(ErrorCode::NotAdditivelyClosed, "group is not closed under addition");
      if (theta[s] != theta[a] + theta[b]) throw Error(ErrorCode::ThetaNotAdditive, "theta is not additive");
    }
  std::vector<std::string> labels;
  for (const auto& g : group) labels.push_back(element_label("u", g));
  StructureTable t(fp, labels);
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = a + 1; b < group.size(); ++b) {
      const FieldElement &x = group[a], &y = group[b];
      const FieldElement c = y - x + x * theta[b] - y * theta[a];
      t.add_term(a, b, static_cast<std::size_t>(pos[(x + y).code()]), c.code());
    }
  return t;
}

}  // namespace thinloop
