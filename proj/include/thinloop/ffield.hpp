#pragma once

// Exact arithmetic in F_p and F_{p^k}.
//
// Elements of F_{p^k} are polynomials of degree < k over F_p reduced modulo a
// fixed monic irreducible modulus. An element is stored as the integer code
// sum_i c_i p^i of its coefficient vector, so the canonical order of field
// elements is the order of their codes.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "thinloop/error.hpp"

namespace thinloop {

/// Largest field on which exhaustive searches (root finding, enumeration) run.
inline constexpr std::uint32_t kExhaustiveFieldBound = 15625;  // 5^6

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on integers
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

// Quotient and remainder of a by a nonzero b.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a[i]) * lead_inv % p);
    q[i - b.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = i - b.size() + 1 + j;
      a[idx] = static_cast<std::uint32_t>((a[idx] + p - std::uint64_t(c) * b[j] % p) % p);
    }
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

// True when the monic polynomial f of degree k has no monic factor of degree 1..k/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_divmod(f, g, p).second.empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FieldElement;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_{p^k} with a fixed modulus. Immutable once created.
class Field {
 public:
  /// Builds F_{p^k}. Without a modulus the lexicographically smallest monic
  /// irreducible polynomial (coefficient list compared from the constant term
  /// upwards) is used. `modulus`, when given, lists k+1 coefficients, constant
  /// term first, and must be monic.
  static FieldPtr create(std::uint32_t p, std::uint32_t k = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    if (!detail::is_prime(p))
      throw Error(ErrorCode::NonPrimeCharacteristic,
                  "characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (detail::ipow(p, k) > (std::uint64_t(1) << 24))
      throw Error(ErrorCode::FieldTooLarge, "field of order " + std::to_string(p) + "^" +
                                                std::to_string(k) + " is not supported");
    std::vector<std::uint32_t> mod;
    if (k > 1) {
      if (modulus) {
        mod = *modulus;
        if (mod.size() != k + 1 || mod.back() != 1)
          throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree k");
        for (auto& c : mod) {
          if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        }
        if (!detail::is_irreducible(mod, p))
          throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
      } else {
        mod = smallest_irreducible(p, k);
      }
    } else if (modulus && !modulus->empty()) {
      const auto& m = *modulus;
      if (m.size() != 2 || m[1] != 1 || m[0] >= p)
        throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree k");
    }
    return FieldPtr(new Field(p, k, std::move(mod)));
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }
  /// k+1 coefficients, constant first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_code(std::uint32_t code) const;
  FieldElement from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<FieldElement> elements() const;

  // Raw operations on codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) return (a + b) % p_;
    if (!add_.empty()) return add_[a * size_ + b];
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    if (k_ == 1) return (p_ - a) % p_;
    if (!neg_.empty()) return neg_[a];
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return r;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    return exp_[(log_[a] + log_[b]) % (size_ - 1)];
  }
  /// Inverse via extended Euclid on polynomial representatives.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "division by zero in F_" + describe());
    if (k_ == 1) return detail::inv_mod(a, p_);
    detail::Poly r0 = modulus_, r1 = to_poly(a), s0{}, s1{1};
    while (r1.size() > 1) {
      auto [q, rem] = detail::poly_divmod(r0, r1, p_);
      detail::Poly s2 = detail::poly_sub(s0, detail::poly_mul(q, s1, p_), p_);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant since the modulus is irreducible
    const std::uint32_t c = detail::inv_mod(r1[0], p_);
    detail::Poly out = detail::poly_mul(s1, detail::Poly{c}, p_);
    return from_poly(out);
  }

  std::vector<std::uint32_t> coords(std::uint32_t code) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  }

  std::string describe() const {
    std::ostringstream os;
    os << p_;
    if (k_ > 1) os << "^" << k_;
    return os.str();
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
      : p_(p), k_(k), size_(static_cast<std::uint32_t>(detail::ipow(p, k))), modulus_(std::move(modulus)) {
    if (k_ > 1) {
      build_log_tables();
      build_add_tables();
    }
  }

  static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    // Lexicographic order on (c_0, c_1, ..., c_{k-1}): c_0 varies slowest.
    const std::uint64_t count = detail::ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      detail::Poly f(k + 1, 0);
      std::uint64_t c = idx;
      for (std::uint32_t i = k; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (detail::is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
  }

  detail::Poly to_poly(std::uint32_t code) const {
    detail::Poly r = coords(code);
    detail::trim(r);
    return r;
  }

  std::uint32_t from_poly(const detail::Poly& poly) const {
    std::uint32_t r = 0, place = 1;
    for (std::size_t i = 0; i < poly.size() && i < k_; ++i) {
      r += poly[i] * place;
      place *= p_;
    }
    return r;
  }

  std::uint32_t poly_mul_code(std::uint32_t a, std::uint32_t b) const {
    auto prod = detail::poly_mul(to_poly(a), to_poly(b), p_);
    return from_poly(detail::poly_divmod(prod, modulus_, p_).second);
  }

  void build_log_tables() {
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    for (std::uint32_t g = 2; g < size_; ++g) {
      std::uint32_t x = 1, order = 0;
      do {
        exp_[order++] = x;
        x = poly_mul_code(x, g);
      } while (x != 1 && order < size_ - 1);
      if (x == 1 && order == size_ - 1) {
        for (std::uint32_t e = 0; e < size_ - 1; ++e) log_[exp_[e]] = e;
        return;
      }
    }
    throw Error(ErrorCode::ReducibleModulus, "no primitive element found");
  }

  void build_add_tables() {
    if (size_ > kAddTableBound) return;
    std::vector<std::uint32_t> add(size_ * size_), neg(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      neg[a] = this->neg(a);
      for (std::uint32_t b = 0; b < size_; ++b) add[a * size_ + b] = this->add(a, b);
    }
    add_ = std::move(add);
    neg_ = std::move(neg);
  }

  static constexpr std::uint32_t kAddTableBound = 729;

  std::uint32_t p_, k_, size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_, log_, add_, neg_;
};

/// A value in a Field. Cheap to copy; the Field must outlive it.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field() const noexcept { return field_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }
  std::vector<std::uint32_t> coords() const { return field_->coords(code_); }

  FieldElement operator+(const FieldElement& o) const { return {check(o), field_->add(code_, o.code_)}; }
  FieldElement operator-(const FieldElement& o) const { return {check(o), field_->sub(code_, o.code_)}; }
  FieldElement operator*(const FieldElement& o) const { return {check(o), field_->mul(code_, o.code_)}; }
  FieldElement operator/(const FieldElement& o) const {
    check(o);
    return {field_, field_->mul(code_, field_->inv(o.code_))};
  }
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const { return {field_, field_->inv(code_)}; }

  FieldElement pow(std::uint64_t e) const {
    FieldElement base = *this, r = field_->one();
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  /// Multiplication by an integer (repeated addition), reduced mod p.
  FieldElement times(std::int64_t n) const {
    return *this * field_->from_int(n);
  }

  bool operator==(const FieldElement& o) const noexcept {
    return code_ == o.code_ && same_field(o);
  }
  bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }

  bool same_field(const FieldElement& o) const noexcept {
    return field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_);
  }

  /// Coefficient-list literal "c0,c1,...", the command-line syntax.
  std::string literal() const {
    auto c = coords();
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    return s;
  }

 private:
  const Field* check(const FieldElement& o) const {
    if (!same_field(o)) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
    return field_;
  }

  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

inline FieldElement Field::zero() const { return {this, 0}; }
inline FieldElement Field::one() const { return {this, 1}; }
inline FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}
inline FieldElement Field::from_code(std::uint32_t code) const {
  if (code >= size_) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  return {this, code};
}
inline FieldElement Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > k_)
    throw Error(ErrorCode::InvalidArgument, "too many coordinates for F_" + describe());
  std::uint32_t code = 0, place = 1;
  for (auto c : coords) {
    if (c >= p_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    code += c * place;
    place *= p_;
  }
  return {this, code};
}
inline std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> all;
  all.reserve(size_);
  for (std::uint32_t c = 0; c < size_; ++c) all.emplace_back(this, c);
  return all;
}

/// Parses the literal "c0,c1,..." (missing high coordinates are zero).
inline FieldElement parse_element(const Field& field, const std::string& literal) {
  std::vector<std::uint32_t> coords;
  std::stringstream ss(literal);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      long long v = std::stoll(part);
      coords.push_back(static_cast<std::uint32_t>(((v % field.p()) + field.p()) % field.p()));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad field element literal '" + literal + "'");
    }
  }
  return field.from_coords(coords);
}

// ---------------------------------------------------------------------------

/// a^p.
inline FieldElement frobenius(const FieldElement& a) { return a.pow(a.field()->p()); }

/// Inverse Frobenius, a^(p^(k-1)).
inline FieldElement pth_root(const FieldElement& a) {
  return a.pow(detail::ipow(a.field()->p(), a.field()->k() - 1));
}

inline bool in_prime_field(const FieldElement& a) { return frobenius(a) == a; }

/// Evaluates the polynomial with coefficients `coeffs` (constant first) at x.
inline FieldElement evaluate(std::span<const FieldElement> coeffs, const FieldElement& x) {
  FieldElement acc = x.field()->zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

/// All roots of a nonzero polynomial, by evaluation at every field element,
/// in canonical element order.
inline std::vector<FieldElement> find_roots(const Field& field, std::span<const FieldElement> coeffs) {
  if (field.size() > kExhaustiveFieldBound)
    throw Error(ErrorCode::FieldTooLarge,
                "exhaustive root search is limited to " + std::to_string(kExhaustiveFieldBound) + " elements");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return c.is_zero(); }))
    throw Error(ErrorCode::InvalidArgument, "root search on the zero polynomial");
  std::vector<FieldElement> roots;
  for (const auto& x : field.elements())
    if (evaluate(coeffs, x).is_zero()) roots.push_back(x);
  return roots;
}

inline std::uint32_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return static_cast<std::uint32_t>(d);
  return static_cast<std::uint32_t>(n);
}

/// The unique k in [0, (q-1)p) with k = r mod (q-1) and k = s mod p, where p
/// is the characteristic underlying the prime power q.
inline std::int64_t combine_residues(std::int64_t r, std::int64_t s, std::int64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be a prime power >= 2");
  const std::int64_t p = smallest_prime_factor(static_cast<std::uint64_t>(q));
  const std::int64_t m = q - 1;
  auto mod = [](std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; };
  const std::int64_t rr = mod(r, m), ss = mod(s, p);
  for (std::int64_t k = rr; k < m * p; k += m)
    if (k % p == ss) return k;
  throw Error(ErrorCode::InvalidArgument, "q must be a power of a prime");
}

}  // namespace thinloop
