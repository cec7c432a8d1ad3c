#pragma once

// Finite-dimensional Lie algebras over a finite field, given by structure
// constants on a labeled basis. Row reduction is the only linear-algebra
// primitive; subspaces are kept in reduced row echelon form, so two subspaces
// are equal exactly when their echelon matrices are.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"

namespace thinloop {

/// Dense coordinate vector of field-element codes.
using Coeffs = std::vector<std::uint32_t>;

struct Term {
  std::uint32_t index;
  std::uint32_t coeff;
  bool operator==(const Term&) const = default;
};
/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

namespace detail {

// y += a * x
inline void axpy(const Field& f, Coeffs& y, std::uint32_t a, const Coeffs& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = f.add(y[i], f.mul(a, x[i]));
}

inline void scale(const Field& f, Coeffs& y, std::uint32_t a) {
  for (auto& c : y) c = f.mul(a, c);
}

inline bool is_zero(const Coeffs& v) {
  for (auto c : v)
    if (c) return false;
  return true;
}

struct Echelon {
  std::vector<Coeffs> rows;
  std::vector<std::size_t> pivots;
};

// Eliminates the pivot columns of `e` from v in place.
inline void reduce_by(const Field& f, const Echelon& e, Coeffs& v) {
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const std::uint32_t c = v[e.pivots[r]];
    if (c) axpy(f, v, f.neg(c), e.rows[r]);
  }
}

// Adds v to a reduced echelon form, keeping it reduced. Returns false when v
// already lies in the span.
inline bool insert_row(const Field& f, Echelon& e, Coeffs v) {
  reduce_by(f, e, v);
  std::size_t piv = 0;
  while (piv < v.size() && v[piv] == 0) ++piv;
  if (piv == v.size()) return false;
  scale(f, v, f.inv(v[piv]));
  for (auto& row : e.rows)
    if (row[piv]) axpy(f, row, f.neg(row[piv]), v);
  auto pos = std::lower_bound(e.pivots.begin(), e.pivots.end(), piv) - e.pivots.begin();
  e.pivots.insert(e.pivots.begin() + pos, piv);
  e.rows.insert(e.rows.begin() + pos, std::move(v));
  return true;
}

inline Echelon rref(const Field& f, const std::vector<Coeffs>& rows) {
  Echelon e;
  for (const auto& r : rows) insert_row(f, e, r);
  return e;
}

// Basis of {c : sum_r c_r rows[r] = 0}.
inline std::vector<Coeffs> left_kernel(const Field& f, const std::vector<Coeffs>& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  std::vector<Coeffs> aug;
  aug.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    Coeffs v(ncols + m, 0);
    std::copy(rows[r].begin(), rows[r].end(), v.begin());
    v[ncols + r] = 1;
    aug.push_back(std::move(v));
  }
  Echelon e = rref(f, aug);
  std::vector<Coeffs> ker;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] < ncols) continue;
    ker.emplace_back(e.rows[r].begin() + ncols, e.rows[r].end());
  }
  return ker;
}

}  // namespace detail

/// Structure constants on a labeled basis. Only brackets [b_i, b_j] with
/// i < j are stored; [b_j, b_i] = -[b_i, b_j] and [b_i, b_i] = 0.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(FieldPtr field, std::vector<std::string> labels)
      : field_(std::move(field)), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

  std::size_t dim() const noexcept { return labels_.size(); }
  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Stored product for i < j.
  const SparseVec& stored(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Adds c * b_k to [b_i, b_j]; i > j is handled by antisymmetry.
  void add_term(std::size_t i, std::size_t j, std::size_t k, std::uint32_t c) {
    if (i == j || c == 0) return;
    if (i > j) {
      std::swap(i, j);
      c = field_->neg(c);
    }
    SparseVec& v = table_[i * dim() + j];
    auto it = std::lower_bound(v.begin(), v.end(), k, [](const Term& t, std::size_t idx) { return t.index < idx; });
    if (it != v.end() && it->index == k) {
      it->coeff = field_->add(it->coeff, c);
      if (it->coeff == 0) v.erase(it);
    } else {
      v.insert(it, Term{static_cast<std::uint32_t>(k), c});
    }
  }

  void add_term(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) { add_term(i, j, k, c.code()); }

  /// Sets [b_i, b_j] from a dense vector (i != j).
  void set_bracket(std::size_t i, std::size_t j, const Coeffs& v) {
    if (i > j) {
      Coeffs w(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) w[k] = field_->neg(v[k]);
      return set_bracket(j, i, w);
    }
    if (i == j) throw Error(ErrorCode::InvalidArgument, "diagonal brackets are zero by definition");
    SparseVec& s = table_[i * dim() + j];
    s.clear();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) s.push_back(Term{static_cast<std::uint32_t>(k), v[k]});
  }

  /// [b_i, b_j] as a dense vector.
  Coeffs basis_bracket(std::size_t i, std::size_t j) const {
    Coeffs out(dim(), 0);
    if (i == j) return out;
    const bool flip = i > j;
    for (const Term& t : flip ? stored(j, i) : stored(i, j)) out[t.index] = flip ? field_->neg(t.coeff) : t.coeff;
    return out;
  }

  /// Bilinear extension to dense vectors.
  Coeffs bracket(const Coeffs& u, const Coeffs& v) const {
    const Field& f = *field_;
    Coeffs out(dim(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j] || i == j) continue;
        std::uint32_t c = f.mul(u[i], v[j]);
        const SparseVec* s;
        if (i < j) {
          s = &stored(i, j);
        } else {
          s = &stored(j, i);
          c = f.neg(c);
        }
        for (const Term& t : *s) out[t.index] = f.add(out[t.index], f.mul(c, t.coeff));
      }
    }
    return out;
  }

  /// [b_i, v], using the sparsity of a single basis vector.
  Coeffs bracket_basis_left(std::size_t i, const Coeffs& v) const {
    const Field& f = *field_;
    Coeffs out(dim(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j] || i == j) continue;
      std::uint32_t c = v[j];
      const SparseVec* s;
      if (i < j) {
        s = &stored(i, j);
      } else {
        s = &stored(j, i);
        c = f.neg(c);
      }
      for (const Term& t : *s) out[t.index] = f.add(out[t.index], f.mul(c, t.coeff));
    }
    return out;
  }

  std::size_t nonzero_products() const {
    std::size_t n = 0;
    for (const auto& s : table_) n += !s.empty();
    return n;
  }

  /// Same field and identical structure constants (labels ignored).
  bool same_constants(const StructureTable& o) const {
    return dim() == o.dim() && *field_ == *o.field_ && table_ == o.table_;
  }

 private:
  FieldPtr field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

/// An element of the algebra described by a table.
class Element {
 public:
  Element() = default;
  Element(const StructureTable& t, Coeffs c) : table_(&t), c_(std::move(c)) {
    if (c_.size() != t.dim()) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  }
  static Element zero(const StructureTable& t) { return Element(t, Coeffs(t.dim(), 0)); }
  static Element basis(const StructureTable& t, std::size_t i, std::uint32_t c = 1) {
    Coeffs v(t.dim(), 0);
    v.at(i) = c;
    return Element(t, std::move(v));
  }

  const StructureTable& table() const { return *table_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  FieldElement operator[](std::size_t i) const { return {&table_->field(), c_.at(i)}; }
  bool is_zero() const { return detail::is_zero(c_); }

  Element operator+(const Element& o) const {
    check(o);
    Coeffs r = c_;
    detail::axpy(table_->field(), r, 1, o.c_);
    return Element(*table_, std::move(r));
  }
  Element operator-(const Element& o) const {
    check(o);
    Coeffs r = c_;
    detail::axpy(table_->field(), r, table_->field().neg(1), o.c_);
    return Element(*table_, std::move(r));
  }
  Element operator*(const FieldElement& a) const {
    Coeffs r = c_;
    detail::scale(table_->field(), r, a.code());
    return Element(*table_, std::move(r));
  }
  bool operator==(const Element& o) const { return table_ == o.table_ && c_ == o.c_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      if (!s.empty()) s += " + ";
      FieldElement a{&table_->field(), c_[i]};
      if (!a.is_one()) s += "(" + a.literal() + ")*";
      s += table_->label(i);
    }
    return s.empty() ? "0" : s;
  }

  void check(const Element& o) const {
    if (table_ != o.table_) throw Error(ErrorCode::TableMismatch, "elements belong to different tables");
  }

 private:
  const StructureTable* table_ = nullptr;
  Coeffs c_;
};

inline Element operator*(const FieldElement& a, const Element& u) { return u * a; }

inline Element bracket(const Element& u, const Element& v) {
  u.check(v);
  return Element(u.table(), u.table().bracket(u.coeffs(), v.coeffs()));
}

/// Left-normed bracket [u, v_1, v_2, ...] = [[[u, v_1], v_2], ...].
inline Element bracket(const Element& u, std::initializer_list<Element> vs) {
  Element r = u;
  for (const auto& v : vs) r = bracket(r, v);
  return r;
}

/// A subspace of the underlying vector space of a table, kept in reduced
/// row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const StructureTable& t) : table_(&t) {}

  static Subspace span(const StructureTable& t, const std::vector<Coeffs>& vectors) {
    Subspace s(t);
    for (const auto& v : vectors) s.add(v);
    return s;
  }
  static Subspace span(const StructureTable& t, const std::vector<Element>& elems) {
    Subspace s(t);
    for (const auto& e : elems) s.add(e.coeffs());
    return s;
  }
  static Subspace full(const StructureTable& t) {
    Subspace s(t);
    for (std::size_t i = 0; i < t.dim(); ++i) s.add(Element::basis(t, i).coeffs());
    return s;
  }
  static Subspace basis_span(const StructureTable& t, const std::vector<std::size_t>& indices) {
    Subspace s(t);
    for (auto i : indices) s.add(Element::basis(t, i).coeffs());
    return s;
  }

  /// Adds a vector; returns true when the dimension grew.
  bool add(const Coeffs& v) {
    if (v.size() != table_->dim()) throw Error(ErrorCode::InvalidArgument, "vector has wrong length");
    return detail::insert_row(table_->field(), ech_, v);
  }

  const StructureTable& table() const { return *table_; }
  std::size_t dim() const noexcept { return ech_.rows.size(); }
  std::size_t ambient_dim() const noexcept { return table_->dim(); }
  bool is_zero() const noexcept { return ech_.rows.empty(); }
  const std::vector<Coeffs>& rows() const noexcept { return ech_.rows; }
  const std::vector<std::size_t>& pivots() const noexcept { return ech_.pivots; }
  Element vector(std::size_t r) const { return Element(*table_, ech_.rows.at(r)); }
  std::vector<Element> basis() const {
    std::vector<Element> b;
    for (const auto& r : ech_.rows) b.emplace_back(*table_, r);
    return b;
  }

  /// v minus its projection along the pivot columns.
  Coeffs reduce(Coeffs v) const {
    detail::reduce_by(table_->field(), ech_, v);
    return v;
  }
  bool contains(const Coeffs& v) const { return detail::is_zero(reduce(v)); }
  bool contains(const Element& v) const { return contains(v.coeffs()); }
  bool contains(const Subspace& o) const {
    for (const auto& r : o.rows())
      if (!contains(r)) return false;
    return true;
  }

  /// Coordinates of v with respect to rows(); v must lie in the subspace.
  Coeffs coordinates(const Coeffs& v) const {
    if (!contains(v)) throw Error(ErrorCode::InvalidArgument, "vector is not in the subspace");
    Coeffs c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[ech_.pivots[r]];
    return c;
  }

  bool operator==(const Subspace& o) const { return ech_.rows == o.ech_.rows; }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& r : b.rows()) s.add(r);
    return s;
  }

  static Subspace intersection(const Subspace& a, const Subspace& b) {
    // c·[A;B] = 0 gives a-part combinations lying in both.
    std::vector<Coeffs> stacked = a.rows();
    for (const auto& r : b.rows()) stacked.push_back(r);
    Subspace out(a.table());
    for (const auto& c : detail::left_kernel(a.table().field(), stacked, a.ambient_dim())) {
      Coeffs v(a.ambient_dim(), 0);
      for (std::size_t r = 0; r < a.dim(); ++r) detail::axpy(a.table().field(), v, c[r], a.rows()[r]);
      out.add(v);
    }
    return out;
  }

 private:
  const StructureTable* table_ = nullptr;
  detail::Echelon ech_;
};

// ---------------------------------------------------------------------------

struct ValidationReport {
  bool ok = true;
  bool encoding_ok = true;
  std::size_t triples_checked = 0;
  std::vector<std::array<std::size_t, 3>> violations;  // first 10
};

/// Checks the storage encoding and the Jacobi identity on all basis triples.
inline ValidationReport validate_table(const StructureTable& t) {
  ValidationReport rep;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVec& s = t.stored(i, j);
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (s[a].coeff == 0 || s[a].coeff >= t.field().size() || s[a].index >= n ||
            (a > 0 && s[a - 1].index >= s[a].index))
          rep.encoding_ok = false;
      }
    }
  rep.ok = rep.encoding_ok;
  std::vector<Coeffs> basis_products(n * n);
  auto prod = [&](std::size_t i, std::size_t j) -> const Coeffs& {
    Coeffs& c = basis_products[i * n + j];
    if (c.empty()) c = t.basis_bracket(i, j);
    return c;
  };
  const Field& f = t.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++rep.triples_checked;
        // negated Jacobi sum [c,[a,b]] + [a,[b,c]] + [b,[c,a]]
        Coeffs s = t.bracket_basis_left(k, prod(i, j));
        Coeffs s2 = t.bracket_basis_left(i, prod(j, k));
        Coeffs s3 = t.bracket_basis_left(j, prod(k, i));
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          std::uint32_t v = f.add(f.add(s[m], s2[m]), s3[m]);
          if (v) {
            zero = false;
            break;
          }
        }
        if (!zero) {
          rep.ok = false;
          if (rep.violations.size() < 10) rep.violations.push_back({i, j, k});
        }
      }
  return rep;
}

/// Smallest bracket-closed subspace containing the generators.
inline Subspace subalgebra_generated(const StructureTable& t, const std::vector<Element>& gens) {
  Subspace s(t);
  std::vector<Coeffs> basis, queue;
  for (const auto& g : gens) queue.push_back(g.coeffs());
  while (!queue.empty()) {
    Coeffs w = std::move(queue.back());
    queue.pop_back();
    if (!s.add(w)) continue;
    for (const auto& b : basis) queue.push_back(t.bracket(b, w));
    basis.push_back(std::move(w));
  }
  return s;
}

inline bool is_subalgebra(const Subspace& s) {
  const auto& t = s.table();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(t.bracket(s.rows()[a], s.rows()[b]))) return false;
  return true;
}

/// [s, s].
inline Subspace derived_subalgebra(const Subspace& s) {
  const auto& t = s.table();
  Subspace out(t);
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Coeffs w = t.bracket(s.rows()[a], s.rows()[b]);
      if (!s.contains(w)) throw Error(ErrorCode::NotASubalgebra, "subspace is not closed under the bracket");
      out.add(w);
    }
  return out;
}

/// {a in ambient : [a, target] = 0}.
inline Subspace centralizer_in(const Subspace& ambient, const Subspace& target) {
  const auto& t = ambient.table();
  if (target.is_zero()) return ambient;
  const std::size_t n = t.dim();
  std::vector<Coeffs> rows;
  for (const auto& a : ambient.rows()) {
    Coeffs r;
    r.reserve(n * target.dim());
    for (const auto& b : target.rows()) {
      Coeffs c = t.bracket(a, b);
      r.insert(r.end(), c.begin(), c.end());
    }
    rows.push_back(std::move(r));
  }
  Subspace out(t);
  for (const auto& c : detail::left_kernel(t.field(), rows, n * target.dim())) {
    Coeffs v(n, 0);
    for (std::size_t r = 0; r < ambient.dim(); ++r) detail::axpy(t.field(), v, c[r], ambient.rows()[r]);
    out.add(v);
  }
  return out;
}

inline Subspace center(const Subspace& s) { return centralizer_in(s, s); }

/// Table of the quotient by an ideal, on the basis vectors at the non-pivot
/// columns of the ideal's echelon form.
inline StructureTable quotient_by_ideal(const StructureTable& t, const Subspace& ideal) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (const auto& r : ideal.rows())
      if (!ideal.contains(t.bracket_basis_left(i, r)))
        throw Error(ErrorCode::NotAnIdeal, "subspace is not stable under the adjoint action");
  std::vector<std::size_t> keep;
  std::vector<bool> pivot(t.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!pivot[i]) {
      keep.push_back(i);
      labels.push_back(t.label(i));
    }
  StructureTable q(t.field_ptr(), labels);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      Coeffs w = ideal.reduce(t.basis_bracket(keep[a], keep[b]));
      for (std::size_t c = 0; c < keep.size(); ++c)
        if (w[keep[c]]) q.add_term(a, b, c, w[keep[c]]);
    }
  return q;
}

/// Table of the subalgebra spanned by `basis` (vectors in t's coordinates),
/// with brackets expressed in that basis.
inline StructureTable change_basis(const StructureTable& t, const std::vector<Coeffs>& basis,
                                   std::vector<std::string> labels) {
  const Field& f = t.field();
  const std::size_t m = basis.size();
  if (labels.size() != m) throw Error(ErrorCode::InvalidArgument, "one label per basis vector required");
  // Echelon form of [basis | I] records how each echelon row combines the basis.
  detail::Echelon e;
  for (std::size_t r = 0; r < m; ++r) {
    Coeffs v(t.dim() + m, 0);
    std::copy(basis[r].begin(), basis[r].end(), v.begin());
    v[t.dim() + r] = 1;
    detail::insert_row(f, e, v);
  }
  for (std::size_t r = 0; r < m; ++r)
    if (e.pivots[r] >= t.dim()) throw Error(ErrorCode::InvalidArgument, "basis vectors are linearly dependent");
  auto solve = [&](const Coeffs& w) {
    Coeffs ext(t.dim() + m, 0);
    std::copy(w.begin(), w.end(), ext.begin());
    detail::reduce_by(f, e, ext);
    for (std::size_t i = 0; i < t.dim(); ++i)
      if (ext[i]) throw Error(ErrorCode::NotASubalgebra, "bracket leaves the span of the new basis");
    // ext = w - sum_r w[piv_r] row_r, so the combination is minus the tail.
    Coeffs c(m);
    for (std::size_t r = 0; r < m; ++r) c[r] = f.neg(ext[t.dim() + r]);
    return c;
  };
  StructureTable out(t.field_ptr(), std::move(labels));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Coeffs c = solve(t.bracket(basis[a], basis[b]));
      for (std::size_t k = 0; k < m; ++k)
        if (c[k]) out.add_term(a, b, k, c[k]);
    }
  return out;
}

/// change_basis on the echelon basis of a subalgebra.
inline StructureTable restrict_to(const Subspace& s, const std::string& prefix = "v") {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < s.dim(); ++r) labels.push_back(prefix + std::to_string(r));
  return change_basis(s.table(), s.rows(), labels);
}

// ---------------------------------------------------------------------------

/// A cyclic grading: basis vector i has degree degrees[i] in Z/modulus.
struct DegreeMap {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> degrees;

  std::int64_t normalize(std::int64_t d) const { return ((d % modulus) + modulus) % modulus; }
  std::int64_t degree(std::size_t i) const { return degrees.at(i); }
  std::vector<std::size_t> indices_of_degree(std::int64_t d) const {
    std::vector<std::size_t> out;
    d = normalize(d);
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] == d) out.push_back(i);
    return out;
  }
};

inline bool validate_grading(const StructureTable& t, const DegreeMap& d) {
  if (d.degrees.size() != t.dim() || d.modulus < 1) return false;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const std::int64_t want = d.normalize(d.degrees[i] + d.degrees[j]);
      for (const Term& term : t.stored(i, j))
        if (d.normalize(d.degrees[term.index]) != want) return false;
    }
  return true;
}

/// Span of the basis vectors of degree `deg`.
inline Subspace homogeneous_component(const StructureTable& t, const DegreeMap& d, std::int64_t deg) {
  return Subspace::basis_span(t, d.indices_of_degree(deg));
}

/// True iff the linear map sending src basis vector i to images[i] (dst
/// coordinates) is injective and preserves brackets.
inline bool check_structure_map(const StructureTable& src, const StructureTable& dst,
                                const std::vector<Coeffs>& images) {
  if (images.size() != src.dim() || !(src.field() == dst.field())) return false;
  for (const auto& v : images)
    if (v.size() != dst.dim()) return false;
  if (detail::rref(dst.field(), images).rows.size() != src.dim()) return false;
  const Field& f = dst.field();
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Coeffs lhs(dst.dim(), 0);
      for (const Term& term : src.stored(i, j)) detail::axpy(f, lhs, term.coeff, images[term.index]);
      if (lhs != dst.bracket(images[i], images[j])) return false;
    }
  return true;
}

}  // namespace thinloop
