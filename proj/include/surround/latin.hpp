#pragma once

// Finite fields of small prime-power order and the s*i + j family of mutually
// orthogonal Latin squares built on them.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surround {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Elements are integers 0..q-1 read as base-p coefficient vectors, lowest
// degree first: for q = 4, element 2 is x and element 3 is x + 1.
struct FieldTable {
  std::size_t p = 0;
  std::size_t degree = 0;
  std::size_t q = 0;
  std::vector<std::size_t> modulus;  // monic, degree+1 coefficients, lowest first
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::vector<std::size_t>> mul;

  std::size_t plus(std::size_t a, std::size_t b) const { return add[a][b]; }
  std::size_t times(std::size_t a, std::size_t b) const { return mul[a][b]; }
};

inline const std::vector<std::size_t>& supported_field_orders() {
  static const std::vector<std::size_t> orders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  return orders;
}

namespace detail {

inline std::string supported_orders_text() {
  std::string s;
  for (auto q : supported_field_orders()) s += (s.empty() ? "" : ", ") + std::to_string(q);
  return s;
}

inline std::vector<std::size_t> to_digits(std::size_t x, std::size_t p, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (auto& c : d) {
    c = x % p;
    x /= p;
  }
  return d;
}

inline std::size_t from_digits(const std::vector<std::size_t>& d, std::size_t p) {
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Product of two residues modulo the monic modulus.
inline std::vector<std::size_t> poly_mulmod(const std::vector<std::size_t>& a,
                                            const std::vector<std::size_t>& b,
                                            const std::vector<std::size_t>& mod, std::size_t p) {
  const std::size_t e = mod.size() - 1;
  std::vector<std::size_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > e;) {
    std::size_t c = prod[d];
    if (c == 0) continue;
    // subtract c * x^(d-e) * mod
    for (std::size_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i]) % p;
  }
  prod.resize(e);
  return prod;
}

// A polynomial of degree <= 3 is irreducible iff it has no root; for degree 4
// we also rule out a product of two monic quadratics.
inline bool is_irreducible(const std::vector<std::size_t>& mod, std::size_t p) {
  const std::size_t e = mod.size() - 1;
  if (e == 1) return true;
  auto eval = [&](std::size_t x) {
    std::size_t v = 0;
    for (std::size_t i = e + 1; i-- > 0;) v = (v * x + mod[i]) % p;
    return v;
  };
  for (std::size_t x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (e <= 3) return true;
  for (std::size_t a0 = 0; a0 < p; ++a0)
    for (std::size_t a1 = 0; a1 < p; ++a1)
      for (std::size_t b0 = 0; b0 < p; ++b0)
        for (std::size_t b1 = 0; b1 < p; ++b1) {
          std::vector<std::size_t> f{a0, a1, 1}, g{b0, b1, 1}, h(5, 0);
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
          if (h == mod) return false;
        }
  return true;
}

}  // namespace detail

// Exhaustive field-axiom check; cubic in q, so only for small tables.
inline bool verify_field_axioms(const FieldTable& f) {
  const std::size_t q = f.q;
  for (std::size_t a = 0; a < q; ++a) {
    if (f.plus(a, 0) != a || f.times(a, 1) != a) return false;
    bool has_neg = false, has_inv = a == 0;
    for (std::size_t b = 0; b < q; ++b) {
      if (f.plus(a, b) != f.plus(b, a) || f.times(a, b) != f.times(b, a)) return false;
      if (f.plus(a, b) == 0) has_neg = true;
      if (a != 0 && f.times(a, b) == 1) has_inv = true;
      for (std::size_t c = 0; c < q; ++c) {
        if (f.plus(f.plus(a, b), c) != f.plus(a, f.plus(b, c))) return false;
        if (f.times(f.times(a, b), c) != f.times(a, f.times(b, c))) return false;
        if (f.times(a, f.plus(b, c)) != f.plus(f.times(a, b), f.times(a, c))) return false;
      }
    }
    if (!has_neg || !has_inv) return false;
  }
  return q >= 2;
}

inline FieldTable build_field(std::size_t q) {
  struct Entry {
    std::size_t q, p;
    std::vector<std::size_t> modulus;
  };
  static const std::vector<Entry> table{
      {2, 2, {0, 1}},       {3, 3, {0, 1}},          {4, 2, {1, 1, 1}},    {5, 5, {0, 1}},
      {7, 7, {0, 1}},       {8, 2, {1, 1, 0, 1}},    {9, 3, {1, 0, 1}},    {11, 11, {0, 1}},
      {13, 13, {0, 1}},     {16, 2, {1, 1, 0, 0, 1}}, {25, 5, {2, 1, 1}},  {27, 3, {1, 2, 0, 1}},
  };
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.q == q; });
  if (it == table.end())
    throw FieldError("order " + std::to_string(q) +
                     " is not a supported prime power (supported: " + detail::supported_orders_text() +
                     ")");
  FieldTable f;
  f.p = it->p;
  f.modulus = it->modulus;
  f.degree = f.modulus.size() - 1;
  f.q = q;
  if (!detail::is_irreducible(f.modulus, f.p))
    throw FieldError("built-in modulus for order " + std::to_string(q) + " is reducible");
  f.add.assign(q, std::vector<std::size_t>(q));
  f.mul.assign(q, std::vector<std::size_t>(q));
  for (std::size_t a = 0; a < q; ++a) {
    auto da = detail::to_digits(a, f.p, f.degree);
    for (std::size_t b = 0; b < q; ++b) {
      auto db = detail::to_digits(b, f.p, f.degree);
      std::vector<std::size_t> s(f.degree);
      for (std::size_t i = 0; i < f.degree; ++i) s[i] = (da[i] + db[i]) % f.p;
      f.add[a][b] = detail::from_digits(s, f.p);
      f.mul[a][b] = detail::from_digits(detail::poly_mulmod(da, db, f.modulus, f.p), f.p);
    }
  }
  if (q <= 32 && !verify_field_axioms(f))
    throw FieldError("field tables for order " + std::to_string(q) + " violate the field axioms");
  return f;
}

struct LatinSquare {
  std::vector<std::vector<std::size_t>> grid;

  std::size_t order() const { return grid.size(); }
  std::size_t at(std::size_t i, std::size_t j) const { return grid[i][j]; }
  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

struct MolsFamily {
  std::size_t order = 0;
  std::vector<LatinSquare> squares;
};

inline void check_square_shape(const LatinSquare& sq) {
  const std::size_t k = sq.order();
  if (k == 0) throw std::invalid_argument("latin square: empty grid");
  for (const auto& row : sq.grid) {
    if (row.size() != k) throw std::invalid_argument("latin square: grid is not square");
    for (auto x : row)
      if (x >= k) throw std::invalid_argument("latin square: symbol out of range");
  }
}

inline bool is_latin(const LatinSquare& sq) {
  check_square_shape(sq);
  const std::size_t k = sq.order();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> row(k, false), col(k, false);
    for (std::size_t j = 0; j < k; ++j) {
      if (row[sq.at(i, j)] || col[sq.at(j, i)]) return false;
      row[sq.at(i, j)] = col[sq.at(j, i)] = true;
    }
  }
  return true;
}

using Juxtaposition = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

inline Juxtaposition juxtapose(const LatinSquare& a, const LatinSquare& b) {
  check_square_shape(a);
  check_square_shape(b);
  if (a.order() != b.order())
    throw std::invalid_argument("juxtapose: orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()) + " differ");
  const std::size_t k = a.order();
  Juxtaposition out(k, std::vector<std::pair<std::size_t, std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = {a.at(i, j), b.at(i, j)};
  return out;
}

inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  auto cells = juxtapose(a, b);
  std::set<std::pair<std::size_t, std::size_t>> distinct;
  for (const auto& row : cells) distinct.insert(row.begin(), row.end());
  return distinct.size() == a.order() * a.order();
}

// L_s[i][j] = s*i + j over GF(k), one square per nonzero s.
inline MolsFamily generate_mols(std::size_t k) {
  auto f = build_field(k);
  MolsFamily fam;
  fam.order = k;
  for (std::size_t s = 1; s < k; ++s) {
    LatinSquare sq;
    sq.grid.assign(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sq.grid[i][j] = f.plus(f.times(s, i), j);
    fam.squares.push_back(std::move(sq));
  }
  return fam;
}

}  // namespace surround
