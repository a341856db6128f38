#include <horikawa/picard_lattice.hpp>

#include <algorithm>

namespace horikawa {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (coords.size() != o.coords.size()) throw DomainError("divisor classes live in lattices of different rank");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (coords.size() != o.coords.size()) throw DomainError("divisor classes live in lattices of different rank");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

DivisorClass operator*(const Poly& k, DivisorClass a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

DivisorClass DivisorClass::at(const Integer& n) const {
  DivisorClass out;
  out.coords.reserve(coords.size());
  for (const auto& c : coords) out.coords.emplace_back(c.eval(n));
  return out;
}

PicardLattice::PicardLattice(std::vector<std::string> labels, IntMatrix gram, std::vector<Integer> canonical,
                             Integer chi_o)
    : labels_(std::move(labels)), gram_(std::move(gram)), canonical_(std::move(canonical)), chi_o_(std::move(chi_o)) {
  const std::size_t r = labels_.size();
  if (gram_.size() != r || canonical_.size() != r) throw DomainError("lattice data sizes disagree with label count");
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i].size() != r) throw DomainError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw DomainError("Gram matrix is not symmetric");
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw DomainError("duplicate basis label '" + labels_[i] + "'");
  }
}

DivisorClass PicardLattice::canonical() const {
  DivisorClass k;
  k.coords.assign(canonical_.begin(), canonical_.end());
  return k;
}

std::size_t PicardLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw DomainError("unknown basis label '" + std::string(label) + "'");
}

bool PicardLattice::has(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

DivisorClass PicardLattice::zero() const {
  DivisorClass z;
  z.coords.resize(rank());
  return z;
}

DivisorClass PicardLattice::basis(std::string_view label) const {
  DivisorClass b = zero();
  b.coords[index_of(label)] = Poly(1);
  return b;
}

DivisorClass PicardLattice::make(std::initializer_list<std::pair<std::string_view, Poly>> terms) const {
  DivisorClass out = zero();
  for (const auto& [label, coeff] : terms) out.coords[index_of(label)] += coeff;
  return out;
}

PicardLattice PicardLattice::with_gram_entry(std::size_t i, std::size_t j, const Integer& value) const {
  PicardLattice copy = *this;
  copy.gram_.at(i).at(j) = value;
  copy.gram_.at(j).at(i) = value;
  return copy;
}

PicardLattice hirzebruch(long d) {
  if (d < 0) throw DomainError("Hirzebruch surface needs d >= 0, got " + std::to_string(d));
  PicardLattice out({"D", "F"}, {{Integer(-d), Integer(1)}, {Integer(1), Integer(0)}}, {Integer(-2), Integer(-(d + 2))});
  if (noether_defect(out) != 10) throw InvariantError("F_d lattice violates K^2 + rank = 10");
  return out;
}

PicardLattice blow_up(const PicardLattice& lattice, std::string label) {
  if (lattice.has(label)) throw DomainError("blow-up label '" + label + "' already in use");
  const std::size_t r = lattice.rank();
  std::vector<std::string> labels = lattice.labels();
  labels.push_back(std::move(label));
  IntMatrix gram = lattice.gram();
  for (auto& row : gram) row.push_back(0);
  gram.emplace_back(r + 1, Integer(0));
  gram[r][r] = -1;
  std::vector<Integer> k;
  for (const auto& c : lattice.canonical().coords) k.push_back(c.constant_value());
  k.push_back(1);
  PicardLattice out(std::move(labels), std::move(gram), std::move(k), lattice.chi_o());
  if (noether_defect(out) != noether_defect(lattice))
    throw InvariantError("blow-up changed K^2 + rank");
  return out;
}

Poly intersect(const PicardLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  const std::size_t r = lattice.rank();
  if (a.coords.size() != r || b.coords.size() != r)
    throw DomainError("class has " + std::to_string(a.coords.size()) + "/" + std::to_string(b.coords.size()) +
                      " coordinates, lattice rank is " + std::to_string(r));
  const IntMatrix& g = lattice.gram();
  Poly acc;
  for (std::size_t i = 0; i < r; ++i) {
    if (a.coords[i].is_zero()) continue;
    Poly row;
    for (std::size_t j = 0; j < r; ++j)
      if (g[i][j] != 0 && !b.coords[j].is_zero()) row += Poly(g[i][j]) * b.coords[j];
    acc += a.coords[i] * row;
  }
  return acc;
}

Poly chi_rr(const PicardLattice& lattice, const DivisorClass& a) {
  return Poly(lattice.chi_o()) + intersect(lattice, a, a - lattice.canonical()).half();
}

Poly arithmetic_genus(const PicardLattice& lattice, const DivisorClass& a) {
  return Poly(1) + intersect(lattice, a, a + lattice.canonical()).half();
}

Integer noether_defect(const PicardLattice& lattice) {
  const DivisorClass k = lattice.canonical();
  return intersect(lattice, k, k).constant_value() + Integer(static_cast<unsigned long>(lattice.rank()));
}

IntMatrix chain_gram(const Chain& c) {
  const std::size_t r = c.length();
  IntMatrix g(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    g[i][i] = -c[i];
    if (i + 1 < r) g[i][i + 1] = g[i + 1][i] = 1;
  }
  return g;
}

namespace {

void require_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix is not square");
}

// Bareiss elimination with row pivoting; returns the determinant.
Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].assign(m[i].begin(), m[i].begin() + static_cast<long>(k));
  return out;
}

}  // namespace

std::vector<Integer> leading_minors(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<Integer> minors;
  minors.reserve(n);
  // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      for (std::size_t s = k + 1; s <= n; ++s) minors.push_back(bareiss_det(leading_block(m, s)));
      return minors;
    }
    minors.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

Integer determinant(const IntMatrix& m) {
  require_square(m);
  return bareiss_det(m);
}

bool is_negative_definite(const IntMatrix& m) {
  const auto minors = leading_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

Inertia inertia(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw DomainError("inertia needs a symmetric matrix");
      a[i][j] = m[i][j];
    }
  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: fold an off-diagonal one in (row_p += row_q).
      std::size_t fp = n, fq = n;
      for (std::size_t i = k; i < n && fp == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            fp = i;
            fq = j;
            break;
          }
      if (fp == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) a[fp][j] += a[fq][j];
      for (std::size_t i = 0; i < n; ++i) a[i][fp] += a[i][fq];
      p = fp;
    }
    if (p != k) swap_index(p, k);
    const Rational piv = a[k][k];
    if (piv > 0) ++out.positive; else ++out.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / piv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return out;
}

std::vector<Rational> discrepancies(const Chain& c) {
  const IntMatrix g = chain_gram(c);
  const std::size_t r = g.size();
  // Augmented system G a = (e_j - 2)_j.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = g[i][j];
    a[i][r] = c[i] - 2;
  }
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t p = k;
    while (p < r && a[p][k] == 0) ++p;
    if (p == r) throw InvariantError("adjunction system for " + c.str() + " is singular");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= r; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    out[i] = a[i][r] / a[i][i];
    out[i].canonicalize();
  }
  return out;
}

std::map<std::string, Poly> pairing_report(const PicardLattice& lattice, const DivisorClass& a,
                                           const NamedClasses& curves) {
  std::map<std::string, Poly> out;
  for (const auto& [name, cls] : curves) out[name] = intersect(lattice, a, cls);
  return out;
}

}  // namespace horikawa
