#include <horikawa/horikawa_moduli.hpp>

#include <algorithm>

namespace horikawa {

namespace {

std::string at(long n, long d) { return " at (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

void require_n_at_least(long n, long min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

}  // namespace

Invariants invariants(Kind kind, long n) {
  require_n_at_least(n, kind == Kind::First ? 3 : 1, "invariants");
  const Integer p_g = n + 1;
  return {p_g, Integer(2 * n - (kind == Kind::First ? 2 : 1)), Integer(n + 2)};
}

DivisorClass branch_class(Kind kind, long n, long d) {
  require_admissible(kind, n, d);
  const long shift = kind == Kind::First ? 3 : 5;
  return hirzebruch(d).make({{"D", 6}, {"F", n + shift + 3 * d}});
}

std::string_view which_name(Which w) { return w == Which::DPrime ? "D'" : "D''"; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Hor2: return "Mnd-Hor2";
    case Family::DPrime: return "D'";
    case Family::DDoublePrime: return "D''";
    case Family::D: return "D";
  }
  return "?";
}

StratumRecord stratum_dim_second(long n, long d) {
  require_admissible(Kind::Second, n, d);
  if (n + 4 == 3 * d) throw InvariantError("n + 4 = 3d reached" + at(n, d));
  const long eta = std::max(0L, 3 * d - n - 4);
  if (eta > 0 && eta > d - 2) throw InvariantError("eta > d - 2" + at(n, d));

  const PicardLattice f = hirzebruch(d);
  const long c = n + 4 + 3 * d;
  Integer lattice_dim;
  if (eta == 0) {
    const Integer aut = d == 0 ? 6 : d + 5;
    lattice_dim = chi_rr(f, f.make({{"D", 6}, {"F", c}})).constant_value() - 1 - 10 + 1 - aut;
  } else {
    // D splits off the branch curve; the residual lives in |5D + cF|.
    lattice_dim = chi_rr(f, f.make({{"D", 5}, {"F", c}})).constant_value() - 1 - 7 - (d + 5);
  }

  Integer closed;
  bool dense;
  if (d == 0) {
    closed = 7 * n + 19;
    dense = true;
  } else if (eta == 0) {
    closed = 7 * n + 20 - d;
    dense = d == 1;
  } else {
    closed = 7 * n + 21 + eta - d;
    dense = eta == d - 2;
  }
  if (lattice_dim != closed)
    throw InvariantError("second-kind stratum: lattice " + to_string(lattice_dim) + " != closed form " +
                         to_string(closed) + at(n, d));
  if (dense != (closed == 7 * n + 19)) throw InvariantError("second-kind density flag disagrees" + at(n, d));

  StratumRecord r;
  r.family = Family::Hor2;
  r.n = n;
  r.d = d;
  r.dim = closed;
  r.is_component = dense;
  r.eta = eta;
  return r;
}

std::vector<std::string> component_tags(Kind kind, long n) {
  if (kind == Kind::First) {
    if (n % 4 == 1 && n >= 9) return {"1a", "1b"};
    return {"1"};
  }
  if (n % 4 == 0 && n >= 8) return {"2a", "2b"};
  return {"2"};
}

std::vector<ModuliComponent> moduli_components(Kind kind, long n) {
  require_n_at_least(n, kind == Kind::First ? 6 : 7, "moduli_components");
  const Integer dim = kind == Kind::First ? 7 * n + 21 : 7 * n + 19;
  const std::vector<long> all = admissible_ds(kind, n);
  const auto tags = component_tags(kind, n);
  std::vector<ModuliComponent> out;
  if (tags.size() == 1) {
    out.push_back({tags[0], dim, all});
    return out;
  }
  // Two components: the top admissible d on its own, the rest together.
  const long top = kind == Kind::First ? (n + 3) / 2 : n / 2 + 1;
  std::vector<long> rest;
  for (long d : all)
    if (d != top) rest.push_back(d);
  if (std::find(all.begin(), all.end(), top) == all.end() || all.back() != top)
    throw InvariantError("isolated type (" + std::to_string(top) + ") is not the largest admissible d");
  out.push_back({tags[0], dim, rest});
  out.push_back({tags[1], dim, {top}});
  return out;
}

Integer aut_dim_y00(long d) {
  if (d < 0) throw DomainError("d must be >= 0");
  return d == 0 ? Integer(3) : Integer(d + 2);
}

Integer aut_dim_y10(long d) {
  if (d <= 0) throw DomainError("Y10 needs d > 0");
  return d + 3;
}

Table1Row table1_row(long n, long d) {
  require_admissible(Kind::First, n, d);
  if (d == 0) return {"d=0", LinearForm{7, 0, 18}, std::nullopt, true, false};
  if (n >= 3 * d - 1) return {"n>=3d-1", LinearForm{7, -1, 19}, LinearForm{7, -1, 18}, true, false};
  if (n == 3 * d - 3) return {"n=3d-3", LinearForm{7, -1, 19}, LinearForm{7, -1, 19}, true, true};
  if (n >= 2 * d - 2) return {"2d-2<=n<3d-3", LinearForm{6, 2, 15}, LinearForm{6, 2, 16}, true, true};
  return {"2d=n+3", LinearForm{7, 0, 18}, std::nullopt, true, false};
}

long nu_count(long n, long d, Which which) {
  require_admissible(Kind::First, n, d);
  if (which == Which::DDoublePrime && (d == 0 || n == 2 * d - 3))
    throw DomainError("D'' is empty" + at(n, d));
  if (n >= 3 * d - 3 || n == 2 * d - 3) return 0;
  return which == Which::DPrime ? n + 3 - 2 * d : n + 2 - 2 * d;
}

std::pair<StratumRecord, StratumRecord> d_strata(long n, long d) {
  require_n_at_least(n, 14, "d_strata");
  require_admissible(Kind::First, n, d);
  const Table1Row row = table1_row(n, d);

  StratumRecord p;
  p.family = d == 0 ? Family::D : Family::DPrime;
  p.n = n;
  p.d = d;
  p.dim = analyze_system(BlowupConfig::make(d, 0, 0), n).dim->constant_value() - aut_dim_y00(d);
  p.nu = nu_count(n, d, Which::DPrime);
  p.is_component = row.d_prime_component;

  StratumRecord pp;
  pp.family = Family::DDoublePrime;
  pp.n = n;
  pp.d = d;
  if (d > 0 && n != 2 * d - 3) {
    pp.dim = analyze_system(BlowupConfig::make(d, 1, 0), n).dim->constant_value() - aut_dim_y10(d);
    pp.nu = nu_count(n, d, Which::DDoublePrime);
    pp.is_component = row.d_double_component;
  }
  return {p, pp};
}

std::vector<DnComponent> dn_components(long n) {
  require_n_at_least(n, 14, "dn_components");
  std::vector<std::pair<Which, long>> picks;
  std::vector<std::string> ambient;
  if (n % 2 == 1) {
    picks.push_back({Which::DPrime, 0});
    ambient.push_back("2");
    if (n % 4 == 1) {
      picks.push_back({Which::DPrime, (n + 3) / 2});
      ambient.push_back("2");
    }
  } else {
    picks.push_back({Which::DPrime, 1});
    ambient.push_back(n % 4 == 0 ? "2a" : "2");
    if (n % 4 == 0) {
      picks.push_back({Which::DDoublePrime, n / 2 + 1});
      ambient.push_back("2b");
    }
  }
  std::vector<DnComponent> out;
  for (std::size_t k = 0; k < picks.size(); ++k) {
    const auto [which, d] = picks[k];
    const auto strata = d_strata(n, d);
    const StratumRecord& rec = which == Which::DPrime ? strata.first : strata.second;
    if (rec.empty() || *rec.dim != 7 * n + 18)
      throw InvariantError("listed component of D_n is not of dimension 7n+18" + at(n, d));
    out.push_back({rec.family, d, *rec.dim, ambient[k]});
  }
  return out;
}

IntersectionForm intersection_form(Kind kind, long n, const std::string& tag) {
  const auto tags = component_tags(kind, n);
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
    std::string have;
    for (const auto& t : tags) have += (have.empty() ? "" : ", ") + t;
    throw DomainError("no component '" + tag + "' for " + std::string(kind_name(kind)) + " kind at n=" +
                      std::to_string(n) + " (have: " + have + ")");
  }
  const Invariants inv = invariants(kind, n);
  IntersectionForm f;
  f.rank = 12 * inv.chi - inv.k_squared - 2;
  f.signature = inv.k_squared - 8 * inv.chi;
  f.even = kind == Kind::First && tag == "1b" && n % 8 == 5;

  if (f.even) {
    // K is characteristic, so an even form needs K = 2L with L^2 even.
    if (inv.k_squared % 8 != 0) throw InvariantError("even form with K^2 not divisible by 8");
    if (f.signature % 16 != 0) throw InvariantError("even form violates 16 | signature");
    if (f.signature > 0) throw InvariantError("positive signature on an even Horikawa form");
    const Integer q = -f.signature / 8;
    const Integer p = (f.rank - 8 * q) / 2;
    f.freedman = to_string(p) + "H+" + to_string(q) + "(-E8)";
  } else {
    const Integer plus = (f.rank + f.signature) / 2;
    const Integer minus = (f.rank - f.signature) / 2;
    f.freedman = to_string(plus) + "<1>+" + to_string(minus) + "<-1>";
  }
  return f;
}

}  // namespace horikawa
