#include <horikawa/hirzebruch_systems.hpp>

namespace horikawa {

BlowupConfig BlowupConfig::make(long d, int i, int j) {
  if (d < 0) throw DomainError("d must be >= 0, got " + std::to_string(d));
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw DomainError("i and j must be 0 or 1");
  if (d == 0 && i == 1) throw DomainError("d = 0 forces i = 0");
  return {d, i, j};
}

std::string BlowupConfig::str() const { return "Y" + std::to_string(i) + std::to_string(j); }

std::string_view regime_label(Regime r) {
  switch (r) {
    case Regime::Generic: return "n>=3d-1";
    case Regime::ThreeDMinus3: return "n=3d-3";
    case Regime::Middle: return "2d-1<=n<3d-3";
    case Regime::TwoDMinus2: return "n=2d-2";
    case Regime::TwoDMinus3: return "n=2d-3";
  }
  return "?";
}

Regime regime_of(long n, long d) {
  require_admissible(Kind::First, n, d);
  if (n >= 3 * d - 1) return Regime::Generic;
  if (n == 3 * d - 3) return Regime::ThreeDMinus3;
  if (n >= 2 * d - 1) return Regime::Middle;
  if (n == 2 * d - 2) return Regime::TwoDMinus2;
  return Regime::TwoDMinus3;
}

std::optional<long> regime_point(Regime r, long d) {
  switch (r) {
    case Regime::ThreeDMinus3: return 3 * d - 3;
    case Regime::TwoDMinus2: return 2 * d - 2;
    case Regime::TwoDMinus3: return 2 * d - 3;
    default: return std::nullopt;
  }
}

bool regime_nonempty(Regime r, long d) {
  if (d < 0) return false;
  if (auto p = regime_point(r, d)) return admissible(Kind::First, *p, d);
  if (r == Regime::Generic) return true;
  for (long n = 2 * d - 1; n < 3 * d - 3; ++n)
    if (admissible(Kind::First, n, d)) return true;
  return false;
}

std::string_view fixed_part_name(FixedPart f) {
  switch (f) {
    case FixedPart::Zero: return "0";
    case FixedPart::DPrime: return "D'";
    case FixedPart::DPrimePlusE1MinusE2: return "D'+(E1-E2)";
    case FixedPart::NonReduced: return "non-reduced";
  }
  return "?";
}

YLattice y_lattice(const BlowupConfig& raw) {
  const BlowupConfig cfg = BlowupConfig::make(raw.d, raw.i, raw.j);
  PicardLattice lat = blow_up(blow_up(hirzebruch(cfg.d), "E1"), "E2");
  DivisorClass d_prime = lat.basis("D");
  if (cfg.i == 1) d_prime -= lat.basis("E1");
  DivisorClass r_prime = lat.make({{"F", 1}, {"E1", -1}, {"E2", -1}});
  DivisorClass e12 = lat.make({{"E1", 1}, {"E2", -1}});
  return {cfg, std::move(lat), std::move(d_prime), std::move(r_prime), std::move(e12), cfg.j == 1};
}

DivisorClass l_class(const YLattice& y, const Poly& n) {
  const Poly c = n + Poly(3 + 3 * y.config.d);
  return y.lattice.make({{"D", 6}, {"F", c}, {"E1", -2}, {"E2", -2}});
}

DivisorClass l_class(const BlowupConfig& cfg, long n) {
  require_admissible(Kind::First, n, cfg.d);
  return l_class(y_lattice(cfg), Poly(n));
}

std::optional<LinearForm> table2_closed_form(Regime r, int i) {
  const bool ten = (i == 1);
  switch (r) {
    case Regime::Generic: return LinearForm{7, 0, 21};
    case Regime::ThreeDMinus3: return ten ? LinearForm{7, 0, 22} : LinearForm{7, 0, 21};
    case Regime::Middle: return ten ? LinearForm{6, 3, 19} : LinearForm{6, 3, 17};
    case Regime::TwoDMinus2: return ten ? LinearForm{7, 1, 21} : LinearForm{7, 1, 19};
    case Regime::TwoDMinus3:
      if (ten) return std::nullopt;
      return LinearForm{6, 3, 17};
  }
  return std::nullopt;
}

FixedPart table3_fixed_part(Regime r, int i, int j) {
  switch (r) {
    case Regime::Generic: return FixedPart::Zero;
    case Regime::ThreeDMinus3:
      if (i == 0) return FixedPart::Zero;
      return j == 0 ? FixedPart::DPrime : FixedPart::DPrimePlusE1MinusE2;
    case Regime::Middle:
      if (i == 0) return FixedPart::DPrime;
      return j == 0 ? FixedPart::DPrime : FixedPart::DPrimePlusE1MinusE2;
    case Regime::TwoDMinus2:
      if (i == 0) return FixedPart::DPrime;
      return j == 0 ? FixedPart::DPrime : FixedPart::NonReduced;
    case Regime::TwoDMinus3:
      return i == 0 ? FixedPart::DPrime : FixedPart::NonReduced;
  }
  return FixedPart::NonReduced;
}

SystemAnalysis analyze_on(const YLattice& y, Regime r, const Poly& n) {
  const PicardLattice& lat = y.lattice;
  const DivisorClass K = lat.canonical();
  SystemAnalysis out;
  out.config = y.config;
  out.regime = r;
  out.n = n;
  out.L = l_class(y, n);
  out.fixed = table3_fixed_part(r, y.config.i, y.config.j);
  out.reduced = out.fixed != FixedPart::NonReduced;

  out.Z = lat.zero();
  if (out.fixed == FixedPart::DPrime) out.Z = y.d_prime;
  if (out.fixed == FixedPart::DPrimePlusE1MinusE2) out.Z = y.d_prime + y.e1_minus_e2;
  out.M = out.L - out.Z;

  out.d_prime_dot_l = intersect(lat, y.d_prime, out.L);
  out.d_prime_dot_l_minus_d_prime = intersect(lat, y.d_prime, out.L - y.d_prime);
  if (y.config.j == 1) {
    out.e12_dot_l_minus_d_prime = intersect(lat, y.e1_minus_e2, out.L - y.d_prime);
    const bool d_fixed = out.fixed != FixedPart::Zero;
    out.e12_dot_residual = intersect(lat, y.e1_minus_e2, d_fixed ? out.L - y.d_prime : out.L);
  }

  out.m_squared = intersect(lat, out.M, out.M);
  out.m_dot_k = intersect(lat, out.M, K);
  if (out.reduced) out.dim = (out.m_squared - out.m_dot_k).half();
  return out;
}

FixedPart certify_fixed_part(const YLattice& y, long n) {
  const PicardLattice& lat = y.lattice;
  const DivisorClass L = l_class(y, Poly(n));
  auto pair = [&](const DivisorClass& a, const DivisorClass& b) { return intersect(lat, a, b).constant_value(); };

  DivisorClass Z = lat.zero();
  bool has_d = false, has_e = false;
  if (pair(y.d_prime, L) < 0) {
    Z += y.d_prime;
    has_d = true;
  }
  if (y.e1_minus_e2_effective && pair(y.e1_minus_e2, L - Z) < 0) {
    Z += y.e1_minus_e2;
    has_e = true;
  }
  if (has_d && pair(y.d_prime, L - Z) < 0) return FixedPart::NonReduced;
  if (has_e && !has_d) throw InvariantError("E1-E2 fixed without D' at n=" + std::to_string(n));
  if (has_e) return FixedPart::DPrimePlusE1MinusE2;
  return has_d ? FixedPart::DPrime : FixedPart::Zero;
}

namespace {

std::string cell(const BlowupConfig& cfg, long n) {
  return cfg.str() + " at n=" + std::to_string(n) + ", d=" + std::to_string(cfg.d);
}

}  // namespace

SystemAnalysis analyze_system(const BlowupConfig& raw, long n) {
  const BlowupConfig cfg = BlowupConfig::make(raw.d, raw.i, raw.j);
  const Regime r = regime_of(n, cfg.d);
  const YLattice y = y_lattice(cfg);
  SystemAnalysis a = analyze_on(y, r, Poly(n));

  const FixedPart greedy = certify_fixed_part(y, n);
  if (greedy != a.fixed)
    throw InvariantError(cell(cfg, n) + ": pairings give fixed part " + std::string(fixed_part_name(greedy)) +
                         ", table records " + std::string(fixed_part_name(a.fixed)));
  if (a.reduced) {
    if (a.m_squared.constant_value() <= 0) throw InvariantError(cell(cfg, n) + ": M^2 <= 0");
    if (a.m_dot_k.constant_value() >= 0) throw InvariantError(cell(cfg, n) + ": M.K >= 0");
    if (auto form = table2_closed_form(r, cfg.i)) {
      const Integer want = form->eval(n, cfg.d);
      if (a.dim->constant_value() != want)
        throw InvariantError(cell(cfg, n) + ": lattice dim " + to_string(a.dim->constant_value()) +
                             " != closed form " + to_string(want));
    }
  }
  return a;
}

SystemAnalysis analyze_system(const BlowupConfig& raw, Regime r) {
  const BlowupConfig cfg = BlowupConfig::make(raw.d, raw.i, raw.j);
  if (!regime_nonempty(r, cfg.d))
    throw DomainError("row " + std::string(regime_label(r)) + " has no admissible n for d=" + std::to_string(cfg.d));
  if (auto p = regime_point(r, cfg.d)) return analyze_system(cfg, *p);

  SystemAnalysis a = analyze_on(y_lattice(cfg), r, Poly::symbol());
  if (a.reduced) {
    if (auto form = table2_closed_form(r, cfg.i)) {
      const Poly want = form->at_d(cfg.d);
      if (!(*a.dim == want))
        throw InvariantError(cfg.str() + " row " + std::string(regime_label(r)) + ": lattice dim " + a.dim->str() +
                             " != closed form " + want.str());
    }
  }
  return a;
}

}  // namespace horikawa
