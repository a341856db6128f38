#include <doctest.h>

#include <horikawa/hirzebruch_systems.hpp>

using namespace horikawa;

namespace {

Integer at(const Poly& p) { return p.constant_value(); }

}  // namespace

TEST_CASE("BlowupConfig validation") {
  CHECK_THROWS_AS(BlowupConfig::make(0, 1, 0), DomainError);
  CHECK_THROWS_AS(BlowupConfig::make(-1, 0, 0), DomainError);
  CHECK_THROWS_AS(BlowupConfig::make(2, 2, 0), DomainError);
  CHECK(BlowupConfig::make(3, 1, 0).str() == "Y10");
}

TEST_CASE("regime dispatch") {
  CHECK(regime_of(14, 3) == Regime::Generic);
  CHECK(regime_of(18, 7) == Regime::ThreeDMinus3);
  CHECK(regime_of(18, 9) == Regime::Middle);
  CHECK(regime_of(16, 9) == Regime::TwoDMinus2);
  CHECK(regime_of(17, 10) == Regime::TwoDMinus3);
  CHECK_THROWS_AS(regime_of(14, 2), DomainError);
  CHECK_THROWS_AS(regime_of(14, 11), DomainError);
  CHECK(regime_label(Regime::Middle) == "2d-1<=n<3d-3");
}

TEST_CASE("l_class examples") {
  const auto y = y_lattice(BlowupConfig::make(0, 0, 0));
  const auto L = l_class(y, Poly(13));
  CHECK(L == y.lattice.make({{"D", 6}, {"F", 16}, {"E1", -2}, {"E2", -2}}));
  CHECK(at(intersect(y.lattice, L, L)) == 184);

  const Poly n = Poly::symbol();
  for (long d = 1; d <= 6; ++d) {
    const auto y1 = y_lattice(BlowupConfig::make(d, 1, 0));
    const auto Ls = l_class(y1, n);
    CHECK(intersect(y1.lattice, Ls, y1.r_prime) == Poly(2));
    CHECK(intersect(y1.lattice, Ls, y1.d_prime) == Poly::linear(1, 1 - 3 * d));
    CHECK(at(intersect(y1.lattice, y1.r_prime, y1.r_prime)) == -2);
  }
  CHECK_THROWS_AS(l_class(BlowupConfig::make(2, 0, 0), 14), DomainError);
}

TEST_CASE("analyze_system examples") {
  const auto a = analyze_system(BlowupConfig::make(3, 0, 1), 14);
  CHECK(a.fixed == FixedPart::Zero);
  CHECK(at(*a.dim) == 7 * 14 + 21);

  const auto b = analyze_system(BlowupConfig::make(7, 1, 0), 18);
  CHECK(b.regime == Regime::ThreeDMinus3);
  CHECK(b.fixed == FixedPart::DPrime);
  CHECK(at(*b.dim) == 7 * 18 + 22);

  const auto c = analyze_system(BlowupConfig::make(9, 1, 1), 18);
  CHECK(c.fixed == FixedPart::DPrimePlusE1MinusE2);
  CHECK(at(*c.dim) == 6 * 18 + 3 * 9 + 19);
  CHECK(at(*c.dim) == at(*analyze_system(BlowupConfig::make(9, 1, 0), 18).dim));
  CHECK(at(*c.e12_dot_l_minus_d_prime) == -1);

  const auto e = analyze_system(BlowupConfig::make(10, 1, 0), 17);
  CHECK(e.fixed == FixedPart::NonReduced);
  CHECK_FALSE(e.reduced);
  CHECK_FALSE(e.dim.has_value());

  const auto f = analyze_system(BlowupConfig::make(9, 1, 1), 16);
  CHECK(f.fixed == FixedPart::NonReduced);
}

TEST_CASE("symbolic rows match the closed forms") {
  const auto g = analyze_system(BlowupConfig::make(3, 0, 0), Regime::Generic);
  CHECK(*g.dim == Poly::linear(7, 21));
  CHECK(g.dim->str() == "7n+21");

  const auto m = analyze_system(BlowupConfig::make(9, 1, 1), Regime::Middle);
  CHECK(*m.dim == Poly::linear(6, 3 * 9 + 19));

  // Point rows substitute their n.
  const auto p = analyze_system(BlowupConfig::make(7, 1, 0), Regime::ThreeDMinus3);
  CHECK(p.dim->is_constant());
  CHECK(at(*p.dim) == 7 * 18 + 22);

  CHECK_THROWS_AS(analyze_system(BlowupConfig::make(2, 0, 0), Regime::TwoDMinus2), DomainError);
}

TEST_CASE("closed forms and fixed parts per row") {
  CHECK(*table2_closed_form(Regime::Generic, 1) == LinearForm{7, 0, 21});
  CHECK(*table2_closed_form(Regime::TwoDMinus2, 0) == LinearForm{7, 1, 19});
  CHECK_FALSE(table2_closed_form(Regime::TwoDMinus3, 1).has_value());
  CHECK(table3_fixed_part(Regime::TwoDMinus2, 1, 1) == FixedPart::NonReduced);
  CHECK(table3_fixed_part(Regime::TwoDMinus3, 0, 1) == FixedPart::DPrime);
  CHECK(fixed_part_name(FixedPart::DPrimePlusE1MinusE2) == "D'+(E1-E2)");
}

TEST_CASE("sweep: pairings, positivity and Prop (iii) equality") {
  long cells = 0;
  for (long n = 14; n <= 80; ++n)
    for (long d : admissible_ds(Kind::First, n))
      for (int i = 0; i <= 1; ++i) {
        if (d == 0 && i == 1) continue;
        std::optional<Integer> dims[2];
        for (int j = 0; j <= 1; ++j) {
          const auto cfg = BlowupConfig::make(d, i, j);
          const auto y = y_lattice(cfg);
          const auto a = analyze_system(cfg, n);
          REQUIRE(certify_fixed_part(y, n) == a.fixed);
          const bool d_in_z = a.fixed != FixedPart::Zero;
          REQUIRE((at(a.d_prime_dot_l) < 0) == d_in_z);
          if (a.fixed == FixedPart::DPrime || a.fixed == FixedPart::DPrimePlusE1MinusE2) {
            REQUIRE(at(a.d_prime_dot_l_minus_d_prime) >= 0);
          }
          if (a.fixed == FixedPart::DPrimePlusE1MinusE2) REQUIRE(at(*a.e12_dot_l_minus_d_prime) == -1);
          if (a.reduced) {
            REQUIRE(a.M + a.Z == a.L);
            REQUIRE(at(a.m_squared) > 0);
            REQUIRE(at(a.m_dot_k) < 0);
            dims[j] = at(*a.dim);
          }
          ++cells;
        }
        if (dims[0] && dims[1]) REQUIRE(*dims[0] == *dims[1]);
      }
  CHECK(cells > 0);
}

TEST_CASE("a tampered lattice changes the answer") {
  auto y = y_lattice(BlowupConfig::make(3, 0, 0));
  const auto clean = analyze_on(y, Regime::Generic, Poly(14));
  y.lattice = y.lattice.with_gram_entry(0, 1, 2);
  const auto dirty = analyze_on(y, Regime::Generic, Poly(14));
  CHECK(at(*clean.dim) == 119);
  CHECK(at(*dirty.dim) != 119);
}
