#include <doctest.h>

#include <horikawa/horikawa_moduli.hpp>

using namespace horikawa;

TEST_CASE("admissibility") {
  CHECK(admissible(Kind::First, 14, 1));
  CHECK_FALSE(admissible(Kind::First, 14, 2));
  CHECK(admissible(Kind::First, 17, 10));
  CHECK_FALSE(admissible(Kind::Second, 17, 10));
  CHECK(admissible(Kind::Second, 16, 9));
  CHECK_FALSE(admissible(Kind::First, 14, -1));
  CHECK(admissible_ds(Kind::First, 14) == std::vector<long>{1, 3, 5, 7});
  CHECK_THROWS_AS(require_admissible(Kind::First, 14, 2), DomainError);
}

TEST_CASE("invariants examples") {
  CHECK(invariants(Kind::Second, 14) == Invariants{15, 27, 16});
  CHECK(invariants(Kind::First, 3) == Invariants{4, 4, 5});
  CHECK(invariants(Kind::Second, 1) == Invariants{2, 1, 3});
  CHECK_THROWS_AS(invariants(Kind::First, 2), DomainError);
  for (long n = 3; n <= 60; ++n) {
    const auto f = invariants(Kind::First, n);
    CHECK(f.k_squared == 2 * f.p_g - 4);
    const auto s = invariants(Kind::Second, n);
    CHECK(s.k_squared == 2 * s.p_g - 3);
  }
}

TEST_CASE("branch classes") {
  const auto b1 = branch_class(Kind::First, 14, 3);
  CHECK(b1.coords[0] == Poly(6));
  CHECK(b1.coords[1] == Poly(14 + 3 + 9));
  const auto b2 = branch_class(Kind::Second, 14, 3);
  CHECK(b2.coords[1] == Poly(14 + 5 + 9));
  CHECK_THROWS_AS(branch_class(Kind::First, 14, 2), DomainError);
}

TEST_CASE("second-kind strata examples") {
  CHECK(*stratum_dim_second(15, 0).dim == 7 * 15 + 19);
  CHECK(stratum_dim_second(15, 0).is_component);
  CHECK(*stratum_dim_second(14, 1).dim == 7 * 14 + 19);
  for (long k = 2; k <= 20; ++k) {
    const long n = 4 * k, d = 2 * k + 1;
    const auto r = stratum_dim_second(n, d);
    CHECK(*r.eta == d - 2);
    CHECK(*r.dim == 7 * n + 19);
    CHECK(r.is_component);
  }
  const auto g = stratum_dim_second(14, 3);
  CHECK(*g.dim == 7 * 14 + 20 - 3);
  CHECK_FALSE(g.is_component);
}

TEST_CASE("second-kind density sweep") {
  for (long n = 7; n <= 120; ++n)
    for (long d : admissible_ds(Kind::Second, n)) {
      const auto r = stratum_dim_second(n, d);
      REQUIRE(*r.dim <= 7 * n + 19);
      REQUIRE(r.is_component == (*r.dim == 7 * n + 19));
    }
}

TEST_CASE("moduli components examples") {
  const auto a = moduli_components(Kind::First, 9);
  REQUIRE(a.size() == 2);
  CHECK(a[0].dim == 84);
  CHECK(a[1].dim == 84);
  CHECK(a[1].ds == std::vector<long>{6});

  const auto b = moduli_components(Kind::Second, 14);
  REQUIRE(b.size() == 1);
  CHECK(b[0].dim == 117);

  const auto c = moduli_components(Kind::Second, 16);
  REQUIRE(c.size() == 2);
  CHECK(c[0].tag == "2a");
  CHECK(c[1].tag == "2b");
  CHECK(c[1].dim == 131);
  CHECK(c[1].ds == std::vector<long>{9});

  CHECK(component_tags(Kind::First, 5) == std::vector<std::string>{"1"});
  CHECK(component_tags(Kind::First, 13) == std::vector<std::string>{"1a", "1b"});
  CHECK_THROWS_AS(moduli_components(Kind::Second, 6), DomainError);
}

TEST_CASE("Table 1 rows") {
  const auto r0 = table1_row(15, 0);
  CHECK(r0.label == "d=0");
  CHECK(*r0.d_prime == LinearForm{7, 0, 18});
  CHECK_FALSE(r0.d_double.has_value());

  const auto r1 = table1_row(20, 3);
  CHECK(*r1.d_prime == LinearForm{7, -1, 19});
  CHECK(*r1.d_double == LinearForm{7, -1, 18});
  CHECK(r1.d_prime_component);
  CHECK_FALSE(r1.d_double_component);

  const auto r3 = table1_row(20, 9);
  CHECK(r3.label == "2d-2<=n<3d-3");
  CHECK(*r3.d_prime == LinearForm{6, 2, 15});
  CHECK(*r3.d_double == LinearForm{6, 2, 16});

  const auto r4 = table1_row(17, 10);
  CHECK(r4.label == "2d=n+3");
  CHECK(*r4.d_prime == LinearForm{7, 0, 18});
  CHECK_FALSE(r4.d_double.has_value());
}

TEST_CASE("Aut dimensions") {
  CHECK(aut_dim_y00(0) == 3);
  CHECK(aut_dim_y00(4) == 6);
  CHECK(aut_dim_y10(4) == 7);
  CHECK_THROWS_AS(aut_dim_y10(0), DomainError);
}

TEST_CASE("nu counts") {
  CHECK(nu_count(20, 3, Which::DPrime) == 0);
  CHECK(nu_count(18, 7, Which::DDoublePrime) == 0);
  CHECK(nu_count(20, 9, Which::DPrime) == 20 + 3 - 18);
  CHECK(nu_count(20, 9, Which::DDoublePrime) == 20 + 2 - 18);
  CHECK(nu_count(16, 9, Which::DDoublePrime) == 0);
  CHECK_THROWS_AS(nu_count(17, 10, Which::DDoublePrime), DomainError);
  CHECK_THROWS_AS(nu_count(15, 0, Which::DDoublePrime), DomainError);
}

TEST_CASE("D strata match the table through the lattice") {
  for (long n = 14; n <= 90; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      const auto [p, pp] = d_strata(n, d);
      const auto row = table1_row(n, d);
      REQUIRE(*p.dim == row.d_prime->eval(n, d));
      REQUIRE(pp.empty() == !row.d_double.has_value());
      if (!pp.empty()) REQUIRE(*pp.dim == row.d_double->eval(n, d));
    }
  CHECK_THROWS_AS(d_strata(13, 0), DomainError);
}

TEST_CASE("D_n components examples") {
  const auto c14 = dn_components(14);
  REQUIRE(c14.size() == 1);
  CHECK(c14[0].d == 1);
  CHECK(c14[0].dim == 7 * 14 + 18);

  const auto c15 = dn_components(15);
  REQUIRE(c15.size() == 1);
  CHECK(c15[0].d == 0);
  CHECK(c15[0].family == Family::D);

  const auto c16 = dn_components(16);
  REQUIRE(c16.size() == 2);
  CHECK(c16[0].d == 1);
  CHECK(c16[1].d == 9);
  CHECK(c16[1].family == Family::DDoublePrime);
  CHECK(c16[1].ambient == "2b");

  const auto c17 = dn_components(17);
  REQUIRE(c17.size() == 2);
  CHECK(c17[1].d == 10);
}

TEST_CASE("intersection forms") {
  const auto f = intersection_form(Kind::First, 13, "1b");
  CHECK(f.even);
  CHECK(f.signature == -96);
  CHECK(f.rank == 12 * 15 - 24 - 2);
  CHECK(f.freedman == "29H+12(-E8)");

  CHECK_FALSE(intersection_form(Kind::First, 9, "1a").even);
  CHECK_FALSE(intersection_form(Kind::First, 9, "1b").even);
  for (long n = 7; n <= 40; ++n)
    for (const auto& tag : component_tags(Kind::Second, n)) CHECK_FALSE(intersection_form(Kind::Second, n, tag).even);

  const auto odd = intersection_form(Kind::Second, 14, "2");
  CHECK(odd.freedman == "31<1>+132<-1>");
  CHECK_THROWS_AS(intersection_form(Kind::First, 12, "1b"), DomainError);
}
