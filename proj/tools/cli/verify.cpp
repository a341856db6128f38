#include "verify.hpp"

#include "tables.hpp"

#include <horikawa/horikawa.hpp>

#include <functional>
#include <numeric>
#include <ostream>

namespace horikawa::cli {

namespace {

struct ScopeAlias {
  const char* alias;
  const char* module;
};

constexpr ScopeAlias kScopes[] = {
    {"hj", "hj-calculus"},          {"hj-calculus", "hj-calculus"},
    {"picard", "picard-lattice"},   {"picard-lattice", "picard-lattice"},
    {"systems", "hirzebruch-systems"}, {"hirzebruch-systems", "hirzebruch-systems"},
    {"moduli", "horikawa-moduli"},  {"horikawa-moduli", "horikawa-moduli"},
    {"tangent", "tangent-cohomology"}, {"tangent-cohomology", "tangent-cohomology"},
    {"all", "all"},
};

// Accumulates pass/fail counts for one check; the first failure is kept.
class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  void pass() { ++r_.passed; }

  void fail(Json cell, const std::string& expected, const std::string& got) {
    ++r_.failed;
    if (!r_.first_failure) r_.first_failure = CellFailure{r_.name, std::move(cell), expected, got};
  }

  void expect(bool ok, const std::function<Json()>& cell, const std::string& expected,
              const std::function<std::string()>& got) {
    if (ok) pass();
    else fail(cell(), expected, got());
  }

  // Runs body; an exception counts as one failure at this cell.
  template <typename Body>
  void guarded(const std::function<Json()>& cell, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(cell(), "no error", e.what());
    }
  }

 private:
  CheckResult& r_;
};

Json nd_cell(long n, long d, const std::string& which = "") {
  Json j = Json::object();
  j["n"] = n;
  j["d"] = d;
  if (!which.empty()) j["which"] = which;
  return j;
}

YLattice tampered(const YLattice& y, const std::optional<GramTamper>& t) {
  if (!t) return y;
  YLattice out = y;
  out.lattice = y.lattice.with_gram_entry(t->i, t->j, t->value);
  return out;
}

void check_table1(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      auto cell = [&] { return nd_cell(n, d); };
      rec.guarded(cell, [&] {
        const auto [p, pp] = d_strata(n, d);
        const Table1Row row = table1_row(n, d);
        auto cmp = [&](const StratumRecord& s, const std::optional<LinearForm>& f, const char* which) {
          const std::string want = f ? to_string(f->eval(n, d)) : "empty";
          const std::string got = s.dim ? to_string(*s.dim) : "empty";
          rec.expect(want == got, [&] { return nd_cell(n, d, which); }, want, [&] { return got; });
        };
        cmp(p, row.d_prime, "D'");
        cmp(pp, row.d_double, "D''");
      });
    }
  res.detail = std::to_string(res.passed) + " stratum cells";
}

void check_table2(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      const Regime r = regime_of(n, d);
      for (int i = 0; i <= (d > 0 ? 1 : 0); ++i) {
        std::optional<Integer> dims[2];
        for (int j = 0; j <= 1; ++j) {
          const BlowupConfig cfg = BlowupConfig::make(d, i, j);
          auto cell = [&] { return nd_cell(n, d, cfg.str()); };
          rec.guarded(cell, [&] {
            const SystemAnalysis a = analyze_on(tampered(y_lattice(cfg), o.tamper), r, Poly(n));
            if (!a.dim) return;
            dims[j] = a.dim->constant_value();
            const auto form = table2_closed_form(r, i);
            const std::string want = form ? to_string(form->eval(n, d)) : "undefined";
            rec.expect(form && *dims[j] == form->eval(n, d), cell, want, [&] { return to_string(*dims[j]); });
            rec.expect(a.m_squared.constant_value() > 0 && a.m_dot_k.constant_value() < 0, cell, "M^2 > 0, M.K < 0",
                       [&] { return "M^2=" + a.m_squared.str() + " M.K=" + a.m_dot_k.str(); });
          });
        }
        if (dims[0] && dims[1]) {
          const std::string which = "Y" + std::to_string(i) + "0=Y" + std::to_string(i) + "1";
          rec.expect(*dims[0] == *dims[1], [&] { return nd_cell(n, d, which); }, to_string(*dims[0]),
                     [&] { return to_string(*dims[1]); });
        }
      }
    }
  res.detail = std::to_string(res.passed) + " comparisons";
}

void check_table3(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      const Regime r = regime_of(n, d);
      for (int i = 0; i <= (d > 0 ? 1 : 0); ++i)
        for (int j = 0; j <= 1; ++j) {
          const BlowupConfig cfg = BlowupConfig::make(d, i, j);
          auto cell = [&] { return nd_cell(n, d, cfg.str()); };
          rec.guarded(cell, [&] {
            const YLattice y = tampered(y_lattice(cfg), o.tamper);
            const SystemAnalysis a = analyze_on(y, r, Poly(n));
            const FixedPart greedy = certify_fixed_part(y, n);
            rec.expect(greedy == a.fixed, cell, std::string(fixed_part_name(a.fixed)),
                       [&] { return std::string(fixed_part_name(greedy)); });

            const bool d_in_z = a.fixed != FixedPart::Zero;
            const Integer dl = a.d_prime_dot_l.constant_value();
            rec.expect((dl < 0) == d_in_z, cell, d_in_z ? "D'.L < 0" : "D'.L >= 0",
                       [&] { return "D'.L = " + to_string(dl); });

            if (a.fixed == FixedPart::DPrime || a.fixed == FixedPart::DPrimePlusE1MinusE2) {
              const Integer rest = a.d_prime_dot_l_minus_d_prime.constant_value();
              rec.expect(rest >= 0, cell, "D'.(L-D') >= 0", [&] { return to_string(rest); });
            }
            if (j == 1 && a.reduced) {
              // Pair with L minus the D' part of Z: that is what E1-E2 must meet negatively.
              const Integer e = a.e12_dot_residual->constant_value();
              const bool in_z = a.fixed == FixedPart::DPrimePlusE1MinusE2;
              rec.expect((e == -1) == in_z, cell, in_z ? "(E1-E2).(L-Z_D') = -1" : "(E1-E2).(L-Z_D') != -1",
                         [&] { return to_string(e); });
              if (in_z) {
                const Integer lit = a.e12_dot_l_minus_d_prime->constant_value();
                rec.expect(lit == -1, cell, "(E1-E2).(L-D') = -1", [&] { return to_string(lit); });
              }
            }
          });
        }
    }
  res.detail = std::to_string(res.passed) + " sign conditions";
}

void check_noether(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long d = 0; d <= (o.n_max + 3) / 2; ++d)
    for (int i = 0; i <= (d > 0 ? 1 : 0); ++i) {
      const BlowupConfig cfg = BlowupConfig::make(d, i, 0);
      auto cell = [&] {
        Json j = Json::object();
        j["d"] = d;
        j["which"] = cfg.str();
        return j;
      };
      rec.guarded(cell, [&] {
        const YLattice y = tampered(y_lattice(cfg), o.tamper);
        const Integer got = noether_defect(y.lattice);
        rec.expect(got == 10, cell, "10", [&] { return to_string(got); });
        const Poly r2 = intersect(y.lattice, y.r_prime, y.r_prime);
        rec.expect(r2 == Poly(-2), cell, "R'^2 = -2", [&] { return r2.str(); });
      });
    }
  res.detail = std::to_string(res.passed) + " lattice identities";
}

void check_round_trip(CheckResult& res, long n_max) {
  Recorder rec(res);
  for (long n = 2; n <= n_max; ++n)
    for (long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Rational back = hj_eval(hj_expand(CyclicQuotientSingularity::make(n, q)));
      if (back == Rational(n, q)) {
        rec.pass();
      } else {
        Json cell = Json::object();
        cell["n"] = n;
        cell["q"] = q;
        rec.fail(cell, std::to_string(n) + "/" + std::to_string(q), to_string(back));
      }
    }
  const long want = coprime_pair_count(n_max);
  Json cell = Json::object();
  cell["n_max"] = n_max;
  if (res.passed != want) rec.fail(cell, std::to_string(want) + " pairs", std::to_string(res.passed) + " pairs");
  res.detail = std::to_string(res.passed) + " pairs (totient sum " + std::to_string(want) + ")";
}

void check_chain_oracle(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  std::vector<long> e;
  std::function<void()> walk = [&] {
    if (!e.empty()) {
      const Chain c(std::vector<Integer>(e.begin(), e.end()));
      const ReductionResult red = reduce_chain(c);
      const ChainClassification cls = classify_singularity(singularity_of(c));
      bool agree = red.kind == cls.kind;
      if (agree && cls.t) agree = red.delta && *red.delta == cls.t->delta;
      if (agree) rec.pass();
      else {
        Json cell = Json::object();
        cell["chain"] = c.str();
        rec.fail(cell, std::string(kind_name(cls.kind)), std::string(kind_name(red.kind)));
      }
    }
    if (e.size() == o.chain_max_len) return;
    for (long v = 2; v <= o.chain_max_entry; ++v) {
      e.push_back(v);
      walk();
      e.pop_back();
    }
  };
  walk();
  res.detail = std::to_string(res.passed) + " chains (length <= " + std::to_string(o.chain_max_len) +
               ", entries <= " + std::to_string(o.chain_max_entry) + ")";
}

void check_t_chain_gram(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (const Chain& c : enumerate_t_chains(o.t_chain_max_len)) {
    auto cell = [&] {
      Json j = Json::object();
      j["chain"] = c.str();
      return j;
    };
    rec.guarded(cell, [&] {
      const IntMatrix g = chain_gram(c);
      rec.expect(is_negative_definite(g), cell, "negative definite", [] { return std::string("not definite"); });
      const Integer det = abs(determinant(g));
      const Integer num = singularity_of(c).n;
      rec.expect(det == num, cell, to_string(num), [&] { return to_string(det); });
    });
  }
  res.detail = std::to_string(res.passed) + " T-chain conditions";
}

void check_discrepancies(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  const Rational half(-1, 2);
  for (const Chain& seed : enumerate_t_chains(o.two_gorenstein_max_len, {true, false})) {
    auto cell = [&] {
      Json j = Json::object();
      j["chain"] = seed.str();
      return j;
    };
    rec.guarded(cell, [&] {
      for (const Rational& a : discrepancies(seed))
        rec.expect(a == half, cell, "-1/2", [&] { return to_string(a); });
      const Integer k2 = k2_contribution(seed);
      rec.expect(k2 == 1, cell, "k2 = 1", [&] { return to_string(k2); });
      // Grow alternately left and right up to the length bound.
      Chain c = seed;
      Integer prev = k2;
      for (std::size_t step = 0; c.length() < o.two_gorenstein_max_len && step < 8; ++step) {
        c = grow_chain(c, step % 2 == 0 ? Side::Left : Side::Right);
        const Integer k = k2_contribution(c);
        rec.expect(k == prev + 1, [&] {
          Json j = Json::object();
          j["chain"] = c.str();
          return j;
        }, to_string(Integer(prev + 1)), [&] { return to_string(k); });
        prev = k;
      }
    });
  }
  res.detail = std::to_string(res.passed) + " discrepancy / K^2 conditions";
}

void check_tangent(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      rec.guarded([&] { return nd_cell(n, d); }, [&] {
        const long h2 = h2_tx(n, d);
        rec.expect(h2 == n - 3, [&] { return nd_cell(n, d, "h2"); }, std::to_string(n - 3),
                   [&] { return std::to_string(h2); });
      });
      for (Which w : {Which::DPrime, Which::DDoublePrime}) {
        if (w == Which::DDoublePrime && (d == 0 || n == 2 * d - 3)) continue;
        const std::string which(which_name(w));
        auto cell = [&] { return nd_cell(n, d, which); };
        rec.guarded(cell, [&] {
          const long nu = nu_count(n, d, w);
          const H1Assembly a = h1_assembly_on(h1_lattice(d, nu), n, d, w, nu);
          const Integer want = 7 * n + 18 - nu;
          rec.expect(a.h1 == want, cell, to_string(want), [&] { return to_string(a.h1); });
          const TangentReport t = tangent_report(n, d, w);
          rec.expect(t.divisor_tangent_dim == 7 * n + 18 && t.qg_tangent_dim == 7 * n + 19, cell,
                     "tangent dims 7n+18 / 7n+19",
                     [&] { return std::to_string(t.divisor_tangent_dim) + " / " + std::to_string(t.qg_tangent_dim); });
        });
      }
    }
  res.detail = std::to_string(res.passed) + " h1/h2 cells";
}

void check_nu(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n)
    for (long d : admissible_ds(Kind::First, n)) {
      if (!(n >= 2 * d - 2 && n <= 3 * d - 5)) continue;
      rec.guarded([&] { return nd_cell(n, d); }, [&] {
        const auto [p, pp] = d_strata(n, d);
        for (const auto& [rec_ptr, w] : {std::pair{&p, Which::DPrime}, std::pair{&pp, Which::DDoublePrime}}) {
          const long nu = nu_count(n, d, w);
          const Integer want = 7 * n + 18 - nu;
          const std::string got = rec_ptr->dim ? to_string(*rec_ptr->dim) : "empty";
          rec.expect(rec_ptr->dim && *rec_ptr->dim == want, [&] { return nd_cell(n, d, std::string(which_name(w))); },
                     to_string(want), [&] { return got; });
        }
      });
    }
  res.detail = std::to_string(res.passed) + " rows";
}

void check_dn(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 14; n <= o.n_max; ++n) {
    Json ncell = Json::object();
    ncell["n"] = n;
    rec.guarded([&] { return ncell; }, [&] {
      const auto comps = dn_components(n);
      const std::size_t want = (n % 4 == 2 || n % 4 == 3) ? 1 : 2;
      rec.expect(comps.size() == want, [&] { return ncell; }, std::to_string(want) + " components",
                 [&] { return std::to_string(comps.size()) + " components"; });
      // Exhaustive sweep: the top strata are exactly the listed ones.
      const Integer top = 7 * n + 18;
      for (long d : admissible_ds(Kind::First, n)) {
        const auto [p, pp] = d_strata(n, d);
        for (const StratumRecord* s : {&p, &pp}) {
          if (s->empty()) continue;
          const bool listed = std::any_of(comps.begin(), comps.end(),
                                          [&](const DnComponent& c) { return c.d == d && c.family == s->family; });
          const bool is_top = *s->dim == top;
          if (*s->dim > top || is_top != listed)
            rec.fail(nd_cell(n, d, std::string(family_name(s->family))), listed ? "7n+18" : "< 7n+18", to_string(*s->dim));
          else
            rec.pass();
        }
      }
    });
  }
  res.detail = std::to_string(res.passed) + " component / stratum checks";
}

void check_second_strata(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (long n = 7; n <= o.n_max; ++n) {
    long dense = 0;
    for (long d : admissible_ds(Kind::Second, n)) {
      rec.guarded([&] { return nd_cell(n, d); }, [&] {
        const StratumRecord r = stratum_dim_second(n, d);
        rec.expect(*r.dim <= 7 * n + 19, [&] { return nd_cell(n, d); }, "<= 7n+19", [&] { return to_string(*r.dim); });
        if (r.is_component) ++dense;
      });
    }
    Json cell = Json::object();
    cell["n"] = n;
    const long want = static_cast<long>(moduli_components(Kind::Second, n).size());
    rec.expect(dense == want, [&] { return cell; }, std::to_string(want) + " dense strata",
               [&] { return std::to_string(dense) + " dense strata"; });
  }
  res.detail = std::to_string(res.passed) + " second-kind strata checks";
}

void check_rokhlin(CheckResult& res, const VerifyOptions& o) {
  Recorder rec(res);
  for (Kind kind : {Kind::First, Kind::Second})
    for (long n = 5; n <= o.n_max; ++n)
      for (const auto& tag : component_tags(kind, n)) {
        auto cell = [&] {
          Json j = Json::object();
          j["kind"] = std::string(kind_name(kind));
          j["n"] = n;
          j["component"] = tag;
          return j;
        };
        rec.guarded(cell, [&] {
          const IntersectionForm f = intersection_form(kind, n, tag);
          const bool want_even = kind == Kind::First && tag == "1b" && n % 8 == 5;
          rec.expect(f.even == want_even, cell, want_even ? "even" : "odd", [&] { return f.even ? "even" : "odd"; });
          if (f.even) {
            rec.expect(f.signature % 16 == 0, cell, "16 | signature", [&] { return to_string(f.signature); });
          }
        });
      }
  res.detail = std::to_string(res.passed) + " forms";
}

struct CheckSpec {
  const char* name;
  const char* module;
  std::function<void(CheckResult&, const VerifyOptions&)> run;
};

}  // namespace

long coprime_pair_count(long n_max) {
  if (n_max < 2) return 0;
  std::vector<long> phi(static_cast<std::size_t>(n_max) + 1);
  std::iota(phi.begin(), phi.end(), 0L);
  for (long p = 2; p <= n_max; ++p)
    if (phi[p] == p)
      for (long k = p; k <= n_max; k += p) phi[k] -= phi[k] / p;
  long total = 0;
  for (long n = 2; n <= n_max; ++n) total += phi[n];
  return total;
}

std::string canonical_scope(const std::string& scope) {
  for (const auto& s : kScopes)
    if (scope == s.alias) return s.module;
  throw UsageError("unknown verify scope '" + scope + "'");
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const CellFailure* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (c.first_failure) return &*c.first_failure;
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& o) {
  const std::string scope = canonical_scope(o.scope);
  if (o.n_max < 14) throw DomainError("verify needs --n-max >= 14, got " + std::to_string(o.n_max));
  const long hj_max = o.hj_n_max.value_or(o.n_max);
  if (o.tamper && (o.tamper->i >= 4 || o.tamper->j >= 4))
    throw DomainError("tampered Gram entry must index the 4x4 Y lattice");

  const std::vector<CheckSpec> specs = {
      {"hj-round-trip", "hj-calculus", [hj_max](CheckResult& r, const VerifyOptions&) { check_round_trip(r, hj_max); }},
      {"chain-oracle", "hj-calculus", check_chain_oracle},
      {"t-chain-gram", "hj-calculus", check_t_chain_gram},
      {"picard-noether", "picard-lattice", check_noether},
      {"discrepancy-constants", "picard-lattice", check_discrepancies},
      {"table2-two-path", "hirzebruch-systems", check_table2},
      {"table3-sign-certificate", "hirzebruch-systems", check_table3},
      {"table1-two-path", "horikawa-moduli", check_table1},
      {"nu-consistency", "horikawa-moduli", check_nu},
      {"dn-components", "horikawa-moduli", check_dn},
      {"second-kind-strata", "horikawa-moduli", check_second_strata},
      {"rokhlin-gate", "horikawa-moduli", check_rokhlin},
      {"h1-h2-assembly", "tangent-cohomology", check_tangent},
  };
  VerifyReport report;
  for (const auto& s : specs) {
    CheckResult r;
    r.name = s.name;
    r.module = s.module;
    if (scope == "all" || scope == s.module) {
      r.ran = true;
      s.run(r, o);
    } else {
      r.detail = "out of scope";
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

Json failure_json(const CellFailure& f) {
  Json j = Json::object();
  j["check"] = f.check;
  for (const auto& [k, v] : f.cell.items()) j[k] = v;
  j["expected"] = f.expected;
  j["got"] = f.got;
  return j;
}

Json verify_json(const VerifyReport& r) {
  Json j = Json::object();
  j["status"] = r.ok() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["module"] = c.module;
    cj["status"] = !c.ran ? "skipped" : (c.failed == 0 ? "pass" : "fail");
    cj["passed"] = c.passed;
    cj["failed"] = c.failed;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (const CellFailure* f = r.first_failure()) j["first_failure"] = failure_json(*f);
  return j;
}

void render_verify(std::ostream& os, const VerifyReport& r, Format f) {
  if (f == Format::Json) {
    os << verify_json(r).dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "check,module,status,passed,failed,detail\n";
    for (const auto& c : r.checks)
      os << c.name << ',' << c.module << ',' << (!c.ran ? "skipped" : (c.failed == 0 ? "pass" : "fail")) << ','
         << c.passed << ',' << c.failed << ",\"" << c.detail << "\"\n";
  } else {
    for (const auto& c : r.checks) {
      const char* status = !c.ran ? "SKIP" : (c.failed == 0 ? "PASS" : "FAIL");
      os << status << "  " << c.name << "  [" << c.module << "]  " << c.detail;
      if (c.failed) os << "  (" << c.failed << " failed)";
      os << '\n';
    }
    os << (r.ok() ? "all checks passed" : "verification FAILED") << '\n';
  }
  if (const CellFailure* fail = r.first_failure()) os << failure_json(*fail).dump() << '\n';
}

}  // namespace horikawa::cli
