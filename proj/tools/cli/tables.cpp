#include "tables.hpp"

#include <horikawa/hirzebruch_systems.hpp>
#include <horikawa/horikawa_moduli.hpp>

#include <algorithm>
#include <numeric>

namespace horikawa::cli {

namespace {

constexpr const char* kTableIds[] = {"T1", "T2", "T3", "strata", "hj", "chains", "topology"};

std::vector<long> ds_in_range(const TableRequest& req, Kind kind, long n) {
  std::vector<long> out;
  for (long d : admissible_ds(kind, n)) {
    if (req.d_min && d < *req.d_min) continue;
    if (req.d_max && d > *req.d_max) continue;
    out.push_back(d);
  }
  return out;
}

Cell form_or_empty(const std::optional<LinearForm>& f, Cell absent) {
  return f ? Cell::str(f->str()) : absent;
}

Cell dim_cell(const std::optional<Integer>& v) { return v ? Cell::num(*v) : Cell::empty(); }

// Swap numbers for closed forms when every row sits in one regime.
template <typename SymbolicRow>
void maybe_symbolic(Table& t, const TableRequest& req, SymbolicRow&& symbolic_values) {
  if (req.force_eval || t.rows.size() < 2) return;
  const std::string& first = t.rows.front().regime;
  if (!std::all_of(t.rows.begin(), t.rows.end(), [&](const TableRow& r) { return r.regime == first; })) return;
  for (auto& r : t.rows) symbolic_values(r);
  t.symbolic = true;
}

long key_long(const Cell& c) { return c.number.get_si(); }

Table table1(const TableRequest& req) {
  Table t{"T1", {"n", "d"}, {"dim D'", "dim D''", "D' component", "D'' component"}, {}, false, ""};
  for (long n = req.n_min; n <= req.n_max; ++n)
    for (long d : ds_in_range(req, Kind::First, n)) {
      const auto [p, pp] = d_strata(n, d);
      const Table1Row row = table1_row(n, d);
      t.rows.push_back({{Cell::num(n), Cell::num(d)},
                        row.label,
                        {dim_cell(p.dim), dim_cell(pp.dim), Cell::boolean(p.is_component),
                         pp.empty() ? Cell::empty() : Cell::boolean(pp.is_component)},
                        "T1:" + row.label});
    }
  maybe_symbolic(t, req, [](TableRow& r) {
    const Table1Row row = table1_row(key_long(r.keys[0]), key_long(r.keys[1]));
    r.values[0] = form_or_empty(row.d_prime, Cell::empty());
    r.values[1] = form_or_empty(row.d_double, Cell::empty());
  });
  return t;
}

Cell l_dim_cell(long n, long d, int i) {
  if (i == 1 && d == 0) return Cell::empty();
  const SystemAnalysis a = analyze_system(BlowupConfig::make(d, i, 0), n);
  if (!a.dim) return Cell::undefined();
  return Cell::num(a.dim->constant_value());
}

Table table2(const TableRequest& req) {
  Table t{"T2", {"n", "d"}, {"dim|L00|", "dim|L10|"}, {}, false, ""};
  for (long n = req.n_min; n <= req.n_max; ++n)
    for (long d : ds_in_range(req, Kind::First, n)) {
      const std::string label(regime_label(regime_of(n, d)));
      t.rows.push_back({{Cell::num(n), Cell::num(d)}, label, {l_dim_cell(n, d, 0), l_dim_cell(n, d, 1)}, "T2:" + label});
    }
  maybe_symbolic(t, req, [](TableRow& r) {
    const long n = key_long(r.keys[0]), d = key_long(r.keys[1]);
    const Regime reg = regime_of(n, d);
    r.values[0] = form_or_empty(table2_closed_form(reg, 0), Cell::undefined());
    r.values[1] = d == 0 ? Cell::empty() : form_or_empty(table2_closed_form(reg, 1), Cell::undefined());
  });
  return t;
}

Table table3(const TableRequest& req) {
  Table t{"T3", {"n", "d"}, {"Z00", "Z01", "Z10", "Z11"}, {}, false, ""};
  for (long n = req.n_min; n <= req.n_max; ++n)
    for (long d : ds_in_range(req, Kind::First, n)) {
      const std::string label(regime_label(regime_of(n, d)));
      TableRow row{{Cell::num(n), Cell::num(d)}, label, {}, "T3:" + label};
      for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) {
          if (i == 1 && d == 0) {
            row.values.push_back(Cell::empty());
            continue;
          }
          const FixedPart f = analyze_system(BlowupConfig::make(d, i, j), n).fixed;
          row.values.push_back(f == FixedPart::NonReduced ? Cell::non_reduced()
                                                          : Cell::str(std::string(fixed_part_name(f))));
        }
      t.rows.push_back(std::move(row));
    }
  return t;
}

std::string second_regime(long n, long d) {
  if (d == 0) return "d=0";
  return 3 * d - n - 4 > 0 ? "eta>0" : "eta=0";
}

Table strata(const TableRequest& req) {
  const Kind kind = req.kind.value_or(Kind::Second);
  if (kind == Kind::Second) {
    Table t{"strata", {"n", "d"}, {"dim", "eta", "component"}, {}, false, ""};
    for (long n = req.n_min; n <= req.n_max; ++n)
      for (long d : ds_in_range(req, Kind::Second, n)) {
        const StratumRecord r = stratum_dim_second(n, d);
        const std::string reg = second_regime(n, d);
        t.rows.push_back({{Cell::num(n), Cell::num(d)},
                          reg,
                          {dim_cell(r.dim), Cell::num(*r.eta), Cell::boolean(r.is_component)},
                          "strata:second:" + reg});
      }
    maybe_symbolic(t, req, [](TableRow& r) {
      if (r.regime == "d=0") {
        r.values[0] = Cell::str("7n+19");
        r.values[1] = Cell::str("0");
      } else if (r.regime == "eta=0") {
        r.values[0] = Cell::str("7n+20-d");
        r.values[1] = Cell::str("0");
      } else {
        r.values[0] = Cell::str("7n+21+eta-d");
        r.values[1] = Cell::str("3d-n-4");
      }
    });
    return t;
  }
  Table t{"strata", {"n", "d"}, {"dim D'", "nu D'", "dim D''", "nu D''"}, {}, false, ""};
  for (long n = req.n_min; n <= req.n_max; ++n)
    for (long d : ds_in_range(req, Kind::First, n)) {
      const auto [p, pp] = d_strata(n, d);
      const std::string label = table1_row(n, d).label;
      t.rows.push_back({{Cell::num(n), Cell::num(d)},
                        label,
                        {dim_cell(p.dim), Cell::num(p.nu), dim_cell(pp.dim), pp.empty() ? Cell::empty() : Cell::num(pp.nu)},
                        "strata:first:" + label});
    }
  maybe_symbolic(t, req, [](TableRow& r) {
    const Table1Row row = table1_row(key_long(r.keys[0]), key_long(r.keys[1]));
    const bool middle = row.label == "2d-2<=n<3d-3";
    r.values[0] = form_or_empty(row.d_prime, Cell::empty());
    r.values[1] = Cell::str(middle ? "n+3-2d" : "0");
    r.values[2] = form_or_empty(row.d_double, Cell::empty());
    r.values[3] = row.d_double ? Cell::str(middle ? "n+2-2d" : "0") : Cell::empty();
  });
  return t;
}

Cell chain_cell(const Chain& c) { return Cell::str(c.str()); }

void classification_cells(TableRow& row, const ChainClassification& cls, bool du_val_as_t) {
  row.values.push_back(Cell::str(std::string(kind_name(cls.kind))));
  row.values.push_back(Cell::boolean(cls.is_t(du_val_as_t)));
  if (cls.t) {
    row.values.push_back(Cell::num(cls.t->delta));
    row.values.push_back(Cell::num(cls.t->m));
    row.values.push_back(Cell::num(cls.t->a));
  } else {
    for (int k = 0; k < 3; ++k) row.values.push_back(Cell::empty());
  }
  row.values.push_back(Cell::boolean(cls.two_gorenstein));
}

Table hj_table(const TableRequest& req) {
  Table t{"hj", {"n", "q"}, {"chain", "kind", "is_T", "delta", "m", "a", "two_gorenstein"}, {}, false, ""};
  for (long n = std::max(req.n_min, 2L); n <= req.n_max; ++n)
    for (long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Chain c = hj_expand(CyclicQuotientSingularity::make(n, q));
      TableRow row{{Cell::num(n), Cell::num(q)}, "", {chain_cell(c)}, "hj:1/" + std::to_string(n) + "(1," + std::to_string(q) + ")"};
      classification_cells(row, classify_chain(c), req.du_val_as_t);
      t.rows.push_back(std::move(row));
    }
  return t;
}

Table chains_table(const TableRequest& req) {
  if (req.max_len < 1) throw UsageError("chains table needs --max-len >= 1");
  Table t{"chains", {"chain"}, {"n", "q", "length", "delta", "m", "a", "k2", "two_gorenstein"}, {}, false, ""};
  for (const Chain& c : enumerate_t_chains(req.max_len, {req.two_gorenstein_only, req.dedupe})) {
    const auto s = singularity_of(c);
    const auto cls = classify_chain(c);
    t.rows.push_back({{chain_cell(c)},
                      "",
                      {Cell::num(s.n), Cell::num(s.q), Cell::num(static_cast<long>(c.length())), Cell::num(cls.t->delta),
                       Cell::num(cls.t->m), Cell::num(cls.t->a), Cell::num(k2_contribution(c)),
                       Cell::boolean(cls.two_gorenstein)},
                      c.is_two_gorenstein_seed() ? "chains:seed" : "chains:grown"});
  }
  return t;
}

Table topology(const TableRequest& req) {
  Table t{"topology", {"kind", "n", "component"}, {"rank", "signature", "parity", "class"}, {}, false, ""};
  std::vector<Kind> kinds;
  if (req.kind) kinds.push_back(*req.kind);
  else kinds = {Kind::First, Kind::Second};
  for (Kind kind : kinds)
    for (long n = std::max(req.n_min, 3L); n <= req.n_max; ++n)
      for (const auto& tag : component_tags(kind, n)) {
        const IntersectionForm f = intersection_form(kind, n, tag);
        t.rows.push_back({{Cell::str(std::string(kind_name(kind))), Cell::num(n), Cell::str(tag)},
                          "",
                          {Cell::num(f.rank), Cell::num(f.signature), Cell::str(f.even ? "even" : "odd"),
                           Cell::str(f.freedman)},
                          "topology:" + tag});
      }
  return t;
}

}  // namespace

bool is_table_id(const std::string& id) {
  return std::find(std::begin(kTableIds), std::end(kTableIds), id) != std::end(kTableIds);
}

Table build_table(const TableRequest& req) {
  if (!is_table_id(req.table)) throw UsageError("unknown table '" + req.table + "'");
  if (req.table != "chains" && req.n_max < req.n_min)
    throw UsageError("empty n range [" + std::to_string(req.n_min) + ", " + std::to_string(req.n_max) + "]");
  if (req.d_min && req.d_max && *req.d_max < *req.d_min) throw UsageError("empty d range");

  Table t;
  if (req.table == "T1") t = table1(req);
  else if (req.table == "T2") t = table2(req);
  else if (req.table == "T3") t = table3(req);
  else if (req.table == "strata") t = strata(req);
  else if (req.table == "hj") t = hj_table(req);
  else if (req.table == "chains") t = chains_table(req);
  else t = topology(req);

  if (t.rows.empty()) t.note = "no admissible rows in the requested range";
  return t;
}

std::string describe_chain(const Chain& c, const ChainClassification& cls, bool du_val_as_t) {
  std::string s = c.str() + "  ";
  switch (cls.kind) {
    case ChainKind::DuVal:
      s += du_val_as_t ? "DuVal (T)" : "DuVal";
      break;
    case ChainKind::NotT:
      s += "not T";
      break;
    case ChainKind::T:
      s += "T \xCE\xB4=" + to_string(cls.t->delta) + " m=" + to_string(cls.t->m) + " a=" + to_string(cls.t->a);
      if (cls.two_gorenstein) s += "  2-Gorenstein";
      break;
  }
  return s;
}

Json chain_json(const Chain& c, const ChainClassification& cls, bool du_val_as_t) {
  const auto s = singularity_of(c);
  Json entries = Json::array();
  for (const auto& e : c.entries()) entries.push_back(cell_to_json(Cell::num(e)));
  Json j = Json::object();
  j["n"] = cell_to_json(Cell::num(s.n));
  j["q"] = cell_to_json(Cell::num(s.q));
  j["chain"] = std::move(entries);
  j["kind"] = std::string(kind_name(cls.kind));
  j["is_T"] = cls.is_t(du_val_as_t);
  j["delta"] = cls.t ? cell_to_json(Cell::num(cls.t->delta)) : Json(nullptr);
  j["m"] = cls.t ? cell_to_json(Cell::num(cls.t->m)) : Json(nullptr);
  j["a"] = cls.t ? cell_to_json(Cell::num(cls.t->a)) : Json(nullptr);
  j["two_gorenstein"] = cls.two_gorenstein;
  return j;
}

}  // namespace horikawa::cli
