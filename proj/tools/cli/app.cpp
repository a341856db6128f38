#include "app.hpp"

#include "table.hpp"
#include "tables.hpp"
#include "verify.hpp"

#include <horikawa/horikawa.hpp>

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <regex>

namespace horikawa::cli {

namespace {

const std::map<std::string, Format> kFormats = {{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

Integer parse_integer(const std::string& s) {
  static const std::regex re("[+-]?[0-9]+");
  if (!std::regex_match(s, re)) throw UsageError("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Chain parse_chain(const std::vector<std::string>& args) {
  std::vector<Integer> e;
  for (const auto& a : args) e.push_back(parse_integer(a));
  return Chain(std::move(e));
}

Kind parse_kind(const std::string& s) {
  if (s == "first") return Kind::First;
  if (s == "second") return Kind::Second;
  throw UsageError("kind must be 'first' or 'second', got '" + s + "'");
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "[";
    for (const auto& x : v) s += (s.size() > 1 ? "," : "") + json_scalar_text(x);
    return s + "]";
  }
  return v.dump();
}

// Flat JSON objects as CSV with a header line.
void emit_csv_records(std::ostream& out, const std::vector<Json>& records) {
  if (records.empty()) return;
  bool first = true;
  for (const auto& [k, v] : records.front().items()) {
    out << (first ? "" : ",") << csv_escape(k);
    first = false;
  }
  out << '\n';
  for (const auto& r : records) {
    first = true;
    for (const auto& [k, v] : r.items()) {
      out << (first ? "" : ",") << csv_escape(json_scalar_text(v));
      first = false;
    }
    out << '\n';
  }
}

void emit_records(std::ostream& out, Format f, const std::vector<Json>& records, const std::vector<std::string>& text) {
  if (f == Format::Json) {
    out << (records.size() == 1 ? records.front() : Json(records)).dump(2) << '\n';
  } else if (f == Format::Csv) {
    emit_csv_records(out, records);
  } else {
    for (const auto& line : text) out << line << '\n';
  }
}

struct TableArgs {
  std::string table;
  std::optional<long> n, n_min, n_max, d, d_min, d_max;
  std::string kind;
  bool eval = false;
  std::string empty_as = "\xE2\x88\x85";
  std::size_t max_len = 0;
  bool two_gorenstein = false;
  bool dedupe = false;
  bool du_val_as_t = false;
};

long default_n_min(const TableRequest& r) {
  if (r.table == "hj") return 2;
  if (r.table == "topology") return 5;
  if (r.table == "strata" && r.kind.value_or(Kind::Second) == Kind::Second) return 7;
  return 14;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of T-singularities, Hirzebruch-surface linear systems and Horikawa moduli strata",
               "horikawa"};
  app.require_subcommand(1);
  std::string format = "text";
  std::function<int()> action;

  // hj
  CLI::App* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions and T-chains");
  hj->require_subcommand(1);
  bool du_val_as_t = false;
  hj->add_flag("--du-val-as-t", du_val_as_t, "Count Du Val chains as T");

  std::vector<std::string> pos;
  std::string side = "both";
  std::size_t max_len = 0;
  bool two_gorenstein = false, dedupe = false;

  CLI::App* expand = hj->add_subcommand("expand", "Expand n/q into its resolution chain");
  expand->add_option("pair", pos, "n and q")->expected(2)->required();
  add_format(expand, format);
  expand->callback([&] {
    action = [&] {
      const auto s = CyclicQuotientSingularity::make(parse_integer(pos[0]), parse_integer(pos[1]));
      const Chain c = hj_expand(s);
      const auto cls = classify_chain(c);
      emit_records(out, kFormats.at(format), {chain_json(c, cls, du_val_as_t)}, {describe_chain(c, cls, du_val_as_t)});
      return kExitOk;
    };
  });

  CLI::App* eval = hj->add_subcommand("eval", "Evaluate a chain e1 e2 ... as n/q");
  eval->add_option("entries", pos, "Chain entries")->required();
  add_format(eval, format);
  eval->callback([&] {
    action = [&] {
      const Chain c = parse_chain(pos);
      const Rational v = hj_eval(c);
      Json j = Json::object();
      j["chain"] = c.str();
      j["value"] = to_string(v);
      emit_records(out, kFormats.at(format), {j}, {to_string(v)});
      return kExitOk;
    };
  });

  CLI::App* classify = hj->add_subcommand("classify", "Classify a chain e1 e2 ... or a pair n/q");
  classify->add_option("input", pos, "Chain entries, or n/q")->required();
  add_format(classify, format);
  classify->callback([&] {
    action = [&] {
      Chain c{2};
      if (pos.size() == 1 && pos[0].find('/') != std::string::npos) {
        const auto slash = pos[0].find('/');
        c = hj_expand(CyclicQuotientSingularity::make(parse_integer(pos[0].substr(0, slash)),
                                                      parse_integer(pos[0].substr(slash + 1))));
      } else {
        c = parse_chain(pos);
      }
      const auto cls = classify_chain(c);
      emit_records(out, kFormats.at(format), {chain_json(c, cls, du_val_as_t)}, {describe_chain(c, cls, du_val_as_t)});
      return kExitOk;
    };
  });

  CLI::App* grow = hj->add_subcommand("grow", "Apply the T-chain growth step");
  grow->add_option("entries", pos, "Chain entries")->required();
  grow->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  add_format(grow, format);
  grow->callback([&] {
    action = [&] {
      const Chain c = parse_chain(pos);
      std::vector<Json> records;
      std::vector<std::string> text;
      for (Side s : {Side::Left, Side::Right}) {
        const std::string name = s == Side::Left ? "left" : "right";
        if (side != "both" && side != name) continue;
        const Chain g = grow_chain(c, s);
        const auto cls = classify_chain(g);
        Json j = Json::object();
        j["side"] = name;
        const Json body = chain_json(g, cls, du_val_as_t);
        for (const auto& [k, v] : body.items()) j[k] = v;
        records.push_back(std::move(j));
        text.push_back(name + (name == "left" ? "   " : "  ") + describe_chain(g, cls, du_val_as_t));
      }
      emit_records(out, kFormats.at(format), records, text);
      return kExitOk;
    };
  });

  CLI::App* enumerate = hj->add_subcommand("enum", "Enumerate T-chains up to a length");
  enumerate->add_option("--max-len", max_len, "Maximum chain length")->required();
  enumerate->add_flag("--two-gorenstein", two_gorenstein, "Only [4] and [3,2,...,2,3]");
  enumerate->add_flag("--dedupe", dedupe, "Identify a chain with its reversal");
  add_format(enumerate, format);
  enumerate->callback([&] {
    action = [&] {
      if (max_len < 1) throw UsageError("--max-len must be >= 1");
      const Format f = kFormats.at(format);
      if (f != Format::Text) {
        TableRequest req;
        req.table = "chains";
        req.max_len = max_len;
        req.two_gorenstein_only = two_gorenstein;
        req.dedupe = dedupe;
        render(out, build_table(req), f, {});
        return kExitOk;
      }
      const auto chains = enumerate_t_chains(max_len, {two_gorenstein, dedupe});
      for (const Chain& c : chains) out << describe_chain(c, classify_chain(c), du_val_as_t) << '\n';
      out << "# " << chains.size() << " chains\n";
      return kExitOk;
    };
  });

  CLI::App* disc = hj->add_subcommand("discrepancies", "Discrepancies of the exceptional curves");
  disc->add_option("entries", pos, "Chain entries")->required();
  add_format(disc, format);
  disc->callback([&] {
    action = [&] {
      const Chain c = parse_chain(pos);
      const auto a = discrepancies(c);
      std::string line;
      std::vector<Json> rows;
      Json values = Json::array();
      for (std::size_t k = 0; k < a.size(); ++k) {
        line += (k ? " " : "") + to_string(a[k]);
        values.push_back(to_string(a[k]));
        Json r = Json::object();
        r["index"] = k + 1;
        r["entry"] = to_string(c[k]);
        r["discrepancy"] = to_string(a[k]);
        rows.push_back(std::move(r));
      }
      const Format f = kFormats.at(format);
      if (f == Format::Json) {
        Json j = Json::object();
        j["chain"] = c.str();
        j["discrepancies"] = std::move(values);
        out << j.dump(2) << '\n';
      } else {
        emit_records(out, f, rows, {line});
      }
      return kExitOk;
    };
  });

  // tables
  TableArgs ta;
  CLI::App* tables = app.add_subcommand("tables", "Reproduce a table over a range of n (and d)");
  tables->add_option("table", ta.table, "T1 | T2 | T3 | strata | hj | chains | topology")->required();
  tables->add_option("--n", ta.n, "Single n");
  tables->add_option("--n-min", ta.n_min, "Smallest n");
  tables->add_option("--n-max", ta.n_max, "Largest n");
  tables->add_option("--d", ta.d, "Single d");
  tables->add_option("--d-min", ta.d_min, "Smallest d");
  tables->add_option("--d-max", ta.d_max, "Largest d");
  tables->add_option("--kind", ta.kind, "first | second (strata, topology)");
  tables->add_flag("--eval", ta.eval, "Always print numbers, never closed forms");
  tables->add_option("--empty-as", ta.empty_as, "Rendering of empty strata in text/csv: \xE2\x88\x85 or -1")
      ->check(CLI::IsMember({"\xE2\x88\x85", "-1"}));
  tables->add_option("--max-len", ta.max_len, "Chain length bound (chains)");
  tables->add_flag("--two-gorenstein", ta.two_gorenstein, "Only 2-Gorenstein chains (chains)");
  tables->add_flag("--dedupe", ta.dedupe, "Identify chains with their reversals (chains)");
  tables->add_flag("--du-val-as-t", ta.du_val_as_t, "Count Du Val chains as T (hj)");
  add_format(tables, format);
  tables->callback([&] {
    action = [&] {
      if (!is_table_id(ta.table)) throw UsageError("unknown table '" + ta.table + "'");
      TableRequest req;
      req.table = ta.table;
      if (!ta.kind.empty()) req.kind = parse_kind(ta.kind);
      if (ta.n && (ta.n_min || ta.n_max)) throw UsageError("--n conflicts with --n-min/--n-max");
      if (ta.d && (ta.d_min || ta.d_max)) throw UsageError("--d conflicts with --d-min/--d-max");
      if (ta.n) {
        req.n_min = req.n_max = *ta.n;
      } else if (ta.n_max) {
        req.n_max = *ta.n_max;
        req.n_min = ta.n_min.value_or(default_n_min(req));
      } else if (ta.n_min) {
        throw UsageError("--n-min needs --n-max");
      } else if (ta.table != "chains") {
        throw UsageError("table " + ta.table + " needs --n or --n-max");
      }
      if (ta.d) req.d_min = req.d_max = *ta.d;
      else {
        req.d_min = ta.d_min;
        req.d_max = ta.d_max;
      }
      req.force_eval = ta.eval;
      req.max_len = ta.max_len;
      req.two_gorenstein_only = ta.two_gorenstein;
      req.dedupe = ta.dedupe;
      req.du_val_as_t = ta.du_val_as_t;
      RenderOptions ro;
      ro.empty_as_minus_one = ta.empty_as == "-1";
      render(out, build_table(req), kFormats.at(format), ro);
      return kExitOk;
    };
  });

  // verify
  VerifyOptions vo;
  std::string scope = "all";
  std::string tamper;
  long hj_n_max = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run the cross-path verification sweeps");
  verify->add_option("scope", scope, "all or a module name (hj, picard, systems, moduli, tangent)");
  verify->add_option("--n-max", vo.n_max, "Largest n for the sweeps (>= 14)");
  verify->add_option("--hj-n-max", hj_n_max, "Largest n for the continued-fraction round trip (default: --n-max)");
  verify->add_option("--chain-max-len", vo.chain_max_len, "Chain length bound for the recognizer oracle");
  verify->add_option("--chain-max-entry", vo.chain_max_entry, "Entry bound for the recognizer oracle");
  verify->add_option("--tamper-gram", tamper, "Fault injection: overwrite Gram entry I,J of each Y lattice with V");
  add_format(verify, format);
  verify->callback([&] {
    action = [&] {
      vo.scope = scope;
      if (hj_n_max > 0) vo.hj_n_max = hj_n_max;
      if (!tamper.empty()) {
        static const std::regex re("([0-9]+),([0-9]+),([+-]?[0-9]+)");
        std::smatch m;
        if (!std::regex_match(tamper, m, re)) throw UsageError("--tamper-gram expects I,J,V");
        vo.tamper = GramTamper{std::stoul(m[1]), std::stoul(m[2]), parse_integer(m[3])};
      }
      const VerifyReport report = run_verify(vo);
      render_verify(out, report, kFormats.at(format));
      return report.ok() ? kExitOk : kExitFailure;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InvariantError& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace horikawa::cli
