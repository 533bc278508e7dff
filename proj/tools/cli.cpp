#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "eoc/bijections.hpp"
#include "eoc/counting.hpp"
#include "eoc/enumerate.hpp"
#include "eoc/error.hpp"
#include "eoc/literal.hpp"
#include "eoc/parallel.hpp"
#include "eoc/predicates.hpp"

namespace eoc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  int n = -1;
  int k = 1;
  std::string multiset;
  bool brute = false;
  bool unguarded = false;
  std::string format = "text";

  std::string bijection;
  std::string input;
  bool inverse = false;
  bool trace = false;

  std::string suite = "all";
  int max_n = 4;
  int max_k = 1;
  std::uint64_t seed = 20240101;
  int samples = 200;

  std::string kind;
  std::string output;
};

FamilyId family_from(const Options& o) {
  const Family f = parse_family(o.family);
  if (is_cycle_family(f)) {
    if (!o.multiset.empty()) return FamilyId::cycles(f, parse_multiset(o.multiset));
    if (o.n < 1) throw ParseError("cycle families need --multiset or --n");
    return FamilyId::cycles(f, Multiset::uniform(o.n, o.k));
  }
  if (o.n < 0) throw ParseError("family " + o.family + " needs --n");
  return FamilyId::sized(f, o.n);
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw ParseError("unsupported --format '" + fmt + "' for this command");
}

// ---- count / list ----------------------------------------------------------

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  const FamilyId f = family_from(o);
  BigInt value;
  if (o.brute) {
    value = brute_count(f, o.unguarded);
  } else {
    if (!o.unguarded) check_pruned_guard(f);
    value = parallel::count(f);
  }
  if (o.format == "json")
    out << json{{"family", family_name(f.family)}, {"count", value.str()}}.dump() << "\n";
  else
    out << value << "\n";
  return kOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  const FamilyId f = family_from(o);
  if (!o.unguarded) check_pruned_guard(f);
  std::vector<std::string> items;
  if (is_cycle_family(f.family)) {
    if (!f.multiset.empty())
      visit_cycles(f.multiset, f.family, {},
                   [&](std::span<const Value> s) { items.push_back(format(Cycle::canonical({s.begin(), s.end()}))); });
  } else if (f.family == Family::Dumont || f.family == Family::Soe) {
    visit_permutations(f.family, f.n, {},
                       [&](std::span<const Value> w) { items.push_back(format(Permutation({w.begin(), w.end()}))); });
  } else {
    visit_histories(f.family, f.n, [&](const LaguerreHistory& h) { items.push_back(format(h)); });
  }
  if (o.format == "json") {
    out << json(items).dump() << "\n";
  } else {
    for (const auto& s : items) out << s << "\n";
  }
  return kOk;
}

// ---- map -------------------------------------------------------------------

std::string apply_map(const Options& o, std::ostream& out) {
  const auto& b = o.bijection;
  const bool inv = o.inverse;
  if (o.trace && !(b == "phi_fv" && inv)) throw ParseError("--trace is only available for phi_fv --inverse");
  if (b == "eta") return inv ? format(eta_inv(parse_permutation(o.input))) : format(eta(parse_cycle(o.input)));
  if (b == "phi_fv") {
    if (!inv) return format(phi_fv(parse_permutation(o.input)));
    const auto h = parse_laguerre(o.input);
    if (o.trace) {
      const auto states = phi_fv_inv_trace(h);
      for (std::size_t i = 0; i + 1 < states.size(); ++i) out << format_slots(states[i]) << "\n";
    }
    return format(phi_fv_inv(h));
  }
  if (b == "rho") return format(inv ? rho_inv(parse_laguerre(o.input)) : rho(parse_laguerre(o.input)));
  if (b == "psi") return format(inv ? psi_inv(parse_cycle(o.input)) : psi(parse_cycle(o.input)));
  if (b == "theta") return inv ? format(theta_inv(parse_permutation(o.input))) : format(theta(parse_cycle(o.input)));
  if (b == "Phi") return inv ? format(Phi_inv(parse_permutation(o.input))) : format(Phi(parse_cycle(o.input)));
  if (b == "Psi") return inv ? format(Psi_inv(parse_permutation(o.input))) : format(Psi(parse_cycle(o.input)));
  if (b == "compact") {
    if (inv) return format(parse_cycle(o.input));
    return format(compact(parse_cycle(o.input)));
  }
  throw ParseError("unknown bijection '" + b + "'");
}

int cmd_map(const Options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  std::ostringstream trace;
  const std::string image = apply_map(o, trace);
  if (o.format == "json") {
    json j{{"bijection", o.bijection}, {"inverse", o.inverse}, {"input", o.input}, {"output", image}};
    if (o.trace) {
      std::vector<std::string> lines;
      std::istringstream in(trace.str());
      for (std::string line; std::getline(in, line);) lines.push_back(line);
      lines.push_back(image);
      j["trace"] = lines;
    }
    out << j.dump() << "\n";
  } else {
    out << trace.str() << image << "\n";
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

// Roundtrips materialize EC_2n and D_{2n-1}; beyond n = 7 that is millions of objects.
constexpr int kMaxVerifyN = 7;

struct Report {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    if (!ok) ++failures;
  }
};

std::string join_counts(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

void verify_roundtrips(Report& r, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto ec = gen_ec(Multiset::uniform(2 * n, 1));
    const auto dumont = gen_dumont(2 * n - 1);
    const std::set<Permutation> codomain(dumont.begin(), dumont.end());
    std::set<Permutation> phi_image, psi_image;
    std::string bad;
    for (const auto& c : ec) {
      if (eta_inv(eta(c)) != c) bad = "eta on " + format(c);
      if (psi_inv(psi(c)) != c) bad = "psi on " + format(c);
      const auto p1 = Phi(c), p2 = Psi(c);
      if (Phi_inv(p1) != c) bad = "Phi on " + format(c);
      if (Psi_inv(p2) != c) bad = "Psi on " + format(c);
      phi_image.insert(p1);
      psi_image.insert(p2);
    }
    for (const auto& c : gen_dc(Multiset::uniform(2 * n, 1)))
      if (theta_inv(theta(c)) != c) bad = "theta on " + format(c);
    for (const auto& h : gen_laguerre(2 * n - 2, Family::LagM))
      if (rho_inv(rho(h)) != h) bad = "rho on " + format(h);
    r.check("roundtrips n=" + std::to_string(n), bad.empty(), bad);
    r.check("Phi bijective EC_" + std::to_string(2 * n) + " -> D_" + std::to_string(2 * n - 1),
            phi_image == codomain && phi_image.size() == ec.size());
    r.check("Psi bijective EC_" + std::to_string(2 * n) + " -> D_" + std::to_string(2 * n - 1),
            psi_image == codomain && psi_image.size() == ec.size());
  }
  const int perm_n = std::min(2 * max_n - 1, 8);
  std::string bad;
  for (int m = 1; m <= perm_n; ++m) {
    std::vector<Value> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation p(w);
      if (phi_fv_inv(phi_fv(p)) != p) bad = "phi_fv on " + format(p);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  r.check("phi_fv roundtrip on S_1..S_" + std::to_string(perm_n), bad.empty(), bad);
}

void verify_counts(Report& r, int max_n) {
  const auto g = genocchi_egf(std::max(max_n, 1));
  for (int n = 1; n <= max_n; ++n) {
    const auto set = Multiset::uniform(2 * n, 1);
    const std::vector<std::uint64_t> counts{
        parallel::count_cycles(set, Family::EC),
        parallel::count_cycles(set, Family::DC),
        parallel::count_permutations(Family::Dumont, 2 * n - 1),
        parallel::count_permutations(Family::Soe, 2 * n - 1),
        count(FamilyId::sized(Family::LagM, 2 * n - 2)),
        count(FamilyId::sized(Family::LagMstar, 2 * n - 2)),
    };
    std::vector<std::string> shown;
    bool ok = true;
    for (auto c : counts) {
      shown.push_back(std::to_string(c));
      ok = ok && BigInt(c) == g.at(n);
    }
    r.check("counts n=" + std::to_string(n) + " g=" + g.at(n).str() + " [ec,dc,dumont,soe,M,M*]=" + join_counts(shown), ok);
  }
}

void verify_formulas(Report& r, int max_n) {
  for (int m = 1; m <= max_n; ++m) {
    std::string bad;
    BigInt sum = 0;
    for (const auto& s : descent_sets(m)) {
      const DescentSpec spec(m, s);
      const BigInt ie = f_eq_ie(spec), cmy = f_eq_cmy(spec);
      sum += ie;
      if (ie != cmy) bad = "ie != cmy on " + format_set(s);
      if (m <= kMaxBruteDescentN && ie != brute_f(spec, DescentMode::Exact)) bad = "ie != brute on " + format_set(s);
    }
    BigInt fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    r.check("f_eq over all S, n=" + std::to_string(m), bad.empty() && sum == fact, bad.empty() ? "sum != n!" : bad);
  }
  const int top = std::max(max_n, 2);
  const auto g = genocchi_egf(top);
  bool ok = true;
  for (int n = 1; n + 1 <= top; ++n) ok = ok && genocchi_dumont(n) == g.at(n + 1);
  r.check("genocchi_dumont = genocchi_egf up to g_" + std::to_string(top), ok);
}

Multiset random_multiset(std::mt19937_64& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(2, max_size);
  std::uniform_int_distribution<Value> top_dist(2, 6);
  while (true) {
    const std::size_t m = size_dist(rng);
    std::uniform_int_distribution<Value> v(1, top_dist(rng));
    std::vector<Value> vals(m);
    for (auto& x : vals) x = v(rng);
    const auto ms = Multiset::of(vals);
    if (ms.min() % 2 == 1 && ms.max() % 2 == 0) return ms;
  }
}

void verify_psi_order(Report& r, std::uint64_t seed, int samples, int max_n) {
  std::mt19937_64 rng(seed);
  const std::size_t max_size = static_cast<std::size_t>(std::clamp(2 * max_n, 2, 8));
  std::string bad;
  for (int t = 0; t < samples && bad.empty(); ++t) {
    const auto ms = random_multiset(rng, max_size);
    const auto ec = gen_ec(ms), dc = gen_dc(ms);
    std::set<Cycle> image;
    for (const auto& c : ec) {
      const Cycle d = psi(c);
      image.insert(d);
      const auto b = psi_movable(c).size();
      if (b > 4) continue;
      std::vector<std::size_t> order(b);
      std::iota(order.begin(), order.end(), 0);
      do {
        if (psi_in_order(c, order) != d) bad = "order dependence on " + format(c);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    if (image != std::set<Cycle>(dc.begin(), dc.end()) || image.size() != ec.size())
      bad = "psi not a bijection EC -> DC on " + format(ms);
  }
  r.check("psi order independence and EC_M -> DC_M bijection (" + std::to_string(samples) + " multisets)", bad.empty(), bad);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::set<std::string> suites{"roundtrips", "counts", "formulas", "psi-order", "all"};
  if (!suites.count(o.suite)) throw ParseError("unknown suite '" + o.suite + "'");
  if (o.max_n < 1) throw ParseError("--max-n must be >= 1");
  if (!o.unguarded && o.max_n > kMaxVerifyN)
    throw GuardError("--max-n " + std::to_string(o.max_n) + " exceeds the verification limit; use --unsafe-no-guard");
  Report r{out};
  const bool all = o.suite == "all";
  if (all || o.suite == "roundtrips") verify_roundtrips(r, o.max_n);
  if (all || o.suite == "counts") verify_counts(r, o.max_n);
  if (all || o.suite == "formulas") verify_formulas(r, o.max_n);
  if (all || o.suite == "psi-order") verify_psi_order(r, o.seed, o.samples, o.max_n);
  out << (r.failures == 0 ? "all checks passed" : std::to_string(r.failures) + " check(s) failed") << "\n";
  return r.failures == 0 ? kOk : kVerifyFailed;
}

// ---- table -----------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Table& t, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < t.header.size(); ++c) obj[t.header[c]] = row[c];
      arr.push_back(obj);
    }
    out << arr.dump() << "\n";
    return;
  }
  const char* sep = fmt == "csv" ? "," : " ";
  for (std::size_t c = 0; c < t.header.size(); ++c) out << (c ? sep : "") << t.header[c];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? sep : "") << (fmt == "csv" ? csv_field(row[c]) : row[c]);
    out << "\n";
  }
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o.format, {"text", "csv", "json"});
  Table t;
  if (o.kind == "genocchi") {
    if (o.max_n < 1) throw ParseError("--max-n must be >= 1");
    const auto g = genocchi_egf(o.max_n);
    t.header = {"n", "value"};
    for (int n = 1; n <= o.max_n; ++n) t.rows.push_back({std::to_string(n), g.at(n).str()});
  } else if (o.kind == "genocchi-k") {
    if (o.max_n < 1 || o.max_k < 1) throw ParseError("--max-n and --max-k must be >= 1");
    // Guard the largest instance up front so no partial table is written.
    if (!o.unguarded) check_pruned_guard(FamilyId::cycles(Family::EC, Multiset::uniform(2 * o.max_n, o.max_k)));
    t.header = {"n", "k", "value"};
    for (int n = 1; n <= o.max_n; ++n)
      for (int k = 1; k <= o.max_k; ++k)
        t.rows.push_back({std::to_string(n), std::to_string(k), parallel::gen_genocchi_k(n, k, o.unguarded).str()});
  } else if (o.kind == "f-eq") {
    if (o.n < 1) throw ParseError("f-eq table needs --n >= 1");
    if (!o.unguarded && o.n > 20) throw GuardError("f-eq table limited to n <= 20");
    t.header = {"n", "S", "value"};
    for (const auto& s : descent_sets(o.n))
      t.rows.push_back({std::to_string(o.n), format_set(s), parallel::f_eq_ie(DescentSpec(o.n, s)).str()});
  } else {
    throw ParseError("unknown table kind '" + o.kind + "'");
  }
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw ParseError("cannot open output file '" + o.output + "'");
    emit(t, o.format, file);
  } else {
    emit(t, o.format, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even-odd-drop cycles, D-cycles, Dumont permutations and Genocchi numbers", "eoc"};
  app.require_subcommand(1);
  Options o;

  const auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "ec, dc, dumont, soe, lag-m, lag-mstar, lag-all")->required();
    sub->add_option("--n", o.n, "set [n] for cycle families, length otherwise");
    sub->add_option("--k", o.k, "multiplicity of every value for cycle families given --n");
    sub->add_option("--multiset", o.multiset, "multiset literal, e.g. 1^2,2^2,3,4");
  };
  const auto add_common = [&](CLI::App* sub, const char* formats) {
    sub->add_option("--format", o.format, formats);
    sub->add_flag("--unsafe-no-guard", o.unguarded, "lift enumeration size guards");
  };

  auto* count_cmd = app.add_subcommand("count", "count a family");
  add_family(count_cmd);
  add_common(count_cmd, "text or json");
  count_cmd->add_flag("--brute", o.brute, "use the unpruned brute-force oracle");

  auto* list_cmd = app.add_subcommand("list", "list a family, one object per line");
  add_family(list_cmd);
  add_common(list_cmd, "text or json");

  auto* map_cmd = app.add_subcommand("map", "apply a bijection");
  map_cmd->add_option("--bijection", o.bijection, "eta, phi_fv, rho, psi, theta, Phi, Psi, compact")->required();
  map_cmd->add_option("--input", o.input, "object literal")->required();
  map_cmd->add_flag("--inverse", o.inverse, "apply the inverse map");
  map_cmd->add_flag("--trace", o.trace, "print slot-insertion states (phi_fv --inverse)");
  map_cmd->add_option("--format", o.format, "text or json");

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", o.suite, "roundtrips, counts, formulas, psi-order, all");
  verify_cmd->add_option("--max-n", o.max_n, "largest n to check");
  verify_cmd->add_option("--seed", o.seed, "seed for randomized suites");
  verify_cmd->add_option("--samples", o.samples, "random multisets for psi-order");
  verify_cmd->add_flag("--unsafe-no-guard", o.unguarded, "lift size guards");

  auto* table_cmd = app.add_subcommand("table", "emit a table");
  table_cmd->add_option("--kind", o.kind, "genocchi, genocchi-k, f-eq")->required();
  table_cmd->add_option("--max-n", o.max_n, "largest n");
  table_cmd->add_option("--max-k", o.max_k, "largest k (genocchi-k)");
  table_cmd->add_option("--n", o.n, "permutation length (f-eq)");
  table_cmd->add_option("--output", o.output, "write to a file instead of stdout");
  add_common(table_cmd, "text, csv or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "eoc: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (list_cmd->parsed()) return cmd_list(o, out);
    if (map_cmd->parsed()) return cmd_map(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
  } catch (const GuardError& e) {
    err << "eoc: " << e.what() << "\n";
    return kGuardRefused;
  } catch (const InternalError& e) {
    err << "eoc: internal error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "eoc: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace eoc::cli
