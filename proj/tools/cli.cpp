#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "sphroots/errors.hpp"
#include "sphroots/serialization.hpp"

namespace sphroots::cli {

namespace {

int parse_int(const std::string& s) {
  int v = 0;
  auto b = s.data(), e = s.data() + s.size();
  while (b < e && *b == ' ') ++b;
  while (e > b && e[-1] == ' ') --e;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) throw Error(ErrorKind::InvalidInput, "not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_int(part));
  return out;
}

/// "1,0;1,1" -> {(1,0), (1,1)}; empty string -> no C-roots.
std::vector<CRoot> parse_psi(const std::string& s) {
  std::vector<CRoot> out;
  if (s.find_first_not_of(' ') == std::string::npos) return out;
  for (const auto& part : split(s, ';')) out.emplace_back(parse_list(part));
  return out;
}

struct DatumArgs {
  std::string type;
  int rank = 0;
  std::string complement;
  std::string psi;
  std::string datum;

  void add_to(CLI::App* app) {
    app->add_option("--type", type, "Cartan type letter (A-G)");
    app->add_option("--rank", rank, "rank of the root system");
    app->add_option("--complement", complement, "removed simple roots, 1-based, comma separated");
    app->add_option("--psi", psi, "C-roots separated by ';', entries by ','");
    app->add_option("--datum", datum, "datum as JSON, as emitted by enumerate");
  }

  CartanType cartan_type() const {
    if (type.empty()) throw Error(ErrorKind::InvalidInput, "--type is required");
    int r = rank;
    if (r == 0) {
      if (type == "G") r = 2;
      if (type == "F") r = 4;
    }
    return make_type(type, r);
  }

  SubgroupDatum build() const {
    if (!datum.empty()) {
      Json j;
      try {
        j = Json::parse(datum);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("--datum is not JSON: ") + e.what());
      }
      return datum_from_json(j);
    }
    CartanType t = cartan_type();
    IndexSet comp;
    if (!complement.empty())
      for (int i : parse_list(complement)) {
        if (i < 1 || i > t.rank) throw Error(ErrorKind::InvalidInput, "complement index " + std::to_string(i) + " out of range");
        comp.push_back(i - 1);
      }
    return SubgroupDatum(LeviDatum::from_complement(RootSystem::of(t), comp), parse_psi(psi));
  }
};

void print_weights_text(std::ostream& out, const std::vector<Weight>& ws) {
  for (const auto& w : ws) {
    bool first = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      if (!first) out << " + ";
      if (w[i] != 1) out << w[i] << "*";
      out << "a" << i + 1;
      first = false;
    }
    out << "\n";
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical roots of spherical subgroups with a Levi factor", "sphroots"};
  app.require_subcommand(1);
  std::string format = "json";
  bool asserts = true;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--assert,!--no-assert", asserts, "check solver invariants at runtime");

  auto* roots = app.add_subcommand("roots", "positive roots of a simple root system");
  std::string r_type;
  int r_rank = 0;
  roots->add_option("--type", r_type)->required();
  roots->add_option("--rank", r_rank);
  roots->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check", "sphericity test and rank");
  DatumArgs check_args;
  check_args.add_to(check);
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* compute = app.add_subcommand("compute", "spherical roots");
  DatumArgs compute_args;
  compute_args.add_to(compute);
  std::string method = "optimized", resolution = "compute";
  bool certificate = false;
  compute->add_option("--method", method)->check(CLI::IsMember({"base", "optimized", "table", "both"}));
  compute->add_option("--resolution", resolution, "how optimized blocks are resolved")
      ->check(CLI::IsMember({"compute", "table"}));
  compute->add_flag("--certificate", certificate, "include the recursion tree");
  compute->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  compute->add_flag("--assert,!--no-assert", asserts);

  auto* degen = app.add_subcommand("degenerate", "degeneration by one C-root");
  DatumArgs degen_args;
  degen_args.add_to(degen);
  std::string lambda;
  degen->add_option("--lambda", lambda)->required();
  degen->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "enumerate candidate data");
  std::string e_type;
  int e_rank = 0, e_comp = 1, e_psi = 2;
  bool all_supports = false, keep_singletons = false;
  enumerate->add_option("--type", e_type)->required();
  enumerate->add_option("--rank", e_rank);
  enumerate->add_option("--complement-size", e_comp)->check(CLI::Range(1, 3));
  enumerate->add_option("--psi-size", e_psi)->check(CLI::Range(1, 2));
  enumerate->add_flag("--all-supports", all_supports, "keep Psi whose support is a proper subset");
  enumerate->add_flag("--keep-singleton-fibers", keep_singletons, "keep Psi with one-dimensional modules");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify-tables", "compare the tables with the enumeration");
  std::string v_type;
  int v_min = 0, v_max = 8;
  bool no_cross = false;
  verify->add_option("--type", v_type)->required();
  verify->add_option("--min-rank", v_min);
  verify->add_option("--max-rank", v_max);
  verify->add_flag("--no-cross-check", no_cross, "skip the base/optimized/table comparison");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* tables = app.add_subcommand("tables", "table access");
  auto* dump = tables->add_subcommand("dump", "instantiate table rows");
  tables->require_subcommand(1);
  std::string t_key, t_params;
  int t_n = 0;
  dump->add_option("--table", t_key, "table number 1-10 or name")->required();
  dump->add_option("--n", t_n, "rank");
  dump->add_option("--params", t_params, "k or k,l");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  SolveOptions sopts;
  sopts.check_invariants = asserts;
  const bool text = format == "text";

  try {
    if (*roots) {
      int n = r_rank;
      if (n == 0 && r_type == "G") n = 2;
      if (n == 0 && r_type == "F") n = 4;
      auto rs = RootSystem::of(make_type(r_type, n));
      if (text) {
        out << rs->type()->label() << ": " << rs->num_positive() << " positive roots\n";
        print_weights_text(out, rs->positive_roots());
      } else {
        emit(out, root_system_to_json(*rs));
      }
      return 0;
    }
    if (*check) {
      SubgroupDatum h = check_args.build();
      auto v = is_spherical_and_rank(h);
      if (text)
        out << (v.spherical ? "spherical, rank " + std::to_string(*v.rank) : std::string("not spherical")) << "\n";
      else
        emit(out, verdict_to_json(v));
      return 0;
    }
    if (*compute) {
      SubgroupDatum h = compute_args.build();
      sopts.record_certificate = certificate;
      Resolution res = resolution == "table" ? Resolution::Table : Resolution::Compute;
      SphericalRootSet result;
      bool agree = true;
      Json methods;
      if (method == "base") {
        result = base_solve(h, sopts);
      } else if (method == "optimized") {
        result = optimized_solve(h, res, sopts);
      } else if (method == "table") {
        result = optimized_solve(h, Resolution::Table, sopts);
      } else {
        result = base_solve(h, sopts);
        auto opt = optimized_solve(h, Resolution::Compute, sopts);
        auto tab = optimized_solve(h, Resolution::Table, sopts);
        agree = opt.roots == result.roots && tab.roots == result.roots;
        methods["base"] = to_json(result.roots);
        methods["optimized"] = to_json(opt.roots);
        methods["table"] = to_json(tab.roots);
      }
      if (text) {
        out << "rank " << result.rank << "\n";
        print_weights_text(out, result.roots);
        if (!agree) out << "methods disagree\n";
      } else {
        Json j = roots_to_json(result, certificate);
        if (method == "both") {
          j["method"] = "both";
          j["agree"] = agree;
          if (!agree) j["methods"] = methods;
        }
        emit(out, j);
      }
      return agree ? 0 : 1;
    }
    if (*degen) {
      SubgroupDatum h = degen_args.build();
      auto d = degenerate(h, CRoot(parse_list(lambda)));
      emit(out, degeneration_to_json(d));
      return 0;
    }
    if (*enumerate) {
      int n = e_rank;
      if (n == 0 && e_type == "G") n = 2;
      if (n == 0 && e_type == "F") n = 4;
      CartanType t = make_type(e_type, n);
      EnumerateOptions eo;
      eo.solve = sopts;
      eo.require_full_support = !all_supports;
      eo.drop_singleton_fibers = !keep_singletons;
      auto cases = enumerate_cases(t, e_comp, e_psi, eo);
      if (text) {
        for (const auto& c : cases) out << datum_to_json(c.datum).dump() << (c.spherical ? " spherical" : "") << "\n";
      } else {
        Json a = Json::array();
        for (const auto& c : cases) a.push_back(case_to_json(c));
        emit(out, a);
      }
      return 0;
    }
    if (*verify) {
      if (v_type.size() != 1 || std::string("ABCDEFG").find(v_type[0]) == std::string::npos)
        throw Error(ErrorKind::InvalidType, "unknown series '" + v_type + "'");
      Series s = static_cast<Series>(v_type[0]);
      int lo = v_min, hi = v_max;
      if (s == Series::E && v_min == 0) lo = 6;
      if (s == Series::E || s == Series::F || s == Series::G) hi = std::max(hi, s == Series::E ? 8 : 4);
      if (lo == 0) lo = s == Series::D ? 4 : (s == Series::A || s == Series::B || s == Series::C ? 3 : 1);
      VerifyOptions vo;
      vo.solve = sopts;
      vo.cross_check_methods = !no_cross;
      auto report = verify_tables(s, lo, hi, vo);
      if (text)
        out << (report.empty() ? "empty diff" : "diff not empty") << " (" << report.expected_cases << " expected, "
            << report.enumerated_cases << " enumerated)\n";
      else
        emit(out, diff_to_json(report));
      return report.empty() ? 0 : 1;
    }
    if (*dump) {
      const Table& t = table(table_id(t_key));
      Params wanted;
      if (!t_params.empty()) wanted = parse_list(t_params);
      Json a = Json::array();
      for (const auto& row : t.rows) {
        int lo = row.min_rank, hi = std::min(row.max_rank, std::max(row.min_rank, 10));
        if (t_n) lo = hi = t_n;
        for (int n = lo; n <= hi; ++n) {
          if (!row.admits(n)) continue;
          for (const auto& p : row.params(n)) {
            if (!wanted.empty() && p != wanted) continue;
            RowInstance inst = instantiate_row(row, n, p);
            Json j;
            j["table"] = row.table_id;
            j["row"] = row.row_id;
            j["label"] = row.label;
            j["type"] = std::string(1, static_cast<char>(row.series));
            j["n"] = n;
            j["params"] = p;
            Json psi = Json::array();
            for (const auto& c : inst.psi) psi.push_back(to_json(c));
            j["psi"] = psi;
            j["rank"] = inst.rank;
            j["sigma"] = to_json(inst.sigma);
            a.push_back(j);
          }
        }
      }
      if (!wanted.empty() && a.empty())
        throw Error(ErrorKind::ParamsOutOfRange, "no row of table " + t_key + " admits params " + t_params);
      emit(out, a);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sphroots::cli
