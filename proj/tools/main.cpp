#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "quartet/codes.hpp"
#include "quartet/invariants.hpp"
#include "quartet/json_io.hpp"
#include "quartet/point_parse.hpp"
#include "quartet/random.hpp"
#include "quartet/stationary.hpp"

namespace {

using namespace quartet;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInputError = 3;

struct Options {
  double tol = 0.0;  // 0 = command default
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_signature(const StationaryReport& r) {
  if (!r.has_hessian) return "n/a";
  std::ostringstream os;
  os << "(" << r.signature[0] << "," << r.signature[1] << "," << r.signature[2] << ")";
  return os.str();
}

void emit(const Options& opt, const json& doc, const std::string& csv) {
  const std::string& body = opt.format == "csv" ? csv : doc.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
    f << body;
  }
}

PureState load_state(const std::string& name, const std::string& file) {
  if (!name.empty()) return named_state(name);
  std::ifstream f(file);
  if (!f) throw std::invalid_argument("cannot open state file '" + file + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("state file '" + file + "': " + e.what());
  }
  return state_from_json(j);
}

std::string report_csv_row(const std::string& name, const StationaryReport& r) {
  std::ostringstream os;
  os << name << "," << invariant_name(r.invariant) << "," << format_double(r.residual_s7)
     << "," << format_double(r.residual_s15) << "," << format_double(r.value) << ","
     << (r.stationary ? "yes" : "no") << "," << format_signature(r) << "\n";
  return os.str();
}

json named_report(const std::string& name, const StationaryReport& r) {
  json j = report_to_json(r);
  j["name"] = name;
  return j;
}

int cmd_invariants(const Options& opt, const std::string& name, const std::string& file) {
  const PureState s = load_state(name, file);
  const InvariantFingerprint fp = fingerprint(s, /*with_hdet=*/true);
  json doc;
  doc["state"] = name.empty() ? file : name;
  doc["fingerprint"] = fingerprint_to_json(fp);
  std::ostringstream csv;
  csv << "state,F1,F3,F4,F6,Hdet\n"
      << (name.empty() ? file : name) << "," << format_double(fp.f1) << ","
      << format_double(fp.f3) << "," << format_double(fp.f4) << "," << format_double(fp.f6)
      << "," << format_double(*fp.hdet) << "\n";
  emit(opt, doc, csv.str());
  return kExitOk;
}

int cmd_normal_form(const Options& opt, const std::string& name, const std::string& file) {
  const PureState s = load_state(name, file);
  const CartanPoint z = normal_form(s);
  const InvariantFingerprint fp = fingerprint(z, /*with_hdet=*/true);
  json doc;
  doc["state"] = name.empty() ? file : name;
  doc["point"] = point_to_json(z);
  doc["fingerprint"] = fingerprint_to_json(fp);
  std::ostringstream csv;
  csv << "state,z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,z4_re,z4_im,F1,F3,F4,F6\n"
      << (name.empty() ? file : name);
  for (int i = 0; i < 4; ++i)
    csv << "," << format_double(z[i].real()) << "," << format_double(z[i].imag());
  csv << "," << format_double(fp.f1) << "," << format_double(fp.f3) << ","
      << format_double(fp.f4) << "," << format_double(fp.f6) << "\n";
  emit(opt, doc, csv.str());
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& table, const std::string& point_text,
               const std::string& invariant_text) {
  const double tol7 = opt.tol > 0 ? opt.tol : 1e-8;
  const double tol15 = 10.0 * tol7;

  json doc = json::array();
  std::ostringstream csv;
  csv << "name,invariant,residual_s7,residual_s15,value,stationary,signature\n";
  bool all_ok = true;

  if (!table.empty()) {
    if (table != "F3" && table != "F4")
      throw std::invalid_argument("verify: --table must be F3 or F4");
    const Invariant inv = invariant_from_name(table);
    const auto pts = known_points(inv);
    const auto names = known_point_names(inv);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const StationaryReport r = verify_point(pts[i], inv, tol7, tol15);
      all_ok = all_ok && r.stationary;
      doc.push_back(named_report(names[i], r));
      csv << report_csv_row(names[i], r);
    }
  } else {
    if (invariant_text.empty())
      throw std::invalid_argument("verify: --invariant is required with --point");
    const Invariant inv = invariant_from_name(invariant_text);
    CartanPoint z;
    if (point_text == "random") {
      auto rng = seeded_engine(opt.seed);
      z = random_cartan_point(rng);
    } else {
      z = parse_cartan_point(point_text);
    }
    const StationaryReport r = verify_point(z, inv, tol7, tol15);
    all_ok = r.stationary;
    doc.push_back(named_report(point_text == "random" ? "random" : "point", r));
    csv << report_csv_row("point", r);
  }
  emit(opt, doc, csv.str());
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_search(const Options& opt, const std::string& invariant_text, int starts,
               int workers) {
  const Invariant inv = invariant_from_name(invariant_text);
  const auto classes = multistart_search(inv, starts, opt.seed, workers);
  json doc = json::array();
  std::ostringstream csv;
  csv << "class,invariant,residual_s7,residual_s15,value,stationary,signature\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string name = "class" + std::to_string(i + 1);
    doc.push_back(named_report(name, classes[i]));
    csv << report_csv_row(name, classes[i]);
  }
  emit(opt, doc, csv.str());
  return kExitOk;
}

json chain_level_json(const char* params, const PurityReport& rep) {
  json j;
  j["parameters"] = params;
  j["verification"] = purity_to_json(rep);
  return j;
}

int cmd_codes(const Options& opt, const std::string& pair_name, bool chain, bool all) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-9;
  std::vector<const AMEPair*> pairs;
  if (all) {
    for (const AMEPair& p : registered_pairs()) pairs.push_back(&p);
  } else {
    pairs.push_back(&pair_by_name(pair_name));
  }

  json doc = json::array();
  std::ostringstream csv;
  csv << "pair,six_qubit_marginal_dev,code6_pass,code5_pass,code4_pass,angle_vs_cartan\n";
  bool all_ok = true;
  for (const AMEPair* p : pairs) {
    json entry;
    entry["pair"] = p->name;
    const PureState six = build_six_qubit(*p);
    const double dev6 = uniformity_deviation(six, 3);
    entry["six_qubit_marginal_deviation"] = dev6;
    bool pair_ok = dev6 < tol;

    double angle = -1.0;
    bool pass6 = false, pass5 = false, pass4 = false;
    if (chain || all) {
      CodeSubspace code6{6, {six}, 4};
      const PurityReport rep6 = verify_pure_code(code6, tol);
      const CodeSubspace code5 = rains_reduce(code6);
      const PurityReport rep5 = verify_pure_code(code5, tol);
      const CodeSubspace code4 = rains_reduce(code5);
      const PurityReport rep4 = verify_pure_code(code4, tol);
      const auto angles = principal_angles(code4, cartan_code());
      angle = *std::max_element(angles.begin(), angles.end());
      pass6 = rep6.pass;
      pass5 = rep5.pass;
      pass4 = rep4.pass;
      entry["chain"] = json::array({chain_level_json("((6,1,4))", rep6),
                                    chain_level_json("((5,2,3))", rep5),
                                    chain_level_json("((4,4,2))", rep4)});
      entry["final_angle_vs_cartan"] = angle;
      pair_ok = pair_ok && pass6 && pass5 && pass4 && angle < 1e-8;
    }
    entry["pass"] = pair_ok;
    all_ok = all_ok && pair_ok;
    doc.push_back(entry);
    csv << p->name << "," << format_double(dev6) << "," << (pass6 ? "yes" : "no") << ","
        << (pass5 ? "yes" : "no") << "," << (pass4 ? "yes" : "no") << ","
        << (angle >= 0 ? format_double(angle) : "-") << "\n";
  }
  emit(opt, doc, csv.str());
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int reproduce_table1(const Options& opt) {
  const std::vector<std::string> states = {"GHZ", "MP", "C1", "HS", "HD", "BSSB"};
  json doc;
  std::ostringstream csv;
  csv << "invariant";
  for (const auto& s : states) csv << "," << s;
  csv << "\n";
  std::vector<InvariantFingerprint> fps;
  for (const auto& s : states) {
    const InvariantFingerprint fp = fingerprint(named_state(s), true);
    fps.push_back(fp);
    doc[s] = fingerprint_to_json(fp);
  }
  const char* row_names[5] = {"F1", "F3", "F4", "F6", "Hdet"};
  for (int r = 0; r < 5; ++r) {
    csv << row_names[r];
    for (const auto& fp : fps) {
      const double v = r == 0   ? fp.f1
                       : r == 1 ? fp.f3
                       : r == 2 ? fp.f4
                       : r == 3 ? fp.f6
                                : *fp.hdet;
      csv << "," << format_double(v);
    }
    csv << "\n";
  }
  emit(opt, doc, csv.str());
  return kExitOk;
}

int reproduce_points_table(const Options& opt, Invariant inv) {
  const auto pts = known_points(inv);
  const auto names = known_point_names(inv);
  json doc = json::array();
  std::ostringstream csv;
  csv << "name,invariant,residual_s7,residual_s15,value,stationary,signature\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const StationaryReport r = verify_point(pts[i], inv);
    doc.push_back(named_report(names[i], r));
    csv << report_csv_row(names[i], r);
  }
  emit(opt, doc, csv.str());
  return kExitOk;
}

int reproduce_more(const Options& opt) {
  const auto rows = stationary_catalog();
  json doc = json::array();
  std::ostringstream csv;
  csv << "name,F1,F3,F4,F6,H_F3,H_F4,H_F6\n";
  for (const auto& row : rows) {
    json entry;
    entry["name"] = row.name;
    entry["point"] = point_to_json(row.point);
    entry["values"] = fingerprint_to_json(row.fp);
    csv << row.name << "," << format_double(row.fp.f1) << "," << format_double(row.fp.f3)
        << "," << format_double(row.fp.f4) << "," << format_double(row.fp.f6);
    const char* keys[3] = {"H_F3", "H_F4", "H_F6"};
    for (int k = 0; k < 3; ++k) {
      entry[keys[k]] =
          row.reports[k].has_hessian
              ? json(
                    {row.reports[k].signature[0], row.reports[k].signature[1],
                     row.reports[k].signature[2]})
              : json(nullptr);
      csv << "," << format_signature(row.reports[k]);
    }
    csv << "\n";
    doc.push_back(entry);
  }
  emit(opt, doc, csv.str());
  return kExitOk;
}

int reproduce_table4(const Options& opt) {
  Options sub = opt;
  return cmd_codes(sub, "", /*chain=*/true, /*all=*/true);
}

int cmd_reproduce(const Options& opt, const std::string& table) {
  if (table == "1") return reproduce_table1(opt);
  if (table == "2") return reproduce_points_table(opt, Invariant::F3);
  if (table == "3") return reproduce_points_table(opt, Invariant::F4);
  if (table == "4") return reproduce_table4(opt);
  if (table == "more") return reproduce_more(opt);
  throw std::invalid_argument("reproduce: --table must be one of 1, 2, 3, 4, more");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-qubit entanglement invariants, critical-state normal forms, "
               "stationary-point verification and search, and AME code construction"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "override the default verification tolerance");
  app.add_option("--seed", opt.seed, "seed for all randomized operations");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");

  std::string name, file, table, point_text, invariant_text, pair_name;
  int starts = 2000, workers = 0;
  bool chain = false, all_pairs = false;

  CLI::App* inv_cmd = app.add_subcommand("invariants", "fingerprint of a state");
  inv_cmd->fallthrough();
  inv_cmd->add_option("--name", name, "named state (GHZ, MP, YC, HS, BSSB, C1..C3, HD, OS, L, M)");
  inv_cmd->add_option("--file", file, "state JSON file");

  CLI::App* nf_cmd = app.add_subcommand("normal-form", "Cartan normal form of a critical state");
  nf_cmd->fallthrough();
  nf_cmd->add_option("--name", name, "named state");
  nf_cmd->add_option("--file", file, "state JSON file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "stationarity and Hessian classification");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--table", table, "verify a whole catalog: F3 or F4");
  verify_cmd->add_option("--point", point_text, "a Cartan point, e.g. '(1,1,1,0)', or 'random'");
  verify_cmd->add_option("--invariant", invariant_text, "invariant for --point: F1, F3, F4, F6");

  CLI::App* search_cmd = app.add_subcommand("search", "multi-start Newton search");
  search_cmd->fallthrough();
  search_cmd->add_option("--invariant", invariant_text, "F3 or F4")->required();
  search_cmd->add_option("--starts", starts, "number of Newton starts");
  search_cmd->add_option("--workers", workers, "worker threads (0 = auto)");

  CLI::App* codes_cmd = app.add_subcommand("codes", "AME states and pure-code chains");
  codes_cmd->fallthrough();
  codes_cmd->add_option("--pair", pair_name, "pair1..pair5");
  codes_cmd->add_flag("--chain", chain, "run the ((6,1,4)) -> ((5,2,3)) -> ((4,4,2)) chain");
  codes_cmd->add_flag("--all", all_pairs, "verify all five pairs with chains");

  CLI::App* repro_cmd = app.add_subcommand("reproduce", "machine-readable table artifacts");
  repro_cmd->fallthrough();
  repro_cmd->add_option("--table", table, "1, 2, 3, 4, or more")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (inv_cmd->parsed()) {
      if (name.empty() == file.empty())
        throw std::invalid_argument("invariants: give exactly one of --name / --file");
      return cmd_invariants(opt, name, file);
    }
    if (nf_cmd->parsed()) {
      if (name.empty() == file.empty())
        throw std::invalid_argument("normal-form: give exactly one of --name / --file");
      return cmd_normal_form(opt, name, file);
    }
    if (verify_cmd->parsed()) {
      if (table.empty() == point_text.empty())
        throw std::invalid_argument("verify: give exactly one of --table / --point");
      return cmd_verify(opt, table, point_text, invariant_text);
    }
    if (search_cmd->parsed()) return cmd_search(opt, invariant_text, starts, workers);
    if (codes_cmd->parsed()) {
      if (all_pairs == !pair_name.empty())
        throw std::invalid_argument("codes: give exactly one of --pair / --all");
      return cmd_codes(opt, pair_name, chain, all_pairs);
    }
    if (repro_cmd->parsed()) return cmd_reproduce(opt, table);
    throw std::invalid_argument("no subcommand given");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}
