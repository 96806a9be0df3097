#include "depol/cli.hpp"

#include <sstream>

#include "depol/depolarization.hpp"
#include "depol/io.hpp"
#include "depol/operads.hpp"

namespace depol::cli {

namespace {
using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.rows(); ++i) a.push_back(v(i).str());
  return a;
}

json to_json_vec6(const Vec6& v) {
  json a = json::array();
  for (int i = 0; i < 6; ++i) a.push_back(v(i).str());
  return a;
}

json to_json(const Identity& id) {
  return json{{"left", to_json_vec6(id.left)}, {"right", to_json_vec6(id.right)}};
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Identity load_identity(const std::string& path) { return parse_identity(read_file(path)); }

std::vector<Identity> load_identities(const std::vector<std::string>& paths) {
  std::vector<Identity> ids;
  for (const auto& p : paths) ids.push_back(load_identity(p));
  return ids;
}

const char kUsage[] =
    "usage: depol [--format text|json] <command> ...\n"
    "commands:\n"
    "  polarize <id-file>\n"
    "  depolarize <lambda-file>\n"
    "  encode-dist <law-file>\n"
    "  implies <family-file>... <target-file>\n"
    "  consequences <family-file>\n"
    "  module-rank <r1> <r2> <r3> <r4> <r5> <r6>\n"
    "  solve poisson | solve transposed\n"
    "  operad dim3|dual|selfdual <id-file>...\n"
    "  operad free-dims --max N <id-file>...\n"
    "  verify <algebra-file> <id-file>\n"
    "  poly-check <law-or-id> [--degree D] [--trials T] [--seed S]\n"
    "  homlie gv <algebra-file>\n";

Report cmd_polarize(const std::vector<std::string>& a) {
  if (a.size() != 1) throw Usage("polarize needs one identity file");
  Lambda12 l = polarize_coeffs(load_identity(a[0]));
  return {format_lambda(l) + "\n", json{{"command", "polarize"}, {"lambda", to_json(Vec(l))}}, 0};
}

Report cmd_depolarize(const std::vector<std::string>& a) {
  if (a.size() != 1) throw Usage("depolarize needs one lambda file");
  Identity id = depolarize_coeffs(parse_lambda(read_file(a[0])));
  return {format_identity(id), json{{"command", "depolarize"}, {"identity", to_json(id)}}, 0};
}

Report cmd_encode_dist(const std::vector<std::string>& a) {
  if (a.size() != 1) throw Usage("encode-dist needs one law file");
  Identity id = encode_distributive(parse_law(read_file(a[0])));
  return {format_identity(id), json{{"command", "encode-dist"}, {"identity", to_json(id)}}, 0};
}

Report cmd_implies(const std::vector<std::string>& a) {
  if (a.size() < 2) throw Usage("implies needs family file(s) and a target file");
  std::vector<Identity> family = load_identities({a.begin(), a.end() - 1});
  Identity target = load_identity(a.back());
  auto witness = implies(std::span<const Identity>(family), target);
  json j{{"command", "implies"}, {"solution", witness.has_value()}};
  std::ostringstream os;
  if (witness) {
    os << "U: " << format_vec(*witness) << "\n";
    j["witness"] = to_json(*witness);
  } else {
    os << "NO SOLUTION\n";
    auto cert = implies_certificate(std::span<const Identity>(family), target);
    if (cert) {
      os << "certificate: " << format_vec(*cert) << "\n";
      j["certificate"] = to_json(*cert);
    }
  }
  return {os.str(), std::move(j), 0};
}

Report cmd_consequences(const std::vector<std::string>& a) {
  if (a.size() != 1) throw Usage("consequences needs one identity file");
  auto basis = consequence_space(load_identity(a[0]));
  std::ostringstream os;
  os << "dim " << basis.size() << "\n";
  json rows = json::array();
  for (const Vec6& rho : basis) {
    os << "rho: " << format_vec6(rho) << "\n";
    rows.push_back(to_json_vec6(rho));
  }
  return {os.str(), json{{"command", "consequences"}, {"dim", basis.size()}, {"basis", rows}}, 0};
}

Report cmd_module_rank(const std::vector<std::string>& a) {
  if (a.size() != 6) throw Usage("module-rank needs 6 rational coordinates");
  GroupVec v;
  for (int i = 0; i < 6; ++i) v(i) = Rational::parse(a[i]);
  int r = module_rank(v);
  return {std::to_string(r) + "\n", json{{"command", "module-rank"}, {"rank", r}}, 0};
}

Report cmd_solve(const std::vector<std::string>& a) {
  if (a.size() != 1) throw Usage("solve needs 'poisson' or 'transposed'");
  if (a[0] == "poisson") {
    PoissonSolve s = solve_poisson();
    std::ostringstream os;
    os << format_vec6(s.identity.left) << " | " << format_vec6(s.identity.right) << "\n";
    os << "a1 = " << s.a1.str() << " a2 = " << s.a2.str() << " a3 = " << s.a3.str() << "\n";
    return {os.str(),
            json{{"command", "solve poisson"},
                 {"identity", to_json(s.identity)},
                 {"a1", s.a1.str()},
                 {"a2", s.a2.str()},
                 {"a3", s.a3.str()}},
            0};
  }
  if (a[0] == "transposed") {
    TransposedSolve s = solve_transposed();
    std::ostringstream os;
    os << "NO SOLUTION\nsystem:\n";
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
      json row = json::array();
      for (int j = 0; j < 3; ++j) {
        os << (j ? " " : "") << s.system(i, j).str();
        row.push_back(s.system(i, j).str());
      }
      os << " | " << s.rhs(i).str() << "\n";
      row.push_back(s.rhs(i).str());
      rows.push_back(row);
    }
    os << "certificate: " << format_vec(s.certificate) << "\n";
    return {os.str(),
            json{{"command", "solve transposed"},
                 {"solution", false},
                 {"system", rows},
                 {"certificate", to_json(s.certificate)}},
            0};
  }
  throw Usage("solve needs 'poisson' or 'transposed'");
}

Report cmd_operad(const std::vector<std::string>& a) {
  if (a.empty()) throw Usage("operad needs a subcommand");
  const std::string& sub = a[0];
  if (sub == "dim3" || sub == "dual" || sub == "selfdual") {
    std::vector<Identity> ids = load_identities({a.begin() + 1, a.end()});
    RelationSpace span = orbit_span(ids);
    if (sub == "dim3") {
      int d = 12 - span.dim();
      return {std::to_string(d) + "\n", json{{"command", "operad dim3"}, {"dim", d}}, 0};
    }
    if (sub == "dual") {
      RelationSpace dual = dual_relations(span);
      std::ostringstream os;
      os << "dim " << dual.dim() << "\n";
      json rows = json::array();
      for (int i = 0; i < dual.basis.rows(); ++i) {
        os << format_vec(Vec(dual.basis.row(i).transpose())) << "\n";
        rows.push_back(to_json(Vec(dual.basis.row(i).transpose())));
      }
      return {os.str(), json{{"command", "operad dual"}, {"dim", dual.dim()}, {"basis", rows}}, 0};
    }
    bool sd = is_self_dual(span);
    return {std::string(sd ? "yes" : "no") + "\n",
            json{{"command", "operad selfdual"}, {"self_dual", sd}}, 0};
  }
  if (sub == "free-dims") {
    int max_degree = -1;
    std::vector<std::string> files;
    for (size_t i = 1; i < a.size(); ++i) {
      if (a[i] == "--max") {
        if (i + 1 >= a.size()) throw Usage("--max needs a value");
        max_degree = std::stoi(a[++i]);
      } else {
        files.push_back(a[i]);
      }
    }
    if (max_degree < 0) throw Usage("free-dims needs --max N");
    std::vector<Identity> ids = load_identities(files);
    auto dims = free_dims(ids, max_degree);
    std::ostringstream os;
    for (size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
    os << "\n";
    return {os.str(), json{{"command", "operad free-dims"}, {"dims", dims}}, 0};
  }
  throw Usage("unknown operad subcommand '" + sub + "'");
}

Report cmd_verify(const std::vector<std::string>& a) {
  if (a.size() != 2) throw Usage("verify needs an algebra file and an identity file");
  StructureAlgebra alg = parse_algebra(read_file(a[0]));
  std::string id_text = read_file(a[1]);
  CheckResult result;
  if (looks_like_signed_identity(id_text)) {
    if (!alg.graded()) throw Usage("signed identity requires a graded algebra");
    result = check_signed(alg, parse_signed_identity(id_text));
  } else {
    Identity id = parse_identity(id_text);
    result = alg.graded() ? check_signed(alg, lift_unsigned(id)) : check_identity(alg, id);
  }
  std::ostringstream os;
  json j{{"command", "verify"}, {"pass", !result.has_value()}};
  if (!result) {
    os << "PASS\n";
  } else {
    os << "FAIL at e" << (result->i + 1) << " e" << (result->j + 1) << " e" << (result->k + 1)
       << ": residual " << format_vec(result->residual) << "\n";
    j["failure"] = json{{"i", result->i + 1},
                        {"j", result->j + 1},
                        {"k", result->k + 1},
                        {"residual", to_json(result->residual)}};
  }
  return {os.str(), std::move(j), 0};
}

Report cmd_poly_check(const std::vector<std::string>& a) {
  if (a.empty()) throw Usage("poly-check needs a law or identity");
  int degree = 8, trials = 25;
  uint64_t seed = 1;
  std::vector<std::string> rest;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == "--degree" && i + 1 < a.size()) degree = std::stoi(a[++i]);
    else if (a[i] == "--trials" && i + 1 < a.size()) trials = std::stoi(a[++i]);
    else if (a[i] == "--seed" && i + 1 < a.size()) seed = std::stoull(a[++i]);
    else rest.push_back(a[i]);
  }
  if (rest.size() != 1) throw Usage("poly-check needs exactly one law or identity");
  const std::string& what = rest[0];

  PolyCheckResult result;
  if (what == "leibniz") {
    result = poly_check(DistributiveLaw{{-1, 1, 0}, {1, 0, 0}}, degree, trials, seed);
  } else if (what == "transposed-leibniz") {
    result = poly_check(DistributiveLaw{{0, 0, 2}, {0, 1, -1}}, degree, trials, seed);
  } else if (what == "jacobi") {
    result = poly_check(jacobi_identity(), degree, trials, seed);
  } else if (what == "associativity") {
    result = poly_check(associativity_identity(), degree, trials, seed);
  } else if (what == "poisson") {
    result = poly_check(poisson_identity(), degree, trials, seed);
  } else if (what == "aa-cyclic") {
    result = poly_check(aa_cyclic_identity(), degree, trials, seed);
  } else {
    std::string text = read_file(what);
    if (text.find("alpha:") != std::string::npos) {
      result = poly_check(parse_law(text), degree, trials, seed);
    } else {
      result = poly_check(parse_identity(text), degree, trials, seed);
    }
  }

  std::ostringstream os;
  json j{{"command", "poly-check"}, {"pass", result.pass}};
  if (result.pass) {
    os << "PASS\n";
  } else {
    os << "FAIL\nf = " << result.witness->f.str() << "\ng = " << result.witness->g.str()
       << "\nh = " << result.witness->h.str() << "\nresidual = " << result.witness->residual.str()
       << "\n";
    j["witness"] = json{{"f", result.witness->f.str()},
                        {"g", result.witness->g.str()},
                        {"h", result.witness->h.str()},
                        {"residual", result.witness->residual.str()}};
  }
  return {os.str(), std::move(j), 0};
}

Report cmd_homlie(const std::vector<std::string>& a) {
  if (a.size() != 2 || a[0] != "gv") throw Usage("homlie gv needs an algebra file");
  StructureAlgebra bracket = parse_algebra(read_file(a[1]));
  auto basis = gv_basis(bracket);
  std::ostringstream os;
  os << "dim " << basis.size() << "\n";
  json mats = json::array();
  for (const Endomorphism& f : basis) {
    os << format_endomorphism(f) << "\n";
    json rows = json::array();
    for (int r = 0; r < f.rows(); ++r) rows.push_back(to_json(Vec(f.row(r).transpose())));
    mats.push_back(rows);
  }
  return {os.str(), json{{"command", "homlie gv"}, {"dim", basis.size()}, {"basis", mats}}, 0};
}
}  // namespace

Report run(const std::vector<std::string>& args) {
  bool want_json = false;
  std::vector<std::string> rest;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      if (i + 1 >= args.size()) return {std::string("--format needs 'text' or 'json'\n") + kUsage, {}, 1};
      ++i;
      if (args[i] == "json") want_json = true;
      else if (args[i] != "text") return {std::string("--format needs 'text' or 'json'\n") + kUsage, {}, 1};
    } else {
      rest.push_back(args[i]);
    }
  }
  if (rest.empty()) return {kUsage, {}, 1};

  const std::string cmd = rest[0];
  std::vector<std::string> a(rest.begin() + 1, rest.end());
  Report report;
  try {
    if (cmd == "polarize") report = cmd_polarize(a);
    else if (cmd == "depolarize") report = cmd_depolarize(a);
    else if (cmd == "encode-dist") report = cmd_encode_dist(a);
    else if (cmd == "implies") report = cmd_implies(a);
    else if (cmd == "consequences") report = cmd_consequences(a);
    else if (cmd == "module-rank") report = cmd_module_rank(a);
    else if (cmd == "solve") report = cmd_solve(a);
    else if (cmd == "operad") report = cmd_operad(a);
    else if (cmd == "verify") report = cmd_verify(a);
    else if (cmd == "poly-check") report = cmd_poly_check(a);
    else if (cmd == "homlie") report = cmd_homlie(a);
    else return {"unknown command '" + cmd + "'\n" + kUsage, {}, 1};
  } catch (const Usage& e) {
    return {std::string(e.what()) + "\n" + kUsage, {}, 1};
  } catch (const ParseError& e) {
    return {std::string("parse error: ") + e.what() + "\n", {}, 2};
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what() + "\n", {}, 2};
  }

  if (want_json) report.text = report.json.dump(2) + "\n";
  return report;
}

}  // namespace depol::cli
