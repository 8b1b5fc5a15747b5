// gon: command-line front end.  One JSON document on stdout; exit 0 on
// success, 1 on usage or input errors, 2 when a check is violated or a
// conjecture counterexample candidate was found.

#include "gon/counting.hpp"
#include "gon/io.hpp"
#include "gon/minima.hpp"
#include "gon/siegel.hpp"
#include "gon/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gon;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& arg, const std::string& what) {
  std::string text = arg;
  if (arg.empty() || (arg.front() != '{' && arg.front() != '[')) {
    std::ifstream in(arg);
    if (!in) throw InputError("/", "cannot open " + what + " file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw InputError("/", what + " is not valid JSON: " + ex.what());
  }
}

template <typename F>
auto with_context(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const InputError& ex) {
    throw InputError(what + ex.path(), std::string(ex.what()).substr(ex.path().size() + 2));
  }
}

Body load_body(const std::string& arg) {
  return with_context("body:", [&] { return body_from_json(load_json(arg, "body")); });
}

Lattice load_lattice(const std::string& arg, std::size_t dim) {
  if (arg.empty()) return Lattice::integer(dim);
  Lattice l = with_context("lattice:", [&] { return lattice_from_json(load_json(arg, "lattice")); });
  if (l.ambient_dim() != dim) throw InputError("lattice:/basis", "dimension differs from the body's");
  return l;
}

std::string short_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object() && v.contains("sqrt")) return "sqrt(" + v["sqrt"].get<std::string>() + ")";
  if (v.is_object() && v.contains("lo")) {
    std::ostringstream s;
    s << std::setprecision(12) << "~" << parse_rat(v["lo"].get<std::string>()).get_d();
    return s.str();
  }
  return v.dump();
}

void report_table(std::ostream& os, const Json& reports) {
  os << std::left << std::setw(24) << "check" << std::setw(12) << "kind" << std::setw(26) << "status"
     << "lhs  vs  rhs\n";
  for (const auto& r : reports) {
    os << std::setw(24) << r["check_id"].get<std::string>() << std::setw(12) << r["kind"].get<std::string>()
       << std::setw(26) << r["status"].get<std::string>();
    if (!r["lhs"].is_null()) os << short_value(r["lhs"]) << "  vs  " << short_value(r["rhs"]);
    else os << r["reason"].get<std::string>();
    os << "\n";
  }
}

void pretty(std::ostream& os, const Json& doc) {
  if (doc.contains("error")) {
    os << "error (" << doc["error"]["code"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>()
       << "\n";
    return;
  }
  for (const auto& [key, v] : doc.items()) {
    if (key == "reports" || key == "instances" || key == "sections" || key == "tally" || key == "records") continue;
    os << std::left << std::setw(22) << key << (v.is_array() ? v.dump() : short_value(v)) << "\n";
  }
  if (doc.contains("reports")) report_table(os, doc["reports"]);
  if (doc.contains("tally")) {
    os << std::left << std::setw(24) << "check" << "statuses\n";
    for (const auto& [id, counts] : doc["tally"].items()) {
      os << std::setw(24) << id;
      for (const auto& [status, n] : counts.items()) os << status << "=" << n.get<std::size_t>() << " ";
      os << "\n";
    }
  }
}

Json reports_json(const std::vector<CheckReport>& rs, bool& failed) {
  Json out = Json::array();
  for (const auto& r : rs) {
    failed = failed || r.failed();
    out.push_back(report_to_json(r));
  }
  return out;
}

Json error_doc(const std::string& code, const std::string& message, const std::string& path = "") {
  Json e{{"code", code}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  return Json{{"schema", kSchema}, {"error", e}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry-of-numbers toolkit: successive minima, lattice point counts, Siegel's lemma, "
               "inequality checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty_flag = false;
  int jobs = 0;
  unsigned precision = 0;
  app.add_flag("--pretty", pretty_flag, "Also write a human-readable table to stderr");
  app.add_option("--jobs", jobs, "Worker threads for scan and corpus (0 = all)")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", precision, "Interval precision in bits (default GON_PRECISION or 64)")
      ->check(CLI::Range(8u, 1u << 16));

  std::string body, lattice, matrix, dilate = "1", beta, checks;
  std::size_t count = 0, instances = 60, sections = 20, max_dim = 4;
  unsigned n = 0;
  long a_max = 0;
  std::uint64_t seed = 1;
  bool symmetrize_flag = false, star = false, interior = false, no_dedupe = false, records = false, list = false,
       failures_only = false;

  auto add_body = [&](CLI::App* c) { c->add_option("--body", body, "Body JSON file or inline JSON")->required(); };
  auto add_lattice = [&](CLI::App* c) { c->add_option("--lattice", lattice, "Lattice JSON file or inline JSON (default Z^n)"); };

  auto* c_minima = app.add_subcommand("minima", "Successive minima of a body with respect to a lattice");
  add_body(c_minima);
  add_lattice(c_minima);
  c_minima->add_option("--count", count, "Number of minima (default: the dimension)");
  c_minima->add_flag("--symmetrize", symmetrize_flag, "Use K_s = (K - K)/2");
  c_minima->add_flag("--star", star, "Minima of an asymmetric body with the origin in its interior");

  auto* c_count = app.add_subcommand("count", "Number of lattice points in a dilate of a body");
  add_body(c_count);
  add_lattice(c_count);
  c_count->add_option("--dilate", dilate, "Dilation factor p/q");
  c_count->add_flag("--interior", interior, "Count interior points only");

  auto* c_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a lattice polytope");
  add_body(c_ehrhart);
  add_lattice(c_ehrhart);

  auto* c_polar = app.add_subcommand("polar", "Polar body and volume product");
  add_body(c_polar);

  auto* c_width = app.add_subcommand("width", "Lattice width and covering radius bracket");
  add_body(c_width);
  add_lattice(c_width);

  auto* c_siegel = app.add_subcommand("siegel", "Small solutions of A x = 0 with section checks");
  c_siegel->add_option("--matrix", matrix, "Matrix JSON {rows, cols, data}")->required();

  auto* c_scan = app.add_subcommand("scan", "Scan product ratios of cube sections S(a)");
  c_scan->add_option("--n", n, "Dimension")->required();
  c_scan->add_option("--max", a_max, "Largest coefficient A_max")->required();
  c_scan->add_flag("--no-dedupe", no_dedupe, "Keep vectors with gcd(a) > 1");
  c_scan->add_flag("--records", records, "Include every record");

  auto* c_sigma = app.add_subcommand("sigma", "The constant sigma_n");
  c_sigma->add_option("--n", n, "Index")->required()->check(CLI::Range(1u, 200u));

  auto* c_whit = app.add_subcommand("whitworth", "Critical determinant of the generalized hexagon K_{beta,1,1}");
  c_whit->add_option("--beta", beta, "beta in (0, 1] as p/q")->required();

  auto* c_verify = app.add_subcommand("verify", "Run the inequality checks on one instance");
  c_verify->add_option("--body", body, "Body JSON file or inline JSON");
  add_lattice(c_verify);
  c_verify->add_option("--checks", checks, "Comma-separated check ids (default: all)");
  c_verify->add_flag("--list", list, "List the registered checks");

  auto* c_corpus = app.add_subcommand("corpus", "Fixed and seeded random verification battery");
  c_corpus->add_option("--seed", seed, "Random seed");
  c_corpus->add_option("--instances", instances, "Random instances");
  c_corpus->add_option("--sections", sections, "Random section matrices");
  c_corpus->add_option("--max-dim", max_dim, "Largest random dimension")->check(CLI::Range(2, 4));
  c_corpus->add_flag("--failures-only", failures_only, "Only list failing reports");

  Json doc;
  int code = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    doc = error_doc("usage", e.what());
    std::cout << doc.dump() << "\n";
    if (pretty_flag) pretty(std::cerr, doc);
    return 1;
  }

  PrecisionScope scope(precision ? precision : precision_from_env());
  try {
    CLI::App* cmd = app.get_subcommands().front();
    doc = Json{{"schema", kSchema}, {"command", cmd->get_name()}};
    bool failed = false;
    if (cmd == c_minima) {
      const Body k0 = load_body(body);
      const Body k = symmetrize_flag ? symmetrize(k0) : k0;
      const Lattice l = load_lattice(lattice, k.dim());
      const std::size_t c = count ? count : l.rank();
      const MinimaResult m = star ? star_minima(k, l, c) : successive_minima(k, l, c);
      doc.update(minima_to_json(m));
      doc["symmetrized"] = symmetrize_flag;
    } else if (cmd == c_count) {
      const Body k = load_body(body);
      const Lattice l = load_lattice(lattice, k.dim());
      const Rat t = with_context("dilate:", [&] { return rat_from_json(Json(dilate)); });
      if (t <= 0) throw InputError("dilate:", "must be positive");
      doc["dilate"] = to_json(t);
      doc["interior"] = interior;
      doc["count"] = to_json(count_points(k.scaled(t), l, interior));
    } else if (cmd == c_ehrhart) {
      const Body k = load_body(body);
      const Lattice l = load_lattice(lattice, k.dim());
      doc["coefficients"] = to_json(ehrhart(k, l).coeffs);
    } else if (cmd == c_polar) {
      const Body k = load_body(body);
      const Body p = polar_body(k);
      doc["body"] = body_to_json(p);
      doc["volume"] = to_json(k.volume());
      doc["polar_volume"] = to_json(p.volume());
      doc["volume_product"] = to_json(k.volume() * p.volume());
    } else if (cmd == c_width) {
      const Body k = load_body(body);
      const Lattice l = load_lattice(lattice, k.dim());
      const auto w = lattice_width(k, l);
      const auto j = jarnik_bracket(k, l);
      doc["width"] = to_json(w.value);
      doc["direction"] = to_json(w.direction);
      doc["covering_lower"] = to_json(j.lower);
      doc["covering_upper"] = to_json(j.upper);
    } else if (cmd == c_siegel) {
      const QMat a = with_context("matrix:", [&] { return matrix_from_json(load_json(matrix, "matrix")); });
      if (!a.is_integer()) throw InputError("matrix:/data", "entries must be integers");
      const auto s = siegel_solve(a);
      doc.update(siegel_to_json(s));
      const Lattice kl = kernel_lattice(a);
      doc["kernel_basis"] = lattice_to_json(kl)["basis"];
      doc["kernel_gram_det"] = to_json(kl.gram_det());
      doc["gcd"] = to_json(minors_gcd(a));
      doc["det_aat"] = to_json(determinant(a * a.transpose()));
      doc["reports"] = reports_json(run_section_checks(a), failed);
    } else if (cmd == c_scan) {
      doc.update(scan_to_json(scan_constants(n, a_max, !no_dedupe, jobs), records));
    } else if (cmd == c_sigma) {
      doc["n"] = n;
      doc["sigma"] = to_json(sinc_sigma(n));
    } else if (cmd == c_whit) {
      const Rat b = with_context("beta:", [&] { return rat_from_json(Json(beta)); });
      doc["beta"] = to_json(b);
      doc["delta"] = to_json(whitworth_delta(b));
    } else if (cmd == c_verify) {
      if (list) {
        doc["command"] = "checks";
        doc["checks"] = Json::array();
        for (const auto& c : list_checks())
          doc["checks"].push_back(
              {{"id", c.id}, {"kind", to_string(c.kind)}, {"statement", c.statement}, {"applies_to", c.applies_to}});
      } else {
        if (body.empty()) throw UsageError("verify needs --body (or --list)");
        const Body k = load_body(body);
        const Lattice l = load_lattice(lattice, k.dim());
        std::vector<std::string> ids;
        std::stringstream ss(checks);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) ids.push_back(id);
        doc["body"] = body_to_json(k);
        doc["lattice"] = lattice_to_json(l);
        doc["reports"] = reports_json(run_checks(k, l, ids), failed);
      }
    } else if (cmd == c_corpus) {
      CorpusOptions o;
      o.seed = seed;
      o.random_instances = instances;
      o.section_matrices = sections;
      o.max_dim = max_dim;
      o.jobs = jobs;
      const auto rep = run_corpus(o);
      doc.update(corpus_to_json(rep, failures_only));
      failed = rep.violations + rep.candidates > 0;
    }
    code = failed ? 2 : 0;
  } catch (const InputError& ex) {
    doc = error_doc("input", ex.what(), ex.path());
    code = 1;
  } catch (const UsageError& ex) {
    doc = error_doc("usage", ex.what());
    code = 1;
  } catch (const std::length_error& ex) {
    doc = error_doc("guard", ex.what());
    code = 1;
  } catch (const std::exception& ex) {
    doc = error_doc("input", ex.what());
    code = 1;
  }
  std::cout << doc.dump() << "\n";
  if (pretty_flag) pretty(std::cerr, doc);
  return code;
}
