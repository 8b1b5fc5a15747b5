#include "gon/io.hpp"

#include <map>
#include <set>

namespace gon {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(at(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

std::size_t positive_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(path, "expected a positive integer");
  return j.get<std::size_t>();
}

std::vector<QVec> rows_from_json(const Json& j, const std::string& path) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) rows.push_back(qvec_from_json(j[i], at(path, i)));
  if (rows.empty()) throw InputError(path, "expected a nonempty array");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size()) throw InputError(at(path, i), "ragged array");
  return rows;
}

template <typename F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError(path.empty() ? "/" : path, ex.what());
  }
}

Json vectors_to_json(const std::vector<QVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw InputError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::exception& ex) {
    throw InputError(path, ex.what());
  }
}

QVec qvec_from_json(const Json& j, const std::string& path) {
  QVec v;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) v.push_back(rat_from_json(j[i], at(path, i)));
  return v;
}

Json to_json(const Rat& r) { return to_string(r); }
Json to_json(const Int& z) { return to_string(z); }

Json to_json(const QuadVal& q) {
  if (auto r = q.rational()) return to_json(*r);
  return Json{{"sqrt", to_string(q.square())}};
}

Json to_json(const Interval& iv) {
  if (iv.is_point()) return to_json(iv.lo);
  // Outward rounding to dyadics keeps the endpoints short.
  Int scale = 1;
  scale <<= working_precision() + 4;
  const Rat lo = make_rat(floor_int(Rat(iv.lo * scale)), scale);
  const Rat hi = make_rat(ceil_int(Rat(iv.hi * scale)), scale);
  return Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}};
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v.repr());
}

Json to_json(std::span<const Rat> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(std::span<const Int> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Body body_from_json(const Json& j) {
  const std::string type = [&] {
    const Json& t = field(j, "type", "");
    if (!t.is_string()) throw InputError("/type", "expected a string");
    return t.get<std::string>();
  }();
  return guarded("", [&]() -> Body {
    if (type == "hpoly") {
      const auto a = rows_from_json(field(j, "A", ""), "/A");
      const QVec b = qvec_from_json(field(j, "b", ""), "/b");
      if (b.size() != a.size()) throw InputError("/b", "length differs from the number of rows of A");
      std::vector<Halfspace> hs;
      for (std::size_t i = 0; i < a.size(); ++i) hs.push_back({a[i], b[i]});
      return Body::hpoly(hs, a[0].size());
    }
    if (type == "vpoly") return Body::vpoly(rows_from_json(field(j, "vertices", ""), "/vertices"));
    if (type == "box") return Body::box(qvec_from_json(field(j, "a", ""), "/a"));
    if (type == "cube" || type == "cross") {
      const std::size_t n = positive_size(field(j, "n", ""), "/n");
      const Rat scale = j.contains("scale") ? rat_from_json(j["scale"], "/scale") : Rat(1);
      return type == "cube" ? Body::cube(n, scale) : Body::cross(n, scale);
    }
    if (type == "ellipsoid") {
      const auto rows = rows_from_json(field(j, "Q", ""), "/Q");
      return Body::ellipsoid(QMat::from_rows(rows));
    }
    if (type == "simplex") return centered_simplex(positive_size(field(j, "n", ""), "/n"));
    if (type == "dual_simplex") return dual_centered_simplex(positive_size(field(j, "n", ""), "/n"));
    if (type == "hexagon") return generalized_hexagon(qvec_from_json(field(j, "alphas", ""), "/alphas"));
    throw InputError("/type", "unknown body type '" + type + "'");
  });
}

Json body_to_json(const Body& k) {
  switch (k.kind()) {
    case BodyKind::box: return Json{{"type", "box"}, {"a", to_json(k.box_sides())}};
    case BodyKind::cross: return Json{{"type", "cross"}, {"n", k.dim()}, {"scale", to_json(k.cross_scale())}};
    case BodyKind::ellipsoid: {
      Json q = Json::array();
      for (std::size_t i = 0; i < k.dim(); ++i) q.push_back(to_json(k.quadric().row(i)));
      return Json{{"type", "ellipsoid"}, {"Q", q}};
    }
    default: return Json{{"type", "vpoly"}, {"vertices", vectors_to_json(k.polytope().vertices)}};
  }
}

Lattice lattice_from_json(const Json& j) {
  if (j.is_object() && j.contains("integer")) return Lattice::integer(positive_size(j["integer"], "/integer"));
  if (j.is_object() && j.contains("data")) {
    const QMat b = matrix_from_json(j);
    return guarded("", [&] { return Lattice(b); });
  }
  const auto cols = rows_from_json(field(j, "basis", ""), "/basis");
  return guarded("/basis", [&] { return Lattice(QMat::from_columns(cols)); });
}

Json lattice_to_json(const Lattice& l) {
  std::vector<QVec> cols;
  for (std::size_t j = 0; j < l.rank(); ++j) cols.push_back(l.basis().column(j));
  return Json{{"basis", vectors_to_json(cols)}};
}

QMat matrix_from_json(const Json& j, const std::string& path) {
  const std::size_t m = positive_size(field(j, "rows", path), at(path, "rows"));
  const std::size_t n = positive_size(field(j, "cols", path), at(path, "cols"));
  const auto rows = rows_from_json(field(j, "data", path), at(path, "data"));
  if (rows.size() != m || rows[0].size() != n) throw InputError(at(path, "data"), "shape differs from rows x cols");
  return QMat::from_rows(rows);
}

Json matrix_to_json(const QMat& a) {
  Json data = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) data.push_back(to_json(a.row(i)));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

Json minima_to_json(const MinimaResult& m) {
  Json values = Json::array();
  for (const auto& v : m.values) values.push_back(to_json(v));
  return Json{{"minima", values}, {"witnesses", vectors_to_json(m.witnesses)}};
}

Json report_to_json(const CheckReport& r) {
  Json parts = Json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"label", p.label},
                     {"lhs", to_json(p.lhs)},
                     {"rhs", to_json(p.rhs)},
                     {"strict", p.strict},
                     {"status", to_string(p.status)}});
  Json out{{"check_id", r.check_id}, {"kind", to_string(r.kind)}, {"status", to_string(r.status)},
           {"reason", r.reason},     {"parts", parts},              {"witnesses", vectors_to_json(r.witnesses)},
           {"bits", r.bits}};
  const Comparison* d = r.decisive();
  out["lhs"] = d ? to_json(d->lhs) : Json();
  out["rhs"] = d ? to_json(d->rhs) : Json();
  const auto m = r.margin();
  out["margin"] = m ? to_json(*m) : Json();
  return out;
}

Json scan_to_json(const ScanReport& s, bool with_records) {
  Json out{{"n", s.n},
           {"a_max", s.a_max},
           {"dedupe", s.dedupe},
           {"count", s.records.size()},
           {"empirical_s", to_json(s.empirical_s)},
           {"empirical_c", to_json(s.empirical_c)},
           {"s_witness", to_json(s.s_witness)},
           {"c_witness", to_json(s.c_witness)},
           {"c_le_s_everywhere", s.c_le_s_everywhere},
           {"bv_everywhere", s.bv_everywhere},
           {"projected_everywhere", s.projected_everywhere},
           {"below_sqrt_n", s.below_sqrt_n},
           {"below_sigma_inverse", s.below_sigma_inverse},
           {"known_s", s.known_s ? to_json(*s.known_s) : Json()},
           {"strictly_below_known", s.strictly_below_known}};
  if (with_records) {
    Json recs = Json::array();
    for (const auto& r : s.records)
      recs.push_back({{"a", to_json(r.a)},
                      {"minima", to_json(r.minima)},
                      {"product_ratio", to_json(r.product_ratio)},
                      {"single_ratio", to_json(r.single_ratio)},
                      {"bv_holds", r.bv_holds},
                      {"projected_bound", to_json(r.projected_bound)},
                      {"projected_holds", r.projected_holds}});
    out["records"] = recs;
  }
  return out;
}

Json siegel_to_json(const SiegelSolution& s) {
  Json vecs = Json::array();
  for (const auto& v : s.vectors) vecs.push_back(to_json(v));
  return Json{{"vectors", vecs},
              {"product_norm", to_json(s.product_norm)},
              {"bv_bound", to_json(s.bv_bound)},
              {"classical_bound", to_json(s.classical_bound)},
              {"bv_certified", s.bv_certified},
              {"classical_certified", s.classical_certified}};
}

Json corpus_to_json(const CorpusReport& c, bool failures_only) {
  Json instances = Json::array();
  for (const auto& i : c.instances) {
    Json reports = Json::array();
    for (const auto& r : i.reports)
      if (!failures_only || r.failed()) reports.push_back(report_to_json(r));
    if (failures_only && reports.empty() && i.error.empty()) continue;
    Json entry{{"label", i.instance.label},
               {"body", body_to_json(i.instance.body)},
               {"lattice", lattice_to_json(i.instance.lattice)},
               {"reports", reports}};
    if (!i.error.empty()) entry["error"] = i.error;
    instances.push_back(entry);
  }
  Json sections = Json::array();
  for (const auto& s : c.sections) {
    Json reports = Json::array();
    for (const auto& r : s.reports)
      if (!failures_only || r.failed()) reports.push_back(report_to_json(r));
    if (failures_only && reports.empty()) continue;
    sections.push_back({{"matrix", matrix_to_json(s.matrix)}, {"reports", reports}});
  }
  // Per-check tallies over instances and sections.
  std::map<std::string, std::map<std::string, std::size_t>> tally;
  for (const auto& i : c.instances)
    for (const auto& r : i.reports) ++tally[r.check_id][to_string(r.status)];
  for (const auto& s : c.sections)
    for (const auto& r : s.reports) ++tally[r.check_id][to_string(r.status)];
  return Json{{"seed", c.seed},
              {"instance_count", c.instances.size()},
              {"section_count", c.sections.size()},
              {"violations", c.violations},
              {"candidates", c.candidates},
              {"tally", tally},
              {"instances", instances},
              {"sections", sections}};
}

namespace {

bool is_value(const Json& j) {
  auto rat_string = [](const Json& s) {
    if (!s.is_string()) return false;
    try {
      parse_rat(s.get<std::string>());
      return true;
    } catch (const std::exception&) {
      return false;
    }
  };
  if (j.is_object() && j.size() == 1 && j.contains("sqrt")) return rat_string(j["sqrt"]);
  if (j.is_object() && j.size() == 2 && j.contains("lo") && j.contains("hi")) return rat_string(j["lo"]) && rat_string(j["hi"]);
  return rat_string(j);
}

struct Validator {
  std::vector<std::string> problems;

  void fail(const std::string& path, const std::string& what) { problems.push_back(path + ": " + what); }

  const Json* need(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) {
      fail(at(path, key), "missing");
      return nullptr;
    }
    return &j[key];
  }
  void value(const Json& j, const std::string& key, const std::string& path, bool nullable = false) {
    if (const Json* v = need(j, key, path))
      if (!(nullable && v->is_null()) && !is_value(*v)) fail(at(path, key), "not a rational or enclosure");
  }
  void values(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path)) {
      if (!v->is_array()) return fail(at(path, key), "expected an array");
      for (std::size_t i = 0; i < v->size(); ++i)
        if (!is_value((*v)[i])) fail(at(at(path, key), i), "not a rational or enclosure");
    }
  }
  void vectors(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path)) {
      if (!v->is_array()) return fail(at(path, key), "expected an array");
      for (std::size_t i = 0; i < v->size(); ++i) {
        const Json& row = (*v)[i];
        if (!row.is_array()) {
          fail(at(at(path, key), i), "expected an array");
          continue;
        }
        for (std::size_t c = 0; c < row.size(); ++c)
          if (!is_value(row[c])) fail(at(at(at(path, key), i), c), "not a rational");
      }
    }
  }
  void boolean(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path))
      if (!v->is_boolean()) fail(at(path, key), "expected a boolean");
  }
  void integer(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path))
      if (!v->is_number_integer()) fail(at(path, key), "expected an integer");
  }
  void string(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path))
      if (!v->is_string()) fail(at(path, key), "expected a string");
  }
  template <typename Parse>
  void parses(const Json& j, const std::string& key, const std::string& path, Parse parse) {
    if (const Json* v = need(j, key, path)) {
      try {
        parse(*v);
      } catch (const std::exception& ex) {
        fail(at(path, key), ex.what());
      }
    }
  }

  void report(const Json& r, const std::string& path) {
    static const std::set<std::string> kinds{"theorem", "conjecture", "bound"};
    static const std::set<std::string> statuses{"holds", "equality", "violated", "counterexample_candidate", "skipped",
                                                "undecided"};
    string(r, "check_id", path);
    string(r, "reason", path);
    if (const Json* k = need(r, "kind", path); k && !(k->is_string() && kinds.count(k->get<std::string>())))
      fail(at(path, "kind"), "unknown kind");
    if (const Json* s = need(r, "status", path); s && !(s->is_string() && statuses.count(s->get<std::string>())))
      fail(at(path, "status"), "unknown status");
    value(r, "lhs", path, true);
    value(r, "rhs", path, true);
    value(r, "margin", path, true);
    vectors(r, "witnesses", path);
    if (const Json* parts = need(r, "parts", path)) {
      if (!parts->is_array()) return fail(at(path, "parts"), "expected an array");
      for (std::size_t i = 0; i < parts->size(); ++i) {
        const std::string p = at(at(path, "parts"), i);
        string((*parts)[i], "label", p);
        value((*parts)[i], "lhs", p);
        value((*parts)[i], "rhs", p);
        boolean((*parts)[i], "strict", p);
      }
    }
  }
  void reports(const Json& j, const std::string& key, const std::string& path) {
    if (const Json* v = need(j, key, path)) {
      if (!v->is_array()) return fail(at(path, key), "expected an array");
      for (std::size_t i = 0; i < v->size(); ++i) report((*v)[i], at(at(path, key), i));
    }
  }
};

}  // namespace

std::vector<std::string> validate_output(const Json& doc) {
  Validator v;
  if (!doc.is_object()) return {"/: expected an object"};
  if (!doc.contains("schema") || doc["schema"] != kSchema) v.fail("/schema", std::string("expected \"") + kSchema + "\"");
  if (doc.contains("error")) {
    const Json& e = doc["error"];
    v.string(e, "code", "/error");
    v.string(e, "message", "/error");
    return v.problems;
  }
  v.string(doc, "command", "");
  if (!v.problems.empty()) return v.problems;
  const std::string cmd = doc["command"];
  const Json& d = doc;
  if (cmd == "minima") {
    v.values(d, "minima", "");
    v.vectors(d, "witnesses", "");
  } else if (cmd == "count") {
    v.value(d, "count", "");
  } else if (cmd == "ehrhart") {
    v.values(d, "coefficients", "");
  } else if (cmd == "polar") {
    v.parses(d, "body", "", [](const Json& b) { body_from_json(b); });
    v.value(d, "volume", "");
    v.value(d, "polar_volume", "");
  } else if (cmd == "width") {
    v.value(d, "width", "");
    v.values(d, "direction", "");
    v.value(d, "covering_lower", "");
    v.value(d, "covering_upper", "");
  } else if (cmd == "siegel") {
    v.vectors(d, "vectors", "");
    v.value(d, "product_norm", "");
    v.value(d, "bv_bound", "");
    v.value(d, "classical_bound", "");
    v.reports(d, "reports", "");
  } else if (cmd == "scan") {
    v.integer(d, "n", "");
    v.integer(d, "a_max", "");
    v.value(d, "empirical_s", "");
    v.value(d, "empirical_c", "");
    v.values(d, "s_witness", "");
    v.boolean(d, "c_le_s_everywhere", "");
    v.value(d, "known_s", "", true);
  } else if (cmd == "sigma") {
    v.value(d, "sigma", "");
  } else if (cmd == "whitworth") {
    v.value(d, "delta", "");
  } else if (cmd == "verify") {
    v.reports(d, "reports", "");
  } else if (cmd == "checks") {
    if (const Json* c = v.need(d, "checks", ""); c && !c->is_array()) v.fail("/checks", "expected an array");
  } else if (cmd == "corpus") {
    v.integer(d, "seed", "");
    v.integer(d, "violations", "");
    v.integer(d, "candidates", "");
    if (const Json* is = v.need(d, "instances", ""); is && is->is_array()) {
      for (std::size_t i = 0; i < is->size(); ++i) {
        const std::string p = at("/instances", i);
        v.parses((*is)[i], "body", p, [](const Json& b) { body_from_json(b); });
        v.parses((*is)[i], "lattice", p, [](const Json& l) { lattice_from_json(l); });
        v.reports((*is)[i], "reports", p);
      }
    }
    if (const Json* ss = v.need(d, "sections", ""); ss && ss->is_array()) {
      for (std::size_t i = 0; i < ss->size(); ++i) v.reports((*ss)[i], "reports", at("/sections", i));
    }
  } else {
    v.fail("/command", "unknown command '" + cmd + "'");
  }
  return v.problems;
}

}  // namespace gon
