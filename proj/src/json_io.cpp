#include "kmflat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kmflat {

GcmMatrix parse_gcm_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw KmError(ErrorCode::MalformedJson, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gcm") || !doc["gcm"].is_array())
    throw KmError(ErrorCode::MalformedJson, "expected an object with a \"gcm\" array");
  std::vector<IntegerVector> raw;
  for (const auto& row : doc["gcm"]) {
    if (!row.is_array()) throw KmError(ErrorCode::MalformedJson, "gcm rows must be arrays");
    IntegerVector r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw KmError(ErrorCode::MalformedJson, "gcm entries must be integers");
      r.emplace_back(x.get<long>());
    }
    raw.push_back(std::move(r));
  }
  return GcmMatrix::validate(raw);
}

GcmMatrix load_gcm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KmError(ErrorCode::FileNotFound, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gcm_json(buf.str());
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(to_string(x));
  }
  return a;
}

Json to_json(const RationalMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Complex& z) {
  if (z.imag() == 0) return z.real();
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json word_json(const Word& w) { return one_based(w); }

Json index_set_json(const std::vector<std::size_t>& s) {
  Json a = Json::array();
  for (std::size_t i : s) a.push_back(i + 1);
  return a;
}

Json to_json(const Symmetrizer& s) { return Json{{"d", to_json(s.d)}, {"b", to_json(s.b)}}; }

namespace {

Json certificate_json(const TypeCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["rank"] = c.rank;
  j["witness"] = to_json(c.witness);
  return j;
}

}  // namespace

Json classification_json(const GcmMatrix& m, const Classification& c) {
  Json j;
  if (c.indecomposable()) {
    j = certificate_json(c.components.front());
  } else {
    j["kind"] = "Decomposable";
    j["rank"] = c.rank;
    j["witness"] = Json::array();
    Json comps = Json::array();
    for (const auto& comp : c.components) {
      Json cj;
      cj["indices"] = index_set_json(comp.indices);
      for (auto& [k, v] : certificate_json(comp).items()) cj[k] = v;
      comps.push_back(cj);
    }
    j["components"] = comps;
  }
  if (auto s = try_symmetrize(m)) j["symmetrizer"] = to_json(*s);
  return j;
}

Json to_json(const RootDatum& rd) {
  Json j;
  j["n"] = rd.n();
  j["rank"] = rd.rank;
  j["dim"] = rd.dim;
  j["basis"] = rd.basis_labels;
  Json coroots = Json::array(), roots = Json::array();
  for (const auto& h : rd.coroots) coroots.push_back(to_json(h));
  for (const auto& c : rd.roots) roots.push_back(to_json(c));
  j["coroots"] = coroots;
  j["roots"] = roots;
  j["dependent"] = index_set_json(rd.dependent_indices);
  return j;
}

Json to_json(const BilinearForm& form) {
  return Json{{"gram", to_json(form.gram)}, {"determinant", to_json(form.determinant)}};
}

Json to_json(const RealRoot& root) {
  Json j;
  j["coeffs"] = to_json(root.coeffs);
  j["height"] = root.height.get_si();
  j["sign"] = root.positive ? "positive" : "negative";
  j["covector"] = to_json(root.covector);
  j["coroot"] = to_json(root.coroot);
  j["word"] = word_json(root.orbit_word);
  j["simple"] = root.simple_index + 1;
  return j;
}

Json to_json(const WeylElement& w) {
  Json j;
  j["word"] = word_json(w.word);
  j["length"] = w.length();
  j["matrix"] = to_json(w.matrix);
  return j;
}

Json coxeter_json(const CoxeterMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (std::size_t x : row) {
      if (x == kInfiniteOrder) r.push_back("inf");
      else r.push_back(x);
    }
    a.push_back(r);
  }
  return a;
}

Json to_json(const ConeQuery& q) {
  Json j;
  j["point"] = to_json(q.point);
  j["status"] = std::string(to_string(q.status));
  j["descent_word"] = word_json(q.descent_word);
  return j;
}

Json to_json(const SingularResult& r) {
  Json j;
  j["singular"] = r.singular;
  if (r.root) j["root"] = to_json(r.root->coeffs);
  else j["regular_up_to"] = r.max_height;
  return j;
}

Json to_json(const LoosReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["points"] = r.points;
  j["triples_checked"] = r.triples_checked;
  j["pairs_checked"] = r.pairs_checked;
  j["max_residual"] = r.max_residual;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json idx = Json::array();
    for (std::size_t p : x.points) idx.push_back(p);
    v.push_back(Json{{"axiom", x.axiom}, {"points", idx}, {"residual", x.residual}});
  }
  j["violations"] = v;
  return j;
}

Json to_json(const IwasawaTriple& t) {
  Json j;
  j["order"] = std::string(to_string(t.order));
  j["u"] = to_json(t.u);
  j["a"] = to_json(t.a);
  j["k"] = to_json(t.k);
  return j;
}

Json to_json(const SymmetricElementResult& r) {
  Json j;
  j["symmetric"] = r.symmetric;
  if (r.symmetric) {
    j["spectrum"] = Json::array({r.spectrum[0], r.spectrum[1]});
    j["eigenvectors"] = to_json(r.eigenvectors);
  }
  return j;
}

Json to_json(const DiagramAutomorphisms& a) {
  auto perms = [](const std::vector<Permutation>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(index_set_json(p));
    return out;
  };
  return Json{{"autGamma", perms(a.aut_gamma)}, {"autWS", perms(a.aut_ws)}, {"equal", a.equal()}};
}

Json to_json(const IdealCell& cell) {
  Json j;
  j["residue"] = Json{{"word", word_json(cell.residue.rep.word)}, {"J", index_set_json(cell.residue.J.J)}};
  j["half"] = to_string(cell.half);
  Json rays = Json::array(), lin = Json::array();
  for (const auto& r : cell.rays) rays.push_back(to_json(to_rational(r)));
  for (const auto& l : cell.lineality) lin.push_back(to_json(l));
  j["rays"] = rays;
  j["lineality"] = lin;
  j["color"] = index_set_json(cell.color);
  return j;
}

Json to_json(const HorizonComplex& complex) {
  Json j;
  j["radius"] = complex.radius;
  j["twin"] = complex.twin;
  Json cells = Json::array();
  for (const auto& c : complex.cells) cells.push_back(to_json(c));
  j["cells"] = cells;
  Json excluded = Json::array();
  for (const auto& r : complex.excluded)
    excluded.push_back(Json{{"word", word_json(r.rep.word)}, {"J", index_set_json(r.J.J)}});
  j["excluded"] = excluded;
  return j;
}

Json to_json(const KmError& e) {
  Json err;
  err["code"] = std::string(to_string(e.code()));
  err["message"] = e.what();
  if (!e.indices().empty()) err["indices"] = e.indices();
  return Json{{"error", err}};
}

}  // namespace kmflat
