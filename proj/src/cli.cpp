#include "kmflat/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include "kmflat/json_io.hpp"

namespace kmflat {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

RationalVector parse_point(const std::string& text) {
  RationalVector v;
  try {
    for (const auto& part : split(text, ',')) v.push_back(parse_rational(part));
  } catch (const KmError&) {
    throw UsageError("cannot parse point \"" + text + "\"");
  }
  return v;
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(part, &pos);
    } catch (const std::exception&) {
      throw UsageError("cannot parse index list \"" + text + "\"");
    }
    if (pos != part.size()) throw UsageError("cannot parse index list \"" + text + "\"");
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw KmError(ErrorCode::IndexOutOfRange, "index " + part + " outside 1.." + std::to_string(n));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

// Accepts x, yi, x+yi, x-yi, i, -i with decimal x and y.
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw UsageError("empty matrix entry");
  auto number = [&](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw UsageError("cannot parse matrix entry \"" + s + "\"");
    }
    if (pos != t.size()) throw UsageError("cannot parse matrix entry \"" + s + "\"");
    return v;
  };
  if (s.back() != 'i') return {number(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, number(body)};
  return {number(body.substr(0, cut)), number(body.substr(cut))};
}

Sl2Element parse_sl2(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("matrix needs four comma-separated entries a,b,c,d");
  Mat2 m{parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]), parse_complex(parts[3])};
  return Sl2Element(m, is_real(m, 0.0) ? FieldMode::Real : FieldMode::Complex);
}

Json roots_json(const WeylGroup& group, std::size_t max_height, bool all) {
  Json j;
  j["max_height"] = max_height;
  const auto roots = all ? group.enumerate_real_roots(max_height) : group.positive_real_roots(max_height);
  j["count"] = roots.size();
  Json coeffs = Json::array();
  for (const auto& r : roots) coeffs.push_back(to_json(r.coeffs));
  j[all ? "roots" : "positive"] = coeffs;
  return j;
}

Half parse_half(const std::string& s) {
  if (s == "+" || s == "positive") return Half::Positive;
  if (s == "-" || s == "negative") return Half::Negative;
  throw UsageError("half must be + or -");
}

Word parse_word(const std::string& text, std::size_t n) { return parse_indices(text, n); }

struct Options {
  std::string gcm_path;
  std::size_t max_height = 6;
  std::size_t radius = 4;
  std::size_t max_steps = 10000;
  std::uint64_t seed = 0;
  std::size_t dim = 3;
  std::size_t samples = 50;
  double tol = 1e-10;
  std::string point, word, matrix, order = "UAK", model = "flat", format = "json";
  std::string word2, j1, j2, point2, half1 = "+", half2 = "+";
  bool all = false, twin = false, causal = false, report = false, timing = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kac-Moody flats, Weyl groups and boundary complexes", "kmflat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  app.add_flag("--report", o.report, "Wrap the result in {command, version, result}");
  app.add_flag("--timing", o.timing, "Add wall-clock timing to the report envelope");
  app.fallthrough();

  std::string command;
  std::function<Json()> action;
  auto gcm = [&] { return load_gcm_file(o.gcm_path); };

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };
  auto need_gcm = [&](CLI::App* s) { s->add_option("--gcm", o.gcm_path, "GCM file {\"gcm\": [[...]]}")->required(); };

  auto* classify_cmd = sub("classify", "Classify a generalized Cartan matrix");
  need_gcm(classify_cmd);
  auto* sym_cmd = sub("symmetrize", "Symmetrizer d, B with A = diag(d) B");
  need_gcm(sym_cmd);
  auto* realize_cmd = sub("realize", "Extended realization and invariant form");
  need_gcm(realize_cmd);
  auto* roots_cmd = sub("roots", "Real roots up to a height");
  need_gcm(roots_cmd);
  roots_cmd->add_option("--max-height", o.max_height)->check(CLI::PositiveNumber);
  roots_cmd->add_flag("--all", o.all, "Include negative roots");
  auto* weyl_cmd = sub("weyl", "Weyl group element or ball");
  need_gcm(weyl_cmd);
  weyl_cmd->add_option("--word", o.word, "Word in 1-based generators, e.g. 1,2,1");
  weyl_cmd->add_option("--radius", o.radius)->check(CLI::Range(0, 12));
  auto* tits_cmd = sub("tits-cone", "Tits cone membership of a point");
  need_gcm(tits_cmd);
  tits_cmd->add_option("--point", o.point)->required();
  tits_cmd->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
  tits_cmd->add_flag("--causal", o.causal, "Also report the causal direction");
  auto* sing_cmd = sub("singular", "Singular set membership of a point");
  need_gcm(sing_cmd);
  sing_cmd->add_option("--point", o.point)->required();
  sing_cmd->add_option("--max-height", o.max_height)->check(CLI::PositiveNumber);
  auto* axioms_cmd = sub("check-axioms", "Loos axioms on seeded samples");
  axioms_cmd->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--samples", o.samples)->check(CLI::Range(3, 1000));
  axioms_cmd->add_option("--seed", o.seed);
  axioms_cmd->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--model", o.model)->check(CLI::IsMember({"flat", "group"}));
  auto* iwasawa_cmd = sub("iwasawa", "Iwasawa decomposition in SL(2)");
  iwasawa_cmd->add_option("--matrix", o.matrix, "a,b,c,d; entries may be complex, e.g. 1+2i")->required();
  iwasawa_cmd->add_option("--order", o.order)->check(CLI::IsMember({"UAK", "KAU"}));
  auto* symel_cmd = sub("symmetric-element", "Symmetric-element test in SL(2)");
  symel_cmd->add_option("--matrix", o.matrix)->required();
  symel_cmd->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  auto* auts_cmd = sub("diagram-auts", "Aut(Gamma) and Aut(W,S)");
  need_gcm(auts_cmd);
  auto* fan_cmd = sub("realize-fan", "Colored cone complex of spherical residues");
  need_gcm(fan_cmd);
  fan_cmd->add_option("--radius", o.radius)->check(CLI::Range(0, 12));
  fan_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  fan_cmd->add_flag("--twin", o.twin, "Include the negative half");
  auto* par_cmd = sub("parallel", "Asymptoticity of two cell points");
  need_gcm(par_cmd);
  par_cmd->add_option("--word1", o.word)->required();
  par_cmd->add_option("--J1", o.j1);
  par_cmd->add_option("--point1", o.point)->required();
  par_cmd->add_option("--half1", o.half1);
  par_cmd->add_option("--word2", o.word2)->required();
  par_cmd->add_option("--J2", o.j2);
  par_cmd->add_option("--point2", o.point2)->required();
  par_cmd->add_option("--half2", o.half2);

  std::vector<std::string> argv_store{"kmflat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  bool dot_output = false;
  std::string dot_text;
  Json result;
  try {
    if (command == "classify") {
      const auto m = gcm();
      result = classification_json(m, classify(m));
    } else if (command == "symmetrize") {
      result = to_json(symmetrize(gcm()));
    } else if (command == "realize") {
      const auto m = gcm();
      const RootDatum rd = build_realization(m);
      result = to_json(rd);
      if (auto s = try_symmetrize(m)) result["form"] = to_json(build_bilinear_form(rd, *s));
    } else if (command == "roots") {
      result = roots_json(WeylGroup(build_realization(gcm())), o.max_height, o.all);
    } else if (command == "weyl") {
      const auto m = gcm();
      const WeylGroup group(build_realization(m));
      result["coxeter"] = coxeter_json(coxeter_matrix(m));
      if (!o.word.empty()) {
        result["element"] = to_json(group.from_word(parse_word(o.word, m.size())));
      } else {
        Json words = Json::array();
        for (const auto& w : group.ball(o.radius)) words.push_back(word_json(w.word));
        result["radius"] = o.radius;
        result["count"] = words.size();
        result["ball"] = words;
      }
    } else if (command == "tits-cone") {
      const TitsCone cone(WeylGroup(build_realization(gcm())));
      const auto p = parse_point(o.point);
      result = to_json(cone.membership(p, o.max_steps));
      if (o.causal) result["causal"] = std::string(to_string(cone.causal_direction(p, o.max_steps)));
    } else if (command == "singular") {
      const WeylGroup group(build_realization(gcm()));
      result = to_json(singular_membership(group, parse_point(o.point), o.max_height));
    } else if (command == "check-axioms") {
      if (o.model == "flat") {
        const auto pts = sample_flat_points(o.dim, o.samples, o.seed);
        result = to_json(check_loos_axioms(std::span<const FlatSpacePoint>(pts), o.tol));
      } else {
        const auto pts = sample_group_model_points(o.samples, o.seed);
        result = to_json(check_loos_axioms(std::span<const Mat2>(pts), o.tol));
      }
    } else if (command == "iwasawa") {
      const auto order = o.order == "UAK" ? IwasawaOrder::UAK : IwasawaOrder::KAU;
      const auto triple = iwasawa_decompose(parse_sl2(o.matrix), order);
      result = to_json(triple);
    } else if (command == "symmetric-element") {
      result = to_json(is_symmetric_element(parse_sl2(o.matrix), o.tol));
    } else if (command == "diagram-auts") {
      result = to_json(diagram_automorphisms(gcm()));
    } else if (command == "realize-fan") {
      const WeylGroup group(build_realization(gcm()));
      const HorizonComplex complex = build_horizon_complex(group, o.radius, o.twin);
      if (o.format == "dot") {
        dot_output = true;
        dot_text = to_dot(complex);
      } else {
        result = to_json(complex);
      }
    } else if (command == "parallel") {
      const auto m = gcm();
      const WeylGroup group(build_realization(m));
      const auto spherical = spherical_subsets(m);
      auto residue = [&](const std::string& word, const std::string& J) {
        const IndexSet set = [&] {
          auto s = parse_indices(J, m.size());
          std::sort(s.begin(), s.end());
          return s;
        }();
        const auto it = std::find_if(spherical.begin(), spherical.end(), [&](const auto& x) { return x.J == set; });
        if (it == spherical.end()) throw KmError(ErrorCode::NotSpherical, "J = " + J + " is not spherical");
        return Residue{minimal_representative(group, group.from_word(parse_word(word, m.size())), set), *it};
      };
      const CellPoint a{residue(o.word, o.j1), parse_half(o.half1), parse_point(o.point)};
      const CellPoint b{residue(o.word2, o.j2), parse_half(o.half2), parse_point(o.point2)};
      result["parallel"] = parallel_class(group, a, b);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const KmError& e) {
    out << to_json(e).dump(2) << "\n";
    return 1;
  }

  if (dot_output) {
    out << dot_text;
    return 0;
  }
  if (o.report) {
    Json env;
    env["command"] = command;
    env["version"] = kVersion;
    env["result"] = result;
    if (o.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      env["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    result = env;
  }
  out << result.dump(2) << "\n";
  return 0;
}

}  // namespace kmflat
