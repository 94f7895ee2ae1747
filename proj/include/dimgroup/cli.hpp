#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process with string streams.
//
// Exit codes: 0 all claims hold, 3 a violation or witness was found,
// 2 usage or input error, 1 internal or precision error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/ex1.hpp"
#include "dimgroup/ex3.hpp"
#include "dimgroup/numfield.hpp"
#include "dimgroup/poly_real.hpp"
#include "dimgroup/report.hpp"
#include "dimgroup/simplex.hpp"

namespace dimgroup::cli {

using report::Json;
using report::Report;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

struct Config {
  std::string oracle = "pi_minus_3";
  std::string digits_file;
  unsigned max_precision_bits = ScalarField::kDefaultMaxBits;
  std::string output = "text";
  std::uint64_t seed = 1;
  bool parallel = false;

  Json to_json() const {
    Json j{{"oracle", oracle}};
    if (!digits_file.empty()) j["digits_file"] = digits_file;
    j["max_precision_bits"] = max_precision_bits;
    j["output"] = output;
    j["seed"] = seed;
    j["parallel"] = parallel;
    return j;
  }
};

/// Bad input detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

inline std::vector<TScalar> parse_scalars(const std::vector<std::string>& v) {
  std::vector<TScalar> out;
  for (const auto& s : v) out.push_back(parse_tscalar(s));
  return out;
}

inline std::shared_ptr<const TranscendentalOracle> make_oracle(const Config& c) {
  if (c.oracle == "pi_minus_3") return std::make_shared<PiMinus3Oracle>();
  if (c.oracle == "digits_file") {
    if (c.digits_file.empty()) throw UsageError("--oracle digits_file needs --digits-file");
    return DecimalDigitsOracle::from_file(c.digits_file);
  }
  throw UsageError("unknown oracle '" + c.oracle + "'");
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void emit(const Report& r, const Config& c, std::ostream& out) {
  Json j = r.to_json();
  if (c.output == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << j["command"].get<std::string>() << "\n";
  for (const auto& item : j["results"]) {
    out << "#" << item["index"].get<std::size_t>() << " " << item["verdict"].get<std::string>() << "  "
        << item["input"].dump() << "\n";
    if (item.contains("witnesses")) out << "    " << item["witnesses"].dump() << "\n";
  }
  for (const auto& [k, v] : j.items())
    if (k != "command" && k != "config" && k != "results" && k != "summary" && k != "exit_code")
      out << k << ": " << v.dump() << "\n";
  out << "summary: items=" << j["summary"]["items"].get<std::size_t>()
      << " violations=" << j["summary"]["violations"].get<std::size_t>();
  for (const auto& [k, v] : j["summary"]["counts"].items()) out << " " << k << "=" << v.get<std::size_t>();
  out << "\n";
}

inline DomainInterval parse_domain(const ScalarField& f, const std::vector<std::string>& iv) {
  if (iv.size() != 2) throw UsageError("--interval needs two endpoints");
  try {
    return DomainInterval(f, parse_tscalar(iv[0]), parse_tscalar(iv[1]));
  } catch (const PreconditionViolated& e) {
    throw UsageError(e.what());
  }
}

inline simplex::Spec load_spec(const std::string& path) {
  if (path.empty()) return simplex::reference_spec();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
    simplex::Spec s;
    s.m = j.at("m").get<std::size_t>();
    for (const auto& row : j.at("u")) {
      RationalVector r;
      for (const auto& x : row) r.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
      s.u.push_back(std::move(r));
    }
    if (j.contains("schedule")) {
      s.schedule = j.at("schedule").get<std::vector<std::size_t>>();
    } else {
      s = simplex::Spec::with_default_schedule(s.m, std::move(s.u));
    }
    return s;
  } catch (const Json::exception& e) {
    throw UsageError("bad spec file " + path + ": " + e.what());
  }
}

inline std::string root_location(const IsolatingInterval& r, const DomainInterval& dom) {
  if (r.exact && r.lo == dom.a()) return "left endpoint";
  if (r.exact && r.hi == dom.b()) return "right endpoint";
  return "interior";
}

inline Json classification_json(const ex3::Classification& c, const DomainInterval& dom) {
  Json w = report::to_json(c);
  for (const auto* ext : {&c.min, &c.max})
    if (*ext && (*ext)->root) {
      w["root_location"] = root_location(*(*ext)->root, dom);
      break;
    }
  return w;
}

inline Json domain_json(const DomainInterval& d) { return Json::array({to_string(d.a()), to_string(d.b())}); }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of simple archimedean dimension group constructions", "dimgroup"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_file;
  auto* o_oracle = app.add_option("--oracle", cfg.oracle, "pi_minus_3 or digits_file");
  auto* o_digits = app.add_option("--digits-file", cfg.digits_file, "decimal expansion 0.ddd... of t");
  auto* o_bits = app.add_option("--max-precision-bits", cfg.max_precision_bits, "sign refinement cap")
                     ->check(CLI::Range(64u, 1u << 24));
  auto* o_json = app.add_flag("--json", "emit a JSON report");
  auto* o_seed = app.add_option("--seed", cfg.seed, "PRNG seed (std::mt19937_64)");
  auto* o_par = app.add_flag("--parallel", cfg.parallel, "classify batch items on all cores");
  app.add_option("--config", config_file, "JSON file with the same keys as the flags");

  auto sub = [](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // scalar
  auto* scalar = sub(&app, "scalar", "arithmetic in Q[t]");
  scalar->require_subcommand(1);
  auto* scalar_sign = sub(scalar, "sign", "exact sign of an element of Q[t]");
  std::string scalar_expr, scalar_width = "1/1000000";
  scalar_sign->add_option("expr", scalar_expr, "e.g. \"t - 1/7\"")->required();
  scalar_sign->add_option("--width", scalar_width, "width of the reported enclosure");

  // poly
  auto* poly = sub(&app, "poly", "polynomials over Q[t]");
  poly->require_subcommand(1);
  auto* poly_minsign = sub(poly, "minsign", "certified sign of the minimum on an interval");
  std::vector<std::string> poly_coeffs, poly_interval{"0", "1"};
  bool poly_max = false;
  poly_minsign->add_option("--coeffs", poly_coeffs, "x-coefficients, lowest first")->delimiter(',')->required();
  poly_minsign->add_option("--interval", poly_interval, "endpoints a b")->expected(2);
  poly_minsign->add_flag("--max", poly_max, "report the sign of the maximum instead");

  // ex1
  auto* ex1c = sub(&app, "ex1", "subgroups of R^n with the coordinatewise order");
  ex1c->require_subcommand(1);
  std::size_t ex1_n = 2;
  std::string ex1_mode = "std";
  std::vector<std::string> ex1_alphas;
  auto add_group_opts = [&](CLI::App* s) {
    s->add_option("--n", ex1_n, "dimension")->check(CLI::PositiveNumber);
    s->add_option("--mode", ex1_mode, "std (e_i and E) or unit (u and E)");
    s->add_option("--alphas", ex1_alphas, "alpha_j as Q[t] strings; default t^j")->delimiter(',');
  };
  auto* ex1_scan = sub(ex1c, "scan", "search for a nonzero element vanishing at a pure trace");
  add_group_opts(ex1_scan);
  std::int64_t ex1_bound = 1;
  ex1_scan->add_option("--bound", ex1_bound, "coefficient bound")->check(CLI::PositiveNumber);
  auto* ex1_cls = sub(ex1c, "classify", "classify one element");
  add_group_opts(ex1_cls);
  std::vector<std::int64_t> ex1_element;
  ex1_cls->add_option("--element", ex1_element, "integer coefficients")->delimiter(',')->required();
  auto* ex1_near = sub(ex1c, "nearest", "brute-force nearest element to a target point (density probe)");
  add_group_opts(ex1_near);
  std::vector<std::string> ex1_target;
  ex1_near->add_option("--target", ex1_target, "rational coordinates")->delimiter(',')->required();
  ex1_near->add_option("--bound", ex1_bound, "coefficient bound")->check(CLI::PositiveNumber);

  // nf
  auto* nfc = sub(&app, "nf", "real number fields with the totally positive cone");
  nfc->require_subcommand(1);
  auto* nf_check = sub(nfc, "check", "embeddings, element positivity and extreme simplicity");
  std::vector<long> nf_minpoly;
  std::vector<std::string> nf_element;
  std::size_t nf_samples = 200;
  std::int64_t nf_bound = 3;
  nf_check->add_option("--minpoly", nf_minpoly, "integer coefficients, lowest first")->delimiter(',')->required();
  nf_check->add_option("--element", nf_element, "rational coefficients on 1, x, ...")->delimiter(',');
  nf_check->add_option("--samples", nf_samples, "random elements for the extreme simplicity check");
  nf_check->add_option("--bound", nf_bound, "coefficient bound for random elements")->check(CLI::PositiveNumber);

  // ex3
  auto* ex3c = sub(&app, "ex3", "rational span of 1 and x^i - t^i with the strict order");
  ex3c->require_subcommand(1);
  auto* ex3_cls = sub(ex3c, "classify", "Lemma 1 classification of one element");
  std::vector<std::string> ex3_coeffs, ex3_interval{"0", "1"};
  ex3_cls->add_option("--coeffs", ex3_coeffs, "q0,q1,... rationals")->delimiter(',')->required();
  ex3_cls->add_option("--interval", ex3_interval, "endpoints a b")->expected(2);
  auto* ex3_sens = sub(ex3c, "sensitivity", "endpoint sensitivity witness +-e_k");
  std::size_t ex3_k = 1;
  std::string ex3_side = "left";
  ex3_sens->add_option("--k", ex3_k, "index k >= 1")->check(CLI::PositiveNumber);
  ex3_sens->add_option("--side", ex3_side, "left ([t,1]) or right ([0,t])")
      ->check(CLI::IsMember({"left", "right"}));
  auto* ex3_batch = sub(ex3c, "batch", "classify seeded random elements");
  ex3::BatchParams ex3_params;
  ex3_batch->add_option("--degree", ex3_params.max_degree, "maximum degree");
  ex3_batch->add_option("--count", ex3_params.count, "number of elements")->check(CLI::PositiveNumber);
  ex3_batch->add_option("--bound", ex3_params.coeff_bound, "numerator/denominator bound")
      ->check(CLI::PositiveNumber);
  ex3_batch->add_option("--interval", ex3_interval, "endpoints a b")->expected(2);
  auto* ex3_probe = sub(ex3c, "probe", "signs at rational points (never zero for nonconstant elements)");
  std::vector<std::string> ex3_points;
  ex3_probe->add_option("--coeffs", ex3_coeffs, "q0,q1,... rationals")->delimiter(',')->required();
  ex3_probe->add_option("--points", ex3_points, "rational points")->delimiter(',')->required();

  // simplex
  auto* sx = sub(&app, "simplex", "inductive construction over a finite-dimensional simplex");
  sx->require_subcommand(1);
  std::string sx_spec;
  std::size_t sx_count = 100;
  std::int64_t sx_bound = 10;
  auto* sx_build = sub(sx, "build", "build and certify the construction");
  auto* sx_verify = sub(sx, "verify", "check random elements against Lemma 1 and the coset property");
  auto* sx_interp = sub(sx, "interp", "solve random interpolation problems");
  for (auto* s : {sx_build, sx_verify, sx_interp})
    s->add_option("--spec", sx_spec, "JSON {m, u, schedule}; default: the m=3, N=8 reference basis");
  for (auto* s : {sx_verify, sx_interp}) {
    s->add_option("--count", sx_count, "number of random items")->check(CLI::PositiveNumber);
    s->add_option("--bound", sx_bound, "numerator/denominator bound")->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw UsageError("cannot open config file " + config_file);
      Json c = Json::parse(in);
      if (c.contains("oracle") && o_oracle->count() == 0) cfg.oracle = c["oracle"].get<std::string>();
      if (c.contains("digits_file") && o_digits->count() == 0) cfg.digits_file = c["digits_file"].get<std::string>();
      if (c.contains("max_precision_bits") && o_bits->count() == 0)
        cfg.max_precision_bits = c["max_precision_bits"].get<unsigned>();
      if (c.contains("output") && o_json->count() == 0) cfg.output = c["output"].get<std::string>();
      if (c.contains("seed") && o_seed->count() == 0) cfg.seed = c["seed"].get<std::uint64_t>();
      if (c.contains("parallel") && o_par->count() == 0) cfg.parallel = c["parallel"].get<bool>();
    }
    if (o_json->count() > 0) cfg.output = "json";
    if (cfg.output != "text" && cfg.output != "json") throw UsageError("output must be text or json");
    if (!cfg.digits_file.empty() && o_oracle->count() == 0 && cfg.oracle == "pi_minus_3") cfg.oracle = "digits_file";
    if (cfg.max_precision_bits < 64) throw UsageError("max_precision_bits must be >= 64");

    const ScalarField field(detail::make_oracle(cfg), cfg.max_precision_bits);
    const unsigned threads = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    auto make_group = [&] {
      ex1::GeneratorMode mode = ex1::parse_mode(ex1_mode);
      if (ex1_alphas.empty()) return ex1::Group::standard(ex1_n, mode);
      if (ex1_alphas.size() != ex1_n) throw UsageError("--alphas needs exactly n entries");
      return ex1::Group(detail::parse_scalars(ex1_alphas), mode);
    };
    auto group_json = [&](const ex1::Group& g) {
      Json a = Json::array();
      for (const auto& x : g.alphas()) a.push_back(to_string(x));
      return Json{{"n", g.n()}, {"alphas", a}, {"mode", ex1::to_string(g.mode())}};
    };

    std::optional<Report> rep;

    if (*scalar_sign) {
      rep.emplace("scalar sign", cfg.to_json());
      detail::Stopwatch sw;
      TScalar p = parse_tscalar(scalar_expr);
      int s = field.sign(p);
      Enclosure e = field.enclose(p, parse_rational(scalar_width));
      rep->add(Json{{"expr", to_string(p)}}, std::to_string(s), Json{{"enclosure", report::to_json(e)}}, false,
               sw.ms());
    } else if (*poly_minsign) {
      rep.emplace(poly_max ? "poly maxsign" : "poly minsign", cfg.to_json());
      detail::Stopwatch sw;
      XPoly f = parse_xpoly(poly_coeffs);
      DomainInterval dom = detail::parse_domain(field, poly_interval);
      if (f.is_zero()) throw UsageError("polynomial must be nonzero");
      MinSignReport r = extremum_sign(field, f, dom, poly_max ? Direction::Max : Direction::Min);
      rep->add(Json{{"coeffs", to_strings(f)}, {"interval", detail::domain_json(dom)}}, to_string(r.verdict),
               report::to_json(r), false, sw.ms());
    } else if (*ex1_scan) {
      rep.emplace("ex1 scan", cfg.to_json());
      detail::Stopwatch sw;
      auto g = make_group();
      auto w = ex1::extreme_simplicity_scan(field, g, ex1_bound);
      Json in = group_json(g);
      in["bound"] = ex1_bound;
      Json wit = w ? Json{{"element", report::to_json(*w)}, {"coordinates", report::to_json(ex1::coordinates(g, *w))}}
                   : Json();
      rep->add(in, w ? "WITNESS" : "NONE", wit, w.has_value(), sw.ms());
    } else if (*ex1_cls) {
      rep.emplace("ex1 classify", cfg.to_json());
      detail::Stopwatch sw;
      auto g = make_group();
      ex1::Element e{ex1_element};
      ex1::check_shape(g, e);
      auto c = ex1::classify(field, g, e);
      Json in = group_json(g);
      in["element"] = report::to_json(e);
      rep->add(in, ex1::to_string(c), Json{{"coordinates", report::to_json(ex1::coordinates(g, e))}},
               c == ex1::Class::Boundary, sw.ms());
    } else if (*ex1_near) {
      rep.emplace("ex1 nearest", cfg.to_json());
      detail::Stopwatch sw;
      auto g = make_group();
      auto target = detail::parse_rationals(ex1_target);
      if (target.size() != g.n()) throw UsageError("--target needs n coordinates");
      auto [e, dist] = ex1::nearest_element(field, g, target, ex1_bound);
      Json in = group_json(g);
      in["target"] = report::to_json(target);
      in["bound"] = ex1_bound;
      rep->add(in, "NEAREST",
               Json{{"element", report::to_json(e)},
                    {"coordinates", report::to_json(ex1::coordinates(g, e))},
                    {"approx_sup_distance", to_string(dist)},
                    {"approx_sup_distance_decimal", dist.get_d()}},
               false, sw.ms());
    } else if (*nf_check) {
      rep.emplace("nf check", cfg.to_json());
      detail::Stopwatch sw;
      std::vector<Rational> mp;
      for (long c : nf_minpoly) mp.emplace_back(c);
      std::optional<nf::NumberField> k;
      try {
        k.emplace(nf::QxPoly(std::move(mp)));
      } catch (const NotSquarefree& e) {
        throw UsageError(e.what());
      } catch (const NotFormallyReal& e) {
        throw UsageError(e.what());
      } catch (const PreconditionViolated& e) {
        throw UsageError(e.what());
      }
      Json mpj = Json::array();
      for (const auto& c : k->minpoly().coefficients()) mpj.push_back(to_string(c));
      Json emb = Json::array();
      for (const auto& e : k->embeddings()) emb.push_back(report::to_json(e));
      rep->add(Json{{"minpoly", mpj}}, "FIELD", Json{{"degree", k->degree()}, {"embeddings", emb}}, false, sw.ms());
      if (!nf_element.empty()) {
        detail::Stopwatch sw2;
        nf::Element a(*k, nf::QxPoly(detail::parse_rationals(nf_element)));
        Json in{{"minpoly", mpj}, {"element", report::to_json(std::vector<Rational>(a.poly().coefficients().begin(),
                                                                                   a.poly().coefficients().end()))}};
        try {
          Json signs = Json::array();
          for (std::size_t j = 0; j < k->embeddings().size(); ++j) signs.push_back(nf::embed_sign(*k, a, j));
          bool tp = nf::is_totally_positive(*k, a);
          Json w{{"embed_signs", signs}, {"totally_positive", tp}, {"order_unit", nf::is_order_unit(*k, a)}};
          if (!a.is_zero()) w["dominating_integer"] = nf::dominating_integer(*k, a).get_str();
          rep->add(in, tp ? "TOTALLY_POSITIVE" : "NOT_TOTALLY_POSITIVE", w, false, sw2.ms());
        } catch (const nf::ReducibleMinpoly& e) {
          Json f = Json::array();
          for (const auto& c : e.factor().coefficients()) f.push_back(to_string(c));
          rep->add(in, "REDUCIBLE_MINPOLY", Json{{"factor", f}}, true, sw2.ms());
        }
      }
      if (nf_samples > 0) {
        detail::Stopwatch sw3;
        auto w = nf::verify_extreme_simplicity(*k, nf_samples, cfg.seed, nf_bound);
        Json in{{"samples", nf_samples}, {"seed", cfg.seed}, {"bound", nf_bound}};
        Json wit;
        if (w) {
          Json f = Json::array(), el = Json::array();
          for (const auto& c : w->factor.coefficients()) f.push_back(to_string(c));
          for (const auto& c : w->element.poly().coefficients()) el.push_back(to_string(c));
          wit = Json{{"element", el}, {"embedding", w->embedding}, {"factor", f}};
        }
        rep->add(in, w ? "WITNESS" : "EXTREMELY_SIMPLE", wit, w.has_value(), sw3.ms());
      }
    } else if (*ex3_cls) {
      rep.emplace("ex3 classify", cfg.to_json());
      detail::Stopwatch sw;
      ex3::Element g(detail::parse_rationals(ex3_coeffs));
      DomainInterval dom = detail::parse_domain(field, ex3_interval);
      auto c = ex3::classify(field, g, dom);
      rep->add(Json{{"coeffs", report::to_json(g.coeffs())}, {"interval", detail::domain_json(dom)}},
               ex3::to_string(c.verdict), detail::classification_json(c, dom),
               c.verdict == ex3::Verdict::Violation, sw.ms());
    } else if (*ex3_sens) {
      rep.emplace("ex3 sensitivity", cfg.to_json());
      detail::Stopwatch sw;
      auto w = ex3::sensitivity_witness(field, ex3_k, ex3_side == "left" ? ex3::Side::Left : ex3::Side::Right);
      auto c = ex3::classify(field, w.element, w.domain);
      Json wit = detail::classification_json(c, w.domain);
      wit["expected_root"] = to_string(w.root);
      rep->add(Json{{"k", ex3_k},
                    {"side", ex3_side},
                    {"coeffs", report::to_json(w.element.coeffs())},
                    {"interval", detail::domain_json(w.domain)}},
               ex3::to_string(c.verdict), wit, c.verdict == ex3::Verdict::Violation, sw.ms());
      detail::Stopwatch sw2;
      auto unit = DomainInterval::unit(field);
      auto cu = ex3::classify(field, w.element, unit);
      rep->add(Json{{"coeffs", report::to_json(w.element.coeffs())}, {"interval", detail::domain_json(unit)}},
               ex3::to_string(cu.verdict), detail::classification_json(cu, unit),
               cu.verdict == ex3::Verdict::Violation, sw2.ms());
    } else if (*ex3_batch) {
      rep.emplace("ex3 batch", cfg.to_json());
      ex3_params.seed = cfg.seed;
      ex3_params.threads = threads;
      DomainInterval dom = detail::parse_domain(field, ex3_interval);
      detail::Stopwatch sw;
      auto b = ex3::random_batch_verify(field, ex3_params, dom);
      const double per_item = sw.ms() / static_cast<double>(b.items.size());
      for (const auto& item : b.items)
        rep->add(Json{{"coeffs", report::to_json(item.element.coeffs())}}, ex3::to_string(item.result.verdict),
                 detail::classification_json(item.result, dom), item.result.verdict == ex3::Verdict::Violation,
                 per_item);
      rep->set_extra("batch", Json{{"degree", ex3_params.max_degree},
                                   {"count", ex3_params.count},
                                   {"bound", ex3_params.coeff_bound},
                                   {"interval", detail::domain_json(dom)}});
    } else if (*ex3_probe) {
      rep.emplace("ex3 probe", cfg.to_json());
      detail::Stopwatch sw;
      ex3::Element g(detail::parse_rationals(ex3_coeffs));
      auto pts = detail::parse_rationals(ex3_points);
      auto signs = ex3::rational_nonvanishing_probe(field, g, pts);
      rep->add(Json{{"coeffs", report::to_json(g.coeffs())}, {"points", report::to_json(pts)}}, "NONVANISHING",
               Json{{"signs", signs}}, false, sw.ms());
    } else if (*sx_build || *sx_verify || *sx_interp) {
      simplex::Spec spec = detail::load_spec(sx_spec);
      std::optional<simplex::State> st;
      detail::Stopwatch sw;
      try {
        st.emplace(simplex::build(spec));
      } catch (const DependentBasis& e) {
        throw UsageError(e.what());
      } catch (const PreconditionViolated& e) {
        throw UsageError(e.what());
      }
      if (*sx_build) {
        rep.emplace("simplex build", cfg.to_json());
        rep->add(Json{{"m", spec.m}, {"stages", spec.stages()}, {"schedule", spec.schedule}}, "CERTIFIED",
                 report::to_json(*st), false, sw.ms());
      } else if (*sx_verify) {
        rep.emplace("simplex verify", cfg.to_json());
        SeededRng rng(cfg.seed);
        for (std::size_t i = 0; i < sx_count; ++i) {
          detail::Stopwatch isw;
          auto g = simplex::random_element(rng, *st, sx_bound);
          auto cls = simplex::classify(field, *st, g);
          auto b = simplex::s_bounds(field, *st, g);
          Json w{{"traces", report::to_json(simplex::traces(*st, g))}, {"bounds", report::to_json(b)}};
          bool bad = cls == simplex::Class::Violation || field.sign(b.s_minus) == 0 || field.sign(b.s_plus) == 0;
          if (g.top() >= 1) {
            auto c = simplex::verify_coset(field, *st, g);
            w["coset"] = report::to_json(c);
            bad = bad || !c.passed();
          }
          rep->add(Json{{"q", report::to_json(g.coeffs())}}, simplex::to_string(cls), w, bad, isw.ms());
        }
      } else {
        rep.emplace("simplex interp", cfg.to_json());
        SeededRng rng(cfg.seed);
        for (std::size_t i = 0; i < sx_count; ++i) {
          detail::Stopwatch isw;
          auto p = simplex::random_interpolation_problem(field, rng, *st, sx_bound);
          Json in{{"g1", report::to_json(p.g1.coeffs())},
                  {"g2", report::to_json(p.g2.coeffs())},
                  {"h1", report::to_json(p.h1.coeffs())},
                  {"h2", report::to_json(p.h2.coeffs())}};
          try {
            auto z = simplex::interpolate(field, *st, p.g1, p.g2, p.h1, p.h2);
            rep->add(in, "INTERPOLATED", Json{{"z", report::to_json(z.coeffs())}}, false, isw.ms());
          } catch (const NotFound& e) {
            rep->add(in, "NOT_FOUND", Json{{"error", e.what()}}, true, isw.ms());
          }
        }
      }
    }

    if (!rep) throw UsageError("no command given");
    detail::emit(*rep, cfg, out);
    return rep->exit_code();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace dimgroup::cli
