#pragma once

// JSON encodings of library values and the batch report container used by
// the command-line tool. Rationals are "p/q" strings and scalars use the
// canonical Q[t] text form, so every value parses back exactly.

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "dimgroup/ex1.hpp"
#include "dimgroup/ex3.hpp"
#include "dimgroup/numfield.hpp"
#include "dimgroup/poly_real.hpp"
#include "dimgroup/simplex.hpp"

namespace dimgroup::report {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const TScalar& p) { return to_string(p); }
inline Json to_json(const XPoly& p) { return to_strings(p); }

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json to_json(const std::vector<TScalar>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

inline Json to_json(const Enclosure& e) { return Json{{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}}; }

inline Json to_json(const IsolatingInterval& iv) {
  return Json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"exact", iv.exact}, {"multiplicity", iv.multiplicity}};
}

inline Json to_json(const MinSignReport& r) {
  Json j{{"verdict", to_string(r.verdict)}};
  if (r.sample) j["sample"] = to_string(*r.sample);
  if (r.root) j["root"] = to_json(*r.root);
  return j;
}

inline Json to_json(const ex3::Classification& c) {
  Json j{{"verdict", ex3::to_string(c.verdict)}};
  if (c.min) j["min"] = to_json(*c.min);
  if (c.max) j["max"] = to_json(*c.max);
  return j;
}

inline Json to_json(const ex1::Element& e) { return e.coeffs; }

inline Json to_json(const nf::Embedding& e) {
  return Json{{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}, {"exact", e.exact}};
}

inline Json to_json(const simplex::Bounds& b) {
  return Json{{"s_minus", to_string(b.s_minus)},
              {"s_plus", to_string(b.s_plus)},
              {"argmin", b.argmin},
              {"argmax", b.argmax}};
}

inline Json to_json(const simplex::CosetCheck& c) {
  return Json{{"top", c.top},
              {"top_coeff", to_string(c.top_coeff)},
              {"s_minus_shifted", to_string(c.minus_shifted)},
              {"s_plus_shifted", to_string(c.plus_shifted)},
              {"s_minus_in_span", c.minus_in_span},
              {"s_plus_in_span", c.plus_in_span},
              {"passed", c.passed()}};
}

/// State export: lambdas, v vectors and V_k bases as t-power coordinate rows.
inline Json to_json(const simplex::State& s) {
  Json lambdas = Json::array(), v = Json::array(), spans = Json::array();
  for (std::size_t k = 1; k <= s.stages(); ++k) lambdas.push_back(to_string(s.lambda(k)));
  for (std::size_t i = 0; i <= s.stages(); ++i) v.push_back(to_json(s.v(i)));
  for (std::size_t k = 1; k <= s.stages(); ++k) {
    Json rows = Json::array();
    for (const auto& row : s.span(k).basis()) rows.push_back(to_json(row));
    spans.push_back(Json{{"stage", k}, {"basis", rows}});
  }
  return Json{{"m", s.m()},          {"stages", s.stages()}, {"coordinate_dim", s.coord_dim()},
              {"lambdas", lambdas}, {"v", v},               {"spans", spans}};
}

/// Per-item results plus verdict counts. An item marked as a violation makes
/// the whole report fail (exit code 3).
class Report {
 public:
  Report(std::string command, Json config) : command_(std::move(command)), config_(std::move(config)) {}

  void add(Json input, const std::string& verdict, Json witnesses, bool violation, double time_ms) {
    Json item{{"index", items_.size()}, {"input", std::move(input)}, {"verdict", verdict}};
    if (!witnesses.is_null()) item["witnesses"] = std::move(witnesses);
    item["violation"] = violation;
    item["time_ms"] = time_ms;
    items_.push_back(std::move(item));
    ++counts_[verdict];
    if (violation) ++violations_;
  }

  void set_extra(const std::string& key, Json value) { extra_[key] = std::move(value); }

  std::size_t size() const { return items_.size(); }
  std::size_t violations() const { return violations_; }
  int exit_code() const { return violations_ > 0 ? 3 : 0; }
  const Json& items() const { return items_; }

  Json to_json() const {
    Json counts = Json::object();
    for (const auto& [k, v] : counts_) counts[k] = v;
    Json j{{"command", command_}, {"config", config_}, {"results", items_}};
    for (const auto& [k, v] : extra_.items()) j[k] = v;
    j["summary"] = Json{{"items", items_.size()}, {"counts", counts}, {"violations", violations_}};
    j["exit_code"] = exit_code();
    return j;
  }

 private:
  std::string command_;
  Json config_;
  Json items_ = Json::array();
  Json extra_ = Json::object();
  std::map<std::string, std::size_t> counts_;
  std::size_t violations_ = 0;
};

/// Removes every "time_ms" member recursively; what remains is deterministic.
inline Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("time_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace dimgroup::report
