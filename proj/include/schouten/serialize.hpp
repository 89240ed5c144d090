#pragma once

// JSON forms for every on-disk object. Scalars serialize as "num/den"
// strings in exact mode and as plain numbers in double mode; frequency and
// momentum-degree vectors are 0-based axis arrays.

#include <json.hpp>

#include "schouten/euler_poincare.hpp"

namespace schouten {

using json = nlohmann::json;

template <class S>
json scalar_to_json(const S& s) {
  if constexpr (scalar_traits<S>::exact)
    return scalar_traits<S>::to_string(s);
  else
    return s;
}

template <class S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_traits<S>::parse(j.get<std::string>());
  if constexpr (scalar_traits<S>::exact) {
    detail::require(j.is_number_integer(), "exact scalars must be integers or \"num/den\" strings");
    return scalar_traits<S>::from_int(j.get<long long>());
  } else {
    return j.get<double>();
  }
}

template <class S>
json to_json(const TrigPoly<S>& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms())
    terms.push_back({{"freq", k}, {"re", scalar_to_json(c.re)}, {"im", scalar_to_json(c.im)}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

template <class S>
TrigPoly<S> trig_from_json(const json& j) {
  TrigPoly<S> f(j.at("dim").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("freq").get<std::vector<int>>(),
               Complex<S>(scalar_from_json<S>(t.at("re")), scalar_from_json<S>(t.at("im"))));
  return f;
}

template <class S>
json to_json(const PhaseFunction<S>& f) {
  json terms = json::array();
  for (const auto& [alpha, g] : f.terms())
    for (const auto& [k, c] : g.terms())
      terms.push_back({{"freq", k},
                       {"pdeg", alpha},
                       {"re", scalar_to_json(c.re)},
                       {"im", scalar_to_json(c.im)}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

template <class S>
PhaseFunction<S> phase_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  PhaseFunction<S> f(d);
  for (const auto& t : j.at("terms")) {
    TrigPoly<S> g(d);
    g.add_term(t.at("freq").get<std::vector<int>>(),
               Complex<S>(scalar_from_json<S>(t.at("re")), scalar_from_json<S>(t.at("im"))));
    std::vector<int> pdeg =
        t.contains("pdeg") ? t.at("pdeg").get<std::vector<int>>() : std::vector<int>(d, 0);
    f.add_term(pdeg, g);
  }
  return f;
}

template <class S, bool Cov>
json to_json(const SymFieldT<S, Cov>& f) {
  json grades = json::object();
  for (const auto& [k, t] : f.grades()) {
    json comps = json::array();
    for (const auto& [idx, poly] : t.components())
      comps.push_back({{"index", idx}, {"coeff", to_json(poly)}});
    grades[std::to_string(k)] = comps;
  }
  return {{"dim", f.dim()}, {"grades", grades}};
}

template <class S, bool Cov>
SymFieldT<S, Cov> field_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  SymFieldT<S, Cov> f(d);
  for (const auto& [key, comps] : j.at("grades").items()) {
    const int k = std::stoi(key);
    SymTensorT<S, Cov> t(d, k);
    for (const auto& c : comps)
      t.add_component(c.at("index").get<MultiIndex>(), trig_from_json<S>(c.at("coeff")));
    f.add_grade(t);
  }
  return f;
}

template <class S>
SymTensorField<S> tensor_field_from_json(const json& j) {
  return field_from_json<S, false>(j);
}
template <class S>
SymCovField<S> cov_field_from_json(const json& j) {
  return field_from_json<S, true>(j);
}

template <class S>
json to_json(const HamVF<S>& X) {
  json q = json::array();
  json p = json::array();
  for (const auto& f : X.dq) q.push_back(to_json(f));
  for (const auto& f : X.dp) p.push_back(to_json(f));
  json out = {{"dim", X.dim}, {"q_components", q}, {"p_components", p}};
  if (X.generator) {
    out["generator"] = to_json(*X.generator);
    out["gen_sign"] = X.gen_sign;
  }
  return out;
}

template <class S>
HamVF<S> hamvf_from_json(const json& j) {
  HamVF<S> X(j.at("dim").get<int>());
  for (int i = 0; i < X.dim; ++i) {
    X.dq[i] = phase_from_json<S>(j.at("q_components").at(i));
    X.dp[i] = phase_from_json<S>(j.at("p_components").at(i));
  }
  if (j.contains("generator")) {
    X.generator = phase_from_json<S>(j.at("generator"));
    X.gen_sign = j.value("gen_sign", 1);
  }
  return X;
}

template <class S>
json to_json(const GaussOneForm<S>& Pi) {
  json q = json::array();
  json p = json::array();
  for (const auto& f : Pi.dq) q.push_back(to_json(f.poly));
  for (const auto& f : Pi.dp) p.push_back(to_json(f.poly));
  return {{"dim", Pi.dim}, {"weighted", true}, {"dq", q}, {"dp", p}};
}

template <class S>
GaussOneForm<S> gauss_form_from_json(const json& j) {
  detail::require(j.value("weighted", false), "one-form must be flagged weighted");
  GaussOneForm<S> Pi(j.at("dim").get<int>());
  for (int i = 0; i < Pi.dim; ++i) {
    Pi.dq[i] = GaussWeighted<S>(phase_from_json<S>(j.at("dq").at(i)));
    Pi.dp[i] = GaussWeighted<S>(phase_from_json<S>(j.at("dp").at(i)));
  }
  return Pi;
}

inline EPConfig config_from_json(const json& j) {
  EPConfig cfg;
  cfg.dim = j.at("dim").get<int>();
  cfg.max_order = j.at("N").get<int>();
  cfg.alpha = j.at("alpha").get<double>();
  cfg.dt = j.at("dt").get<double>();
  cfg.t_end = j.at("t_end").get<double>();
  cfg.bandwidth = j.at("bandwidth").get<int>();
  cfg.dealias = j.value("dealias", false);
  cfg.scenario = j.value("scenario", std::string{});
  return cfg;
}

}  // namespace schouten
