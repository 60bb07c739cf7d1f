#include "lme/serialize.hpp"

#include <charconv>

#include "lme/errors.hpp"

namespace lme {

namespace {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Partition parse_lambda(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty()) {
      if (text.empty()) break;
      throw Error("empty part in '" + text + "'");
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw Error("not an integer: '" + item + "'");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(parts);
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const Decomposition& d) {
  Json out = Json::object();
  for (const auto& [nu, c] : d.entries()) out[nu.key()] = c.get_str();
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) throw Error("decomposition must be a JSON object");
  Decomposition d;
  for (const auto& [key, value] : j.items()) d.add(Partition::from_key(key), BigInt(value.get<std::string>()));
  return d;
}

Json to_json(const StateVector& psi) {
  Json amps = Json::array();
  for (const auto& [x, a] : psi.amplitudes()) {
    amps.push_back({{"index", decode_index(x, psi.d(), psi.n_parties())},
                    {"re", a.re().get_str()},
                    {"im", a.im().get_str()}});
  }
  Json out = {{"d", psi.d()}, {"N", psi.n_parties()}};
  const bool unit = std::all_of(psi.site_norms2().begin(), psi.site_norms2().end(),
                                [](const Rational& w) { return w == 1; });
  if (!unit) {
    Json norms = Json::array();
    for (const auto& w : psi.site_norms2()) norms.push_back(w.get_str());
    out["site_norms2"] = norms;
  }
  if (psi.scale2() != 1) out["scale2"] = psi.scale2().get_str();
  out["amplitudes"] = amps;
  return out;
}

StateVector state_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const int n = j.at("N").get<int>();
  std::vector<Rational> norms(static_cast<std::size_t>(std::max(d, 0)), Rational(1));
  if (j.contains("site_norms2")) {
    norms.clear();
    for (const auto& w : j.at("site_norms2")) norms.push_back(parse_rational(w.get<std::string>()));
  }
  Rational scale = j.contains("scale2") ? parse_rational(j.at("scale2").get<std::string>()) : Rational(1);
  StateVector psi(d, n, norms, scale);
  for (const auto& a : j.at("amplitudes")) {
    const auto index = a.at("index").get<std::vector<int>>();
    psi.add(index, GaussianRational(parse_rational(a.at("re").get<std::string>()),
                                    parse_rational(a.at("im").get<std::string>())));
  }
  return psi;
}

Json trace_json(const ExpansionPlan& plan) {
  Json out = Json::array();
  for (const auto& step : plan.steps) {
    for (const auto& block : step.blocks) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < block.counts.size(); ++i) {
        if (block.counts[i] == 0) continue;
        rows.push_back({{"row", block.rows.beg + static_cast<int>(i)}, {"count", block.counts[i]}});
      }
      out.push_back({{"step", step.k}, {"label", block.label}, {"rows", rows}});
    }
  }
  return out;
}

Json with_schema(const Json& body) {
  Json out = {{"schema", kSchema}};
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

}  // namespace lme
