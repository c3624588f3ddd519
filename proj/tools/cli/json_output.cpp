#include "json_output.hpp"

namespace cohere::cli {

namespace {

Json one_based(std::span<const std::size_t> indices) {
  Json a = Json::array();
  for (std::size_t i : indices) a.push_back(i + 1);
  return a;
}

}  // namespace

Json to_json(const Rational& q) { return to_fraction(q); }

Json to_json(std::span<const Rational> qs) {
  Json a = Json::array();
  for (const auto& q : qs) a.push_back(to_json(q));
  return a;
}

Json to_json(const ProbabilityInterval& iv) { return Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}}; }

Json to_json(const ExtensionResult& r) {
  Json j = to_json(r.interval);
  j["vacuous"] = r.vacuous;
  j["validated"] = r.lo_validated && r.hi_validated;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const CoherenceVerdict& v) {
  Json j;
  j["coherent"] = v.coherent;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (v.certificate) {
    const TraceLevel& level = v.deciding_level();
    j["certificate"] = Json{{"indices", one_based(level.indices)},
                            {"stakes", to_json(*v.certificate)},
                            {"gains", to_json(gains(level.sigma, *v.certificate))}};
  } else {
    j["certificate"] = nullptr;
  }
  Json trace = Json::array();
  for (const auto& level : v.trace) trace.push_back(Json{{"indices", one_based(level.indices)}, {"I0", one_based(level.zero_set)}});
  j["trace"] = trace;
  return j;
}

}  // namespace cohere::cli
