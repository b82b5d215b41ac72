#include "qshift/jsonio.hpp"

#include "qshift/textio.hpp"

namespace qshift {

Json lweight_to_json(const LWeight& w) {
  Json t = Json::object();
  for (std::size_t i = 0; i < w.torus.size(); ++i)
    if (w.torus[i] != 0) t[std::to_string(i + 1)] = w.torus[i];
  Json psi = Json::array();
  for (const auto& [key, e] : w.psi)
    psi.push_back({{"node", key.first}, {"spec", key.second}, {"exp", e}});
  return Json{{"t", t}, {"psi", psi}};
}

LWeight lweight_from_json(const CartanData& cd, const Json& j) {
  LWeight w = lw_identity(cd);
  if (j.contains("t"))
    for (const auto& [node, e] : j.at("t").items())
      w.torus.at(static_cast<std::size_t>(std::stoi(node) - 1)) = e.get<int>();
  if (j.contains("psi"))
    for (const auto& f : j.at("psi"))
      w = lw_multiply(w, lw_psi(cd, f.at("node").get<int>(),
                                f.at("spec").get<int>(),
                                f.at("exp").get<int>()));
  return w;
}

Json qchar_to_json(const TruncatedQChar& c) {
  Json terms = Json::array();
  for (const auto& [m, mult] : c.terms) {
    Json a = Json::array();
    for (const auto& [key, e] : m)
      a.push_back({{"node", key.first}, {"spec", key.second}, {"exp", e}});
    terms.push_back({{"A", a}, {"mult", mult}});
  }
  return Json{
      {"top", lweight_to_json(c.top)}, {"depth", c.depth}, {"terms", terms}};
}

TruncatedQChar qchar_from_json(const CartanData& cd, const Json& j) {
  TruncatedQChar c;
  c.top = lweight_from_json(cd, j.at("top"));
  c.depth = j.at("depth").get<int>();
  for (const auto& t : j.at("terms")) {
    AMonomial m;
    for (const auto& f : t.at("A"))
      m[{f.at("node").get<int>(), f.at("spec").get<int>()}] =
          f.at("exp").get<int>();
    c.terms[m] = t.at("mult").get<long>();
  }
  return c;
}

Json dynkin_to_json(const CartanData& cd) {
  return Json{{"type", cd.name()},
              {"rank", cd.rank},
              {"cartan", cd.C},
              {"symmetrizers", cd.d},
              {"dual_coxeter", cd.dual_coxeter},
              {"lacing", cd.lacing}};
}

Json relation_report_to_json(const RelationReport& rep) {
  Json rels = Json::object();
  for (const auto& [id, st] : rep.stats)
    rels[relation_name(id)] = {{"attempted", st.attempted},
                               {"passed", st.passed},
                               {"failed", st.failed},
                               {"skipped", st.skipped}};
  Json j{{"relations", rels},
         {"pass", rep.pass()},
         {"attempted", rep.total_attempted()},
         {"failed", rep.total_failed()},
         {"skipped", rep.total_skipped()}};
  if (rep.first_failure) {
    j["counterexample"] = {{"relation", relation_name(rep.first_failure->relation)},
                           {"site", rep.first_failure->site},
                           {"detail", rep.first_failure->diff}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json identity_report_to_json(const IdentityReport& rep) {
  Json j{{"identity", identity_name(rep.name)},
         {"type", rep.diagram},
         {"node", rep.node},
         {"spec", rep.spec},
         {"depth", rep.depth},
         {"pass", rep.pass},
         {"lhs_terms", rep.lhs_terms},
         {"rhs_terms", rep.rhs_terms}};
  if (identity_uses_length(rep.name)) j["length"] = rep.length;
  j["mismatch"] = rep.pass ? Json() : Json(rep.mismatch);
  return j;
}

Json rmatrix_report_to_json(const RMatrixReport& rep) {
  Json gamma = Json::array();
  for (const auto& row : rep.gamma) {
    Json r = Json::array();
    for (const RatQ& g : row) r.push_back(ratq_to_string(g));
    gamma.push_back(r);
  }
  Json j{{"spec", rep.spec},
         {"generic", rep.generic},
         {"gamma", gamma},
         {"attempted", rep.attempted},
         {"failed", rep.failed},
         {"pass", rep.pass()}};
  j["first_failure"] =
      rep.first_failure ? Json(*rep.first_failure) : Json();
  return j;
}

Json inflation_data_to_json(const InflationData& data) {
  Json cands = Json::object();
  for (const auto& [node, specs] : data.candidates)
    cands[std::to_string(node)] = specs;
  Json mults = Json::array();
  for (const auto& [key, n] : data.multiplicities)
    mults.push_back({{"node", key.first}, {"spec", key.second}, {"n", n}});
  return Json{{"candidates", cands},
              {"multiplicities", mults},
              {"psi_p", lweight_to_json(data.psi_p)},
              {"mu", data.mu}};
}

}  // namespace qshift
