#include "cbirk/json_io.hpp"

namespace cbirk {

namespace {

// Small integers as JSON numbers, anything larger as a decimal string.
Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

Json to_json(const Heap& h) {
  Json j;
  j["n"] = h.rank();
  j["length"] = h.size();
  j["labels"] = h.word().letters();
  Json covers = Json::array();
  for (auto [a, b] : h.covers()) covers.push_back({a, b});
  j["covers"] = covers;
  if (h.coords()) {
    Json coords = Json::array();
    for (Coord p : *h.coords()) coords.push_back({p.a, p.b});
    j["coords"] = coords;
  } else {
    j["coords"] = nullptr;
  }
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const LinearRelation& rel) {
  Json j;
  j["kind"] = to_string(rel.kind);
  j["params"] = {rel.params[0], rel.params[1]};
  Json cells = Json::array();
  for (const auto& [cell, coef] : rel.coeffs) cells.push_back({cell.row, cell.col, coef.get_str()});
  j["cells"] = cells;
  j["rhs"] = rel.rhs.get_str();
  return j;
}

Json certificate_json(const TransferCertificate& cert) {
  Json j;
  j["c"] = cert.c.to_string();
  j["N"] = cert.N;
  j["singletons"] = cert.singletons;
  j["volume"] = integer_json(cert.volume);
  j["ok"] = cert.ok;
  return j;
}

Json to_json(const RelationReport& rep) {
  Json j;
  j["c"] = rep.c.to_string();
  j["singletons"] = rep.singletons;
  j["relations_checked"] = rep.relations_checked;
  j["all_hold"] = rep.all_hold;
  j["independent_size"] = rep.independent_size;
  j["independent_rank"] = rep.independent_rank;
  j["family_rank"] = rep.family_rank;
  j["singleton_dimension"] = rep.singleton_dimension;
  j["ok"] = rep.ok;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

Json to_json(const Q81Report& rep) {
  Json j;
  j["word"] = rep.word.to_string();
  j["length"] = rep.length;
  j["ideals"] = rep.ideals;
  j["distinct_matrices"] = rep.distinct_matrices;
  j["cloud_dimension"] = rep.cloud_dimension;
  j["verdict"] = to_string(rep.verdict);
  Json perms = Json::array();
  for (const auto& w : rep.permutations) perms.push_back(w.to_string());
  j["permutations"] = perms;
  return j;
}

Json to_json(const IdentityCheck& chk) {
  Json j;
  j["ok"] = chk.ok;
  j["contains_first"] = chk.contains_first;
  j["sequence"] = chk.sequence;
  if (!chk.diff.empty()) j["diff"] = chk.diff;
  return j;
}

}  // namespace cbirk
