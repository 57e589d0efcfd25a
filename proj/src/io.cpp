#include "modtrace/io.hpp"

#include "modtrace/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace modtrace::io {
namespace {

template <typename T>
T get_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("bad field '") + key + "': " + e.what());
  }
}

void check_ring_ref(const FusionRing& ring, const Json& doc) {
  if (!doc.contains("ring")) return;
  if (!doc.at("ring").is_string()) throw StructuralError("field 'ring' must be a string");
  const auto ref = doc.at("ring").get<std::string>();
  if (ref.rfind("fnv1a:", 0) == 0 && ref != ring.fingerprint())
    throw StructuralError("file refers to ring " + ref + " but the loaded ring is " + ring.fingerprint());
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

Json ring_to_json(const FusionRing& ring) {
  Json doc;
  doc["rank"] = ring.rank();
  doc["labels"] = ring.labels();
  doc["unit"] = ring.unit();
  doc["dual"] = ring.duals();
  doc["N"] = ring.tensor();
  return doc;
}

FusionRing ring_from_json(const Json& doc) {
  const auto rank = get_field<int>(doc, "rank");
  auto labels = get_field<std::vector<std::string>>(doc, "labels");
  const auto unit = get_field<int>(doc, "unit");
  auto dual = get_field<std::vector<int>>(doc, "dual");
  const auto N = get_field<FusionRing::Tensor>(doc, "N");
  if (static_cast<int>(labels.size()) != rank)
    throw StructuralError("rank is " + std::to_string(rank) + " but " + std::to_string(labels.size()) +
                          " labels were given");
  return FusionRing(std::move(labels), unit, std::move(dual), N);
}

Json char_to_json(const DimChar& chr, const std::string& ring_ref) {
  Json doc;
  doc["ring"] = ring_ref;
  Json d = Json::array();
  for (auto z : chr.d) d.push_back(Json::array({z.real(), z.imag()}));
  doc["d"] = std::move(d);
  return doc;
}

DimChar char_from_json(const FusionRing& ring, const Json& doc) {
  check_ring_ref(ring, doc);
  const auto pairs = get_field<std::vector<std::vector<double>>>(doc, "d");
  std::vector<Complex> d;
  for (const auto& p : pairs) {
    if (p.size() != 2) throw StructuralError("character entries must be [re, im] pairs");
    d.emplace_back(p[0], p[1]);
  }
  return make_char(ring, std::move(d));
}

Json nimrep_to_json(const NimRep& rep, const std::string& ring_ref) {
  Json doc;
  doc["ring"] = ring_ref;
  doc["module_rank"] = rep.module_rank;
  Json M = Json::array();
  for (const auto& m : rep.M) {
    Json rows = Json::array();
    for (int j = 0; j < m.rows(); ++j) {
      Json row = Json::array();
      for (int i = 0; i < m.cols(); ++i) row.push_back(m(j, i));
      rows.push_back(std::move(row));
    }
    M.push_back(std::move(rows));
  }
  doc["M"] = std::move(M);
  return doc;
}

NimRep nimrep_from_json(const FusionRing& ring, const Json& doc) {
  check_ring_ref(ring, doc);
  const auto k = get_field<int>(doc, "module_rank");
  const auto M = get_field<std::vector<std::vector<std::vector<std::int64_t>>>>(doc, "M");
  if (k < 1) throw StructuralError("module_rank must be positive");
  if (static_cast<int>(M.size()) != ring.rank())
    throw StructuralError("module lists " + std::to_string(M.size()) + " action matrices, ring rank is " +
                          std::to_string(ring.rank()));
  NimRep rep{ring.fingerprint(), k, {}};
  for (const auto& rows : M) {
    if (static_cast<int>(rows.size()) != k) throw StructuralError("action matrix is not module_rank x module_rank");
    IntMatrix m(k, k);
    for (int j = 0; j < k; ++j) {
      if (static_cast<int>(rows[j].size()) != k)
        throw StructuralError("action matrix is not module_rank x module_rank");
      for (int i = 0; i < k; ++i) m(j, i) = rows[j][i];
    }
    rep.M.push_back(std::move(m));
  }
  return rep;
}

Json group_to_json(const GroupTable& group) {
  Json doc;
  doc["order"] = group.order();
  doc["mul"] = group.table();
  return doc;
}

GroupTable group_from_json(const Json& doc) {
  const auto order = get_field<int>(doc, "order");
  auto mul = get_field<std::vector<std::vector<int>>>(doc, "mul");
  if (static_cast<int>(mul.size()) != order) throw StructuralError("group order does not match table size");
  return GroupTable(std::move(mul));
}

Json real_json(double x) { return round_significant(x); }

Json complex_json(Complex z) {
  // Values (not residuals): floating noise below 1e-12 is reported as 0.
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  return Json::array({real_json(clean(z.real())), real_json(clean(z.imag()))});
}

Json complex_vector_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (auto z : v) out.push_back(complex_json(z));
  return out;
}

Json violations_json(const ValidationReport& report) {
  Json out = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["rule"] = v.rule;
    item["where"] = v.where;
    item["lhs"] = v.lhs;
    item["rhs"] = v.rhs;
    out.push_back(std::move(item));
  }
  return out;
}

Json certificate_json(const TraceCertificate& cert) {
  Json doc;
  doc["matched"] = cert.matched;
  doc["dimC"] = real_json(cert.dim_C);
  doc["C"] = complex_json(cert.C);
  doc["spherical_by_C"] = cert.spherical_by_C;
  doc["d"] = cert.trace ? complex_vector_json(cert.trace->d) : Json::array();
  if (cert.trace) doc["anchor"] = cert.trace->anchor;
  Json Q = Json::array();
  for (int i = 0; i < cert.Q.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < cert.Q.cols(); ++j) row.push_back(complex_json(cert.Q(i, j)));
    Q.push_back(std::move(row));
  }
  doc["Q"] = std::move(Q);
  Json residuals;
  residuals["square"] = real_json(cert.q_report.square_residual);
  residuals["hermitian"] = real_json(cert.q_report.hermitian_residual);
  residuals["spectrum"] = real_json(cert.q_report.spectrum_residual);
  if (cert.matched) {
    residuals["right_eigen"] = real_json(cert.right_eigen_residual);
    residuals["left_eigen"] = real_json(cert.left_eigen_residual);
    residuals["reconstruction"] = real_json(cert.reconstruction_residual);
    residuals["normalization"] = real_json(cert.normalization_residual);
  }
  doc["residuals"] = std::move(residuals);
  doc["q_properties_ok"] = cert.q_report.ok();
  doc["diagnostics"] = cert.diagnostics;
  return doc;
}

Json frobenius_json(const FrobeniusReport& report) {
  Json doc;
  doc["object"] = report.object;
  doc["multiplicities"] = report.multiplicities;
  doc["dim_A"] = real_json(report.dim_A);
  doc["haploid"] = report.haploid;
  doc["beta_1"] = real_json(report.beta_unit);
  doc["beta_A"] = real_json(report.beta_algebra);
  doc["positivity_ok"] = report.positivity_ok;
  doc["trace_matched"] = report.trace_matched;
  doc["obstructions"] = report.obstructions;
  return doc;
}

Json morita_json(const MoritaRescaleReport& report) {
  Json doc;
  doc["object"] = report.object;
  doc["scale"] = complex_json(report.scale);
  doc["inner_hom_dims"] = complex_vector_json(report.inner_hom_dims);
  doc["predicted"] = complex_vector_json(report.predicted);
  doc["max_residual"] = real_json(report.max_residual);
  doc["ok"] = report.ok;
  return doc;
}

Json spherical_json(const SphericalReport& report) {
  Json doc;
  doc["C"] = complex_json(report.C);
  doc["dimC"] = real_json(report.dim_C);
  doc["verdict"] = to_string(report.verdict);
  if (report.witness_module) {
    doc["witness_module"] = *report.witness_module;
    doc["witness"] = complex_vector_json(report.witness);
  } else {
    doc["witness_module"] = nullptr;
  }
  return doc;
}

}  // namespace modtrace::io
