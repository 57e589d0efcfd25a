#pragma once

#include "modtrace/catalog.hpp"
#include "modtrace/frobenius.hpp"
#include "modtrace/fusion_ring.hpp"
#include "modtrace/nimrep.hpp"
#include "modtrace/pivotal.hpp"
#include "modtrace/trace_solver.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace modtrace::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON document. Throws StructuralError on I/O or parse failure.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

/// {"rank", "labels", "unit", "dual", "N"} in that order, integers only.
Json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const Json& doc);

/// {"ring": <ref>, "d": [[re, im], ...]}, floats at full precision.
Json char_to_json(const DimChar& chr, const std::string& ring_ref);
/// The "ring" field must either equal the ring's fingerprint or be a
/// free-form label (anything not starting with "fnv1a:").
DimChar char_from_json(const FusionRing& ring, const Json& doc);

/// {"ring": <ref>, "module_rank": k, "M": [u][j][i]}.
Json nimrep_to_json(const NimRep& rep, const std::string& ring_ref);
NimRep nimrep_from_json(const FusionRing& ring, const Json& doc);

/// {"order": g, "mul": g x g}.
Json group_to_json(const GroupTable& group);
GroupTable group_from_json(const Json& doc);

/// Report-side number formatting: 12 significant digits.
Json real_json(double x);
Json complex_json(Complex z);
Json complex_vector_json(const std::vector<Complex>& v);

Json violations_json(const ValidationReport& report);
Json certificate_json(const TraceCertificate& cert);
Json frobenius_json(const FrobeniusReport& report);
Json morita_json(const MoritaRescaleReport& report);
Json spherical_json(const SphericalReport& report);

}  // namespace modtrace::io
