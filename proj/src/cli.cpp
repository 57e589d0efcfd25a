#include "modtrace/cli.hpp"

#include "modtrace/catalog.hpp"
#include "modtrace/errors.hpp"
#include "modtrace/frobenius.hpp"
#include "modtrace/io.hpp"
#include "modtrace/pivotal.hpp"
#include "modtrace/trace_solver.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace modtrace::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

/// Raised when loaded input fails validation; carries the violation list.
class InvalidInput : public Error {
 public:
  InvalidInput(std::string what, ValidationReport report) : Error(std::move(what)), report(std::move(report)) {}
  ValidationReport report;
};

struct Options {
  double tol = kDefaultTolerance;
  bool json = false;
  bool assert_matched = false;

  std::string ring;
  std::string chr;
  std::string module;
  std::vector<std::string> modules;
  int object = 0;
  std::optional<int> normalize_at;
  std::string group;
  bool list_subgroups = false;
  bool list_characters = false;
  std::string emit;
  std::string builtin_name;
};

struct LoadedRing {
  FusionRing ring;
  std::string ref;
};

LoadedRing load_ring(const std::string& arg) {
  if (fs::exists(arg)) {
    FusionRing ring = io::ring_from_json(io::read_json_file(arg));
    auto report = validate_fusion_ring(ring);
    if (!report.valid()) throw InvalidInput("'" + arg + "' is not a valid fusion ring", std::move(report));
    return {ring, ring.fingerprint()};
  }
  try {
    auto inst = builtin(arg);
    return {inst.ring, inst.ring.fingerprint()};
  } catch (const UsageError&) {
    throw UsageError("'" + arg + "' is neither a readable file nor a builtin ring");
  }
}

std::optional<int> parse_index(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

DimChar load_char(const FusionRing& ring, const std::string& arg, double tol) {
  if (arg.empty()) throw UsageError("--char is required");
  DimChar chr;
  if (arg == "fp") {
    chr = fp_character(ring);
  } else if (auto index = parse_index(arg)) {
    const auto candidates = enumerate_characters(ring, tol);
    if (*index < 0 || *index >= static_cast<int>(candidates.size()))
      throw UsageError("character index " + arg + " out of range (" + std::to_string(candidates.size()) +
                       " candidates)");
    chr = candidates[*index];
  } else {
    chr = io::char_from_json(ring, io::read_json_file(arg));
  }
  auto report = validate_dim_char(ring, chr, tol);
  if (!report.valid()) throw InvalidInput("character '" + arg + "' is not valid", std::move(report));
  return chr;
}

NimRep load_module(const FusionRing& ring, const std::string& arg) {
  if (arg.empty()) throw UsageError("a module is required");
  NimRep rep = arg == "regular" ? regular_module(ring) : io::nimrep_from_json(ring, io::read_json_file(arg));
  auto report = validate_nimrep(ring, rep);
  if (!report.valid()) throw InvalidInput("module '" + arg + "' is not valid", std::move(report));
  return rep;
}

Json header(const std::string& verb) {
  Json doc;
  doc["verb"] = verb;
  return doc;
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

std::string pad(const std::string& s, std::size_t width) {
  // Width counts code points so that labels with "·" still align.
  std::size_t points = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++points;
  return points >= width ? s : s + std::string(width - points, ' ');
}

std::size_t label_width(const FusionRing& ring) {
  std::size_t w = 1;
  for (const auto& l : ring.labels()) w = std::max(w, l.size());
  return w;
}

void print_char_rows(std::ostream& out, const FusionRing& ring, const DimChar& chr) {
  const auto w = label_width(ring);
  for (int a = 0; a < ring.rank(); ++a)
    out << "  " << pad(ring.label(a), w) << ": " << format_complex(chr[a]) << '\n';
}

void print_certificate(std::ostream& out, const TraceCertificate& cert) {
  out << "matched        " << (cert.matched ? "yes" : "no") << '\n';
  out << "dim(C)         " << format_real(cert.dim_C) << '\n';
  out << "C              " << format_complex(cert.C) << '\n';
  out << "spherical(C)   " << (cert.spherical_by_C ? "yes" : "no") << '\n';
  out << "Q properties   " << (cert.q_report.ok() ? "ok" : "FAILED") << "  (square "
      << format_real(cert.q_report.square_residual) << ", hermitian "
      << format_real(cert.q_report.hermitian_residual) << ")\n";
  if (cert.trace) {
    out << "module dimensions (anchor " << cert.trace->anchor << "):\n";
    for (int i = 0; i < cert.trace->size(); ++i)
      out << "  m" << std::left << std::setw(4) << i << format_complex(cert.trace->d[i]) << '\n';
    out << "residuals      right " << format_real(cert.right_eigen_residual) << ", left "
        << format_real(cert.left_eigen_residual) << ", rank-1 " << format_real(cert.reconstruction_residual)
        << '\n';
  }
  for (const auto& d : cert.diagnostics) out << "diagnostic     " << d << '\n';
}

void emit_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw StructuralError("cannot create '" + dir + "': " + ec.message());
}

int assertion(const Options& opt, bool ok, const std::string& what, const std::vector<std::string>& diagnostics,
              std::ostream& err) {
  if (!opt.assert_matched || ok) return kOk;
  err << "assertion failed: " << what;
  if (!diagnostics.empty()) err << ": " << diagnostics.front();
  err << '\n';
  return kAssertionFailed;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  FusionRing ring = io::ring_from_json(io::read_json_file(opt.ring));
  const auto report = validate_fusion_ring(ring);
  if (opt.json) {
    Json doc = header("validate");
    doc["ring"] = ring.fingerprint();
    doc["rank"] = ring.rank();
    doc["valid"] = report.valid();
    doc["commutative"] = ring.is_commutative();
    doc["violations"] = io::violations_json(report);
    out << doc.dump(2) << '\n';
  } else {
    out << "ring           " << ring.fingerprint() << '\n';
    out << "rank           " << ring.rank() << '\n';
    out << "commutative    " << (ring.is_commutative() ? "yes" : "no") << '\n';
    out << "valid          " << (report.valid() ? "yes" : "no") << '\n';
    for (const auto& v : report.violations) {
      out << "  " << pad(v.rule, 18) << " at (";
      for (std::size_t i = 0; i < v.where.size(); ++i) out << (i ? "," : "") << v.where[i];
      out << "): " << v.lhs << " != " << v.rhs << '\n';
    }
  }
  return report.valid() ? kOk : kBadInput;
}

int cmd_fp_dims(const Options& opt, std::ostream& out) {
  const auto loaded = load_ring(opt.ring);
  const auto dims = fp_dimensions(loaded.ring);
  double total = 0.0;
  for (double x : dims) total += x * x;
  if (opt.json) {
    Json doc = header("fp-dims");
    doc["ring"] = loaded.ref;
    doc["labels"] = loaded.ring.labels();
    Json values = Json::array();
    for (double x : dims) values.push_back(io::real_json(x));
    doc["fpdims"] = std::move(values);
    doc["fp_global_dimension"] = io::real_json(total);
    out << doc.dump(2) << '\n';
  } else {
    const auto w = label_width(loaded.ring);
    for (int a = 0; a < loaded.ring.rank(); ++a)
      out << pad(loaded.ring.label(a), w) << "  " << format_real(dims[a]) << '\n';
    out << "FPdim(C) = " << format_real(total) << '\n';
  }
  return kOk;
}

int cmd_characters(const Options& opt, std::ostream& out) {
  const auto loaded = load_ring(opt.ring);
  const auto& ring = loaded.ring;
  const auto all = ring_characters(ring);
  const auto candidates = enumerate_characters(ring, opt.tol);
  std::vector<DimChar> rejected;
  for (const auto& chr : all) {
    bool kept = false;
    for (const auto& c : candidates) kept = kept || chars_equal(c, chr);
    if (!kept) rejected.push_back(chr);
  }
  if (opt.json) {
    Json doc = header("characters");
    doc["ring"] = loaded.ref;
    doc["labels"] = ring.labels();
    Json list = Json::array();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& chr = candidates[i];
      Json item;
      item["index"] = i;
      item["d"] = io::complex_vector_json(chr.d);
      item["spherical"] = is_spherical(ring, chr, opt.tol);
      item["dimC"] = io::real_json(global_dimension(chr));
      item["C"] = io::complex_json(c_invariant(chr));
      list.push_back(std::move(item));
    }
    doc["candidates"] = std::move(list);
    Json rej = Json::array();
    for (const auto& chr : rejected) {
      Json item;
      item["d"] = io::complex_vector_json(chr.d);
      item["violations"] = io::violations_json(validate_dim_char(ring, chr, opt.tol));
      rej.push_back(std::move(item));
    }
    doc["rejected"] = std::move(rej);
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& chr = candidates[i];
      out << "character " << i << "  dim(C) = " << format_real(global_dimension(chr))
          << "  C = " << format_complex(c_invariant(chr))
          << (is_spherical(ring, chr, opt.tol) ? "  spherical" : "  non-spherical") << '\n';
      print_char_rows(out, ring, chr);
    }
    for (const auto& chr : rejected) {
      out << "rejected (not a pivotal candidate)\n";
      print_char_rows(out, ring, chr);
    }
  }
  return kOk;
}

int cmd_trace(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = load_ring(opt.ring);
  const auto chr = load_char(loaded.ring, opt.chr, opt.tol);
  const auto rep = load_module(loaded.ring, opt.module);
  const auto cert = solve_module_trace(loaded.ring, chr, rep, opt.tol);
  std::optional<ModuleTrace> normalized;
  if (opt.normalize_at && cert.trace) normalized = normalized_at(*cert.trace, *opt.normalize_at);
  if (opt.json) {
    Json doc = header("trace");
    doc["ring"] = loaded.ref;
    doc["module_rank"] = rep.module_rank;
    merge(doc, io::certificate_json(cert));
    if (normalized) doc["d_normalized"] = io::complex_vector_json(normalized->d);
    out << doc.dump(2) << '\n';
  } else {
    print_certificate(out, cert);
    if (normalized) {
      out << "normalised at m" << *opt.normalize_at << ":\n";
      for (int i = 0; i < normalized->size(); ++i)
        out << "  m" << std::left << std::setw(4) << i << format_complex(normalized->d[i]) << '\n';
    }
  }
  return assertion(opt, cert.matched, "module trace does not exist", cert.diagnostics, err);
}

int cmd_flexible(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = load_ring(opt.ring);
  const auto chr = load_char(loaded.ring, opt.chr, opt.tol);
  std::vector<NimRep> reps;
  for (const auto& m : opt.modules) reps.push_back(load_module(loaded.ring, m));
  const auto report = matched_report(loaded.ring, chr, reps, opt.tol);
  const auto spherical = spherical_certificate(loaded.ring, chr, reps, opt.tol);
  if (opt.json) {
    Json doc = header("flexible");
    doc["ring"] = loaded.ref;
    doc["flexible"] = report.flexible;
    doc["scope"] = report.scope;
    Json certs = Json::array();
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
      Json item;
      item["module"] = opt.modules[i];
      merge(item, io::certificate_json(report.certificates[i]));
      certs.push_back(std::move(item));
    }
    doc["certificates"] = std::move(certs);
    doc["spherical"] = io::spherical_json(spherical);
    out << doc.dump(2) << '\n';
  } else {
    const std::size_t w = 8;
    out << pad("module", w) << "  matched  dim(C)\n";
    for (std::size_t i = 0; i < report.certificates.size(); ++i)
      out << pad(opt.modules[i], w) << "  " << pad(report.certificates[i].matched ? "yes" : "no", 7) << "  "
          << format_real(report.certificates[i].dim_C) << '\n';
    out << "flexible       " << (report.flexible ? "yes" : "no") << "  (" << report.scope << ")\n";
    out << "sphericality   " << to_string(spherical.verdict) << "  (C = " << format_complex(spherical.C) << ")\n";
    if (spherical.witness_module)
      out << "real witness   module " << opt.modules[*spherical.witness_module] << '\n';
  }
  std::vector<std::string> diagnostics;
  for (const auto& c : report.certificates)
    if (!c.matched && !c.diagnostics.empty()) diagnostics.push_back(c.diagnostics.front());
  return assertion(opt, report.flexible, "not flexible over the supplied modules", diagnostics, err);
}

int cmd_frobenius(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = load_ring(opt.ring);
  const auto chr = load_char(loaded.ring, opt.chr, opt.tol);
  const auto rep = load_module(loaded.ring, opt.module);
  const auto cert = solve_module_trace(loaded.ring, chr, rep, opt.tol);
  const auto frob = frobenius_report(loaded.ring, chr, rep, opt.object, cert, opt.tol);
  std::optional<MoritaRescaleReport> morita;
  if (cert.matched) morita = morita_rescale_check(loaded.ring, chr, rep, opt.object, cert, opt.tol);
  if (opt.json) {
    Json doc = header("frobenius");
    doc["ring"] = loaded.ref;
    doc["module_rank"] = rep.module_rank;
    merge(doc, io::certificate_json(cert));
    Json f = io::frobenius_json(frob);
    f["morita"] = morita ? io::morita_json(*morita) : Json(nullptr);
    doc["frobenius"] = std::move(f);
    out << doc.dump(2) << '\n';
  } else {
    print_certificate(out, cert);
    out << "algebra <m" << frob.object << ",m" << frob.object << ">:\n";
    const auto w = label_width(loaded.ring);
    for (int u = 0; u < loaded.ring.rank(); ++u)
      if (frob.multiplicities[u] != 0)
        out << "  " << pad(loaded.ring.label(u), w) << "  x" << frob.multiplicities[u] << '\n';
    out << "dim A          " << format_real(frob.dim_A) << (frob.positivity_ok ? "  (positive)" : "  (not positive)")
        << '\n';
    out << "haploid        " << (frob.haploid ? "yes" : "no") << '\n';
    out << "beta_1, beta_A " << format_real(frob.beta_unit) << ", " << format_real(frob.beta_algebra) << '\n';
    for (const auto& o : frob.obstructions) out << "obstruction    " << o << '\n';
    if (morita)
      out << "rescale        scale " << format_complex(morita->scale) << ", residual "
          << format_real(morita->max_residual) << (morita->ok ? "  ok" : "  FAILED") << '\n';
  }
  return assertion(opt, cert.matched, "module trace does not exist", cert.diagnostics, err);
}

int cmd_vectg(const Options& opt, std::ostream& out) {
  if (opt.group.empty()) throw UsageError("--group is required");
  GroupTable group = fs::exists(opt.group) ? io::group_from_json(io::read_json_file(opt.group))
                                           : builtin_group(opt.group);
  const FusionRing ring = group_ring(group);
  const auto subs = subgroups(group);
  std::vector<GroupCharacter> table;
  if (group.is_abelian()) table = group_character_table(group);

  struct Row {
    int subgroup;
    int character;
    bool matched;
    bool oracle;
  };
  std::vector<Row> rows;
  int disagreements = 0;
  for (int h = 0; h < static_cast<int>(subs.size()); ++h) {
    const auto rep = vect_g_module(group, subs[h]);
    for (int c = 0; c < static_cast<int>(table.size()); ++c) {
      const auto cert = solve_module_trace(ring, to_dim_char(group, table[c]), rep, opt.tol);
      const bool oracle = matched_vectg_oracle(group, subs[h], table[c]);
      if (cert.matched != oracle) ++disagreements;
      rows.push_back({h, c, cert.matched, oracle});
    }
  }

  if (!opt.emit.empty()) {
    emit_dir(opt.emit);
    const fs::path dir(opt.emit);
    io::write_json_file(dir / "group.json", io::group_to_json(group));
    io::write_json_file(dir / "ring.json", io::ring_to_json(ring));
    for (std::size_t h = 0; h < subs.size(); ++h)
      io::write_json_file(dir / ("module_H" + std::to_string(h) + ".json"),
                          io::nimrep_to_json(vect_g_module(group, subs[h]), ring.fingerprint()));
    for (std::size_t c = 0; c < table.size(); ++c)
      io::write_json_file(dir / ("char_" + std::to_string(c) + ".json"),
                          io::char_to_json(to_dim_char(group, table[c]), ring.fingerprint()));
  }

  if (opt.json) {
    Json doc = header("vectg");
    Json g;
    g["order"] = group.order();
    g["abelian"] = group.is_abelian();
    g["identity"] = group.identity();
    g["ring"] = ring.fingerprint();
    doc["group"] = std::move(g);
    if (opt.list_subgroups) doc["subgroups"] = subs;
    if (opt.list_characters) {
      Json list = Json::array();
      for (std::size_t c = 0; c < table.size(); ++c) {
        Json item;
        item["index"] = c;
        item["exponents"] = table[c].exponent;
        item["denominator"] = table[c].order;
        list.push_back(std::move(item));
      }
      doc["characters"] = std::move(list);
    }
    Json crit = Json::array();
    for (const auto& r : rows) {
      Json item;
      item["subgroup"] = r.subgroup;
      item["character"] = r.character;
      item["matched"] = r.matched;
      item["oracle"] = r.oracle;
      crit.push_back(std::move(item));
    }
    doc["criterion"] = std::move(crit);
    doc["disagreements"] = disagreements;
    out << doc.dump(2) << '\n';
  } else {
    out << "group order " << group.order() << (group.is_abelian() ? ", abelian" : ", non-abelian") << ", "
        << subs.size() << " subgroups\n";
    if (opt.list_subgroups)
      for (std::size_t h = 0; h < subs.size(); ++h) {
        out << "  H" << std::left << std::setw(3) << h << "{";
        for (std::size_t i = 0; i < subs[h].size(); ++i) out << (i ? ", " : "") << group.names()[subs[h][i]];
        out << "}\n";
      }
    if (opt.list_characters)
      for (std::size_t c = 0; c < table.size(); ++c) {
        out << "  kappa" << std::left << std::setw(3) << c << "exponents/" << table[c].order << ":";
        for (int e : table[c].exponent) out << ' ' << e;
        out << '\n';
      }
    if (!rows.empty()) {
      out << "subgroup  character  matched  oracle\n";
      for (const auto& r : rows)
        out << pad("H" + std::to_string(r.subgroup), 10) << pad("kappa" + std::to_string(r.character), 11)
            << pad(r.matched ? "yes" : "no", 9) << (r.oracle ? "yes" : "no") << '\n';
    }
    out << "disagreements  " << disagreements << '\n';
  }
  return kOk;
}

int cmd_builtin(const Options& opt, std::ostream& out) {
  const auto inst = builtin(opt.builtin_name);
  if (!opt.emit.empty()) {
    emit_dir(opt.emit);
    const fs::path dir(opt.emit);
    io::write_json_file(dir / "ring.json", io::ring_to_json(inst.ring));
    io::write_json_file(dir / "regular.json", io::nimrep_to_json(regular_module(inst.ring), inst.ring.fingerprint()));
    for (std::size_t c = 0; c < inst.characters.size(); ++c)
      io::write_json_file(dir / ("char_" + std::to_string(c) + ".json"),
                          io::char_to_json(inst.characters[c], inst.ring.fingerprint()));
    if (inst.group) io::write_json_file(dir / "group.json", io::group_to_json(*inst.group));
  }
  if (opt.json) {
    Json doc = header("builtin");
    doc["name"] = inst.name;
    doc["ring_id"] = inst.ring.fingerprint();
    doc["ring"] = io::ring_to_json(inst.ring);
    Json chars = Json::array();
    for (const auto& chr : inst.characters) chars.push_back(io::complex_vector_json(chr.d));
    doc["characters"] = std::move(chars);
    out << doc.dump(2) << '\n';
  } else {
    out << inst.name << "  rank " << inst.ring.rank() << "  " << inst.ring.fingerprint() << '\n';
    const auto w = label_width(inst.ring);
    for (int a = 0; a < inst.ring.rank(); ++a)
      for (int b = a; b < inst.ring.rank(); ++b) {
        std::string terms;
        for (int c = 0; c < inst.ring.rank(); ++c) {
          const auto n = inst.ring.N(a, b, c);
          if (n == 0) continue;
          if (!terms.empty()) terms += " + ";
          terms += (n > 1 ? std::to_string(n) + "·" : "") + inst.ring.label(c);
        }
        out << "  " << pad(inst.ring.label(a), w) << " x " << pad(inst.ring.label(b), w) << " = " << terms << '\n';
      }
    for (std::size_t c = 0; c < inst.characters.size(); ++c) {
      out << "character " << c << '\n';
      print_char_rows(out, inst.ring, inst.characters[c]);
    }
  }
  return kOk;
}

void report_invalid(std::ostream& err, const InvalidInput& e) {
  err << "error: " << e.what() << '\n';
  for (const auto& v : e.report.violations) {
    err << "  " << v.rule << " at (";
    for (std::size_t i = 0; i < v.where.size(); ++i) err << (i ? "," : "") << v.where[i];
    err << "): " << v.lhs << " != " << v.rhs << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Module traces on module categories over pivotal fusion categories", "modtrace"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", opt.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "Emit one JSON document on stdout");
  app.add_flag("--assert-matched", opt.assert_matched, "Exit with 1 when a trace query is unmatched or not flexible");

  auto* validate = app.add_subcommand("validate", "Check the fusion ring axioms of a ring file");
  validate->add_option("ring", opt.ring, "Ring file")->required();

  auto* fp = app.add_subcommand("fp-dims", "Frobenius-Perron dimensions");
  fp->add_option("ring", opt.ring, "Ring file or builtin name")->required();

  auto* chars = app.add_subcommand("characters", "Pivotal candidate characters of a commutative ring");
  chars->add_option("ring", opt.ring, "Ring file or builtin name")->required();

  auto* trace = app.add_subcommand("trace", "Decide existence of a module trace");
  trace->add_option("ring", opt.ring, "Ring file or builtin name")->required();
  trace->add_option("--char", opt.chr, "Character file, candidate index, or 'fp'")->required();
  trace->add_option("--module", opt.module, "Module file or 'regular'")->required();
  trace->add_option("--normalize-at", opt.normalize_at, "Also report dimensions scaled to 1 at this simple");

  auto* flexible = app.add_subcommand("flexible", "Matched flags over a list of modules");
  flexible->add_option("ring", opt.ring, "Ring file or builtin name")->required();
  flexible->add_option("--char", opt.chr, "Character file, candidate index, or 'fp'")->required();
  flexible->add_option("--modules", opt.modules, "Module files or 'regular'")->required();

  auto* frob = app.add_subcommand("frobenius", "Frobenius algebra data of an inner hom <m,m>");
  frob->add_option("ring", opt.ring, "Ring file or builtin name")->required();
  frob->add_option("--char", opt.chr, "Character file, candidate index, or 'fp'")->required();
  frob->add_option("--module", opt.module, "Module file or 'regular'")->required();
  frob->add_option("--object", opt.object, "Index of the simple module object")->required();

  auto* vectg = app.add_subcommand("vectg", "Vect_G instances from a group");
  vectg->add_option("--group", opt.group, "Group file or builtin (Z:<n>, S3, Z2xZ2)")->required();
  vectg->add_flag("--subgroups", opt.list_subgroups, "List subgroups");
  vectg->add_flag("--characters", opt.list_characters, "List linear characters");
  vectg->add_option("--emit", opt.emit, "Write group, ring, module and character files here");

  auto* bi = app.add_subcommand("builtin", "Show a builtin ring and its characters");
  bi->add_option("name", opt.builtin_name, "fibonacci, ising, rep_s3 or zn:<n>")->required();
  bi->add_option("--emit", opt.emit, "Write ring, character and regular module files here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*validate) return cmd_validate(opt, out);
    if (*fp) return cmd_fp_dims(opt, out);
    if (*chars) return cmd_characters(opt, out);
    if (*trace) return cmd_trace(opt, out, err);
    if (*flexible) return cmd_flexible(opt, out, err);
    if (*frob) return cmd_frobenius(opt, out, err);
    if (*vectg) return cmd_vectg(opt, out);
    if (*bi) return cmd_builtin(opt, out);
  } catch (const InvalidInput& e) {
    report_invalid(err, e);
    return kBadInput;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace modtrace::cli
