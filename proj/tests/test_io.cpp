#include "modtrace/catalog.hpp"
#include "modtrace/errors.hpp"
#include "modtrace/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace modtrace;
namespace fs = std::filesystem;

TEST_SUITE("io") {
  TEST_CASE("rings round-trip through JSON") {
    for (const auto& name : builtin_suite()) {
      CAPTURE(name);
      const auto ring = builtin(name).ring;
      const auto doc = io::ring_to_json(ring);
      const auto back = io::ring_from_json(doc);
      CHECK(back == ring);
      CHECK(io::ring_to_json(back) == doc);
    }
  }

  TEST_CASE("characters and modules round-trip exactly") {
    for (const auto& inst : testing::generated_instances()) {
      const auto ref = inst.ring.fingerprint();
      const auto chr = io::char_from_json(inst.ring, io::char_to_json(inst.chr, ref));
      CHECK(chars_equal(chr, inst.chr, 0.0));
      const auto rep = io::nimrep_from_json(inst.ring, io::nimrep_to_json(inst.rep, ref));
      REQUIRE(rep.M.size() == inst.rep.M.size());
      for (std::size_t u = 0; u < rep.M.size(); ++u) CHECK(rep.M[u] == inst.rep.M[u]);
    }
  }

  TEST_CASE("files round-trip through the file system") {
    const fs::path dir = fs::path(MODTRACE_SCRATCH_DIR) / "io";
    fs::create_directories(dir);
    const auto ring = builtin("ising").ring;
    io::write_json_file(dir / "ring.json", io::ring_to_json(ring));
    CHECK(io::ring_from_json(io::read_json_file(dir / "ring.json")) == ring);
    const auto group = symmetric_group_3();
    io::write_json_file(dir / "group.json", io::group_to_json(group));
    CHECK(io::group_from_json(io::read_json_file(dir / "group.json")).table() == group.table());
  }

  TEST_CASE("malformed documents are structural errors") {
    const auto ring = builtin("fibonacci").ring;
    auto doc = io::ring_to_json(ring);
    doc["rank"] = 3;
    CHECK_THROWS_AS(io::ring_from_json(doc), StructuralError);
    doc = io::ring_to_json(ring);
    doc.erase("N");
    CHECK_THROWS_AS(io::ring_from_json(doc), StructuralError);
    doc = io::ring_to_json(ring);
    doc["unit"] = "one";
    CHECK_THROWS_AS(io::ring_from_json(doc), StructuralError);

    auto chr = io::char_to_json(fp_character(ring), builtin("ising").ring.fingerprint());
    CHECK_THROWS_AS(io::char_from_json(ring, chr), StructuralError);
    chr = io::char_to_json(fp_character(ring), "fibonacci");
    CHECK_NOTHROW(io::char_from_json(ring, chr));

    auto mod = io::nimrep_to_json(regular_module(ring), ring.fingerprint());
    mod["module_rank"] = 3;
    CHECK_THROWS_AS(io::nimrep_from_json(ring, mod), StructuralError);
    CHECK_THROWS_AS(io::read_json_file(fs::path(MODTRACE_SCRATCH_DIR) / "missing.json"), StructuralError);
  }

  TEST_CASE("reported values use twelve significant digits and drop noise") {
    CHECK(io::real_json(1.0 / 3.0).get<double>() == 0.333333333333);
    const auto z = io::complex_json(Complex(2.0, 3e-16));
    CHECK(z[0].get<double>() == 2.0);
    CHECK(z[1].get<double>() == 0.0);
  }
}
