#include <gtest/gtest.h>

#include <filesystem>

#include "localelab/canonical.hpp"
#include "localelab/io.hpp"
#include "oracles.hpp"

using namespace localelab;
namespace fs = std::filesystem;

namespace {

fs::path data(const std::string& name) { return fs::path(LOCALELAB_TEST_DATA) / name; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Io, ReadsL5) {
  const FiniteFrame l = read_frame_file(data("l5.json"));
  EXPECT_TRUE(isomorphic(l, oracle::l5()));
  EXPECT_EQ(l.label(4), "X");
}

TEST(Io, FrameRoundTrip) {
  for (const CorpusEntry& e : enumerate_corpus(3)) {
    const Json j = frame_to_json(*e.frame);
    EXPECT_EQ(frame_from_json(parse_json(j.dump(), "mem")), *e.frame);
  }
}

TEST(Io, SyntaxErrorsCarryLineAndColumn) {
  try {
    read_frame_file(data("truncated.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find("truncated.json:1:"), std::string::npos) << e.location();
  }
}

TEST(Io, ShapeErrorsCarryPointer) {
  try {
    read_frame_file(data("wrong_shape.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find(":/leq"), std::string::npos) << e.location();
  }
}

TEST(Io, NonFramesAreRejected) {
  EXPECT_THROW(read_frame_file(data("m3.json")), FrameError);
  EXPECT_THROW(read_frame_file(data("missing.json")), IoError);
}

TEST(Io, SublocaleRoundTrip) {
  const FiniteFrame l = oracle::l5();
  for (const Sublocale& s : enumerate_sublocales(l).members())
    EXPECT_EQ(sublocale_from_json(sublocale_to_json("l5", s), l), s);
  Json bad = sublocale_to_json("l5", Sublocale{ElementSet{0, 4}});
  EXPECT_THROW(sublocale_from_json(bad, l), ParseError);
}

TEST(Io, ManifestRoundTrip) {
  const auto corpus = enumerate_corpus(3);
  const auto entries = manifest_from_json(manifest_to_json(corpus));
  ASSERT_EQ(entries.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(entries[i].id, corpus[i].id);
    EXPECT_EQ(entries[i].canonical_hash, corpus[i].canonical_hash);
    EXPECT_EQ(entries[i].size, corpus[i].frame->size());
    EXPECT_EQ(entries[i].source, corpus[i].source);
  }
}

TEST(Io, ReportFieldOrderIsStable) {
  const FiniteFrame l = oracle::l5();
  const Json j = report_to_json(evaluate_properties(l, "l5"), l);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"frame-id", "size", "properties", "facts", "consistent"}));
  EXPECT_FALSE(j["properties"]["ed"]["holds"].get<bool>());
  EXPECT_TRUE(j["properties"]["ed"].contains("witness"));
  EXPECT_EQ(j["properties"].begin().key(), "ed");
}

TEST(Io, CsvMatrix) {
  const FiniteFrame c = chain(3);
  const std::vector<Property> props{Property::kEd, Property::kBoolean};
  const std::string csv = csv_header(props) + csv_row(evaluate_properties(c, "c3", {}, props), props);
  EXPECT_EQ(csv, "frame-id,size,ed,boolean\nc3,3,1,0\n");
}

TEST(Io, DotUsesCoversOnly) {
  const std::string c3 = frame_to_dot(chain(3), "c3");
  EXPECT_EQ(count(c3, "[label="), 3U);
  EXPECT_EQ(count(c3, "->"), 2U);
  const std::string l5 = frame_to_dot(oracle::l5(), "l5");
  EXPECT_EQ(count(l5, "[label="), 5U);
  EXPECT_EQ(count(l5, "->"), 5U);
  const FiniteFrame c = chain(3);
  const SublocaleLattice s = enumerate_sublocales(c);
  const std::string lattice = sublocale_lattice_to_dot(c, s, "s");
  EXPECT_EQ(count(lattice, "[label="), s.size());
  EXPECT_EQ(count(lattice, "->"), s.covers().size());
}

TEST(Io, SymbolicJson) {
  const Json j = symbolic_report_to_json(symbolic::classify_symbolic(symbolic::Kind::kCofinite));
  EXPECT_EQ(j["frame"], "cofinite");
  EXPECT_TRUE(j["properties"]["ied"]["holds"].get<bool>());
  EXPECT_EQ(j["properties"]["idm"]["certificate"]["prefix-depth"], 64);
}
