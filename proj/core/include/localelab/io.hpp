#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "localelab/constructions.hpp"
#include "localelab/frame.hpp"
#include "localelab/maps.hpp"
#include "localelab/props.hpp"
#include "localelab/sublocale.hpp"
#include "localelab/symbolic.hpp"

namespace localelab {

/// JSON with insertion-ordered objects, so output field order is fixed.
using Json = nlohmann::ordered_json;

/// Malformed input. `location` is "source:line:column" for syntax errors and
/// "source:/json/pointer" for shape errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source);

/// {"n": int, "leq": [[bool, ...], ...], "labels": [string, ...]}
Json frame_to_json(const FiniteFrame& frame);
/// Throws ParseError on a wrong shape and FrameError when the order is not a frame.
FiniteFrame frame_from_json(const Json& json, const std::string& source = "<json>");
FiniteFrame read_frame_file(const std::filesystem::path& path);

/// {"frame": id, "members": [indices]}
Json sublocale_to_json(const std::string& frame_id, const Sublocale& s);
Sublocale sublocale_from_json(const Json& json, const FiniteFrame& frame, const std::string& source = "<json>");

/// {"source": id, "target": id, "table": [indices]}
Json hom_to_json(const std::string& source_id, const std::string& target_id, const FrameHom& f);
std::vector<Element> hom_table_from_json(const Json& json, const std::string& source = "<json>");

Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& json, const std::string& source = "<json>");

Json witness_to_json(const FiniteFrame& frame, const Witness& w);
Json report_to_json(const PropertyReport& report, const FiniteFrame& frame);

/// Header "frame-id,size,<property>..." and one 0/1 row per report.
std::string csv_header(std::span<const Property> props);
std::string csv_row(const PropertyReport& report, std::span<const Property> props);

/// [{"frame-id", "source-poset", "size", "canonical-hash"}]
Json manifest_to_json(const std::vector<CorpusEntry>& corpus);
struct ManifestEntry {
  std::string id;
  Poset source;
  int size = 0;
  std::string canonical_hash;
};
std::vector<ManifestEntry> manifest_from_json(const Json& json, const std::string& source = "<json>");

Json certificate_to_json(const symbolic::Certificate& c);
Json symbolic_report_to_json(const symbolic::SymbolicReport& report);
Json separation_to_json(const symbolic::Separation& s);

/// Hasse diagram: one node per element, one edge per covering pair.
std::string frame_to_dot(const FiniteFrame& frame, const std::string& name = "frame");
/// Hasse diagram of the sublocale lattice under inclusion.
std::string sublocale_lattice_to_dot(const FiniteFrame& frame, const SublocaleLattice& lattice,
                                     const std::string& name = "sublocales");

}  // namespace localelab
