#include "localelab/io.hpp"

#include <fstream>
#include <sstream>

namespace localelab {

namespace {

std::string where(const std::string& source, const std::string& pointer) { return source + ":" + pointer; }

const Json& field(const Json& json, const char* key, const std::string& source, const std::string& pointer = "") {
  if (!json.is_object()) throw ParseError(where(source, pointer.empty() ? "/" : pointer), "expected an object");
  auto it = json.find(key);
  if (it == json.end()) throw ParseError(where(source, pointer + "/" + key), "missing field");
  return *it;
}

int as_int(const Json& json, const std::string& source, const std::string& pointer) {
  if (!json.is_number_integer()) throw ParseError(where(source, pointer), "expected an integer");
  return json.get<int>();
}

std::vector<Element> as_indices(const Json& json, int bound, const std::string& source, const std::string& pointer) {
  if (!json.is_array()) throw ParseError(where(source, pointer), "expected an array");
  std::vector<Element> out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    const int v = as_int(json[i], source, p);
    if (v < 0 || v >= bound) throw ParseError(where(source, p), "index out of range");
    out.push_back(v);
  }
  return out;
}

OrderMatrix as_matrix(const Json& json, int n, const std::string& source, const std::string& pointer) {
  if (!json.is_array() || static_cast<int>(json.size()) != n)
    throw ParseError(where(source, pointer), "expected " + std::to_string(n) + " rows");
  OrderMatrix leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const Json& row = json[static_cast<std::size_t>(i)];
    const std::string rp = pointer + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(where(source, rp), "expected " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) {
      const Json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_boolean()) throw ParseError(where(source, rp + "/" + std::to_string(j)), "expected a boolean");
      leq[i][j] = cell.get<bool>();
    }
  }
  return leq;
}

Json matrix_to_json(const OrderMatrix& leq) {
  Json rows = Json::array();
  for (const auto& row : leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column), "invalid JSON");
  }
}

Json frame_to_json(const FiniteFrame& frame) {
  Json j;
  j["n"] = frame.size();
  j["leq"] = matrix_to_json(frame.order());
  j["labels"] = frame.labels();
  return j;
}

FiniteFrame frame_from_json(const Json& json, const std::string& source) {
  const int n = as_int(field(json, "n", source), source, "/n");
  if (n < 1) throw ParseError(where(source, "/n"), "n must be positive");
  if (n > kMaxFrameSize) throw ParseError(where(source, "/n"), "more than 64 elements");
  OrderMatrix leq = as_matrix(field(json, "leq", source), n, source, "/leq");
  std::vector<std::string> labels;
  if (auto it = json.find("labels"); it != json.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n)
      throw ParseError(where(source, "/labels"), "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw ParseError(where(source, "/labels/" + std::to_string(i)), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  return validate_frame(leq, std::move(labels));
}

FiniteFrame read_frame_file(const std::filesystem::path& path) {
  return frame_from_json(parse_json(read_text_file(path), path.string()), path.string());
}

Json sublocale_to_json(const std::string& frame_id, const Sublocale& s) {
  Json j;
  j["frame"] = frame_id;
  j["members"] = s.members.to_vector();
  return j;
}

Sublocale sublocale_from_json(const Json& json, const FiniteFrame& frame, const std::string& source) {
  field(json, "frame", source);
  Sublocale s{ElementSet::from(as_indices(field(json, "members", source), frame.size(), source, "/members"))};
  if (!is_sublocale(frame, s.members)) throw ParseError(where(source, "/members"), "not a sublocale of the frame");
  return s;
}

Json hom_to_json(const std::string& source_id, const std::string& target_id, const FrameHom& f) {
  Json j;
  j["source"] = source_id;
  j["target"] = target_id;
  j["table"] = f.table;
  return j;
}

std::vector<Element> hom_table_from_json(const Json& json, const std::string& source) {
  field(json, "source", source);
  field(json, "target", source);
  return as_indices(field(json, "table", source), kMaxFrameSize, source, "/table");
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["m"] = p.m;
  j["leq"] = matrix_to_json(p.leq);
  return j;
}

Poset poset_from_json(const Json& json, const std::string& source) {
  const int m = as_int(field(json, "m", source), source, "/m");
  if (m < 0) throw ParseError(where(source, "/m"), "m must be non-negative");
  try {
    return Poset::validated(as_matrix(field(json, "leq", source), m, source, "/leq"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where(source, "/leq"), e.what());
  }
}

Json witness_to_json(const FiniteFrame& frame, const Witness& w) {
  Json j;
  j["law"] = std::string(law_name(w.law));
  j["family"] = w.family.to_vector();
  j["elements"] = w.elements;
  j["description"] = describe(frame, w);
  return j;
}

Json report_to_json(const PropertyReport& report, const FiniteFrame& frame) {
  Json j;
  j["frame-id"] = report.frame_id;
  j["size"] = report.size;
  Json props = Json::object();
  for (const auto& [p, v] : report.verdicts) {
    Json entry;
    entry["holds"] = v.holds;
    if (v.witness) entry["witness"] = witness_to_json(frame, *v.witness);
    Json chars = Json::array();
    for (const auto& c : v.characterizations) {
      Json cj;
      cj["name"] = c.name;
      cj["holds"] = c.holds ? Json(*c.holds) : Json(nullptr);
      chars.push_back(std::move(cj));
    }
    entry["characterizations"] = std::move(chars);
    props[std::string(property_name(p))] = std::move(entry);
  }
  j["properties"] = std::move(props);
  Json facts = Json::array();
  for (const auto& f : report.facts) {
    Json fj;
    fj["name"] = f.name;
    fj["holds"] = f.holds;
    facts.push_back(std::move(fj));
  }
  j["facts"] = std::move(facts);
  j["consistent"] = report.consistent();
  return j;
}

std::string csv_header(std::span<const Property> props) {
  std::string out = "frame-id,size";
  for (Property p : props) out += "," + std::string(property_name(p));
  return out + "\n";
}

std::string csv_row(const PropertyReport& report, std::span<const Property> props) {
  std::string out = report.frame_id + "," + std::to_string(report.size);
  for (Property p : props) out += report.holds(p) ? ",1" : ",0";
  return out + "\n";
}

Json manifest_to_json(const std::vector<CorpusEntry>& corpus) {
  Json list = Json::array();
  for (const CorpusEntry& e : corpus) {
    Json j;
    j["frame-id"] = e.id;
    j["source-poset"] = poset_to_json(e.source);
    j["size"] = e.frame->size();
    j["canonical-hash"] = e.canonical_hash;
    list.push_back(std::move(j));
  }
  return list;
}

std::vector<ManifestEntry> manifest_from_json(const Json& json, const std::string& source) {
  if (!json.is_array()) throw ParseError(where(source, "/"), "expected an array");
  std::vector<ManifestEntry> out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const std::string p = "/" + std::to_string(i);
    const Json& e = json[i];
    const Json& id = field(e, "frame-id", source, p);
    const Json& hash = field(e, "canonical-hash", source, p);
    if (!id.is_string()) throw ParseError(where(source, p + "/frame-id"), "expected a string");
    if (!hash.is_string()) throw ParseError(where(source, p + "/canonical-hash"), "expected a string");
    out.push_back({id.get<std::string>(), poset_from_json(field(e, "source-poset", source, p), source),
                   as_int(field(e, "size", source, p), source, p + "/size"), hash.get<std::string>()});
  }
  return out;
}

Json certificate_to_json(const symbolic::Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["characterization"] = c.characterization;
  j["witness-family"] = c.family.empty() ? Json(nullptr) : Json(c.family);
  j["prefix-depth"] = c.prefix_depth;
  return j;
}

Json symbolic_report_to_json(const symbolic::SymbolicReport& report) {
  Json j;
  j["frame"] = std::string(symbolic::kind_name(report.kind));
  Json props = Json::object();
  for (const auto& v : report.verdicts) {
    Json entry;
    entry["holds"] = v.holds;
    entry["certificate"] = certificate_to_json(v.certificate);
    props[std::string(property_name(v.property))] = std::move(entry);
  }
  j["properties"] = std::move(props);
  Json facts = Json::array();
  for (const auto& f : report.facts) {
    Json fj;
    fj["name"] = f.name;
    fj["holds"] = f.holds;
    facts.push_back(std::move(fj));
  }
  j["facts"] = std::move(facts);
  return j;
}

Json separation_to_json(const symbolic::Separation& s) {
  Json j;
  j["holds"] = std::string(property_name(s.holds));
  j["fails"] = std::string(property_name(s.fails));
  j["frame"] = s.frame ? Json(std::string(symbolic::kind_name(*s.frame))) : Json(nullptr);
  j["certificate"] = s.certificate ? certificate_to_json(*s.certificate) : Json(nullptr);
  j["note"] = s.note;
  return j;
}

std::string frame_to_dot(const FiniteFrame& frame, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element a = 0; a < frame.size(); ++a) out << "  n" << a << " [label=" << quoted(frame.label(a)) << "];\n";
  for (const auto& [lo, hi] : frame.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string sublocale_lattice_to_dot(const FiniteFrame& frame, const SublocaleLattice& lattice,
                                     const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::string label = "{";
    bool first = true;
    for (Element a : lattice[i].members) {
      label += (first ? "" : ", ") + frame.label(a);
      first = false;
    }
    out << "  s" << i << " [label=" << quoted(label + "}") << "];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) out << "  s" << lo << " -> s" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace localelab
