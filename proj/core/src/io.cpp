#include "forestbound/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace forestbound::io {
namespace {

using nlohmann::json;

Count integer_field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  const json& v = obj.at(name);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field '") + name + "' must be an integer");
  }
  return v.get<Count>();
}

std::vector<std::string_view> data_lines(std::string_view text, std::string_view header) {
  std::vector<std::string_view> lines;
  bool seen_header = false;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) {
        throw FormatError("expected header '" + std::string(header) + "', got '" +
                          std::string(line) + "'");
      }
      seen_header = true;
      continue;
    }
    lines.push_back(line);
  }
  if (!seen_header) throw FormatError("missing header '" + std::string(header) + "'");
  return lines;
}

}  // namespace

ForestFamily parse_forest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("forest file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("forest file must be a JSON object");
  const Count m = integer_field(doc, "m");
  if (!doc.contains("atom_sizes") || !doc["atom_sizes"].is_array()) {
    throw FormatError("field 'atom_sizes' must be an array");
  }
  std::vector<Count> sizes;
  for (const json& v : doc["atom_sizes"]) {
    if (!v.is_number_integer()) throw FormatError("atom sizes must be integers");
    sizes.push_back(v.get<Count>());
  }
  if (!doc.contains("regions") || !doc["regions"].is_array()) {
    throw FormatError("field 'regions' must be an array");
  }
  std::vector<RegionSpec> specs;
  for (const json& r : doc["regions"]) {
    const Count i = integer_field(r, "i");
    const Count j = integer_field(r, "j");
    if (i < 1 || j < 1 || i > INT32_MAX || j > INT32_MAX) {
      throw IndexOutOfRange("region atom indices must be positive 32-bit integers");
    }
    specs.push_back({static_cast<AtomIndex>(i), static_cast<AtomIndex>(j), integer_field(r, "zeta")});
  }
  return ForestFamily::build(m, std::move(sizes), specs);
}

std::string serialize_forest(const ForestFamily& family) {
  std::ostringstream out;
  out << "{\n  \"m\": " << family.hypothesis_count() << ",\n  \"atom_sizes\": [";
  const auto sizes = family.atom_sizes();
  for (std::size_t n = 0; n < sizes.size(); ++n) out << (n ? ", " : "") << sizes[n];
  out << "],\n  \"regions\": [";
  const auto regions = family.regions();
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const Region& r = regions[k];
    out << (k ? "," : "") << "\n    {\"i\": " << r.key.first << ", \"j\": " << r.key.last
        << ", \"zeta\": " << r.zeta << "}";
  }
  out << (regions.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::vector<Hypothesis> parse_hypotheses(std::string_view text) {
  std::vector<Hypothesis> out;
  for (std::string_view line : data_lines(text, kHypothesisHeader)) {
    Hypothesis h = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), h);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw FormatError("not a hypothesis index: '" + std::string(line) + "'");
    }
    out.push_back(h);
  }
  return out;
}

std::string serialize_hypotheses(std::span<const Hypothesis> hypotheses) {
  std::string out(kHypothesisHeader);
  out += '\n';
  for (Hypothesis h : hypotheses) out += std::to_string(h) + '\n';
  return out;
}

std::vector<double> parse_pvalues(std::string_view text) {
  std::vector<double> out;
  for (std::string_view line : data_lines(text, kPValueHeader)) {
    double p = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), p);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw FormatError("not a number: '" + std::string(line) + "'");
    }
    out.push_back(p);
  }
  return out;
}

std::string serialize_pvalues(std::span<const double> p_values) {
  std::string out(kPValueHeader);
  out += '\n';
  for (double p : p_values) out += format_decimal(p) + '\n';
  return out;
}

std::string curve_csv(const BoundCurve& curve, const SelectionPath& path) {
  std::string out = "t,hypothesis_index,V_t,fdp_bound\n";
  const auto fdp = fdp_curve(curve);
  for (std::size_t t = 1; t <= curve.steps(); ++t) {
    out += std::to_string(t) + ',' + std::to_string(path[t - 1]) + ',' +
           std::to_string(curve.values[t]) + ',' + format_decimal(fdp[t - 1].value()) + '\n';
  }
  return out;
}

std::string removed_csv(std::span<const RegionKey> removed) {
  std::string out = "i,j\n";
  for (RegionKey k : removed) out += std::to_string(k.first) + ',' + std::to_string(k.last) + '\n';
  return out;
}

std::string format_decimal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace forestbound::io
