#include "umt/io.hpp"

#include "umt/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace umt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string entry_to_string(const ordered_json& v, int row, int col) {
  auto at = [&] { return "dist[" + std::to_string(row) + "][" + std::to_string(col) + "]"; };
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return ordered_json(v).dump();  // exact digits of the integer
  }
  if (v.is_number_float())
    throw Error(at() + " is a non-integer JSON number; quote the value to keep it exact, "
                       "e.g. \"0.5\" or \"1/2\"");
  throw Error(at() + " is not a string");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw Error("cannot read file: " + path);
  return out.str();
}

ValidationResult parse_space_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw Error("space JSON must be an object");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw Error("space JSON needs a \"points\" array");
  if (!doc.contains("dist") || !doc["dist"].is_array())
    throw Error("space JSON needs a \"dist\" array of rows");

  std::vector<std::string> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) throw Error("\"points\" entries must be strings");
    points.push_back(p.get<std::string>());
  }

  std::vector<std::vector<std::string>> entries;
  int row = 0;
  for (const auto& r : doc["dist"]) {
    if (!r.is_array()) throw Error("dist[" + std::to_string(row) + "] is not an array");
    std::vector<std::string> out_row;
    int col = 0;
    for (const auto& v : r) {
      out_row.push_back(entry_to_string(v, row, col));
      ++col;
    }
    entries.push_back(std::move(out_row));
    ++row;
  }
  return validate(std::move(points), entries);
}

ValidationResult parse_space_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw Error("CSV input is empty");

  std::vector<std::string> points = rows.front();
  std::vector<std::vector<std::string>> entries(rows.begin() + 1, rows.end());
  return validate(std::move(points), entries);
}

ValidationResult parse_space(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_space_json(text) : parse_space_csv(text);
  }
  throw Error("input is empty");
}

ValidationResult load_space(const std::string& path) { return parse_space(read_file(path)); }

std::string space_to_json(const UltrametricSpace& s) {
  ordered_json doc;
  doc["points"] = s.points();
  ordered_json dist = ordered_json::array();
  for (int i = 0; i < s.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(s.dist(i, j).str());
    dist.push_back(std::move(row));
  }
  doc["dist"] = std::move(dist);
  return doc.dump(2) + "\n";
}

std::string space_to_csv(const UltrametricSpace& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s.point_name(i);
  }
  out += '\n';
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (j) out += ',';
      out += s.dist(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string validation_report_to_json(const ValidationReport& rep) {
  ordered_json doc;
  doc["valid"] = rep.ok();
  ordered_json issues = ordered_json::array();
  for (const auto& issue : rep.issues) {
    ordered_json j;
    j["code"] = std::string(to_string(issue.code));
    j["indices"] = issue.where;
    j["message"] = issue.message;
    issues.push_back(std::move(j));
  }
  doc["issues"] = std::move(issues);
  return doc.dump(2) + "\n";
}

std::string validation_report_to_text(const ValidationReport& rep) {
  if (rep.ok()) return "valid\n";
  std::string out;
  for (const auto& issue : rep.issues) {
    out += std::string(to_string(issue.code));
    out += ": ";
    out += issue.message;
    out += '\n';
  }
  return out;
}

std::string tree_to_json(const RepTree& t, const std::vector<std::string>& names) {
  ordered_json doc;
  doc["root"] = t.root;
  ordered_json nodes = ordered_json::array();
  for (int v = 0; v < t.size(); ++v) {
    const auto& node = t.nodes[v];
    ordered_json j;
    j["id"] = v;
    if (node.children.empty()) {
      j["point"] = names.at(node.point);
    } else {
      j["label"] = node.label.str();
      j["children"] = node.children;
    }
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Unquoted Newick labels stick to a safe charset; anything else is wrapped in
// single quotes with internal quotes doubled.
std::string newick_label(const std::string& s) {
  bool safe = !s.empty();
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
      safe = false;
  if (safe) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  out += '\'';
  return out;
}

void newick_rec(const RepTree& t, const std::vector<std::string>& names, int v,
                std::string& out) {
  const auto& node = t.nodes[v];
  if (node.children.empty()) {
    out += newick_label(names.at(node.point));
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ',';
    newick_rec(t, names, node.children[i], out);
  }
  out += ')';
  out += newick_label(node.label.str());
}

}  // namespace

std::string tree_to_dot(const RepTree& t, const std::vector<std::string>& names) {
  std::string out = "digraph tree {\n";
  for (int v = 0; v < t.size(); ++v) {
    const auto& node = t.nodes[v];
    out += "  n" + std::to_string(v);
    if (node.children.empty()) {
      out += " [label=\"" + dot_escape(names.at(node.point)) + "\", shape=box];\n";
    } else {
      out += " [label=\"" + dot_escape(node.label.str()) + "\"];\n";
    }
  }
  for (int v = 0; v < t.size(); ++v)
    for (int c : t.nodes[v].children)
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

std::string tree_to_newick(const RepTree& t, const std::vector<std::string>& names) {
  std::string out;
  newick_rec(t, names, t.root, out);
  out += ";\n";
  return out;
}

namespace {

ordered_json members_json(const std::vector<int>& members, const std::vector<std::string>& names) {
  ordered_json arr = ordered_json::array();
  for (int p : members) arr.push_back(names.at(p));
  return arr;
}

std::string members_text(const std::vector<int>& members, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += names.at(members[i]);
  }
  out += "}";
  return out;
}

}  // namespace

std::string ballean_to_json(const Ballean& b, const HasseDigraph& h,
                            const std::vector<std::string>& names) {
  ordered_json doc;
  ordered_json balls = ordered_json::array();
  for (int i = 0; i < b.size(); ++i) {
    ordered_json j;
    j["id"] = i;
    j["members"] = members_json(b.balls[i].members, names);
    j["radius"] = b.balls[i].radius.str();
    balls.push_back(std::move(j));
  }
  doc["balls"] = std::move(balls);
  ordered_json arcs = ordered_json::array();
  for (const auto& [u, v] : h.arcs) arcs.push_back(ordered_json::array({u, v}));
  doc["arcs"] = std::move(arcs);
  return doc.dump(2) + "\n";
}

std::string ballean_to_text(const Ballean& b, const HasseDigraph& h,
                            const std::vector<std::string>& names) {
  std::string out = "balls: " + std::to_string(b.size()) + "\n";
  for (int i = 0; i < b.size(); ++i) {
    out += "  " + std::to_string(i) + ": " + members_text(b.balls[i].members, names) +
           " radius " + b.balls[i].radius.str() + "\n";
  }
  out += "cover arcs: " + std::to_string(h.arcs.size()) + "\n";
  for (const auto& [u, v] : h.arcs)
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + "\n";
  return out;
}

std::string witness_to_json(const PointBijection& f, const UltrametricSpace& x,
                            const UltrametricSpace& y) {
  ordered_json doc = ordered_json::object();
  for (int i = 0; i < x.size(); ++i) doc[x.point_name(i)] = y.point_name(f.to[i]);
  return doc.dump(2) + "\n";
}

PointBijection parse_witness_json(const std::string& text, const UltrametricSpace& x,
                                  const UltrametricSpace& y) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw Error("map JSON must be one object: {\"a\": \"p\", ...}");

  PointBijection f;
  f.to.assign(x.size(), -1);
  for (const auto& [key, value] : doc.items()) {
    auto i = x.index_of(key);
    if (!i) throw Error("map key \"" + key + "\" is not a point of the first space");
    if (!value.is_string()) throw Error("map value for \"" + key + "\" must be a string");
    auto j = y.index_of(value.get<std::string>());
    if (!j)
      throw Error("map value \"" + value.get<std::string>() + "\" is not a point of the second space");
    if (f.to[*i] != -1) throw Error("map lists point \"" + key + "\" twice");
    f.to[*i] = *j;
  }
  for (int i = 0; i < x.size(); ++i)
    if (f.to[i] == -1) throw Error("map is missing point \"" + x.point_name(i) + "\"");
  return f;
}

}  // namespace umt
