#include "render.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace chebgraph::render {

namespace {

using structure::Domain;
using structure::GraphSpec;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kInlineKeyNodes = 4096;

std::string domain_title(const GraphSpec& spec) {
  const std::string n = spec.n.str();
  const std::string m = spec.modulus.str();
  switch (spec.domain) {
    case Domain::Chebyshev: return "G(T_" + n + " / F_" + m + ")";
    case Domain::PowerMap: return "G(x^" + n + " / F~_" + m + ")";
    case Domain::Multiplication: return "G(" + n + "x / Z_" + m + ")";
  }
  return "G";
}

const char* modulus_field(Domain d) { return d == Domain::Multiplication ? "m" : "q"; }

// Parenthesis key when affordable, otherwise the compact key.
std::string machine_key(const trees::RootedTree& t) {
  if (t.node_count() <= kInlineKeyNodes) return t.canonical_key();
  return "compact " + t.key();
}

}  // namespace

std::string spec_text(const GraphSpec& spec) {
  std::map<std::string, std::string> names;  // tree key -> display name
  std::vector<std::pair<std::string, trees::RootedTree>> named;
  std::map<std::string, int> used;
  auto name_of = [&](const trees::RootedTree& t) -> std::string {
    if (t.depth() <= 1) return t.pretty();
    auto it = names.find(t.key());
    if (it != names.end()) return it->second;
    std::string base = "T" + t.node_count().str();
    const int seen = used[base]++;
    std::string name = seen == 0 ? base : base + static_cast<char>('a' + seen - 1);
    names.emplace(t.key(), name);
    named.emplace_back(name, t);
    return name;
  };

  std::ostringstream out;
  out << domain_title(spec) << ": " << spec.total_nodes().str() << " nodes, ";
  BigInt components = 0;
  for (const auto& c : spec.classes) components += c.multiplicity;
  out << components.str() << (components == 1 ? " component\n" : " components\n");

  std::string line;
  for (auto it = spec.classes.rbegin(); it != spec.classes.rend(); ++it) {
    if (!line.empty()) line += " (+) ";
    if (it->multiplicity != 1) line += it->multiplicity.str() + " x ";
    line += "Cyc(" + it->cycle_len.str() + ", " + name_of(it->tree) + ")";
  }
  out << line << "\n";
  for (const auto& [name, t] : named) {
    out << "  " << name << " = " << t.pretty() << "\n";
    out << "  " << std::string(name.size(), ' ') << "   key " << machine_key(t) << "\n";
  }
  return out.str();
}

std::vector<std::string> spec_lines(const GraphSpec& spec) {
  std::vector<std::string> lines;
  for (const auto& c : spec.classes)
    lines.push_back(c.multiplicity.str() + " x Cyc(" + c.cycle_len.str() + ", " + machine_key(c.tree) + ")");
  return lines;
}

std::string spec_json(const GraphSpec& spec, int indent) {
  json doc;
  doc["n"] = to_u64(spec.n);
  doc[modulus_field(spec.domain)] = to_u64(spec.modulus);
  doc["domain"] = structure::domain_name(spec.domain);
  json classes = json::array();
  for (const auto& c : spec.classes) {
    json item;
    item["multiplicity"] = to_u64(c.multiplicity);
    item["cycle_length"] = to_u64(c.cycle_len);
    item["tree"] = c.tree.canonical_key();
    classes.push_back(std::move(item));
  }
  doc["classes"] = std::move(classes);
  doc["total_nodes"] = to_u64(spec.total_nodes());
  return doc.dump(indent);
}

GraphSpec spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto domain = structure::parse_domain(doc.at("domain").get<std::string>());
    if (!domain) fail(ErrorCode::ParseError, "unknown domain " + doc.at("domain").dump());
    std::vector<structure::CycleClass> classes;
    for (const auto& item : doc.at("classes")) {
      classes.push_back({item.at("multiplicity").get<std::uint64_t>(), item.at("cycle_length").get<std::uint64_t>(),
                         trees::parse_canonical_key(item.at("tree").get<std::string>())});
    }
    GraphSpec spec = structure::make_spec(doc.at("n").get<std::uint64_t>(), *domain,
                                          doc.at(modulus_field(*domain)).get<std::uint64_t>(), std::move(classes));
    if (doc.contains("total_nodes") && spec.total_nodes() != doc.at("total_nodes").get<std::uint64_t>())
      fail(ErrorCode::ParseError, "total_nodes does not match the classes");
    return spec;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed graph spec: ") + e.what());
  }
}

std::string graph_dot(const oracle::RawGraph& g, const std::vector<std::string>& labels, const std::string& title) {
  if (labels.size() != g.size()) fail(ErrorCode::InvalidArgument, "one label per node required");
  std::ostringstream out;
  out << "digraph \"" << title << "\" {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out << "  n" << v << " [label=\"" << labels[v] << "\"";
    if (g.cyclic[v]) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) out << "  n" << v << " -> n" << g.succ[v] << ";\n";
  out << "}\n";
  return out.str();
}

std::string polynomial(const std::vector<BigInt>& ascending) {
  std::string out;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    const BigInt& c = ascending[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string rational(const Rational& r) { return to_string(r) + " (" + to_decimal(r) + ")"; }

}  // namespace chebgraph::render
