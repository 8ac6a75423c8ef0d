#pragma once

// Text, JSON and DOT renderings of graphs, plus the polynomial printer.

#include <string>
#include <vector>

#include "bigint.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace chebgraph::render {

/// One line of terms such as "Cyc(5, <1x*>) (+) Cyc(1, T13)", largest cycles
/// first, followed by the definitions of every named tree.
std::string spec_text(const structure::GraphSpec& spec);

/// Normal-form lines ("1 x Cyc(5, (()))"), one per class; used for diffs.
std::vector<std::string> spec_lines(const structure::GraphSpec& spec);

std::string spec_json(const structure::GraphSpec& spec, int indent = 2);
/// Inverse of spec_json. Throws ParseError.
structure::GraphSpec spec_from_json(const std::string& text);

/// Graphviz digraph of a raw graph; `labels[i]` names node i.
std::string graph_dot(const oracle::RawGraph& g, const std::vector<std::string>& labels,
                      const std::string& title);

/// "x^10 - 10x^8 + ... - 2" from ascending coefficients.
std::string polynomial(const std::vector<BigInt>& ascending);

/// "63/23 (2.739130)".
std::string rational(const Rational& r);

}  // namespace chebgraph::render
