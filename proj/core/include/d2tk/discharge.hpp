#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

using Charge = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise.
std::string format_charge(const Charge& c);
Charge parse_charge(const std::string& text);

struct Element {
  enum Kind { Vertex, Face } kind = Vertex;
  int id = 0;

  auto operator<=>(const Element&) const = default;
  std::string to_string() const;  // "v 3", "f 0"
};

struct Transfer {
  Element from;
  Element to;
  Charge amount;
  std::string rule;
};

struct ChargeLedger {
  std::map<Element, Charge> initial;
  std::vector<Transfer> transfers;
  std::map<Element, Charge> final;

  Charge total_initial() const;
  Charge total_final() const;
};

// One alternative of a vertex descriptor: degree and m3 ranges.
struct VertexClass {
  int klo = 0, khi = 1 << 20;
  int mlo = 0, mhi = 1 << 20;
  bool no_4_neighbour = false;
};

// Face length range.
struct FaceClass {
  int lo = 0, hi = 1 << 20;
};

enum class RuleKind { VertexToFace, FaceToVertex, VertexToNeighbour };
enum class EdgeCondition { Any, Special, NotSpecial };

struct Rule {
  std::string id;
  RuleKind kind = RuleKind::VertexToNeighbour;
  std::vector<VertexClass> sender;    // vertex sender; empty = any vertex
  std::vector<VertexClass> receiver;  // vertex receiver; empty = any vertex
  FaceClass face;                     // the face side of face rules
  EdgeCondition edge = EdgeCondition::Any;
  Charge amount;
};

struct DischargingRuleSet {
  int delta_case = 0;
  std::vector<Rule> rules;
};

DischargingRuleSet rule_set(int delta_case);

// Text form, one rule per line after a `delta <k>` header, e.g.
//   R4c vertex->neighbour 1/6 from=6(4) to=5(5) edge=special
std::string format_rule_set(const DischargingRuleSet& rs);
std::string format_rule(const Rule& r);
DischargingRuleSet parse_rule_set(const std::string& text);

ChargeLedger initial_charges(const PlaneGraph& g);
ChargeLedger apply_rules(const PlaneGraph& g, const DischargingRuleSet& rs);

std::vector<std::pair<Element, Charge>> negativity_report(const ChargeLedger& ledger);

}  // namespace d2tk
