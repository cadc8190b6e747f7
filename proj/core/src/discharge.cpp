#include "d2tk/discharge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "d2tk/analysis.hpp"
#include "d2tk/error.hpp"

namespace d2tk {

namespace {

constexpr int kOpen = 1 << 20;

VertexClass vc(int klo, int khi, int mlo = 0, int mhi = kOpen) {
  return {klo, khi, mlo, mhi, false};
}
VertexClass vk(int k) { return vc(k, k); }
VertexClass vkd(int k, int lo, int hi) { return vc(k, k, lo, hi); }

Rule to_faces(std::string id, Charge amt, FaceClass f) {
  Rule r;
  r.id = std::move(id);
  r.kind = RuleKind::VertexToFace;
  r.face = f;
  r.amount = std::move(amt);
  return r;
}

Rule from_faces(std::string id, Charge amt, FaceClass f, std::vector<VertexClass> to) {
  Rule r;
  r.id = std::move(id);
  r.kind = RuleKind::FaceToVertex;
  r.face = f;
  r.receiver = std::move(to);
  r.amount = std::move(amt);
  return r;
}

Rule give(std::string id, Charge amt, std::vector<VertexClass> from, std::vector<VertexClass> to,
          EdgeCondition edge = EdgeCondition::Any) {
  Rule r;
  r.id = std::move(id);
  r.kind = RuleKind::VertexToNeighbour;
  r.sender = std::move(from);
  r.receiver = std::move(to);
  r.edge = edge;
  r.amount = std::move(amt);
  return r;
}

Charge q(int p, int d) { return Charge(p) / d; }

const FaceClass kTriangle{3, 3};
const FaceClass kBig{5, kOpen};

DischargingRuleSet rs6() {
  VertexClass six_five_lonely = vkd(6, 5, 5);
  six_five_lonely.no_4_neighbour = true;
  return {6,
          {
              to_faces("R1", q(1, 3), kTriangle),
              from_faces("R2a", q(1, 3), kBig, {vk(3), vkd(4, 1, 2)}),
              from_faces("R2b", q(1, 5), kBig, {vkd(5, 4, 4)}),
              from_faces("R2c", q(1, 5), kBig, {six_five_lonely}),
              give("R3", q(1, 6), {vkd(6, 0, 3)}, {}),
              give("R4a", q(1, 12), {vkd(6, 4, 4)}, {vk(4), vkd(6, 5, 5)}),
              give("R4b", q(1, 9), {vkd(6, 4, 4)}, {vk(3), vkd(5, 4, 4)}),
              give("R4c", q(1, 6), {vkd(6, 4, 4)}, {vkd(5, 5, 5)}, EdgeCondition::Special),
              give("R4d", q(1, 9), {vkd(6, 4, 4)}, {vkd(5, 5, 5)}, EdgeCondition::NotSpecial),
              give("R5a", q(1, 12), {vkd(6, 5, 5)}, {vkd(4, 1, 2)}),
              give("R5b", q(1, 9), {vkd(6, 5, 5)}, {vkd(5, 4, 5)}),
          }};
}

DischargingRuleSet rs7() {
  return {7,
          {
              to_faces("R1", q(1, 3), kTriangle),
              from_faces("R2", q(1, 5), kBig, {}),
              give("R3", q(1, 6), {vkd(6, 0, 3)}, {}),
              give("R4", q(1, 9), {vkd(6, 4, 4)}, {}),
              give("R5", q(1, 9), {vkd(6, 5, 5)}, {vkd(5, 4, 5)}),
              give("R6", q(2, 7), {vkd(7, 0, 3)}, {}),
              give("R7a", q(1, 5), {vkd(7, 4, 5)}, {vk(3)}),
              give("R7b", q(1, 4), {vkd(7, 4, 5)}, {vkd(4, 1, 3)}),
              give("R7c", q(2, 9), {vkd(7, 4, 5)}, {vkd(5, 5, 5)}),
              give("R7d", q(1, 9), {vkd(7, 4, 5)}, {vkd(5, 4, 4)}),
              give("R7e", q(1, 18), {vkd(7, 4, 5)}, {vkd(6, 5, 5)}),
              give("R8a", q(1, 6), {vkd(7, 6, 6)}, {vkd(5, 5, 5)}),
              give("R8b", q(1, 9), {vkd(7, 6, 6)}, {vkd(5, 4, 4)}),
              give("R8c", q(1, 6), {vkd(7, 6, 6)}, {vkd(4, 1, 3)}),
              give("R9a", q(1, 6), {vkd(7, 7, 7)}, {vkd(5, 5, 5)}),
              give("R9b", q(1, 12), {vkd(7, 7, 7)}, {vkd(5, 4, 4)}),
          }};
}

DischargingRuleSet rs8() {
  return {8,
          {
              to_faces("R1", q(1, 3), kTriangle),
              from_faces("R2", q(1, 5), kBig, {}),
              give("R3", q(1, 5), {vkd(8, 0, 6)}, {vk(3)}),
              give("R4", q(1, 3), {vkd(7, 0, 5)}, {vkd(4, 4, 4)}),
              give("R5", q(1, 18), {vkd(8, 0, 6)}, {vkd(6, 5, 5)}),
              give("R6", q(1, 9), {vkd(6, 0, 5)}, {vkd(5, 4, 5)}),
              give("R7a", q(1, 6), {vkd(7, 0, 6)}, {vkd(4, 1, 3)}),
              give("R7b", q(1, 9), {vkd(7, 0, 6)}, {vkd(5, 4, 4)}),
              give("R7c", q(2, 9), {vkd(7, 0, 6)}, {vkd(5, 5, 5)}),
              give("R8", q(1, 9), {vkd(7, 7, 7)}, {vkd(5, 4, 5)}),
              give("R9a", q(1, 6), {vkd(8, 0, 7)}, {vkd(4, 1, 1)}),
              give("R9b", q(1, 4), {vkd(8, 0, 7)}, {vkd(4, 2, 2)}),
              give("R9c", q(1, 3), {vkd(8, 0, 7)}, {vkd(4, 3, kOpen)}),
              give("R9d", q(1, 9), {vkd(8, 0, 7)}, {vkd(5, 4, 4)}),
              give("R9e", q(2, 9), {vkd(8, 0, 7)}, {vkd(5, 5, 5)}),
              give("R10a", q(1, 9), {vkd(8, 8, 8)}, {vkd(4, 3, 3), vkd(5, 4, 4)}),
              give("R10b", q(2, 9), {vkd(8, 8, 8)}, {vkd(5, 5, 5)}),
          }};
}

// ---- text form

std::string range_text(int lo, int hi) {
  if (lo == hi) return std::to_string(lo);
  if (hi >= kOpen) return std::to_string(lo) + "+";
  if (lo <= 0) return std::to_string(hi) + "-";
  return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string class_text(const VertexClass& c) {
  std::string s = range_text(c.klo, c.khi);
  if (c.mlo > 0 || c.mhi < kOpen) s += "(" + range_text(c.mlo, c.mhi) + ")";
  if (c.no_4_neighbour) s += "&no4nb";
  return s;
}

std::string classes_text(const std::vector<VertexClass>& cs) {
  if (cs.empty()) return "*";
  std::string s;
  for (size_t i = 0; i < cs.size(); ++i) s += (i ? "|" : "") + class_text(cs[i]);
  return s;
}

const char* kind_text(RuleKind k) {
  switch (k) {
    case RuleKind::VertexToFace: return "vertex->face";
    case RuleKind::FaceToVertex: return "face->vertex";
    case RuleKind::VertexToNeighbour: return "vertex->neighbour";
  }
  return "?";
}

int to_int(const std::string& s, int line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw ParseError(line, "expected a number, got '" + s + "'");
  return std::stoi(s);
}

std::pair<int, int> parse_range(const std::string& s, int line) {
  auto dots = s.find("..");
  if (dots != std::string::npos)
    return {to_int(s.substr(0, dots), line), to_int(s.substr(dots + 2), line)};
  if (!s.empty() && s.back() == '+') return {to_int(s.substr(0, s.size() - 1), line), kOpen};
  if (!s.empty() && s.back() == '-') return {0, to_int(s.substr(0, s.size() - 1), line)};
  int k = to_int(s, line);
  return {k, k};
}

VertexClass parse_class(std::string s, int line) {
  VertexClass c;
  const std::string flag = "&no4nb";
  if (s.size() > flag.size() && s.compare(s.size() - flag.size(), flag.size(), flag) == 0) {
    c.no_4_neighbour = true;
    s.resize(s.size() - flag.size());
  }
  auto open = s.find('(');
  std::string k = s.substr(0, open);
  std::tie(c.klo, c.khi) = parse_range(k, line);
  if (open != std::string::npos) {
    if (s.back() != ')') throw ParseError(line, "unbalanced '(' in " + s);
    std::tie(c.mlo, c.mhi) = parse_range(s.substr(open + 1, s.size() - open - 2), line);
  }
  return c;
}

std::vector<VertexClass> parse_classes(const std::string& s, int line) {
  std::vector<VertexClass> out;
  if (s == "*") return out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, '|')) out.push_back(parse_class(part, line));
  if (out.empty()) throw ParseError(line, "empty descriptor");
  return out;
}

FaceClass parse_face(const std::string& s, int line) {
  auto [lo, hi] = parse_range(s, line);
  return {lo, hi};
}

Rule parse_rule(const std::string& text, int line) {
  std::istringstream in(text);
  Rule r;
  std::string kind, amount;
  if (!(in >> r.id >> kind >> amount)) throw ParseError(line, "expected `id kind amount ...`");
  if (kind == "vertex->face") r.kind = RuleKind::VertexToFace;
  else if (kind == "face->vertex") r.kind = RuleKind::FaceToVertex;
  else if (kind == "vertex->neighbour") r.kind = RuleKind::VertexToNeighbour;
  else throw ParseError(line, "unknown rule kind " + kind);
  try {
    r.amount = parse_charge(amount);
  } catch (const std::exception&) {
    throw ParseError(line, "bad amount " + amount);
  }
  std::string field;
  bool seen_from = false, seen_to = false;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got " + field);
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "from") {
      seen_from = true;
      if (r.kind == RuleKind::FaceToVertex) r.face = parse_face(val, line);
      else r.sender = parse_classes(val, line);
    } else if (key == "to") {
      seen_to = true;
      if (r.kind == RuleKind::VertexToFace) r.face = parse_face(val, line);
      else r.receiver = parse_classes(val, line);
    } else if (key == "edge") {
      if (val == "special") r.edge = EdgeCondition::Special;
      else if (val == "plain") r.edge = EdgeCondition::NotSpecial;
      else if (val == "any") r.edge = EdgeCondition::Any;
      else throw ParseError(line, "unknown edge condition " + val);
    } else {
      throw ParseError(line, "unknown key " + key);
    }
  }
  if (!seen_from || !seen_to) throw ParseError(line, "rule needs from= and to=");
  return r;
}

// ---- application

bool matches(const std::vector<VertexClass>& cs, const VertexProfile& p, bool has4) {
  if (cs.empty()) return true;
  for (const auto& c : cs)
    if (p.degree >= c.klo && p.degree <= c.khi && p.m3 >= c.mlo && p.m3 <= c.mhi &&
        !(c.no_4_neighbour && has4))
      return true;
  return false;
}

bool matches(const FaceClass& f, int len) { return len >= f.lo && len <= f.hi; }

}  // namespace

std::string format_charge(const Charge& c) {
  auto num = boost::multiprecision::numerator(c);
  auto den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Charge parse_charge(const std::string& text) {
  auto slash = text.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Charge(cpp_int(text));
  cpp_int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Charge(cpp_int(text.substr(0, slash)), den);
}

std::string Element::to_string() const {
  return (kind == Vertex ? "v " : "f ") + std::to_string(id);
}

Charge ChargeLedger::total_initial() const {
  Charge s = 0;
  for (const auto& [e, c] : initial) s += c;
  return s;
}

Charge ChargeLedger::total_final() const {
  Charge s = 0;
  for (const auto& [e, c] : final) s += c;
  return s;
}

DischargingRuleSet rule_set(int delta_case) {
  switch (delta_case) {
    case 6: return rs6();
    case 7: return rs7();
    case 8: return rs8();
  }
  throw Error(ErrorCode::UnsupportedDelta, "no rule set for Δ=" + std::to_string(delta_case));
}

std::string format_rule(const Rule& r) {
  std::string s = r.id + " " + kind_text(r.kind) + " " + format_charge(r.amount) + " from=";
  switch (r.kind) {
    case RuleKind::VertexToFace:
      s += classes_text(r.sender) + " to=" + range_text(r.face.lo, r.face.hi);
      break;
    case RuleKind::FaceToVertex:
      s += range_text(r.face.lo, r.face.hi) + " to=" + classes_text(r.receiver);
      break;
    case RuleKind::VertexToNeighbour:
      s += classes_text(r.sender) + " to=" + classes_text(r.receiver);
      break;
  }
  if (r.edge == EdgeCondition::Special) s += " edge=special";
  if (r.edge == EdgeCondition::NotSpecial) s += " edge=plain";
  return s;
}

std::string format_rule_set(const DischargingRuleSet& rs) {
  std::string s = "delta " + std::to_string(rs.delta_case) + "\n";
  for (const auto& r : rs.rules) s += format_rule(r) + "\n";
  return s;
}

DischargingRuleSet parse_rule_set(const std::string& text) {
  DischargingRuleSet rs;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      std::istringstream hs(line);
      std::string word, rest;
      if (!(hs >> word >> rs.delta_case) || word != "delta" || (hs >> rest))
        throw ParseError(no, "expected `delta <k>`");
      header = true;
      continue;
    }
    rs.rules.push_back(parse_rule(line, no));
  }
  if (!header) throw ParseError(no, "missing `delta <k>` header");
  return rs;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
  ChargeLedger out;
  for (VertexId v : g.vertices()) out.initial[{Element::Vertex, v}] = g.degree(v) - 4;
  for (int f = 0; f < g.num_faces(); ++f) out.initial[{Element::Face, f}] = g.face_length(f) - 4;
  out.final = out.initial;
  return out;
}

ChargeLedger apply_rules(const PlaneGraph& g, const DischargingRuleSet& rs) {
  if (g.max_degree() != rs.delta_case)
    throw Error(ErrorCode::UnsupportedDelta, "graph has Δ=" + std::to_string(g.max_degree()) +
                                                 ", rule set is for " +
                                                 std::to_string(rs.delta_case));
  ProfileTable P(g, rs.delta_case);
  std::vector<char> has4(g.id_bound(), 0);
  for (VertexId v : g.vertices())
    for (VertexId u : g.rotation(v))
      if (g.degree(u) == 4) has4[v] = 1;
  auto vok = [&](const std::vector<VertexClass>& cs, VertexId v) {
    return matches(cs, P[v], has4[v]);
  };

  ChargeLedger out = initial_charges(g);
  for (const auto& r : rs.rules) {
    std::vector<Transfer> batch;
    if (r.kind == RuleKind::VertexToNeighbour) {
      for (VertexId v : g.vertices()) {
        if (!vok(r.sender, v)) continue;
        for (VertexId u : g.rotation(v)) {
          if (!vok(r.receiver, u)) continue;
          if (r.edge != EdgeCondition::Any) {
            bool sp = edge_flags(g, v, u, rs.delta_case).special;
            if (sp != (r.edge == EdgeCondition::Special)) continue;
          }
          batch.push_back({{Element::Vertex, v}, {Element::Vertex, u}, r.amount, r.id});
        }
      }
    } else {
      for (int f = 0; f < g.num_faces(); ++f) {
        if (!matches(r.face, g.face_length(f))) continue;
        for (VertexId v : g.faces()[f].boundary) {
          bool to_face = r.kind == RuleKind::VertexToFace;
          if (!vok(to_face ? r.sender : r.receiver, v)) continue;
          Element fe{Element::Face, f}, ve{Element::Vertex, v};
          if (to_face) batch.push_back({ve, fe, r.amount, r.id});
          else batch.push_back({fe, ve, r.amount, r.id});
        }
      }
    }
    std::stable_sort(batch.begin(), batch.end(), [](const Transfer& a, const Transfer& b) {
      return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    for (auto& t : batch) {
      out.final[t.from] -= t.amount;
      out.final[t.to] += t.amount;
      out.transfers.push_back(std::move(t));
    }
  }
  if (out.total_final() != out.total_initial())
    throw std::logic_error("discharging changed the total charge");
  return out;
}

std::vector<std::pair<Element, Charge>> negativity_report(const ChargeLedger& ledger) {
  std::vector<std::pair<Element, Charge>> out;
  for (const auto& [e, c] : ledger.final)
    if (c < 0) out.emplace_back(e, c);
  return out;
}

}  // namespace d2tk
