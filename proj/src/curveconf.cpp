#include "bh/curveconf.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "bh/error.hpp"

namespace bh {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Quadrilateral_r1: return "Quadrilateral_r1";
    case CaseTag::Quadrilateral_other: return "Quadrilateral_other";
    case CaseTag::Exceptional_a2: return "Exceptional_a2";
    case CaseTag::Exceptional_a3: return "Exceptional_a3";
    case CaseTag::Exceptional_a5: return "Exceptional_a5";
  }
  return "?";
}

CaseTag case_tag_from_string(std::string_view s) {
  for (CaseTag t : {CaseTag::Quadrilateral_r1, CaseTag::Quadrilateral_other, CaseTag::Exceptional_a2,
                    CaseTag::Exceptional_a3, CaseTag::Exceptional_a5})
    if (to_string(t) == s)
      return t;
  fail(ErrorCode::InvalidFixture, "unknown case tag '" + std::string(s) + "'");
}

bool is_exceptional(CaseTag tag) {
  return tag == CaseTag::Exceptional_a2 || tag == CaseTag::Exceptional_a3 || tag == CaseTag::Exceptional_a5;
}

std::string CurveLabel::id() const {
  switch (kind) {
    case Kind::Arm: return "E" + std::to_string(i) + "_" + std::to_string(j);
    case Kind::Center: return "Einf";
    case Kind::E0: return "E0";
    case Kind::E0Prime: return "E0p";
    case Kind::E0DoublePrime: return "E0pp";
    case Kind::F: return "F" + std::to_string(i);
  }
  return "?";
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

}  // namespace

CurveLabel CurveLabel::from_id(std::string_view id) {
  if (id == "Einf")
    return center();
  if (id == "E0")
    return e0();
  if (id == "E0p")
    return e0_prime();
  if (id == "E0pp")
    return e0_double_prime();
  if (id.size() >= 2 && id[0] == 'F')
    if (auto l = parse_int(id.substr(1)); l && *l >= 1)
      return f(*l);
  if (id.size() >= 4 && id[0] == 'E') {
    auto us = id.find('_');
    if (us != std::string_view::npos) {
      auto i = parse_int(id.substr(1, us - 1));
      auto j = parse_int(id.substr(us + 1));
      if (i && j && *i >= 1 && *i <= 3 && *j >= 1)
        return arm(*i, *j);
    }
  }
  fail(ErrorCode::UnknownNode, "unknown curve '" + std::string(id) + "'");
}

std::size_t CurveConfiguration::edge_count() const {
  std::size_t n = 0;
  for (const auto& [p, m] : edges_)
    n += static_cast<std::size_t>(m);
  return n;
}

std::size_t CurveConfiguration::add_node(const CurveLabel& label) {
  if (index_.count(label))
    fail(ErrorCode::InvalidArgument, "duplicate curve " + label.id());
  index_[label] = nodes_.size();
  nodes_.push_back(label);
  return nodes_.size() - 1;
}

void CurveConfiguration::add_edge(const CurveLabel& a, const CurveLabel& b, int multiplicity) {
  std::size_t i = index_of(a), j = index_of(b);
  if (i == j)
    fail(ErrorCode::InvalidArgument, "self-intersection edge on " + a.id());
  edges_[{std::min(i, j), std::max(i, j)}] += multiplicity;
}

bool CurveConfiguration::contains(const CurveLabel& label) const {
  return index_.count(label) > 0;
}

std::size_t CurveConfiguration::index_of(const CurveLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    fail(ErrorCode::UnknownNode, "curve " + label.id() + " is not in the configuration");
  return it->second;
}

int CurveConfiguration::intersection(std::size_t a, std::size_t b) const {
  if (a == b)
    return -2;
  auto it = edges_.find({std::min(a, b), std::max(a, b)});
  return it == edges_.end() ? 0 : it->second;
}

void CurveConfiguration::mark_unused(const CurveLabel& label) {
  index_of(label);
  if (!is_unused(label))
    unused_.push_back(label);
}

bool CurveConfiguration::is_unused(const CurveLabel& label) const {
  return std::find(unused_.begin(), unused_.end(), label) != unused_.end();
}

IntMatrix CurveConfiguration::intersection_matrix() const {
  IntMatrix m(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    m(i, i) = -2;
  for (const auto& [p, mult] : edges_) {
    m(p.first, p.second) += mult;
    m(p.second, p.first) += mult;
  }
  return m;
}

CurveConfiguration build_configuration(const ConfigurationInput& in) {
  CurveConfiguration conf(in.tag);
  for (int i = 1; i <= 3; ++i) {
    const auto [alpha, beta] = in.alpha_beta[i - 1];
    if (alpha < 2 || beta < 1 || beta >= alpha)
      fail(ErrorCode::InvalidRange, "Dolgachev pair (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
    for (int j = 1; j < alpha; ++j)
      conf.add_node(CurveLabel::arm(i, j));
  }
  conf.add_node(CurveLabel::center());
  for (int i = 1; i <= 3; ++i) {
    const int alpha = static_cast<int>(in.alpha_beta[i - 1].alpha);
    for (int j = 1; j + 1 < alpha; ++j)
      conf.add_edge(CurveLabel::arm(i, j), CurveLabel::arm(i, j + 1));
    conf.add_edge(CurveLabel::arm(i, alpha - 1), CurveLabel::center());
  }

  if (in.tag == CaseTag::Quadrilateral_r1) {
    // Both components of E_0 meet the outermost curve of the third arm.
    conf.add_node(CurveLabel::e0_prime());
    conf.add_node(CurveLabel::e0_double_prime());
    conf.add_edge(CurveLabel::e0_prime(), CurveLabel::arm(3, 1));
    conf.add_edge(CurveLabel::e0_double_prime(), CurveLabel::arm(3, 1));
    return conf;
  }

  conf.add_node(CurveLabel::e0());
  for (int i = 1; i <= 3; ++i) {
    const auto [alpha, beta] = in.alpha_beta[i - 1];
    const auto& slot = in.attachments.arm[i - 1];
    if (beta == alpha - 1) {
      if (slot)
        fail(ErrorCode::InvalidFixture, "arm " + std::to_string(i) + " has beta = alpha - 1 but an attachment");
      continue;
    }
    if (!slot)
      fail(ErrorCode::MissingAttachment, "no E0 attachment for arm " + std::to_string(i));
    if (*slot < 1 || *slot >= alpha)
      fail(ErrorCode::InvalidRange, "attachment position " + std::to_string(*slot) + " on arm " + std::to_string(i));
    conf.add_edge(CurveLabel::e0(), CurveLabel::arm(i, *slot));
  }

  if (is_exceptional(in.tag)) {
    const long expected_a = in.tag == CaseTag::Exceptional_a2 ? 2 : in.tag == CaseTag::Exceptional_a3 ? 3 : 5;
    if (in.a != expected_a)
      fail(ErrorCode::CaseMismatch, "case " + std::string(to_string(in.tag)) + " with a = " + std::to_string(in.a));
    for (int l = 1; l < in.a; ++l) {
      conf.add_node(CurveLabel::f(l));
      if (l > 1)
        conf.add_edge(CurveLabel::f(l - 1), CurveLabel::f(l));
    }
    if (!in.attachments.f_target)
      fail(ErrorCode::MissingAttachment, "no F-chain attachment for E0");
    if (*in.attachments.f_target < 1 || *in.attachments.f_target >= in.a)
      fail(ErrorCode::InvalidRange, "F-chain attachment F" + std::to_string(*in.attachments.f_target));
    conf.add_edge(CurveLabel::e0(), CurveLabel::f(*in.attachments.f_target));
    if (in.a == 2)
      conf.mark_unused(CurveLabel::f(1));
  }
  return conf;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const CurveConfiguration& conf, const std::vector<bool>& keep) {
  std::vector<std::vector<std::size_t>> adj(conf.size());
  for (const auto& [p, m] : conf.edges()) {
    if (!keep[p.first] || !keep[p.second])
      continue;
    for (int r = 0; r < m; ++r) {
      adj[p.first].push_back(p.second);
      adj[p.second].push_back(p.first);
    }
  }
  return adj;
}

std::size_t reachable(const std::vector<std::vector<std::size_t>>& adj, std::size_t start) {
  std::vector<bool> seen(adj.size());
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace

bool validate_tree(const CurveConfiguration& conf) {
  std::vector<bool> keep(conf.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < conf.size(); ++i) {
    auto k = conf.nodes()[i].kind;
    keep[i] = k == CurveLabel::Kind::Arm || k == CurveLabel::Kind::Center;
    count += keep[i];
  }
  if (!conf.contains(CurveLabel::center()))
    return false;
  auto adj = adjacency(conf, keep);
  std::size_t edges = 0;
  for (const auto& a : adj)
    edges += a.size();
  edges /= 2;
  const std::size_t c = conf.index_of(CurveLabel::center());
  if (edges + 1 != count || reachable(adj, c) != count)
    return false;
  if (adj[c].size() != 3)
    return false;
  std::set<int> branches;
  for (std::size_t w : adj[c])
    branches.insert(conf.nodes()[w].i);
  return branches.size() == 3;
}

bool is_connected(const CurveConfiguration& conf) {
  if (conf.size() == 0)
    return true;
  auto adj = adjacency(conf, std::vector<bool>(conf.size(), true));
  return reachable(adj, 0) == conf.size();
}

std::string dual_graph_dot(const CurveConfiguration& conf, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (const auto& n : conf.nodes()) {
    os << "  " << n.id() << " [label=\"" << n.id() << "\"";
    if (conf.is_unused(n))
      os << ", style=dotted";
    os << "];\n";
  }
  for (const auto& [p, m] : conf.edges())
    for (int r = 0; r < m; ++r)
      os << "  " << conf.nodes()[p.first].id() << " -- " << conf.nodes()[p.second].id() << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bh
