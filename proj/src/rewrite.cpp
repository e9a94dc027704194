#include "ncdef/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ncdef/errors.hpp"

namespace ncdef {
namespace {

struct OrderLess {
  const TermOrder* order;
  bool operator()(const Path& a, const Path& b) const { return order->less(a, b); }
};

bool occurs_at(const Path& w, const Path& pattern, int pos) {
  const auto& wa = w.arrows();
  const auto& pa = pattern.arrows();
  return std::equal(pa.begin(), pa.end(), wa.begin() + pos);
}

// Overlap ambiguities lead1 = u*s, lead2 = s*v with s nonempty and u, v nonempty.
void collect_overlaps(const Quiver& q, const Rule& r1, const Rule& r2, int max_degree, std::vector<NCPoly>& out) {
  int m = r1.lead.length();
  int n = r2.lead.length();
  for (int k = 1; k < std::min(m, n); ++k) {
    if (max_degree >= 0 && m + n - k > max_degree) continue;
    const auto& a1 = r1.lead.arrows();
    const auto& a2 = r2.lead.arrows();
    if (!std::equal(a1.end() - k, a1.end(), a2.begin())) continue;
    Path u = r1.lead.slice(q, 0, m - k);
    Path v = r2.lead.slice(q, k, n - k);
    NCPoly s = sandwich(Path::idempotent(r1.lead.start()), r1.tail, v);
    s -= sandwich(u, r2.tail, Path::idempotent(r2.lead.end()));
    out.push_back(std::move(s));
  }
}

// Inclusion ambiguities: lead2 occurs inside lead1 (lead1 = u*lead2*v).
void collect_inclusions(const Quiver& q, const Rule& r1, const Rule& r2, std::size_t i1, std::size_t i2,
                        std::vector<NCPoly>& out) {
  int m = r1.lead.length();
  int n = r2.lead.length();
  if (n > m) return;
  for (int pos = 0; pos + n <= m; ++pos) {
    if (i1 == i2 && pos == 0) continue;
    if (!occurs_at(r1.lead, r2.lead, pos)) continue;
    Path u = r1.lead.slice(q, 0, pos);
    Path v = r1.lead.slice(q, pos + n, m - pos - n);
    NCPoly s = r1.tail - sandwich(u, r2.tail, v);
    out.push_back(std::move(s));
  }
}

}  // namespace

std::optional<RewriteSystem::Match> RewriteSystem::find_reducer(const Path& w) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Path& lead = rules_[i].lead;
    int n = lead.length();
    for (int pos = 0; pos + n <= w.length(); ++pos)
      if (occurs_at(w, lead, pos)) return Match{i, pos};
  }
  return std::nullopt;
}

bool RewriteSystem::is_normal(const Path& w) const { return !find_reducer(w).has_value(); }

NCPoly RewriteSystem::reduce(const NCPoly& p) const {
  std::map<Path, Rational, OrderLess> todo(OrderLess{&order_});
  for (const auto& [w, c] : p.terms()) todo.emplace(w, c);
  NCPoly result;
  while (!todo.empty()) {
    auto it = std::prev(todo.end());
    Path w = it->first;
    Rational c = it->second;
    todo.erase(it);
    auto match = find_reducer(w);
    if (!match) {
      result.add_term(w, c);
      continue;
    }
    const Rule& rule = rules_[match->rule];
    int n = rule.lead.length();
    Path u = w.slice(quiver_, 0, match->position);
    Path v = w.slice(quiver_, match->position + n, w.length() - match->position - n);
    for (const auto& [t, d] : rule.tail.terms()) {
      Path replaced = *u.then(t)->then(v);
      auto [slot, inserted] = todo.try_emplace(replaced, 0);
      slot->second += c * d;
      if (slot->second == 0) todo.erase(slot);
    }
  }
  return result;
}

std::vector<NCPoly> ambiguity_polynomials(const RewriteSystem& rs, int max_degree) {
  std::vector<NCPoly> out;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      collect_overlaps(rs.quiver(), rules[i], rules[j], max_degree, out);
      collect_inclusions(rs.quiver(), rules[i], rules[j], i, j, out);
    }
  return out;
}

RewriteSystem complete_rewrite_system(const Quiver& q, const std::vector<NCPoly>& relations, int degree_bound,
                                      const TermOrder& order) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  RewriteSystem rs;
  rs.quiver_ = q;
  rs.order_ = order;
  rs.degree_bound_ = degree_bound;
  rs.complete_below_ = degree_bound;

  // Pending polynomials, smallest degree first, FIFO within a degree.
  std::multimap<int, NCPoly> pending;
  for (const auto& r : relations) {
    if (!r.is_parallel()) throw std::invalid_argument("relation mixes non-parallel paths");
    if (r.degree() > degree_bound)
      throw std::invalid_argument("relation of degree " + std::to_string(r.degree()) + " exceeds degree bound " +
                                  std::to_string(degree_bound));
    if (!r.is_zero()) pending.emplace(r.degree(), r);
  }

  while (!pending.empty()) {
    NCPoly f = rs.reduce(pending.begin()->second);
    pending.erase(pending.begin());
    if (f.is_zero()) continue;
    Path lead = order.leading(f);
    if (lead.length() == 0) throw std::invalid_argument("relation with an idempotent leading term");
    f *= 1 / f.coefficient(lead);
    NCPoly tail = -(f - NCPoly(lead));
    Rule fresh{lead, std::move(tail)};

    // Rules whose leading path contains the new one are re-queued.
    std::vector<Rule> kept;
    for (auto& r : rs.rules_) {
      bool contains = false;
      for (int pos = 0; pos + lead.length() <= r.lead.length() && !contains; ++pos)
        contains = occurs_at(r.lead, lead, pos);
      if (contains) {
        NCPoly back = NCPoly(r.lead) - r.tail;
        pending.emplace(back.degree(), std::move(back));
      } else {
        kept.push_back(std::move(r));
      }
    }
    rs.rules_ = std::move(kept);
    rs.rules_.push_back(std::move(fresh));

    const Rule& added = rs.rules_.back();
    std::vector<NCPoly> spolys;
    for (const auto& r : rs.rules_) {
      collect_overlaps(q, added, r, degree_bound, spolys);
      if (&r != &added) collect_overlaps(q, r, added, degree_bound, spolys);
    }
    for (auto& s : spolys)
      if (!s.is_zero()) pending.emplace(s.degree(), std::move(s));
  }

  // Inter-reduce tails and sort for a deterministic result.
  for (std::size_t i = 0; i < rs.rules_.size(); ++i) rs.rules_[i].tail = rs.reduce(rs.rules_[i].tail);
  std::sort(rs.rules_.begin(), rs.rules_.end(),
            [&](const Rule& a, const Rule& b) { return order.less(a.lead, b.lead); });

  rs.confluent_ = true;
  for (const auto& s : ambiguity_polynomials(rs, -1))
    if (!rs.reduce(s).is_zero()) {
      rs.confluent_ = false;
      break;
    }
  return rs;
}

RewriteSystem complete_rewrite_system(const Quiver& q, const std::vector<NCPoly>& relations, int degree_bound) {
  return complete_rewrite_system(q, relations, degree_bound, TermOrder::declaration_order(q));
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs) {
  if (p.degree() > rs.complete_below())
    throw TruncationExceeded("truncation exceeded: degree " + std::to_string(p.degree()) +
                             " is beyond the completed bound " + std::to_string(rs.complete_below()));
  return rs.reduce(p);
}

GrowthReport growth_report(const RewriteSystem& rs) {
  GrowthReport report;
  if (!rs.confluent()) return report;
  const Quiver& q = rs.quiver();

  int longest = 0;
  for (const auto& r : rs.rules()) longest = std::max(longest, r.lead.length());
  const int window = std::max(longest - 1, 0);

  auto extend = [&](const std::vector<Path>& layer) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a : q.arrows_from(p.end())) {
        Path w = *p.then(Path::of_arrow(q, a));
        if (rs.is_normal(w)) next.push_back(std::move(w));
      }
    return next;
  };

  // Nodes: normal words of length `window`. Every lead fits in window + 1
  // arrows, so walks in this graph are exactly the long normal words.
  std::vector<Path> nodes;
  for (int v = 0; v < q.vertex_count(); ++v) nodes.push_back(Path::idempotent(v));
  for (int len = 0; len < window; ++len) nodes = extend(nodes);
  std::map<Path, std::size_t> node_index;
  for (std::size_t i = 0; i < nodes.size(); ++i) node_index.emplace(nodes[i], i);

  std::vector<std::vector<std::size_t>> edges(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& w : extend({nodes[i]})) {
      Path tail = w.slice(q, 1, window);
      if (window == 0) tail = Path::idempotent(w.end());
      auto it = node_index.find(tail);
      if (it != node_index.end()) edges[i].push_back(it->second);
    }

  enum Color { White, Grey, Black };
  std::vector<Color> color(nodes.size(), White);
  std::function<bool(std::size_t)> has_cycle = [&](std::size_t u) {
    color[u] = Grey;
    for (auto v : edges[u]) {
      if (color[v] == Grey) return true;
      if (color[v] == White && has_cycle(v)) return true;
    }
    color[u] = Black;
    return false;
  };
  for (std::size_t u = 0; u < nodes.size(); ++u)
    if (color[u] == White && has_cycle(u)) {
      report.kind = GrowthReport::Kind::Infinite;
      return report;
    }

  std::vector<Path> layer;
  for (int v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::idempotent(v));
  while (!layer.empty()) {
    report.basis.insert(report.basis.end(), layer.begin(), layer.end());
    layer = extend(layer);
  }
  std::sort(report.basis.begin(), report.basis.end(),
            [&](const Path& a, const Path& b) { return rs.order().less(a, b); });
  report.kind = GrowthReport::Kind::Finite;
  report.dimension = report.basis.size();
  return report;
}

}  // namespace ncdef
