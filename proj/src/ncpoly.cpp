#include "ncdef/ncpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncdef {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.empty()) throw std::invalid_argument("empty arrow name");
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_)
      throw std::invalid_argument("arrow '" + a.name + "' has an endpoint outside the vertex range");
  }
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(static_cast<int>(i));
  return out;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev = arrows_;
  for (auto& a : rev) std::swap(a.source, a.target);
  return Quiver(vertex_count_, std::move(rev));
}

Path Path::of_arrow(const Quiver& q, int a) {
  const Arrow& arr = q.arrow(a);
  return Path(arr.source, arr.target, {a});
}

Path Path::of_arrows(const Quiver& q, int start, std::vector<int> arrows) {
  int v = start;
  for (int a : arrows) {
    if (q.arrow(a).source != v) throw std::invalid_argument("arrows do not compose into a path");
    v = q.arrow(a).target;
  }
  return Path(start, v, std::move(arrows));
}

std::optional<Path> Path::then(const Path& next) const {
  if (end_ != next.start_) return std::nullopt;
  std::vector<int> arrows = arrows_;
  arrows.insert(arrows.end(), next.arrows_.begin(), next.arrows_.end());
  return Path(start_, next.end_, std::move(arrows));
}

int Path::vertex_at(const Quiver& q, int k) const {
  if (k == 0) return start_;
  return q.arrow(arrows_.at(static_cast<std::size_t>(k - 1))).target;
}

Path Path::slice(const Quiver& q, int from, int len) const {
  int s = vertex_at(q, from);
  std::vector<int> part(arrows_.begin() + from, arrows_.begin() + from + len);
  int e = vertex_at(q, from + len);
  return Path(s, e, std::move(part));
}

bool Path::visits(const Quiver& q, int v) const {
  for (int k = 0; k <= length(); ++k)
    if (vertex_at(q, k) == v) return true;
  return false;
}

Path Path::reversed() const {
  std::vector<int> rev(arrows_.rbegin(), arrows_.rend());
  return Path(end_, start_, std::move(rev));
}

NCPoly::NCPoly(const Path& p, const Rational& c) {
  if (c != 0) terms_.emplace(p, c);
}

int NCPoly::degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, p.length());
  return d;
}

int NCPoly::min_degree() const {
  if (terms_.empty()) return -1;
  // terms are ordered by length first
  return terms_.begin()->first.length();
}

Rational NCPoly::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool NCPoly::is_parallel() const {
  if (terms_.empty()) return true;
  const Path& first = terms_.begin()->first;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.start() == first.start() && t.first.end() == first.end();
  });
}

void NCPoly::add_term(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [p, x] : terms_) x *= c;
  }
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  r *= -1;
  return r;
}

NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms())
      if (auto pq = p.then(q)) r.add_term(*pq, c * d);
  return r;
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly sandwich(const Path& u, const NCPoly& p, const Path& v) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    auto uw = u.then(w);
    if (!uw) continue;
    if (auto uwv = uw->then(v)) r.add_term(*uwv, c);
  }
  return r;
}

NCPoly reversed(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) r.add_term(w.reversed(), c);
  return r;
}

TermOrder TermOrder::declaration_order(const Quiver& q) {
  std::vector<int> rank(static_cast<std::size_t>(q.arrow_count()));
  for (int a = 0; a < q.arrow_count(); ++a) rank[static_cast<std::size_t>(a)] = q.arrow_count() - 1 - a;
  return TermOrder(std::move(rank));
}

std::strong_ordering TermOrder::compare(const Path& a, const Path& b) const {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (a.length() == 0) return a.start() <=> b.start();
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    int ra = rank_.at(static_cast<std::size_t>(a.arrows()[i]));
    int rb = rank_.at(static_cast<std::size_t>(b.arrows()[i]));
    if (auto c = ra <=> rb; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Path TermOrder::leading(const NCPoly& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Path* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || less(*best, w)) best = &w;
  return *best;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_length, const TermOrder& order) {
  std::vector<Path> out;
  if (max_length <= 0) return out;
  std::vector<Path> layer;
  for (int v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::idempotent(v));
  for (int len = 0; len < max_length && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a : q.arrows_from(p.end())) next.push_back(*p.then(Path::of_arrow(q, a)));
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) { return order.less(a, b); });
  return out;
}

}  // namespace ncdef
