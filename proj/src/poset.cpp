#include "posets/poset.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace posets {

bool is_valid_label(const Label& l) {
  if (l.empty()) return false;
  for (unsigned char c : l)
    if (!std::isprint(c) || std::isspace(c)) return false;
  return true;
}

namespace {

void require_valid_label(const Label& l) {
  if (!is_valid_label(l))
    throw std::invalid_argument("invalid label: \"" + l + "\"");
}

// Warshall closure over bit rows.
void close_transitively(std::vector<Bitset>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
}

}  // namespace

Poset Poset::from_pairs(std::span<const std::pair<Label, Label>> pairs,
                        std::span<const Label> extra_vertices) {
  std::vector<Label> vertices;
  std::unordered_map<Label, int> seen;
  auto declare = [&](const Label& l) {
    if (seen.emplace(l, static_cast<int>(vertices.size())).second)
      vertices.push_back(l);
  };
  for (const auto& [a, b] : pairs) {
    declare(a);
    declare(b);
  }
  for (const auto& v : extra_vertices) declare(v);
  return from_relation(std::move(vertices), pairs);
}

Poset Poset::from_relation(std::vector<Label> vertices,
                           std::span<const std::pair<Label, Label>> pairs) {
  std::unordered_map<Label, int> index;
  for (const auto& v : vertices) {
    require_valid_label(v);
    if (!index.emplace(v, static_cast<int>(index.size())).second)
      throw std::invalid_argument("duplicate vertex label: \"" + v + "\"");
  }

  const int n = static_cast<int>(vertices.size());
  std::vector<Bitset> rows(n, Bitset(n));
  for (int v = 0; v < n; ++v) rows[v].set(v);
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw std::invalid_argument("relation pair uses undeclared vertex");
    rows[ia->second].set(ib->second);
  }

  close_transitively(rows);

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rows[a].test(b) && rows[b].test(a))
        throw CycleError("cycle through \"" + vertices[a] + "\" and \"" +
                         vertices[b] + "\"");

  Poset p;
  p.labels_ = std::move(vertices);
  p.up_ = std::move(rows);
  return p;
}

Poset Poset::from_closed_relation(std::vector<Label> vertices,
                                  std::vector<Bitset> rows) {
  const int n = static_cast<int>(vertices.size());
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("row count does not match vertex count");
  for (const auto& v : vertices) require_valid_label(v);
  for (int a = 0; a < n; ++a) {
    if (rows[a].size() != n || !rows[a].test(a))
      throw std::invalid_argument("relation is not reflexive");
    for (int b = a + 1; b < n; ++b)
      if (rows[a].test(b) && rows[b].test(a))
        throw CycleError("cycle through \"" + vertices[a] + "\" and \"" +
                         vertices[b] + "\"");
  }
#ifndef NDEBUG
  auto closed = rows;
  close_transitively(closed);
  assert(closed == rows && "relation must be transitively closed");
#endif
  Poset p;
  p.labels_ = std::move(vertices);
  p.up_ = std::move(rows);
  return p;
}

std::optional<int> Poset::find(const Label& l) const {
  for (int v = 0; v < size(); ++v)
    if (labels_[v] == l) return v;
  return std::nullopt;
}

int Poset::index_of(const Label& l) const {
  if (auto v = find(l)) return *v;
  throw std::out_of_range("no vertex labeled \"" + l + "\"");
}

bool Poset::leq(const Label& a, const Label& b) const {
  return leq(index_of(a), index_of(b));
}

Bitset Poset::down_set(int v) const {
  Bitset d(size());
  for (int w = 0; w < size(); ++w)
    if (leq(w, v)) d.set(w);
  return d;
}

std::vector<Bitset> Poset::down_sets() const {
  std::vector<Bitset> down(size(), Bitset(size()));
  for (int v = 0; v < size(); ++v)
    up_[v].for_each([&](int w) { down[w].set(v); });
  return down;
}

std::vector<std::pair<Label, Label>> Poset::relation() const {
  std::vector<std::pair<Label, Label>> out;
  for (int a = 0; a < size(); ++a)
    up_[a].for_each([&](int b) { out.emplace_back(labels_[a], labels_[b]); });
  return out;
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

std::vector<std::pair<int, int>> Poset::covering_indices() const {
  std::vector<std::pair<int, int>> out;
  const auto down = down_sets();
  for (int a = 0; a < size(); ++a)
    up_[a].for_each([&](int b) {
      // a covered by b iff the interval [a,b] is exactly {a,b}
      if (a != b && (up_[a] & down[b]).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

std::vector<CoverPair> Poset::covering() const {
  std::vector<CoverPair> out;
  for (auto [a, b] : covering_indices())
    out.push_back(CoverPair{labels_[a], labels_[b]});
  return out;
}

std::vector<int> Poset::minimal_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    bool minimal = true;
    for (int w = 0; w < size() && minimal; ++w)
      if (strictly_less(w, v)) minimal = false;
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<int> Poset::maximal_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[v].count() == 1) out.push_back(v);
  return out;
}

std::vector<int> Poset::heights() const {
  const int n = size();
  std::vector<int> h(n, 0);
  // Longest chain from below; process vertices in order of down-set size,
  // which is compatible with the order.
  std::vector<int> order(n);
  const auto down = down_sets();
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down[a].count() < down[b].count(); });
  for (int v : order) {
    int best = 0;
    down[v].for_each([&](int w) {
      if (w != v) best = std::max(best, h[w]);
    });
    h[v] = best + 1;
  }
  return h;
}

int Poset::height() const {
  int best = 0;
  for (int h : heights()) best = std::max(best, h);
  return best;
}

bool Poset::is_chain() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) return false;
  return true;
}

bool Poset::is_forest() const {
  for (int v = 0; v < size(); ++v) {
    const Bitset d = down_set(v);
    bool ok = true;
    d.for_each([&](int a) {
      d.for_each([&](int b) {
        if (a < b && !comparable(a, b)) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

Poset chain(int n) {
  std::vector<std::pair<Label, Label>> pairs;
  std::vector<Label> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset::from_relation(std::move(vertices), pairs);
}

Poset antichain(int n) {
  std::vector<Label> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  return Poset::from_relation(std::move(vertices), {});
}

Poset boolean_algebra(int n) {
  if (n < 0) throw std::invalid_argument("boolean_algebra: n must be >= 0");
  const int count = 1 << n;
  std::vector<Label> labels(count);
  for (int v = 0; v < count; ++v) {
    if (n == 0) {
      labels[v] = "-";
      continue;
    }
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
      if (v & (1 << (n - 1 - j))) s[j] = '1';
    labels[v] = s;
  }
  std::vector<Bitset> rows(count, Bitset(count));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if ((a & b) == a) rows[a].set(b);  // subset inclusion
  return Poset::from_closed_relation(std::move(labels), std::move(rows));
}

Poset m_poset(int i) {
  if (i < 1) throw std::invalid_argument("m_poset: i must be >= 1");
  auto middle = [](int k) {
    // "a", "b", ... then "m27", "m28", ... past the alphabet
    if (k < 26) return Label(1, static_cast<char>('a' + k));
    return Label("m") + std::to_string(k + 1);
  };
  std::vector<std::pair<Label, Label>> pairs;
  for (int k = 0; k < i; ++k) pairs.emplace_back("r", middle(k));
  for (int k = i; k-- > 0;) pairs.emplace_back(middle(k), "t");
  return Poset::from_pairs(pairs);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Iteratively refined vertex invariant: start from (|down|, |up|, height) and
// fold in the sorted class multisets of upper and lower covers.
std::vector<int> vertex_classes(const Poset& p) {
  const int n = p.size();
  std::vector<int> cls(n);
  {
    std::map<std::tuple<int, int, int>, int> ids;
    const auto h = p.heights();
    const auto down = p.down_sets();
    for (int v = 0; v < n; ++v) {
      auto key = std::make_tuple(down[v].count(), p.up_set(v).count(), h[v]);
      cls[v] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
  }
  std::vector<std::vector<int>> upper(n), lower(n);
  for (auto [a, b] : p.covering_indices()) {
    upper[a].push_back(b);
    lower[b].push_back(a);
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> us, ls;
      for (int w : upper[v]) us.push_back(cls[w]);
      for (int w : lower[v]) ls.push_back(cls[w]);
      std::sort(us.begin(), us.end());
      std::sort(ls.begin(), ls.end());
      auto key = std::make_tuple(cls[v], std::move(us), std::move(ls));
      next[v] = ids.emplace(std::move(key), static_cast<int>(ids.size()))
                    .first->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

bool extend_isomorphism(const Poset& p, const Poset& q,
                        const std::vector<int>& order, std::size_t depth,
                        const std::vector<std::vector<int>>& candidates,
                        std::vector<int>& image, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int w : candidates[v]) {
    if (used[w]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const int u = order[d];
      ok = p.leq(u, v) == q.leq(image[u], w) &&
           p.leq(v, u) == q.leq(w, image[u]);
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    if (extend_isomorphism(p, q, order, depth + 1, candidates, image, used))
      return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Poset& p, const Poset& q) {
  const int n = p.size();
  if (n != q.size() || p.relation_size() != q.relation_size()) return false;
  if (n == 0) return true;

  const auto cp = vertex_classes(p);
  const auto cq = vertex_classes(q);
  {
    auto sp = cp;
    auto sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return false;
  }

  std::vector<std::vector<int>> candidates(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (cp[v] == cq[w]) candidates[v].push_back(w);

  // Most-constrained vertices first.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  return extend_isomorphism(p, q, order, 0, candidates, image, used);
}

}  // namespace posets
