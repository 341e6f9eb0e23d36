#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dualart/braid.hpp"
#include "dualart/error.hpp"

namespace dualart {

/// A group with exact equality and a canonical serialization.
template <class G>
concept TupleEntry = requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { inverse(a) } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
  { canonical_key(a) } -> std::convertible_to<std::string>;
};

template <TupleEntry G>
using Tuple = std::vector<G>;

template <TupleEntry G>
std::string tuple_key(const Tuple<G>& t) {
  std::string s;
  for (const auto& g : t) {
    s += canonical_key(g);
    s += '|';
  }
  return s;
}

/// Single Hurwitz move in place.
template <TupleEntry G>
void hurwitz_letter(int letter, Tuple<G>& t) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
  if (i + 1 >= t.size()) throw IndexOutOfRange("Hurwitz move outside the tuple");
  G a = t[i], b = t[i + 1];
  if (letter > 0) {
    t[i] = a * b * inverse(a);
    t[i + 1] = std::move(a);
  } else {
    t[i + 1] = inverse(b) * a * b;
    t[i] = std::move(b);
  }
}

/// beta . t, last letter first. Throws StrandMismatch.
template <TupleEntry G>
Tuple<G> hurwitz_apply(const BraidWord& braid, Tuple<G> t) {
  if (braid.strands() != t.size())
    throw StrandMismatch("braid on " + std::to_string(braid.strands()) + " strands, tuple of length " +
                         std::to_string(t.size()));
  const auto& l = braid.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) hurwitz_letter(*it, t);
  return t;
}

template <TupleEntry G>
G tuple_product(const Tuple<G>& t) {
  G acc = t.front();
  for (std::size_t i = 1; i < t.size(); ++i) acc = acc * t[i];
  return acc;
}

struct OrbitEdge {
  std::size_t from;
  int letter;
  std::size_t to;
};

/// Hurwitz orbit explored breadth first.
///
/// Nodes are ordered by BFS layer and then by canonical key. The
/// spanning-tree parent of a node is its first discoverer when the
/// previous layer is scanned in node order with moves in the order
/// sigma_1, sigma_1^-1, sigma_2, ...
template <TupleEntry G>
struct Orbit {
  std::vector<Tuple<G>> nodes;
  std::vector<std::string> keys;
  std::vector<std::size_t> layer;
  std::vector<std::size_t> parent;  // root is its own parent
  std::vector<int> parent_letter;   // 0 for the root
  std::vector<OrbitEdge> edges;
  bool complete = false;
  std::size_t bound = 0;

  std::size_t size() const { return nodes.size(); }
  const Tuple<G>& root() const { return nodes.front(); }

  std::optional<std::size_t> find(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find(const Tuple<G>& t) const { return find(tuple_key(t)); }

  /// t_v with t_v . root = nodes[v].
  BraidWord tree_word(std::size_t v) const {
    std::vector<int> letters;
    while (v != 0) {
      letters.push_back(parent_letter[v]);
      v = parent[v];
    }
    return BraidWord(nodes.front().size(), std::move(letters));
  }

  std::unordered_map<std::string, std::size_t> index_;
};

/// BFS over all 2(k-1) moves. At most cap nodes are kept; if the cap
/// cuts a layer, its nodes are kept in key order and complete is false.
template <TupleEntry G>
Orbit<G> hurwitz_orbit(const Tuple<G>& start, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("orbit cap must be positive");
  Orbit<G> o;
  o.bound = cap;
  const auto alphabet = braid_alphabet(start.size());
  auto add = [&](Tuple<G> t, std::string key, std::size_t layer, std::size_t parent, int letter) {
    o.index_.emplace(key, o.nodes.size());
    o.nodes.push_back(std::move(t));
    o.keys.push_back(std::move(key));
    o.layer.push_back(layer);
    o.parent.push_back(parent);
    o.parent_letter.push_back(letter);
  };
  add(start, tuple_key(start), 0, 0, 0);

  struct Pending {
    std::size_t from;
    int letter;
    std::string key;
  };
  std::vector<Pending> pending;
  std::size_t begin = 0, depth = 0;
  bool truncated = false;
  std::vector<bool> expanded;
  while (begin < o.nodes.size()) {
    const std::size_t end = o.nodes.size();
    struct Found {
      Tuple<G> tuple;
      std::size_t parent;
      int letter;
    };
    std::map<std::string, Found> next;
    for (std::size_t u = begin; u < end; ++u) {
      for (int letter : alphabet) {
        Tuple<G> t = o.nodes[u];
        hurwitz_letter(letter, t);
        std::string key = tuple_key(t);
        if (!o.index_.contains(key) && !next.contains(key))
          next.emplace(key, Found{std::move(t), u, letter});
        pending.push_back({u, letter, std::move(key)});
      }
    }
    ++depth;
    for (auto& [key, f] : next) {
      if (o.nodes.size() == cap) {
        truncated = true;
        break;
      }
      add(std::move(f.tuple), key, depth, f.parent, f.letter);
    }
    begin = end;
    if (truncated) break;
  }
  o.complete = !truncated;
  for (auto& p : pending)
    if (auto v = o.find(p.key)) o.edges.push_back({p.from, p.letter, *v});
  return o;
}

/// Schreier generators of the stabilizer of the root, one per non-tree
/// edge, freely reduced, trivial ones and duplicates dropped. Each is
/// re-verified. Throws IncompleteOrbit.
template <TupleEntry G>
std::vector<BraidWord> schreier_stabilizer(const Orbit<G>& o) {
  if (!o.complete) throw IncompleteOrbit("stabilizer generators need a closed orbit");
  const std::size_t k = o.root().size();
  std::vector<BraidWord> tree;
  tree.reserve(o.size());
  for (std::size_t v = 0; v < o.size(); ++v) tree.push_back(o.tree_word(v));
  std::vector<BraidWord> out;
  std::set<std::vector<int>> seen;
  for (const auto& e : o.edges) {
    BraidWord w = inverse(tree[e.to]) * BraidWord(k, {e.letter}) * tree[e.from];
    if (w.empty() || !seen.insert(w.letters()).second) continue;
    if (!(tuple_key(hurwitz_apply(w, o.root())) == o.keys.front()))
      throw std::logic_error("Schreier generator does not fix the root");
    out.push_back(std::move(w));
  }
  return out;
}

struct Connectivity {
  bool connected = false;
  /// the orbit of the first tuple closed within the cap
  bool orbit_complete = false;
  /// witnesses[i] carries tuples[0] to tuples[i] when found
  std::vector<std::optional<BraidWord>> witnesses;
};

/// BFS from tuples[0] with at most cap nodes.
template <TupleEntry G>
Connectivity connected_by_moves(const std::vector<Tuple<G>>& tuples, std::size_t cap) {
  Connectivity c;
  if (tuples.empty()) {
    c.connected = true;
    c.orbit_complete = true;
    return c;
  }
  const auto o = hurwitz_orbit(tuples.front(), cap);
  c.orbit_complete = o.complete;
  c.connected = true;
  for (const auto& t : tuples) {
    if (t.size() != tuples.front().size()) throw StrandMismatch("tuples of different lengths");
    if (auto v = o.find(t)) {
      c.witnesses.emplace_back(o.tree_word(*v));
    } else {
      c.witnesses.emplace_back(std::nullopt);
      c.connected = false;
    }
  }
  return c;
}

}  // namespace dualart
