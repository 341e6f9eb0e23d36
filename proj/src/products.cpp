#include "dualart/products.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "dualart/error.hpp"
#include "dualart/free_group.hpp"
#include "dualart/hurwitz.hpp"
#include "json.hpp"

namespace dualart {

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::Leaf: return "leaf";
    case ProductKind::Free: return "free";
    case ProductKind::Direct: return "direct";
  }
  return "?";
}

std::string system_name(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  if (n == 1) return "A1";
  if (n == 2) {
    switch (m(0, 1)) {
      case kInfinity: return "I2(inf)";
      case 2: return "A1xA1";
      case 3: return "A2";
      case 4: return "B2";
      case 6: return "G2";
      default: return "I2(" + std::to_string(m(0, 1)) + ")";
    }
  }
  bool path = true;
  for (std::size_t i = 0; i < n && path; ++i)
    for (std::size_t j = i + 1; j < n && path; ++j)
      path = m(i, j) == (j == i + 1 ? 3u : 2u);
  if (path) return "A" + std::to_string(n);
  return "W" + std::to_string(n);
}

ProductSystem ProductSystem::leaf(CoxeterMatrix m, std::string name) {
  ProductSystem p;
  p.kind_ = ProductKind::Leaf;
  p.name_ = name.empty() ? system_name(m) : std::move(name);
  p.composed_ = std::move(m);
  return p;
}

ProductSystem ProductSystem::compose(std::vector<ProductSystem> factors, ProductKind kind) {
  if (kind == ProductKind::Leaf) throw UnsupportedKind("compose needs free or direct");
  if (factors.empty()) throw InvalidMatrix("product of no factors");
  std::size_t n = 0;
  for (const auto& f : factors) n += f.rank();
  const unsigned cross = kind == ProductKind::Free ? kInfinity : 2u;
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n, cross));
  std::vector<std::size_t> order;
  std::size_t off = 0;
  for (const auto& f : factors) {
    const auto& m = f.composed();
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t j = 0; j < m.rank(); ++j) rows[off + i][off + j] = m(i, j);
    for (auto o : m.order()) order.push_back(o + off);
    off += m.rank();
  }
  ProductSystem p;
  p.kind_ = kind;
  p.composed_ = CoxeterMatrix(std::move(rows), std::move(order));
  p.factors_ = std::move(factors);
  return p;
}

ProductSystem ProductSystem::with_vertices(std::vector<std::size_t> vertices) const {
  ProductSystem p = *this;
  p.vertices_ = std::move(vertices);
  return p;
}

std::vector<std::size_t> ProductSystem::splits() const {
  std::vector<std::size_t> s;
  std::size_t off = 0;
  for (const auto& f : factors_) {
    s.push_back(off);
    off += f.rank();
  }
  if (s.empty()) s.push_back(0);
  return s;
}

std::string ProductSystem::describe() const {
  if (kind_ == ProductKind::Leaf) return name_;
  std::string s = to_string(kind_) + "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ",";
    s += factors_[i].describe();
  }
  return s + ")";
}

namespace {

void check_graph(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) throw InvalidGraphShape("empty graph");
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() != n) throw InvalidGraphShape("adjacency matrix is not square");
    if (adj[i][i]) throw InvalidGraphShape("loop at vertex " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j] != adj[j][i]) throw InvalidGraphShape("adjacency matrix is not symmetric");
  }
}

// components of the induced subgraph on vs, flipped when complement is set
std::vector<std::vector<std::size_t>> components(const std::vector<std::vector<bool>>& adj,
                                                 const std::vector<std::size_t>& vs,
                                                 bool complement) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(adj.size(), false);
  for (auto s : vs) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : vs)
        if (v != u && !seen[v] && adj[u][v] != complement) {
          seen[v] = true;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

const CoxeterMatrix& a1() {
  static const CoxeterMatrix m(std::vector<std::vector<unsigned>>{{1u}});
  return m;
}

ProductSystem cograph(const std::vector<std::vector<bool>>& adj, const std::vector<std::size_t>& vs) {
  if (vs.size() == 1) return ProductSystem::leaf(a1()).with_vertices(vs);
  auto parts = components(adj, vs, false);
  ProductKind kind = ProductKind::Free;
  if (parts.size() == 1) {
    parts = components(adj, vs, true);
    kind = ProductKind::Direct;
    if (parts.size() == 1)
      throw UnsupportedSystem("the graph contains an induced path on four vertices (line graph)");
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }
  std::vector<ProductSystem> kids;
  std::vector<std::size_t> verts;
  for (const auto& p : parts) {
    kids.push_back(cograph(adj, p));
    const auto& kv = kids.back().vertices();
    verts.insert(verts.end(), kv.begin(), kv.end());
  }
  return ProductSystem::compose(std::move(kids), kind).with_vertices(std::move(verts));
}

}  // namespace

CoxeterMatrix right_angled_matrix(const std::vector<std::vector<bool>>& adjacency) {
  check_graph(adjacency);
  const std::size_t n = adjacency.size();
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n, kInfinity));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = i == j ? 1u : (adjacency[i][j] ? 2u : kInfinity);
  return CoxeterMatrix(std::move(rows));
}

ProductSystem compose_graph(const std::vector<std::vector<bool>>& adjacency) {
  check_graph(adjacency);
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::vector<ProductSystem> kids;
  for (const auto& comp : components(adjacency, all, false)) {
    const std::size_t lo = comp.front(), hi = comp.back();
    if (hi - lo + 1 != comp.size())
      throw InvalidGraphShape("component of vertex " + std::to_string(lo + 1) +
                              " is not a contiguous range");
    for (auto u : comp)
      for (auto v : comp)
        if (u != v && !adjacency[u][v])
          throw InvalidGraphShape("component of vertex " + std::to_string(lo + 1) +
                                  " is not a complete graph");
    if (comp.size() == 1) {
      kids.push_back(ProductSystem::leaf(a1()));
    } else {
      std::vector<ProductSystem> leaves(comp.size(), ProductSystem::leaf(a1()));
      kids.push_back(ProductSystem::compose(std::move(leaves), ProductKind::Direct));
    }
  }
  ProductSystem out = kids.size() == 1 ? kids.front()
                                       : ProductSystem::compose(std::move(kids), ProductKind::Free);
  return out.with_vertices(all);
}

ProductSystem decompose_right_angled(const std::vector<std::vector<bool>>& adjacency) {
  check_graph(adjacency);
  std::vector<std::size_t> all(adjacency.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return cograph(adjacency, all);
}

std::vector<BraidWord> stabilizer_product_generators(
    const ProductSystem& ps, const std::vector<std::vector<BraidWord>>& factor_gens) {
  if (ps.kind() == ProductKind::Leaf) throw UnsupportedKind("a leaf is not a product");
  if (factor_gens.size() != ps.factors().size())
    throw RankMismatch("one generator list per factor is required");
  const auto offs = ps.splits();
  std::vector<BraidWord> out;
  for (std::size_t f = 0; f < factor_gens.size(); ++f)
    for (const auto& g : factor_gens[f]) {
      if (g.strands() != ps.factors()[f].rank())
        throw StrandMismatch("generator of factor " + std::to_string(f + 1));
      out.push_back(g.embedded(offs[f], ps.rank()));
    }
  return out;
}

std::vector<BraidWord> stabilizer_product_generators(const ProductSystem& ps, std::size_t cap) {
  if (ps.kind() == ProductKind::Leaf) throw UnsupportedKind("a leaf is not a product");
  std::vector<std::vector<BraidWord>> gens;
  for (const auto& f : ps.factors()) {
    const auto sys = CoxeterSystem::create(f.composed());
    const auto o = hurwitz_orbit(sys->coxeter_tuple(), cap);
    if (o.complete) gens.push_back(schreier_stabilizer(o));
    else if (f.kind() != ProductKind::Leaf) gens.push_back(stabilizer_product_generators(f, cap));
    else throw IncompleteOrbit("factor " + f.describe() + " has an orbit above the cap");
  }
  return stabilizer_product_generators(ps, gens);
}

BoundedCheck verify_stabilizer_product(const ProductSystem& ps, std::size_t len_cap) {
  if (ps.kind() != ProductKind::Free) throw UnsupportedKind("only free products are covered");
  BoundedCheck out;
  const std::size_t n = ps.rank();
  const auto sys = CoxeterSystem::create(ps.composed());
  const auto root = sys->coxeter_tuple();
  const std::string root_key = tuple_key(root);
  auto blocks = ps.splits();
  blocks.push_back(n);
  const auto alphabet = braid_alphabet(n);
  std::deque<int> word;
  auto supported = [&](const std::vector<FreeWord>& ft) {
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b)
      for (std::size_t p = blocks[b]; p < blocks[b + 1]; ++p)
        if (!ft[p].supported_on(blocks[b] + 1, blocks[b + 1])) return false;
    return true;
  };
  // words grow at the front, so each step is one more Hurwitz move
  std::function<bool(const Tuple<GroupElement>&, const std::vector<FreeWord>&)> dfs =
      [&](const Tuple<GroupElement>& wt, const std::vector<FreeWord>& ft) {
        ++out.braids_checked;
        if (!word.empty() && tuple_key(wt) == root_key) {
          ++out.stabilizing;
          if (!supported(ft)) {
            out.outcome = BoundedOutcome::Refuted;
            out.witness = BraidWord(n, std::vector<int>(word.begin(), word.end()));
            return false;
          }
        }
        if (word.size() == len_cap) return true;
        for (int l : alphabet) {
          if (!word.empty() && word.front() == -l) continue;
          auto wt2 = wt;
          auto ft2 = ft;
          hurwitz_letter(l, wt2);
          hurwitz_letter(l, ft2);
          word.push_front(l);
          const bool go = dfs(wt2, ft2);
          word.pop_front();
          if (!go) return false;
        }
        return true;
      };
  dfs(root, free_basis(n));
  return out;
}

PanTransitivity verify_product_pan_transitive(const ProductSystem& ps, const Caps& caps) {
  const auto sys = CoxeterSystem::create(ps.composed());
  return pan_transitive_check(build_interval(sys, caps.orbit), caps.search);
}

MainTheoremReport verify_main_theorem(const ProductSystem& ps, const Caps& caps) {
  MainTheoremReport r;
  r.system = ps.describe();
  r.caps = caps;
  r.spherical = CoxeterSystem::create(ps.composed())->is_spherical();
  try {
    r.well_stabilized = well_stabilized_check(ps.composed(), caps.orbit);
  } catch (const UnsupportedSystem&) {
    r.well_stabilized.verdict = Verdict::Inconclusive;
    r.well_stabilized.method = "unsupported";
  }
  r.pan_transitive = verify_product_pan_transitive(ps, caps).overall;
  return r;
}

namespace {

const char* kScope =
    "covers only the Coxeter element given by the concatenated factor orders; "
    "bounded verdicts are not proofs";

}  // namespace

std::string report_to_json(const MainTheoremReport& r) {
  using nlohmann::json;
  json gens = json::array();
  for (const auto& g : r.well_stabilized.generators) gens.push_back(g.letters());
  json ws{{"verdict", to_string(r.well_stabilized.verdict)},
          {"method", r.well_stabilized.method},
          {"orbit_nodes", r.well_stabilized.orbit_size},
          {"orbit_complete", r.well_stabilized.orbit_complete},
          {"generators", gens}};
  if (r.well_stabilized.witness) ws["witness"] = r.well_stabilized.witness->letters();
  return json{{"schema", "dualart.report/1"},
              {"system", r.system},
              {"spherical", r.spherical},
              {"caps", {{"orbit", r.caps.orbit}, {"search", r.caps.search}, {"braid_len", r.caps.braid_len}}},
              {"well_stabilized", ws},
              {"pan_transitive", to_string(r.pan_transitive)},
              {"hypotheses_proven", r.hypotheses_proven()},
              {"scope", kScope}}
      .dump(2);
}

std::string report_to_text(const MainTheoremReport& r) {
  std::string s = "system: " + r.system + (r.spherical ? " (finite)" : " (infinite)") + "\n";
  s += "well-stabilized: " + to_string(r.well_stabilized.verdict) + " [" + r.well_stabilized.method +
       ", " + std::to_string(r.well_stabilized.generators.size()) + " generators]\n";
  if (r.well_stabilized.witness) s += "  witness: " + r.well_stabilized.witness->to_string() + "\n";
  s += "pan-transitive: " + to_string(r.pan_transitive) + "\n";
  s += "caps: orbit " + std::to_string(r.caps.orbit) + ", search " + std::to_string(r.caps.search) + "\n";
  s += std::string("hypotheses: ") + (r.hypotheses_proven() ? "both proven" : "not both proven") + "\n";
  s += std::string("scope: ") + kScope + "\n";
  return s;
}

}  // namespace dualart
