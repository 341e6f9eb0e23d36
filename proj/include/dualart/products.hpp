#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dualart/artin.hpp"
#include "dualart/braid.hpp"
#include "dualart/coxeter.hpp"
#include "dualart/interval.hpp"
#include "dualart/verdict.hpp"

namespace dualart {

enum class ProductKind { Leaf, Free, Direct };

std::string to_string(ProductKind k);

/// Tree of free and direct products over leaf Coxeter systems.
///
/// The composed system lists the generators of the factors one block
/// after another; its order is the concatenation of the factor orders,
/// so h = h_1 h_2 ... .
class ProductSystem {
 public:
  static ProductSystem leaf(CoxeterMatrix m, std::string name = {});
  /// Throws InvalidMatrix for an empty factor list.
  static ProductSystem compose(std::vector<ProductSystem> factors, ProductKind kind);

  ProductKind kind() const { return kind_; }
  const std::vector<ProductSystem>& factors() const { return factors_; }
  const CoxeterMatrix& composed() const { return composed_; }
  std::size_t rank() const { return composed_.rank(); }
  /// First composed position of each factor block.
  std::vector<std::size_t> splits() const;
  /// "free(direct(A1,A1),A1)"
  std::string describe() const;

  /// For products built from a graph: vertex (0-based) of each composed
  /// position.
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  ProductSystem with_vertices(std::vector<std::size_t> vertices) const;

 private:
  ProductKind kind_ = ProductKind::Leaf;
  std::vector<ProductSystem> factors_;
  CoxeterMatrix composed_;
  std::string name_;
  std::vector<std::size_t> vertices_;
};

/// "A1", "A2", "B2", "G2", "I2(m)", "An" for paths of 3s, else "W<n>".
std::string system_name(const CoxeterMatrix& m);

/// Right-angled graph product of copies of A1 whose connected components
/// are complete graphs on contiguous vertex ranges: a free product of
/// direct products. Throws InvalidGraphShape.
ProductSystem compose_graph(const std::vector<std::vector<bool>>& adjacency);

/// Right-angled system of a graph written as nested free and direct
/// products (disconnected graph or disconnected complement at each
/// step). Throws UnsupportedSystem when some induced subgraph is the
/// path on four vertices.
ProductSystem decompose_right_angled(const std::vector<std::vector<bool>>& adjacency);

/// Matrix with m = 2 on edges and infinity elsewhere.
CoxeterMatrix right_angled_matrix(const std::vector<std::vector<bool>>& adjacency);

/// Stabilizer generators of the factors embedded at their block offsets.
/// For free products these generate H; for direct products they
/// generate a subgroup of it. Throws UnsupportedKind for a leaf.
std::vector<BraidWord> stabilizer_product_generators(
    const ProductSystem& ps, const std::vector<std::vector<BraidWord>>& factor_gens);
/// Same, with factor generators computed from their orbits (recursively).
/// Throws IncompleteOrbit when a leaf orbit exceeds cap.
std::vector<BraidWord> stabilizer_product_generators(const ProductSystem& ps, std::size_t cap);

enum class BoundedOutcome { ProvenWithinBound, Refuted };

struct BoundedCheck {
  BoundedOutcome outcome = BoundedOutcome::ProvenWithinBound;
  std::optional<BraidWord> witness;
  std::size_t braids_checked = 0;
  std::size_t stabilizing = 0;
};

/// Every reduced braid of length <= len_cap fixing (s_1..s_n) keeps each
/// block of beta . (f_1..f_n) inside the free factor of its block.
/// Throws UnsupportedKind unless kind() is Free.
BoundedCheck verify_stabilizer_product(const ProductSystem& ps, std::size_t len_cap);

struct Caps {
  std::size_t orbit = 200;
  std::size_t search = 200;
  std::size_t braid_len = 5;
};

PanTransitivity verify_product_pan_transitive(const ProductSystem& ps, const Caps& caps);

struct MainTheoremReport {
  std::string system;
  bool spherical = false;
  WellStabilized well_stabilized;
  Verdict pan_transitive = Verdict::Inconclusive;
  Caps caps;
  bool hypotheses_proven() const {
    return well_stabilized.verdict == Verdict::Proven && pan_transitive == Verdict::Proven;
  }
};

MainTheoremReport verify_main_theorem(const ProductSystem& ps, const Caps& caps);

std::string report_to_json(const MainTheoremReport& r);
std::string report_to_text(const MainTheoremReport& r);

}  // namespace dualart
