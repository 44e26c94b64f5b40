#pragma once

#include "britton/tower.hpp"

namespace britton {

/// Finite-ball exploration of the tree on which H2 acts, viewed as the
/// HNN extension of H1 with stable letter t. Vertices are cosets x H1,
/// edges are cosets x <s>; the edge x <s> connects x H1 and x t H1.
class BassSerreTree {
 public:
  /// Canonical coset key: the reduced edge path from the base vertex.
  /// Each step is (sign of t, transversal code): sign +1 uses the 18
  /// representatives of H1/<s> (H0, shift-free), sign -1 the 54
  /// representatives of H1/<s^3> (s^r h0, r in 0..2). Edges carry one
  /// more H1/<s> code for the final <s>-coset.
  struct Label {
    std::vector<std::pair<int, int>> path;
    int final_rep = -1;  // 0..17 for edges, -1 for vertices
    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const {
      return std::tie(path, final_rep) < std::tie(o.path, o.final_rep);
    }
  };

  explicit BassSerreTree(const Tower& t) : tower_(&t) {}

  /// Coset equality by definition: x^-1 y lands in H1 (vertices) or in
  /// <s> (edges), decided by the H2 solver and the <s> oracle.
  bool vertex_equal(const Word& x, const Word& y) const;
  bool edge_equal(const Word& x, const Word& y) const;

  /// Left action: does g fix the coset?
  bool fixes_vertex(const Word& g, const Word& vertex_rep) const;
  bool fixes_edge(const Word& g, const Word& edge_rep) const;

  Label vertex_label(const Word& rep) const;
  Label edge_label(const Word& rep) const;

  struct Ball {
    struct Vertex {
      Label label;
      Word rep;
      int depth;
    };
    struct Edge {
      Label label;
      Word rep;
      int near;  // vertex indices
      int far;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int degree(int vertex_index) const;
    /// Connectivity via BFS over the edge list plus the |E| = |V| - 1
    /// count; independent of how the ball was assembled.
    bool is_tree() const;
  };

  /// BFS ball around the base vertex H1. Neighbor generation follows the
  /// transversals above: 18 + 54 = 72 candidate edges per vertex.
  Ball ball(int radius, int max_radius = 2) const;

  std::string to_dot(const Ball& b) const;

 private:
  Label label_of(const Element& x, bool edge) const;

  const Tower* tower_;
};

}  // namespace britton
