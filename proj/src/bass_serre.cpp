#include "britton/bass_serre.hpp"

#include <map>
#include <queue>
#include <sstream>

namespace britton {

namespace {

int h0_code(const H0Elem& h) { return h.flip * 9 + h.rot; }

int mod3(const Int& m) {
  Int r = m % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r);
}

}  // namespace

bool BassSerreTree::vertex_equal(const Word& x, const Word& y) const {
  const auto& h2 = tower_->h2();
  const Element d = h2.mul(h2.inv(h2.eval(x)), h2.eval(y));
  return HnnSolver::tail_length(d) == 0;
}

bool BassSerreTree::edge_equal(const Word& x, const Word& y) const {
  const auto& h2 = tower_->h2();
  const Element d = h2.mul(h2.inv(h2.eval(x)), h2.eval(y));
  if (HnnSolver::tail_length(d) != 0) return false;
  return tower_->oracle(OracleId::SInH1)
      .exponent_of(h2.head_of(d))
      .has_value();
}

bool BassSerreTree::fixes_vertex(const Word& g, const Word& rep) const {
  return vertex_equal(g * rep, rep);
}

bool BassSerreTree::fixes_edge(const Word& g, const Word& rep) const {
  return edge_equal(g * rep, rep);
}

// Walks the reduced Britton form left to right, splitting each H1 part as
// (transversal rep) * (subgroup element) and transporting the subgroup
// element across the next t^sign:  s^m t = t s^(3m),  s^(3j) t^-1 = t^-1 s^j.
BassSerreTree::Label BassSerreTree::label_of(const Element& x,
                                             bool edge) const {
  const auto& e = x.as<HnnElem>();
  Label label;
  H1Elem carry = e.head.as<H1Elem>();

  const auto& tail = e.tail;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const int sign = tail[i].sign;
    Int transported;
    if (sign > 0) {
      // carry = s^m h0 = phi^-m(h0) * s^m; rep has zero shift
      const H0Elem rep = h0_phi(carry.tail, -carry.shift);
      label.path.emplace_back(+1, h0_code(rep));
      transported = 3 * carry.shift;
    } else {
      // carry = s^m h0 = (s^(m mod 3) h0) * s^(3j); rep has shift in 0..2
      const int r = mod3(carry.shift);
      label.path.emplace_back(-1, r * 18 + h0_code(carry.tail));
      transported = (carry.shift - r) / 3;
    }
    const H1Elem next = tail[i].coef.as<H1Elem>();
    // carry' = s^transported * next = s^(transported + n) h0
    carry = H1Elem{transported + next.shift, next.tail};
  }
  if (edge) {
    const H0Elem rep = h0_phi(carry.tail, -carry.shift);
    label.final_rep = h0_code(rep);
  }
  return label;
}

BassSerreTree::Label BassSerreTree::vertex_label(const Word& rep) const {
  return label_of(tower_->h2().eval(rep), false);
}

BassSerreTree::Label BassSerreTree::edge_label(const Word& rep) const {
  return label_of(tower_->h2().eval(rep), true);
}

int BassSerreTree::Ball::degree(int vertex_index) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.near == vertex_index || e.far == vertex_index) ++d;
  return d;
}

bool BassSerreTree::Ball::is_tree() const {
  if (vertices.empty()) return false;
  if (edges.size() != vertices.size() - 1) return false;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.near].push_back(e.far);
    adj[e.far].push_back(e.near);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  return reached == vertices.size();
}

BassSerreTree::Ball BassSerreTree::ball(int radius, int max_radius) const {
  if (radius < 0 || radius > max_radius)
    throw BudgetError("ball radius " + std::to_string(radius) +
                      " exceeds the configured maximum " +
                      std::to_string(max_radius));
  Ball out;
  std::map<Label, int> vertex_index;
  std::map<Label, int> edge_index;

  const Word base;
  out.vertices.push_back({vertex_label(base), base, 0});
  vertex_index[out.vertices[0].label] = 0;

  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int vi = frontier.front();
    frontier.pop();
    if (out.vertices[vi].depth >= radius) continue;
    const Word x = out.vertices[vi].rep;

    struct Candidate {
      Word edge_rep;
      Word far_rep;
    };
    std::vector<Candidate> candidates;
    // edges x h <s> with h over the 18 H1/<s> representatives; the far
    // endpoint of x h <s> is x h t H1
    for (const H0Elem& h : h0_all_elements()) {
      const Word rep = x * h0_to_word(h);
      candidates.push_back({rep, rep * Word::parse("t")});
    }
    // edges x g t^-1 <s> with g over the 54 H1/<s^3> representatives;
    // the far endpoint is x g t^-1 H1
    for (int r = 0; r < 3; ++r)
      for (const H0Elem& h : h0_all_elements()) {
        const Word rep =
            x * Word::power('s', r) * h0_to_word(h) * Word::parse("t^-1");
        candidates.push_back({rep, rep});
      }

    for (auto& cand : candidates) {
      const Label el = edge_label(cand.edge_rep);
      if (edge_index.count(el)) continue;  // the edge back to the parent
      const Label fl = vertex_label(cand.far_rep);
      int far;
      if (auto it = vertex_index.find(fl); it != vertex_index.end()) {
        far = it->second;
      } else {
        far = static_cast<int>(out.vertices.size());
        out.vertices.push_back({fl, cand.far_rep,
                                out.vertices[vi].depth + 1});
        vertex_index[fl] = far;
        frontier.push(far);
      }
      edge_index[el] = static_cast<int>(out.edges.size());
      out.edges.push_back({el, cand.edge_rep, vi, far});
    }
  }
  return out;
}

std::string BassSerreTree::to_dot(const Ball& b) const {
  std::ostringstream os;
  os << "graph bass_serre_ball {\n";
  os << "  layout=twopi;\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const std::string w = b.vertices[i].rep.str();
    os << "  v" << i << " [label=\"" << (w.empty() ? "1" : w) << " H1\"];\n";
  }
  for (const auto& e : b.edges) {
    const std::string w = e.rep.str();
    os << "  v" << e.near << " -- v" << e.far << " [label=\""
       << (w.empty() ? "1" : w) << " <s>\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace britton
