#include "spinspec/ktype_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinspec {

bool operator==(const TransitionEdge& a, const TransitionEdge& b) {
  return a.src == b.src && a.dst == b.dst && a.x == b.x;
}

bool KTypeGraph::has_node(const KTypeId& id) const {
  return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

std::vector<KTypeId> enumerate_ktypes(int n, int k, int jmax) {
  if (n < 3 || n % 2 == 0 || k < 0 || k > (n - 1) / 2) {
    throw std::invalid_argument("enumerate_ktypes needs odd n >= 3 and 0 <= k <= (n-1)/2");
  }
  if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
  std::vector<KTypeId> out;
  for (int j = 0; j <= jmax; ++j) {
    if (k == 0) {
      out.push_back(KTypeId{n, k, j, std::nullopt, +1});
      out.push_back(KTypeId{n, k, j, std::nullopt, -1});
    } else {
      for (int q = 0; q <= 1; ++q) {
        out.push_back(KTypeId{n, k, j, q, +1});
        out.push_back(KTypeId{n, k, j, q, -1});
      }
    }
  }
  return out;
}

Rational edge_datum(const KTypeId& src, const KTypeId& dst) {
  validate_ktype(src);
  validate_ktype(dst);
  if (src.n != dst.n || src.k != dst.k) {
    throw std::invalid_argument("edge_datum: " + src.str() + " and " +
                                dst.str() + " live on different bundles");
  }
  const int n = src.n;
  const int k = src.k;
  const bool j_step = dst.j == src.j + 1 || dst.j == src.j - 1;
  const bool q_toggle = k >= 1 && *dst.q != *src.q;
  const bool eps_flip = dst.eps != src.eps;
  const int changes = int(j_step) + int(q_toggle) + int(eps_flip);
  if (changes != 1 || (!j_step && dst.j != src.j)) {
    throw std::invalid_argument("edge_datum: " + src.str() + " -> " +
                                dst.str() + " is not an adjacency");
  }
  if (eps_flip) return Rational(0);
  if (q_toggle) {
    // x = n/2 - k + 1/2, an integer for odd n; negated for q: 1 -> 0.
    Rational x = make_rational(n - 2 * k + 1, 2);
    return *dst.q == 1 ? x : -x;
  }
  // j-step: x = J + 1/2 (Case I) or L + 1/2 (Case II) at the lower of the
  // two j's, negated when descending.
  const int jlow = std::min(src.j, dst.j);
  Rational x = (k == 0) ? make_rational(n + 1, 2) + jlow
                        : make_rational(n + 3, 2) + jlow;
  return dst.j > src.j ? x : -x;
}

KTypeGraph build_graph(int n, int k, int jmax) {
  KTypeGraph g;
  g.n = n;
  g.k = k;
  g.jmax = jmax;
  g.nodes = enumerate_ktypes(n, k, jmax);
  g.base = (k == 0) ? KTypeId{n, 0, 0, std::nullopt, +1}
                    : KTypeId{n, k, 0, 1, +1};
  for (const KTypeId& src : g.nodes) {
    // Per-source emission order: up, down, q-toggle, eps-flip.
    if (src.j + 1 <= jmax) {
      KTypeId up = src;
      up.j += 1;
      g.edges.push_back({src, up, edge_datum(src, up)});
    }
    if (src.j - 1 >= 0) {
      KTypeId down = src;
      down.j -= 1;
      g.edges.push_back({src, down, edge_datum(src, down)});
    }
    if (k >= 1) {
      KTypeId tog = src;
      tog.q = 1 - *src.q;
      g.edges.push_back({src, tog, edge_datum(src, tog)});
    }
    KTypeId flip = src;
    flip.eps = -src.eps;
    g.edges.push_back({src, flip, edge_datum(src, flip)});
  }
  return g;
}

}  // namespace spinspec
