#include "logcy/tropical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace logcy::tropical {

int TropicalCurve::valency(int vertex) const {
  int v = 0;
  for (const auto& e : bounded_edges) v += (e.a == vertex) + (e.b == vertex);
  for (const auto& e : unbounded_edges) v += (e.vertex == vertex);
  return v;
}

namespace {

// Outward momentum (weight * primitive direction) of every edge germ at a
// vertex.
std::vector<Vec2z> outward_momenta(const TropicalCurve& curve, int vertex) {
  std::vector<Vec2z> out;
  for (const auto& e : curve.bounded_edges) {
    if (e.a != vertex && e.b != vertex) continue;
    int other = (e.a == vertex) ? e.b : e.a;
    Vec2q delta = curve.vertices[static_cast<size_t>(other)] -
                  curve.vertices[static_cast<size_t>(vertex)];
    auto [dir, len] = primitive_direction(delta);
    (void)len;
    out.push_back(Vec2z(Int(dir(0) * e.weight), Int(dir(1) * e.weight)));
  }
  for (const auto& e : curve.unbounded_edges)
    if (e.vertex == vertex)
      out.push_back(Vec2z(Int(e.direction(0) * e.weight), Int(e.direction(1) * e.weight)));
  return out;
}

}  // namespace

void validate_structure(const TropicalCurve& curve) {
  const int n = static_cast<int>(curve.vertices.size());
  for (const auto& e : curve.bounded_edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw MalformedCurveError("bounded edge references a missing vertex");
    if (e.a == e.b) throw MalformedCurveError("bounded edge is a loop");
    if (e.weight < 1) throw MalformedCurveError("edge weight must be positive");
    if (curve.vertices[static_cast<size_t>(e.a)] == curve.vertices[static_cast<size_t>(e.b)])
      throw MalformedCurveError("bounded edge endpoints coincide");
  }
  for (const auto& e : curve.unbounded_edges) {
    if (e.vertex < 0 || e.vertex >= n)
      throw MalformedCurveError("unbounded edge references a missing vertex");
    if (e.weight < 1) throw MalformedCurveError("edge weight must be positive");
    if (!is_primitive(e.direction))
      throw MalformedCurveError("stored unbounded direction is not primitive");
  }
  if (n == 0) throw MalformedCurveError("curve has no vertices");
  // Connected tree on the vertices via bounded edges.
  if (curve.bounded_edges.size() != static_cast<size_t>(n) - 1)
    throw MalformedCurveError("bounded edge count does not match a tree");
  std::vector<int> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& e : curve.bounded_edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) throw MalformedCurveError("bounded edges contain a cycle");
    root[static_cast<size_t>(ra)] = rb;
  }
}

bool check_balancing(const TropicalCurve& curve) {
  validate_structure(curve);
  for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v) {
    Vec2z sum(Int(0), Int(0));
    for (const auto& m : outward_momenta(curve, v)) sum += m;
    if (!is_zero(sum)) return false;
  }
  return true;
}

Int vertex_multiplicity(const TropicalCurve& curve, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(curve.vertices.size()))
    throw MalformedCurveError("no such vertex");
  auto momenta = outward_momenta(curve, vertex);
  if (momenta.size() != 3)
    throw HigherValencyError("vertex has valency " + std::to_string(momenta.size()) +
                             "; multiplicity is defined for trivalent vertices only");
  return abs(det2(momenta[0], momenta[1]));
}

Int curve_multiplicity(const TropicalCurve& curve) {
  Int product = 1;
  for (int v = 0; v < static_cast<int>(curve.vertices.size()); ++v)
    product *= vertex_multiplicity(curve, v);
  return product;
}

void canonicalize(TropicalCurve& curve) {
  const int n = static_cast<int>(curve.vertices.size());
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return lex_less(curve.vertices[static_cast<size_t>(i)], curve.vertices[static_cast<size_t>(j)]);
  });
  std::vector<int> rank(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  std::vector<Vec2q> verts(static_cast<size_t>(n), Vec2q(Rat(0), Rat(0)));
  for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = curve.vertices[static_cast<size_t>(order[static_cast<size_t>(i)])];
  curve.vertices = std::move(verts);
  for (auto& e : curve.bounded_edges) {
    e.a = rank[static_cast<size_t>(e.a)];
    e.b = rank[static_cast<size_t>(e.b)];
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  for (auto& e : curve.unbounded_edges) e.vertex = rank[static_cast<size_t>(e.vertex)];
  std::sort(curve.bounded_edges.begin(), curve.bounded_edges.end(),
            [](const BoundedEdge& x, const BoundedEdge& y) {
              if (x.a != y.a) return x.a < y.a;
              if (x.b != y.b) return x.b < y.b;
              return x.weight < y.weight;
            });
  std::sort(curve.unbounded_edges.begin(), curve.unbounded_edges.end(),
            [](const UnboundedEdge& x, const UnboundedEdge& y) {
              if (x.vertex != y.vertex) return x.vertex < y.vertex;
              if (x.direction != y.direction) return lex_less(x.direction, y.direction);
              return x.weight < y.weight;
            });
}

bool operator==(const TropicalCurve& a, const TropicalCurve& b) {
  if (a.vertices.size() != b.vertices.size() ||
      a.bounded_edges.size() != b.bounded_edges.size() ||
      a.unbounded_edges.size() != b.unbounded_edges.size())
    return false;
  for (size_t i = 0; i < a.vertices.size(); ++i)
    if (a.vertices[i] != b.vertices[i]) return false;
  for (size_t i = 0; i < a.bounded_edges.size(); ++i) {
    const auto& x = a.bounded_edges[i];
    const auto& y = b.bounded_edges[i];
    if (x.a != y.a || x.b != y.b || x.weight != y.weight) return false;
  }
  for (size_t i = 0; i < a.unbounded_edges.size(); ++i) {
    const auto& x = a.unbounded_edges[i];
    const auto& y = b.unbounded_edges[i];
    if (x.vertex != y.vertex || x.direction != y.direction || x.weight != y.weight) return false;
  }
  return true;
}

bool canonical_less(const TropicalCurve& a, const TropicalCurve& b) {
  const size_t nv = std::min(a.vertices.size(), b.vertices.size());
  for (size_t i = 0; i < nv; ++i) {
    if (lex_less(a.vertices[i], b.vertices[i])) return true;
    if (lex_less(b.vertices[i], a.vertices[i])) return false;
  }
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  const size_t ne = std::min(a.bounded_edges.size(), b.bounded_edges.size());
  for (size_t i = 0; i < ne; ++i) {
    const auto& x = a.bounded_edges[i];
    const auto& y = b.bounded_edges[i];
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.weight != y.weight) return x.weight < y.weight;
  }
  if (a.bounded_edges.size() != b.bounded_edges.size())
    return a.bounded_edges.size() < b.bounded_edges.size();
  const size_t nu = std::min(a.unbounded_edges.size(), b.unbounded_edges.size());
  for (size_t i = 0; i < nu; ++i) {
    const auto& x = a.unbounded_edges[i];
    const auto& y = b.unbounded_edges[i];
    if (x.vertex != y.vertex) return x.vertex < y.vertex;
    if (x.direction != y.direction) return lex_less(x.direction, y.direction);
    if (x.weight != y.weight) return x.weight < y.weight;
  }
  return a.unbounded_edges.size() < b.unbounded_edges.size();
}

Int count(const std::vector<EndCondition>& ends, const std::vector<Vec2q>& points) {
  Int total = 0;
  for (const auto& wc : enumerate(ends, points)) total += wc.multiplicity;
  return total;
}

Int kontsevich_oracle(long d) {
  if (d < 1) throw DomainError("kontsevich_oracle: degree must be positive");
  if (d > 6) throw DomainError("kontsevich_oracle: implemented for degrees 1..6");
  std::vector<Int> n(static_cast<size_t>(d) + 1, Int(0));
  n[1] = 1;
  for (long k = 2; k <= d; ++k) {
    Int acc = 0;
    for (long d1 = 1; d1 < k; ++d1) {
      long d2 = k - d1;
      Int inner = Int(d2) * binomial(static_cast<unsigned long>(3 * k - 4),
                                     static_cast<unsigned long>(3 * d1 - 2)) -
                  Int(d1) * binomial(static_cast<unsigned long>(3 * k - 4),
                                     static_cast<unsigned long>(3 * d1 - 1));
      acc += n[static_cast<size_t>(d1)] * n[static_cast<size_t>(d2)] * Int(d1) * d1 * d2 * inner;
    }
    n[static_cast<size_t>(k)] = acc;
  }
  return n[static_cast<size_t>(d)];
}

std::vector<EndCondition> degree_ends(int d) {
  if (d < 1) throw DomainError("degree must be positive");
  std::vector<EndCondition> ends;
  const Vec2z dirs[3] = {Vec2z(Int(-1), Int(0)), Vec2z(Int(0), Int(-1)), Vec2z(Int(1), Int(1))};
  for (const auto& u : dirs)
    for (int i = 0; i < d; ++i) ends.push_back(EndCondition{u, 1, std::nullopt});
  return ends;
}

std::vector<Vec2q> perturb(const std::vector<Vec2q>& points, std::uint64_t seed, long n) {
  if (n < 2) throw DomainError("perturb: magnitude parameter must be >= 2");
  Rng rng(seed);
  std::vector<Vec2q> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    // offsets a/n^2 with |a| < n, so each coordinate moves by less than 1/n
    Rat dx(rng.integer(-(n - 1), n - 1), n * n);
    Rat dy(rng.integer(-(n - 1), n - 1), n * n);
    dx.canonicalize();
    dy.canonicalize();
    out.push_back(Vec2q(p(0) + dx, p(1) + dy));
  }
  return out;
}

}  // namespace logcy::tropical
