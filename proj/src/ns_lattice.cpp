#include "cohfm/ns_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "cohfm/error.hpp"

namespace cohfm {

bool operator==(const NSClass& a, const NSClass& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

NSClass operator+(const NSClass& a, const NSClass& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

NSClass operator-(const NSClass& a) { return {-a.x, -a.y, -a.z}; }

NSClass operator*(const Rat& s, const NSClass& a) { return {s * a.x, s * a.y, s * a.z}; }

Rat ns_intersect(const NSClass& u, const NSClass& v) {
  // Gram matrix [[0,1,1],[1,0,1],[1,1,0]].
  return u.x * (v.y + v.z) + u.y * (v.x + v.z) + u.z * (v.x + v.y);
}

NSClass slope_curve(long a, long b) {
  if (std::gcd(a, b) != 1) throw Error("slope_curve: (a, b) must be coprime");
  return {Rat(a) * Rat(a - b), Rat(b) * Rat(b - a), Rat(a) * Rat(b)};
}

SL2Element::SL2Element(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1) throw Error("SL2 element must have determinant 1");
}

SL2Element operator*(const SL2Element& g, const SL2Element& h) {
  // Matrix product in the column-action convention [[a,c],[b,d]]: acting by
  // g*h means acting by h first, then by g.
  return SL2Element(g.a * h.a + g.c * h.b, g.b * h.a + g.d * h.b,
                    g.a * h.c + g.c * h.d, g.b * h.c + g.d * h.d);
}

namespace {

std::array<long, 3> slope_triple(long a, long b) {
  return {a * (a - b), b * (b - a), a * b};
}

}  // namespace

NSMatrix induced_action(const SL2Element& g) {
  const auto e = slope_triple(g.a, g.b);
  const auto f = slope_triple(g.c, g.d);
  const auto d = slope_triple(g.a + g.c, g.b + g.d);
  return {{{e[0], f[0], d[0]}, {e[1], f[1], d[1]}, {e[2], f[2], d[2]}}};
}

NSClass apply_ns(const NSMatrix& m, const NSClass& v) {
  return {Rat(m[0][0]) * v.x + Rat(m[0][1]) * v.y + Rat(m[0][2]) * v.z,
          Rat(m[1][0]) * v.x + Rat(m[1][1]) * v.y + Rat(m[1][2]) * v.z,
          Rat(m[2][0]) * v.x + Rat(m[2][1]) * v.y + Rat(m[2][2]) * v.z};
}

NSTriple normalize_primitive(NSTriple t) {
  long g = std::gcd(std::gcd(std::abs(t[0]), std::abs(t[1])), std::abs(t[2]));
  if (g > 1)
    for (long& v : t) v /= g;
  for (long v : t) {
    if (v > 0) break;
    if (v < 0) {
      for (long& w : t) w = -w;
      break;
    }
  }
  return t;
}

NSTriple orient_effective(NSTriple t) {
  // Pairing with E + F + Delta, an interior class of the positive cone.
  const long pairing = 2 * (t[0] + t[1] + t[2]);
  if (pairing < 0)
    for (long& v : t) v = -v;
  return t;
}

namespace {

bool on_cone_boundary(const NSTriple& t) {
  return t[0] * t[1] + t[0] * t[2] + t[1] * t[2] == 0;
}

long max_abs(const NSTriple& t) {
  return std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
}

NSTriple apply_int(const NSMatrix& m, const NSTriple& v) {
  NSTriple out{};
  for (int i = 0; i < 3; ++i)
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

}  // namespace

std::vector<NSTriple> cone_generators(long height) {
  if (height < 1) throw Error("cone_generators: height must be at least 1");
  std::set<NSTriple> found;
  for (long x = -height; x <= height; ++x)
    for (long y = -height; y <= height; ++y)
      for (long z = -height; z <= height; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        NSTriple t{x, y, z};
        if (!on_cone_boundary(t)) continue;
        const NSTriple n = normalize_primitive(t);
        if (n != t) continue;  // keep one representative per ray
        found.insert(t);
      }
  return {found.begin(), found.end()};
}

OrbitReport orbit_transitivity(long height) {
  const std::vector<NSTriple> targets = cone_generators(height);

  // Standard generators and their inverses; the walk between any two
  // coprime slope pairs stays well inside the exploration cap.
  const SL2Element s(0, -1, 1, 0), s_inv(0, 1, -1, 0), t(1, 1, 0, 1), t_inv(1, -1, 0, 1);
  const std::array<NSMatrix, 4> moves = {induced_action(s), induced_action(s_inv),
                                         induced_action(t), induced_action(t_inv)};
  const long cap = 4 * (height + 1) * (height + 1);

  std::set<NSTriple> visited;
  std::deque<NSTriple> frontier;
  const NSTriple start{1, 0, 0};
  visited.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const NSTriple cur = frontier.front();
    frontier.pop_front();
    for (const NSMatrix& m : moves) {
      const NSTriple next = normalize_primitive(apply_int(m, cur));
      if (max_abs(next) > cap) continue;
      if (visited.insert(next).second) frontier.push_back(next);
    }
  }

  OrbitReport report;
  report.height = height;
  report.states_explored = visited.size();
  for (const NSTriple& g : targets) {
    if (visited.count(normalize_primitive(g)))
      report.reached.push_back(g);
    else
      report.missed.push_back(g);
  }
  return report;
}

SchwarzReport reverse_schwarz_check(long height) {
  SchwarzReport report;
  report.height = height;

  std::vector<NSTriple> gens;
  for (const NSTriple& g : cone_generators(height)) gens.push_back(orient_effective(g));
  report.generators = gens.size();

  // Effective classes: nonnegative combinations of total multiplicity 1..3.
  std::set<NSTriple> classes;
  const std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i) {
    classes.insert(gens[i]);
    for (std::size_t j = i; j < n; ++j) {
      NSTriple two{gens[i][0] + gens[j][0], gens[i][1] + gens[j][1], gens[i][2] + gens[j][2]};
      classes.insert(two);
      for (std::size_t k = j; k < n; ++k)
        classes.insert({two[0] + gens[k][0], two[1] + gens[k][1], two[2] + gens[k][2]});
    }
  }
  report.classes = classes.size();

  auto dot = [](const NSTriple& u, const NSTriple& v) -> long {
    return u[0] * (v[1] + v[2]) + u[1] * (v[0] + v[2]) + u[2] * (v[0] + v[1]);
  };
  for (auto it = classes.begin(); it != classes.end(); ++it)
    for (auto jt = it; jt != classes.end(); ++jt) {
      ++report.pairs_checked;
      const long dh = dot(*it, *jt);
      const long dd = dot(*it, *it);
      const long hh = dot(*jt, *jt);
      if (dh * dh < dd * hh)
        report.violations.push_back({*it, *jt, Rat(dh) * Rat(dh), Rat(dd) * Rat(hh)});
    }
  return report;
}

}  // namespace cohfm
