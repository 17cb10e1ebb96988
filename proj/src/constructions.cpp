#include "rotor/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "rotor/products.hpp"

namespace rotor {

std::size_t CellComplexBuilder::add_edge(long tail, long head) {
  tails_.push_back(tail);
  heads_.push_back(head);
  return tails_.size() - 1;
}

void CellComplexBuilder::add_face(const std::vector<std::pair<std::size_t, int>>& boundary) {
  faces_.push_back(boundary);
}

IntMatrix CellComplexBuilder::hx() const {
  IntMatrix m(faces_.size(), num_edges());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (auto [e, s] : faces_[f]) m(f, e) += s;
  return m;
}

IntMatrix CellComplexBuilder::hz() const {
  IntMatrix m(vertices_, num_edges());
  for (std::size_t e = 0; e < num_edges(); ++e) {
    if (heads_[e] != kNone) m(static_cast<std::size_t>(heads_[e]), e) += 1;
    if (tails_[e] != kNone) m(static_cast<std::size_t>(tails_[e]), e) -= 1;
  }
  return m;
}

namespace {

long wrap(long a, long m) { return ((a % m) + m) % m; }

std::map<std::string, std::string> params_meta(const std::string& family, std::initializer_list<std::pair<const char*, long>> ps) {
  std::map<std::string, std::string> meta{{"family", family}};
  for (auto [k, v] : ps) meta[k] = std::to_string(v);
  return meta;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConstructionError(msg);
}

}  // namespace

RotorCode rp2_1() {
  return make_code("rp2_1", IntMatrix{{2}}, IntMatrix(0, 1), {{"family", "rp2_1"}});
}

RotorCode rp2_4() {
  IntMatrix hx{{1, -1, 0, 0}, {0, 0, -1, 1}, {-1, -1, 1, 1}};
  IntMatrix hz{{1, 1, 1, 1}, {-1, -1, -1, -1}};
  return make_code("rp2_4", hx, hz, {{"family", "rp2_4"}});
}

RotorCode rp2_9() {
  IntMatrix hx{{1, -1, 0, 0, 0, 0, 0, 0, 0},
               {-1, 0, 1, 0, -1, 0, 1, 0, 0},
               {0, 0, 0, -1, 1, 0, 0, 1, -1},
               {0, 0, 0, 0, 0, -1, 1, -1, 1},
               {0, 1, 1, -1, 0, 1, 0, 0, 0}};
  IntMatrix hz{{1, 1, 0, 1, 0, 0, 1, 1, 0},
               {0, 0, -1, -1, -1, 0, 0, 0, 0},
               {-1, -1, 0, 0, 1, 1, 0, 0, 1},
               {0, 0, 1, 0, 0, -1, -1, 0, 0},
               {0, 0, 0, 0, 0, 0, 0, -1, -1}};
  return make_code("rp2_9", hx, hz, {{"family", "rp2_9"}});
}

RotorCode thin_moebius(long N) {
  require(N >= 2, "thin_moebius needs N >= 2");
  const std::size_t n = static_cast<std::size_t>(2 * N);
  IntMatrix hx(static_cast<std::size_t>(N), n), hz(static_cast<std::size_t>(N), n);
  auto top = [](long j) { return static_cast<std::size_t>(j); };
  auto bot = [N](long j) { return static_cast<std::size_t>(N + j); };
  for (long j = 0; j + 1 < N; ++j) {
    hx(j, top(j)) += 1;
    hx(j, bot(j)) -= 1;
    hx(j, bot(j + 1)) += 1;
    hx(j, top(j + 1)) -= 1;
  }
  // the twisted face closes the strip with the two rows exchanged
  hx(N - 1, top(N - 1)) += 1;
  hx(N - 1, bot(N - 1)) -= 1;
  hx(N - 1, bot(0)) -= 1;
  hx(N - 1, top(0)) += 1;
  for (long j = 0; j < N; ++j) {
    hz(j, top(j)) = 1;
    hz(j, bot(j)) = 1;
  }
  return make_code("thin_moebius_" + std::to_string(N), hx, hz, params_meta("thin_moebius", {{"N", N}}));
}

namespace {

RotorCode strip(long w, long N, bool twisted) {
  // Vertex lines r = 1..w-1, face rows r = 0..w-1, columns j in Z_N.
  auto vertex = [N](long r, long j) { return (r - 1) * N + j; };
  CellComplexBuilder b(static_cast<std::size_t>((w - 1) * N));
  std::vector<std::size_t> vert(static_cast<std::size_t>(w * N)), horiz(static_cast<std::size_t>(w * N));
  // horizontal block first, then vertical, both row-major
  for (long r = 1; r < w; ++r)
    for (long j = 0; j < N; ++j) {
      long head = j + 1 < N ? vertex(r, j + 1) : (twisted ? vertex(w - r, 0) : vertex(r, 0));
      horiz[r * N + j] = b.add_edge(vertex(r, j), head);
    }
  for (long r = 0; r < w; ++r)
    for (long j = 0; j < N; ++j) {
      long tail = r >= 1 ? vertex(r, j) : CellComplexBuilder::kNone;
      long head = r + 1 <= w - 1 ? vertex(r + 1, j) : CellComplexBuilder::kNone;
      vert[r * N + j] = b.add_edge(tail, head);
    }
  for (long r = 0; r < w; ++r)
    for (long j = 0; j < N; ++j) {
      std::vector<std::pair<std::size_t, int>> f;
      if (r >= 1) f.push_back({horiz[r * N + j], 1});
      if (j + 1 < N)
        f.push_back({vert[r * N + j + 1], 1});
      else if (twisted)
        f.push_back({vert[(w - 1 - r) * N], -1});
      else
        f.push_back({vert[r * N], 1});
      if (r + 1 <= w - 1) f.push_back({horiz[(r + 1) * N + j], -1});
      f.push_back({vert[r * N + j], -1});
      b.add_face(f);
    }
  std::string fam = twisted ? "moebius" : "cylinder";
  return make_code(fam + "_" + std::to_string(w) + "_" + std::to_string(N), b.hx(), b.hz(),
                   params_meta(fam, {{"w", w}, {"N", N}}));
}

}  // namespace

RotorCode moebius(long w, long N) {
  require(w >= 1 && N >= 1 && w % 2 == 1 && N % 2 == 1, "moebius needs odd w and odd N");
  return strip(w, N, true);
}

RotorCode cylinder(long w, long N) {
  require(w >= 1 && N >= 2, "cylinder needs w >= 1 and N >= 2");
  return strip(w, N, false);
}

RotorCode torus2(long w, long N) {
  require(w >= 2 && N >= 2, "torus2 needs w, N >= 2");
  auto vertex = [w, N](long i, long j) { return wrap(i, w) * N + wrap(j, N); };
  CellComplexBuilder b(static_cast<std::size_t>(w * N));
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) b.add_edge(vertex(i, j), vertex(i, j + 1));
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) b.add_edge(vertex(i, j), vertex(i + 1, j));
  auto h = [w, N](long i, long j) { return static_cast<std::size_t>(wrap(i, w) * N + wrap(j, N)); };
  auto v = [w, N](long i, long j) { return static_cast<std::size_t>(w * N + wrap(i, w) * N + wrap(j, N)); };
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) b.add_face({{h(i, j), 1}, {v(i, j + 1), 1}, {h(i + 1, j), -1}, {v(i, j), -1}});
  return make_code("torus2_" + std::to_string(w) + "_" + std::to_string(N), b.hx(), b.hz(),
                   params_meta("torus2", {{"w", w}, {"N", N}}));
}

RotorCode torus3(long N) {
  require(N >= 2, "torus3 needs N >= 2");
  const long N3 = N * N * N;
  auto vid = [N](long x, long y, long z) { return (wrap(x, N) * N + wrap(y, N)) * N + wrap(z, N); };
  CellComplexBuilder b(static_cast<std::size_t>(N3));
  const std::array<std::array<long, 3>, 3> unit{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (long a = 0; a < 3; ++a)
    for (long x = 0; x < N; ++x)
      for (long y = 0; y < N; ++y)
        for (long z = 0; z < N; ++z)
          b.add_edge(vid(x, y, z), vid(x + unit[a][0], y + unit[a][1], z + unit[a][2]));
  auto edge = [&](long a, long x, long y, long z) { return static_cast<std::size_t>(a * N3 + vid(x, y, z)); };
  const std::array<std::pair<long, long>, 3> planes{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, c] : planes)
    for (long x = 0; x < N; ++x)
      for (long y = 0; y < N; ++y)
        for (long z = 0; z < N; ++z) {
          const auto& ua = unit[a];
          const auto& uc = unit[c];
          b.add_face({{edge(a, x, y, z), 1},
                      {edge(c, x + ua[0], y + ua[1], z + ua[2]), 1},
                      {edge(a, x + uc[0], y + uc[1], z + uc[2]), -1},
                      {edge(c, x, y, z), -1}});
        }
  return make_code("torus3_" + std::to_string(N), b.hx(), b.hz(), params_meta("torus3", {{"N", N}}));
}

namespace {

using Point = std::array<long, 3>;

// Gluing of the four side faces of [0,N]^3: a point on x in {0,N} is
// identified with its reflection (N-x, N-y, N-z), likewise for y in {0,N}.
struct SideGluing {
  long N;

  std::vector<Point> orbit(const Point& p) const {
    std::vector<Point> out{p};
    for (std::size_t k = 0; k < out.size(); ++k) {
      Point q = out[k];
      for (int axis = 0; axis < 2; ++axis) {
        if (q[axis] != 0 && q[axis] != N) continue;
        Point r{N - q[0], N - q[1], N - q[2]};
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
    return out;
  }
  Point canon(const Point& p) const {
    auto o = orbit(p);
    return *std::min_element(o.begin(), o.end());
  }
};

}  // namespace

RotorCode rp3_punctured(long N) {
  require(N >= 2, "rp3_punctured needs N >= 2");
  SideGluing glue{N};
  auto point_ok = [N](const Point& p) {
    return p[0] >= 0 && p[0] <= N && p[1] >= 0 && p[1] <= N && p[2] >= 0 && p[2] <= N;
  };
  auto has_vertex = [N](const Point& p) { return p[2] >= 1 && p[2] <= N - 1; };

  std::map<Point, long> vertex_id;
  for (long x = 0; x <= N; ++x)
    for (long y = 0; y <= N; ++y)
      for (long z = 1; z <= N - 1; ++z) {
        Point c = glue.canon({x, y, z});
        if (!vertex_id.count(c)) vertex_id.emplace(c, static_cast<long>(vertex_id.size()));
      }
  auto vtx = [&](const Point& p) -> long {
    if (!has_vertex(p)) return CellComplexBuilder::kNone;
    return vertex_id.at(glue.canon(p));
  };

  // A segment is (start, axis). It is glued to its image only when it lies
  // entirely inside a glued side plane.
  using Segment = std::pair<Point, int>;
  auto segment_images = [&](const Segment& s) {
    std::vector<std::pair<Segment, int>> out{{s, 1}};
    for (std::size_t k = 0; k < out.size(); ++k) {
      auto [seg, sign] = out[k];
      auto [p, a] = seg;
      Point q = p;
      q[a] += 1;
      for (int axis = 0; axis < 2; ++axis) {
        if (axis == a || (p[axis] != 0 && p[axis] != N)) continue;
        Point rp{N - p[0], N - p[1], N - p[2]}, rq{N - q[0], N - q[1], N - q[2]};
        // the reflection reverses every axis, so rq is the new start
        Segment img{rq, a};
        bool seen = false;
        for (auto& e : out) seen |= e.first == img;
        if (!seen) out.push_back({img, -sign});
        (void)rp;
      }
    }
    return out;
  };
  std::map<Segment, std::pair<std::size_t, int>> edge_of;
  CellComplexBuilder b(vertex_id.size());
  auto edge_exists = [&](const Point& p, int a) {
    Point q = p;
    q[a] += 1;
    if (!point_ok(p) || !point_ok(q)) return false;
    if (a != 2) return has_vertex(p);  // horizontal edges live on vertex planes
    return true;
  };
  for (int a = 0; a < 3; ++a)
    for (long x = 0; x <= N; ++x)
      for (long y = 0; y <= N; ++y)
        for (long z = 0; z <= N; ++z) {
          Point p{x, y, z};
          if (!edge_exists(p, a)) continue;
          Segment s{p, a};
          if (edge_of.count(s)) continue;
          auto imgs = segment_images(s);
          auto best = std::min_element(imgs.begin(), imgs.end());
          Point q = best->first.first;
          Point qe = q;
          qe[a] += 1;
          std::size_t id = b.add_edge(vtx(q), vtx(qe));
          for (auto& [seg, sign] : imgs) edge_of[seg] = {id, sign * best->second};
        }

  std::set<std::vector<std::pair<std::size_t, int>>> seen_faces;
  const std::array<std::pair<int, int>, 3> planes{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, c] : planes)
    for (long x = 0; x <= N; ++x)
      for (long y = 0; y <= N; ++y)
        for (long z = 0; z <= N; ++z) {
          Point p{x, y, z};
          Point pa = p, pc = p, pac = p;
          pa[a] += 1;
          pc[c] += 1;
          pac[a] += 1;
          pac[c] += 1;
          if (!point_ok(pac)) continue;
          std::map<std::size_t, int> bd;
          auto add = [&](const Point& s, int axis, int sign) {
            if (!edge_exists(s, axis)) return;
            auto [id, es] = edge_of.at({s, axis});
            bd[id] += sign * es;
          };
          add(p, a, 1);
          add(pa, c, 1);
          add(pc, a, -1);
          add(p, c, -1);
          std::vector<std::pair<std::size_t, int>> f;
          for (auto [id, s] : bd)
            if (s != 0) f.push_back({id, s});
          if (f.empty()) continue;
          auto neg = f;
          for (auto& e : neg) e.second = -e.second;
          if (seen_faces.count(f) || seen_faces.count(neg)) continue;
          seen_faces.insert(f);
          b.add_face(f);
        }
  return make_code("rp3_punctured_" + std::to_string(N), b.hx(), b.hz(), params_meta("rp3_punctured", {{"N", N}}));
}

std::vector<std::string> family_names() {
  return {"rp2_1",  "rp2_4",  "rp2_9",  "thin_moebius",  "moebius",  "cylinder", "torus2",
          "torus3", "rp3_punctured", "hamming_free_free", "hamming_torsion_free", "hamming_torsion_torsion"};
}

RotorCode build_family(const std::string& family, const std::map<std::string, long>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw ConstructionError(family + " needs parameter " + key);
    return it->second;
  };
  if (family == "rp2_1") return rp2_1();
  if (family == "rp2_4") return rp2_4();
  if (family == "rp2_9") return rp2_9();
  if (family == "thin_moebius") return thin_moebius(get("N"));
  if (family == "moebius") return moebius(get("w"), get("N"));
  if (family == "cylinder") return cylinder(get("w"), get("N"));
  if (family == "torus2") return torus2(get("w"), get("N"));
  if (family == "torus3") return torus3(get("N"));
  if (family == "rp3_punctured") return rp3_punctured(get("N"));
  if (family == "hamming_free_free") return hamming_free_free();
  if (family == "hamming_torsion_free") return hamming_torsion_free();
  if (family == "hamming_torsion_torsion") return hamming_torsion_torsion();
  throw ConstructionError("unknown family " + family);
}

std::string to_string(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "orientable";
    case Orientability::NonOrientableZ2: return "non-orientable";
    case Orientability::NotAManifoldBoundary: return "not-a-surface";
  }
  return "?";
}

Orientability orientability_check(const IntMatrix& hx) {
  OrientationReport r = classify_orientation(ChainComplex{hx, IntMatrix(0, hx.cols())});
  if (!r.surface_like || !r.connected) return Orientability::NotAManifoldBoundary;
  const std::vector<Int> torsion = cokernel(hx).torsion;
  if (r.orientable) {
    if (!torsion.empty()) throw std::logic_error("orientable surface with torsion in H_1");
    return Orientability::Orientable;
  }
  if (torsion != std::vector<Int>{Int(2)}) throw std::logic_error("non-orientable surface without a single Z_2 in H_1");
  return Orientability::NonOrientableZ2;
}

}  // namespace rotor
