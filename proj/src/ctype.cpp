#include "coxsolomon/ctype.hpp"

#include "coxsolomon/errors.hpp"

#include <algorithm>
#include <cctype>

namespace coxsolomon {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t factorial_sat(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

}  // namespace

std::uint64_t Component::order() const {
  switch (family) {
    case 'A': return factorial_sat(rank + 1);
    case 'B': return sat_mul(std::uint64_t(1) << rank, factorial_sat(rank));
    case 'D': return sat_mul(std::uint64_t(1) << (rank - 1), factorial_sat(rank));
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case 'F': return 1152;
    case 'H': return rank == 3 ? 120 : 14400;
    case 'I': return 2ull * std::uint64_t(m);
  }
  fail(errc::internal, "unknown family");
}

std::vector<int> Component::degrees() const {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case 'B':
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      else if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'H': d = rank == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30}; break;
    case 'I': d = {2, m}; break;
  }
  return d;
}

CoxMatrix Component::coxeter_matrix() const {
  CoxMatrix mat(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) mat[i][i] = 1;
  auto edge = [&](int i, int j, int label) {
    mat[i][j] = label;
    mat[j][i] = label;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case 'B':
      edge(0, 1, 4);
      for (int i = 1; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case 'D':
      // Path 1-2-...-(n-1) with the extra tip n attached at node 2.
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1, 3);
      edge(1, rank - 1, 3);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-...-n path, 2 attached at 4.
      edge(0, 2, 3);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1, 3);
      edge(1, 3, 3);
      break;
    case 'F':
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case 'H':
      edge(0, 1, 5);
      for (int i = 1; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case 'I':
      edge(0, 1, m);
      break;
  }
  return mat;
}

std::string Component::to_string() const {
  if (family == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

CoxeterType CoxeterType::parse(std::string_view spec) {
  CoxeterType type;
  std::size_t pos = 0;
  auto parse_component = [&]() -> Component {
    if (pos >= spec.size()) fail(errc::parse_error, "empty component in '" + std::string(spec) + "'");
    char fam = spec[pos];
    if (fam == 'I') {
      if (spec.substr(pos, 3) != "I2(") fail(errc::parse_error, "expected I2(m) in '" + std::string(spec) + "'");
      pos += 3;
      std::size_t start = pos;
      while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
      if (pos == start || pos >= spec.size() || spec[pos] != ')')
        fail(errc::parse_error, "malformed I2(m) in '" + std::string(spec) + "'");
      long m = std::stol(std::string(spec.substr(start, pos - start)));
      ++pos;  // ')'
      if (m < 3) fail(errc::infinite_or_unsupported, "I2(m) requires m >= 3");
      if (m > 20000) fail(errc::infinite_or_unsupported, "I2(m) with m > 20000 is not supported");
      return Component{'I', 2, static_cast<int>(m)};
    }
    if (fam != 'A' && fam != 'B' && fam != 'D' && fam != 'E' && fam != 'F' && fam != 'H')
      fail(errc::parse_error, std::string("unknown family '") + fam + "' in '" + std::string(spec) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) fail(errc::parse_error, "missing rank in '" + std::string(spec) + "'");
    long n = std::stol(std::string(spec.substr(start, pos - start)));
    if (n <= 0 || n > 64) fail(errc::infinite_or_unsupported, "rank out of range");
    bool ok = (fam == 'A' && n >= 1) || (fam == 'B' && n >= 2) || (fam == 'D' && n >= 4) ||
              (fam == 'E' && n >= 6 && n <= 8) || (fam == 'F' && n == 4) ||
              (fam == 'H' && (n == 3 || n == 4));
    if (!ok)
      fail(errc::infinite_or_unsupported,
           std::string(1, fam) + std::to_string(n) + " is not a finite irreducible type");
    return Component{fam, static_cast<int>(n), 0};
  };
  type.components.push_back(parse_component());
  while (pos < spec.size()) {
    if (spec[pos] != 'x') fail(errc::parse_error, "expected 'x' separator in '" + std::string(spec) + "'");
    ++pos;
    type.components.push_back(parse_component());
  }
  if (type.rank() > 30) fail(errc::infinite_or_unsupported, "total rank above 30 is not supported");
  return type;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::uint64_t CoxeterType::order() const {
  std::uint64_t r = 1;
  for (const auto& c : components) r = sat_mul(r, c.order());
  return r;
}

std::vector<int> CoxeterType::degrees() const {
  std::vector<int> d;
  for (const auto& c : components) {
    auto cd = c.degrees();
    d.insert(d.end(), cd.begin(), cd.end());
  }
  return d;
}

int CoxeterType::num_positive_roots() const {
  int n = 0;
  for (int d : degrees()) n += d - 1;
  return n;
}

CoxMatrix CoxeterType::coxeter_matrix() const {
  int n = rank();
  CoxMatrix mat(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) mat[i][i] = 1;
  int off = 0;
  for (const auto& c : components) {
    CoxMatrix cm = c.coxeter_matrix();
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) mat[off + i][off + j] = cm[i][j];
    off += c.rank;
  }
  return mat;
}

std::string CoxeterType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].to_string();
  }
  return s;
}

std::vector<GenSet> CoxeterType::component_partition() const {
  std::vector<GenSet> parts;
  int off = 0;
  for (const auto& c : components) {
    GenSet g;
    for (int i = 0; i < c.rank; ++i) g = g.with(off + i);
    parts.push_back(g);
    off += c.rank;
  }
  return parts;
}

namespace {

int label_of(const CoxMatrix& m, int i, int j) { return m[i][j]; }

}  // namespace

ClassifiedComponent classify_component(const CoxMatrix& matrix, const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  auto unsupported = [&]() -> ClassifiedComponent {
    fail(errc::infinite_or_unsupported, "induced graph is not a finite irreducible diagram");
  };

  if (k == 1) return {Component{'A', 1, 0}, vertices};

  // Adjacency restricted to the subset.
  std::vector<std::vector<int>> adj(k);
  int num_edges = 0;
  std::vector<std::pair<std::pair<int, int>, int>> labelled;  // ((i,j), m>3)
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int m = label_of(matrix, vertices[i], vertices[j]);
      if (m >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++num_edges;
        if (m > 3) labelled.push_back({{i, j}, m});
      }
    }
  if (num_edges != k - 1) return unsupported();  // finite diagrams are trees

  if (k == 2) {
    int m = label_of(matrix, vertices[0], vertices[1]);
    if (m == 3) return {Component{'A', 2, 0}, vertices};
    if (m == 4) return {Component{'B', 2, 0}, vertices};
    return {Component{'I', 2, m}, vertices};
  }
  if (labelled.size() > 1) return unsupported();

  std::vector<int> deg(k);
  int fork = -1;
  for (int i = 0; i < k; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] > 3) return unsupported();
    if (deg[i] == 3) {
      if (fork >= 0) return unsupported();
      fork = i;
    }
  }

  auto walk_path = [&](int start, int from) {
    std::vector<int> path{start};
    int prev = from, cur = start;
    while (true) {
      int next = -1;
      for (int n : adj[cur])
        if (n != prev) next = n;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  if (fork < 0) {
    // A path; orient so a label > 3 sits at the canonical spot.
    int e0 = -1, e1 = -1;
    for (int i = 0; i < k; ++i)
      if (deg[i] == 1) (e0 < 0 ? e0 : e1) = i;
    std::vector<int> path = walk_path(e0, -1);
    if (labelled.empty()) {
      std::vector<int> order;
      for (int p : path) order.push_back(vertices[p]);
      return {Component{'A', k, 0}, order};
    }
    int m = labelled[0].second;
    auto is_edge_at = [&](const std::vector<int>& p, int pos) {
      int a = p[pos], b = p[pos + 1];
      return label_of(matrix, vertices[a], vertices[b]) > 3;
    };
    std::vector<int> rev(path.rbegin(), path.rend());
    if (m == 4) {
      if (is_edge_at(path, 0) || is_edge_at(rev, 0)) {
        const std::vector<int>& p = is_edge_at(path, 0) ? path : rev;
        std::vector<int> order;
        for (int q : p) order.push_back(vertices[q]);
        return {Component{'B', k, 0}, order};
      }
      if (k == 4 && is_edge_at(path, 1)) {
        std::vector<int> order;
        for (int q : path) order.push_back(vertices[q]);
        return {Component{'F', 4, 0}, order};
      }
      return unsupported();
    }
    if (m == 5 && (k == 3 || k == 4)) {
      if (is_edge_at(path, 0) || is_edge_at(rev, 0)) {
        const std::vector<int>& p = is_edge_at(path, 0) ? path : rev;
        std::vector<int> order;
        for (int q : p) order.push_back(vertices[q]);
        return {Component{'H', k, 0}, order};
      }
    }
    return unsupported();
  }

  // Forked tree: D or E.
  if (!labelled.empty()) return unsupported();
  std::vector<std::vector<int>> arms;
  for (int n : adj[fork]) arms.push_back(walk_path(n, fork));
  std::sort(arms.begin(), arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    // D_k: tips 1 and k at the fork (canonical node 2), long arm 3..k-1.
    std::vector<int> order;
    order.push_back(vertices[arms[0][0]]);
    order.push_back(vertices[fork]);
    for (int p : arms[2]) order.push_back(vertices[p]);
    order.push_back(vertices[arms[1][0]]);
    return {Component{'D', k, 0}, order};
  }
  if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
    // E_k: canonical 2 = short tip, 4 = fork, (1,3) = middle arm, 5.. = long arm.
    std::vector<int> order;
    order.push_back(vertices[arms[1][1]]);  // 1
    order.push_back(vertices[arms[0][0]]);  // 2
    order.push_back(vertices[arms[1][0]]);  // 3
    order.push_back(vertices[fork]);        // 4
    for (int p : arms[2]) order.push_back(vertices[p]);
    return {Component{'E', k, 0}, order};
  }
  return unsupported();
}

std::vector<ClassifiedComponent> classify_subset(const CoxMatrix& matrix, GenSet I) {
  std::vector<int> verts = I.elements();
  std::vector<ClassifiedComponent> out;
  std::vector<bool> used(verts.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (used[i]) continue;
    // Flood fill the connected component of verts[i].
    std::vector<std::size_t> stack{i};
    std::vector<int> comp;
    used[i] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(verts[v]);
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (!used[j] && matrix[verts[v]][verts[j]] >= 3) {
          used[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(matrix, comp));
  }
  return out;
}

std::uint64_t parabolic_order(const CoxMatrix& matrix, GenSet I) {
  std::uint64_t r = 1;
  for (const auto& c : classify_subset(matrix, I)) r = sat_mul(r, c.type.order());
  return r;
}

std::uint64_t parabolic_order(const CoxeterType& type, GenSet I) {
  return parabolic_order(type.coxeter_matrix(), I);
}

std::vector<GenSet> subsets_by_size(int rank) {
  std::vector<GenSet> out;
  out.reserve(std::size_t(1) << rank);
  for (int card = 0; card <= rank; ++card)
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << rank); ++m)
      if (std::popcount(m) == card) out.push_back(GenSet(m));
  return out;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::infinite_or_unsupported: return "InfiniteOrUnsupported";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::mixed_systems: return "MixedSystems";
    case errc::invalid_element: return "InvalidElement";
    case errc::not_a_double_coset_rep: return "NotADoubleCosetRep";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::singular_matrix: return "SingularA";
    case errc::cross_check_mismatch: return "CrossCheckMismatch";
    case errc::type_assignment_ambiguous: return "TypeAssignmentAmbiguous";
    case errc::corrupt_cache: return "CorruptCache";
    case errc::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace coxsolomon
