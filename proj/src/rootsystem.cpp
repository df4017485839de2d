#include "coxsolomon/rootsystem.hpp"

#include "coxsolomon/errors.hpp"
#include "coxsolomon/quadratic.hpp"

#include <map>

namespace coxsolomon {

namespace {

using Vec = std::vector<ExactScalar>;

std::string coord_string(const ExactScalar& x) {
  std::string s = x.a.str();
  if (x.b != 0) {
    s += (x.b > 0 ? "+" : "");
    s += x.b.str() + "r5";
  }
  return s;
}

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += coord_string(v[i]);
  }
  return s + ")";
}

/// Positive roots of one component in the simple-root basis, closed under the
/// simple reflections.  s_i(alpha_j) = alpha_j + q[i][j] alpha_i with
/// q[i][j] q[j][i] = 4 cos^2(pi/m(i,j)).
struct VectorComponent {
  int n;
  std::vector<std::vector<ExactScalar>> q;
  std::vector<Vec> roots;
  std::map<Vec, int> index;
  std::vector<std::vector<std::int32_t>> action;  // [gen][root]

  explicit VectorComponent(const CoxMatrix& cm) : n(static_cast<int>(cm.size())) {
    q.assign(n, std::vector<ExactScalar>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        switch (cm[i][j]) {
          case 2: q[i][j] = ExactScalar(Rational(0)); break;
          case 3: q[i][j] = ExactScalar(Rational(1)); break;
          case 4: q[i][j] = ExactScalar(Rational(i < j ? 1 : 2)); break;
          case 5: q[i][j] = ExactScalar::golden(); break;
          default: fail(errc::internal, "unexpected edge label in vector root component");
        }
      }
    for (int i = 0; i < n; ++i) {
      Vec e(n, ExactScalar(Rational(0)));
      e[i] = ExactScalar(Rational(1));
      index[e] = i;
      roots.push_back(std::move(e));
    }
    // Closure; roots discovered in BFS order.
    action.assign(n, {});
    for (std::size_t r = 0; r < roots.size(); ++r) {
      for (int s = 0; s < n; ++s) {
        if (static_cast<int>(r) == s) {
          grow(s, -(static_cast<std::int32_t>(r) + 1));
          continue;
        }
        Vec img = reflect(roots[r], s);
        auto it = index.find(img);
        int id;
        if (it != index.end()) {
          id = it->second;
        } else {
          id = static_cast<int>(roots.size());
          index[img] = id;
          roots.push_back(std::move(img));
        }
        grow(s, static_cast<std::int32_t>(id) + 1);
      }
    }
  }

  void grow(int s, std::int32_t v) { action[s].push_back(v); }

  Vec reflect(const Vec& v, int i) const {
    Vec out = v;
    ExactScalar acc = -v[i];
    for (int j = 0; j < n; ++j)
      if (j != i && !v[j].is_zero()) acc = acc + q[i][j] * v[j];
    out[i] = acc;
    return out;
  }
};

}  // namespace

RootAction build_root_action(const CoxeterType& type) {
  RootAction out;
  const int rank = type.rank();
  out.simple_root.assign(rank, -1);
  out.action.assign(rank, {});

  int gen_off = 0;
  int root_off = 0;
  for (const auto& comp : type.components) {
    int cn = comp.rank;
    int cnpos = 0;
    std::vector<std::vector<std::int32_t>> local(cn);
    std::vector<std::string> labels;
    if (comp.family == 'I') {
      // Dihedral: positive roots are the unit normals at angles
      // pi/2 + k*pi/m, k = 0..m-1, with alpha_s = root 0 and alpha_t = root m-1.
      int m = comp.m;
      cnpos = m;
      local[0].resize(m);
      local[1].resize(m);
      for (int k = 0; k < m; ++k) {
        local[0][k] = (k == 0) ? -1 : (m - k) + 1;
        local[1][k] = (k == m - 1) ? -m : (m - 2 - k) + 1;
        labels.push_back("k" + std::to_string(k));
      }
      out.simple_root[gen_off + 0] = root_off + 0;
      out.simple_root[gen_off + 1] = root_off + (m - 1);
    } else {
      VectorComponent vc(comp.coxeter_matrix());
      cnpos = static_cast<int>(vc.roots.size());
      int expected = 0;
      for (int d : comp.degrees()) expected += d - 1;
      if (cnpos != expected) fail(errc::internal, "root closure produced wrong count for " + comp.to_string());
      local = std::move(vc.action);
      for (const auto& v : vc.roots) labels.push_back(vec_string(v));
      for (int i = 0; i < cn; ++i) out.simple_root[gen_off + i] = root_off + i;
    }

    // Splice into the global tables: this component's generators act on its
    // own block and fix every other positive root.
    for (int g = 0; g < rank; ++g) {
      auto& row = out.action[g];
      if (g >= gen_off && g < gen_off + cn) {
        for (int r = 0; r < cnpos; ++r) {
          std::int32_t v = local[g - gen_off][r];
          row.push_back(v > 0 ? v + root_off : v - root_off);
        }
      } else {
        for (int r = 0; r < cnpos; ++r) row.push_back(root_off + r + 1);
      }
    }
    for (auto& l : labels) out.root_labels.push_back(comp.to_string() + ":" + l);
    gen_off += cn;
    root_off += cnpos;
  }
  out.npos = root_off;
  return out;
}

}  // namespace coxsolomon
