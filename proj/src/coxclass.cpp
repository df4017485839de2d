#include "coxsolomon/coxclass.hpp"

#include <algorithm>

namespace coxsolomon {

ElementId coxeter_element_of(const CoxeterSystem& sys, GenSet I) {
  ElementId c = sys.identity();
  for (int s : I.elements()) c = sys.mult_gen(c, s);
  return c;
}

CoxeterClassTable coxeter_class_reps(const CoxeterSystem& sys, const ClassTable& ct) {
  const int rank = sys.rank();
  CoxeterClassTable out;
  out.class_of_subset.assign(std::size_t(1) << rank, 0);
  // Bucket the already-found classes by cardinality; conjugate parabolic
  // subgroups have equal rank, so only same-size subsets can join.
  std::vector<std::vector<std::uint32_t>> by_card(rank + 1);
  for (GenSet I : subsets_by_size(rank)) {
    ElementId c = coxeter_element_of(sys, I);
    std::uint32_t conj = ct.class_of[c];
    std::uint32_t found = static_cast<std::uint32_t>(-1);
    for (std::uint32_t id : by_card[I.count()])
      if (ct.class_of[out.classes[id].coxeter_element] == conj) {
        found = id;
        break;
      }
    if (found == static_cast<std::uint32_t>(-1)) {
      found = static_cast<std::uint32_t>(out.classes.size());
      out.classes.push_back(CoxeterClass{found, I, {}, c});
      by_card[I.count()].push_back(found);
    }
    out.classes[found].members.push_back(I);
    out.class_of_subset[I.mask()] = found;
  }
  return out;
}

bool are_W_conjugate(const CoxeterSystem& sys, const ClassTable& ct, GenSet I, GenSet J) {
  if (I.count() != J.count()) return false;
  return ct.class_of[coxeter_element_of(sys, I)] == ct.class_of[coxeter_element_of(sys, J)];
}

std::optional<ElementId> find_set_conjugator(const CoxeterSystem& sys, GenSet I, GenSet J) {
  if (I.count() != J.count()) return std::nullopt;
  auto igens = I.elements();
  for (ElementId w = 0; w < sys.order(); ++w) {
    GenSet img;
    bool ok = true;
    for (int s : igens) {
      ElementId t = sys.multiply(sys.multiply(w, sys.generator(s)), sys.inverse(w));
      int g = sys.as_generator(t);
      if (g < 0) {
        ok = false;
        break;
      }
      img = img.with(g);
    }
    if (ok && img == J) return w;
  }
  return std::nullopt;
}

ParabolicSubsystem build_parabolic_subsystem(const CoxeterSystem& parent, GenSet I) {
  ParabolicSubsystem out;
  out.I = I;

  CoxeterType sub_type;
  const CoxMatrix& pm = parent.coxeter_matrix();
  for (const auto& comp : classify_subset(pm, I)) {
    sub_type.components.push_back(comp.type);
    out.gen_to_parent.insert(out.gen_to_parent.end(), comp.vertex_order.begin(),
                             comp.vertex_order.end());
  }
  out.sys = CoxeterSystem::build(sub_type);

  // The classification must reproduce the induced matrix exactly.
  const CoxMatrix& sm = out.sys.coxeter_matrix();
  const int k = out.sys.rank();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (sm[i][j] != pm[out.gen_to_parent[i]][out.gen_to_parent[j]])
        fail(errc::internal, "subsystem matrix does not match the induced diagram");

  out.to_parent.resize(out.sys.order());
  out.to_parent[0] = parent.identity();
  for (ElementId w = 1; w < out.sys.order(); ++w) {
    // Strip the canonical descent: w = (w s) s, and w s has a smaller id.
    int s = -1;
    for (int g = 0; g < k; ++g)
      if (out.sys.is_descent(w, g)) {
        s = g;
        break;
      }
    ElementId shorter = out.sys.mult_gen(w, s);
    out.to_parent[w] = parent.mult_gen(out.to_parent[shorter], out.gen_to_parent[s]);
  }
  return out;
}

std::vector<std::uint32_t> cuspidal_classes(const CoxeterSystem& sys, const ClassTable& ct) {
  const GenSet full = GenSet::all(sys.rank());
  std::vector<bool> cuspidal(ct.count(), true);
  for (ElementId w = 0; w < sys.order(); ++w)
    if (cuspidal[ct.class_of[w]] && sys.support(w) != full) cuspidal[ct.class_of[w]] = false;
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < ct.count(); ++c)
    if (cuspidal[c]) out.push_back(c);
  return out;
}

CuspidalInParabolic cuspidal_classes_in_parabolic(const CoxeterSystem& parent, GenSet I) {
  CuspidalInParabolic out{build_parabolic_subsystem(parent, I), {}, {}};
  out.sub_classes = conjugacy_classes(out.sub.sys);
  out.cuspidal = cuspidal_classes(out.sub.sys, out.sub_classes);
  return out;
}

LambdaPartition lambda_partition(const CoxeterSystem& sys, const ClassTable& ct,
                                 const CoxeterClassTable& cct) {
  const int rank = sys.rank();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

  LambdaPartition out;
  out.lambda_of_class.assign(ct.count(), kUnset);
  std::vector<int> assigned_card(ct.count(), -1);

  for (GenSet I : subsets_by_size(rank)) {
    auto cusp = cuspidal_classes_in_parabolic(sys, I);
    const auto& sct = cusp.sub_classes;
    // Parent class of each sub class, and |C cap W_I| per parent class.
    std::vector<std::uint32_t> parent_class(sct.count());
    std::vector<std::uint64_t> parent_mass(ct.count(), 0);
    for (std::uint32_t sc = 0; sc < sct.count(); ++sc) {
      parent_class[sc] = ct.class_of[cusp.sub.to_parent[sct.classes[sc].min_rep]];
      parent_mass[parent_class[sc]] += sct.classes[sc].size;
    }
    for (std::uint32_t sc : cusp.cuspidal) {
      std::uint32_t C = parent_class[sc];
      // C qualifies at I iff C cap W_I is exactly this one cuspidal class.
      if (parent_mass[C] != sct.classes[sc].size) continue;
      int card = I.count();
      if (assigned_card[C] >= 0 && assigned_card[C] < card) continue;
      std::uint32_t lam = cct.of(I);
      if (assigned_card[C] == card && out.lambda_of_class[C] != lam)
        fail(errc::type_assignment_ambiguous,
             "two non-conjugate minimal subsets qualify for one conjugacy class");
      out.lambda_of_class[C] = lam;
      assigned_card[C] = card;
    }
  }

  for (std::uint32_t C = 0; C < ct.count(); ++C)
    if (out.lambda_of_class[C] == kUnset)
      fail(errc::internal, "conjugacy class received no Coxeter type");

  out.classes_of_lambda.assign(cct.count(), {});
  out.lambda_size.assign(cct.count(), 0);
  for (std::uint32_t C = 0; C < ct.count(); ++C) {
    out.classes_of_lambda[out.lambda_of_class[C]].push_back(C);
    out.lambda_size[out.lambda_of_class[C]] += ct.classes[C].size;
  }
  return out;
}

std::uint32_t coxeter_type(const CoxeterSystem&, const ClassTable& ct, const LambdaPartition& lp,
                           ElementId w) {
  return lp.lambda_of_class[ct.class_of[w]];
}

ClassFunction xi_lambda(const ClassTable& ct, const LambdaPartition& lp, std::uint32_t lambda) {
  ClassFunction out;
  out.values.assign(ct.count(), Rational(0));
  for (std::uint32_t C : lp.classes_of_lambda[lambda]) out.values[C] = 1;
  return out;
}

std::vector<std::vector<Rational>> invert_rational_matrix(
    const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(errc::singular_matrix, "matrix A is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

MatrixA matrix_A(const CoxeterSystem&, const ClassTable& ct, const CoxeterClassTable& cct,
                 const std::vector<ClassFunction>& bank) {
  const std::size_t n = cct.count();
  MatrixA out;
  out.entries.assign(n, std::vector<Rational>(n));
  for (std::size_t lam = 0; lam < n; ++lam) {
    const ClassFunction& f = bank[cct.classes[lam].representative.mask()];
    for (std::size_t mu = 0; mu < n; ++mu)
      out.entries[lam][mu] = f.values[ct.class_of[cct.classes[mu].coxeter_element]];
  }
  out.inverse = invert_rational_matrix(out.entries);
  // A A^-1 = I, exactly.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += out.entries[i][k] * out.inverse[k][j];
      if (acc != Rational(i == j ? 1 : 0)) fail(errc::internal, "A * A^-1 is not the identity");
    }
  return out;
}

bool check_coxeqequ(const ClassTable& ct, const CoxeterClassTable& cct) {
  return ct.count() == cct.count();
}

}  // namespace coxsolomon
