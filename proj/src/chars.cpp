#include "coxsolomon/chars.hpp"

#include <algorithm>

namespace coxsolomon {

ClassTable conjugacy_classes(const CoxeterSystem& sys) {
  const std::uint64_t n = sys.order();
  const int rank = sys.rank();
  ClassTable ct;
  ct.class_of.assign(n, static_cast<std::uint32_t>(-1));
  std::vector<ElementId> orbit;
  for (ElementId w = 0; w < n; ++w) {
    if (ct.class_of[w] != static_cast<std::uint32_t>(-1)) continue;
    std::uint32_t id = static_cast<std::uint32_t>(ct.classes.size());
    orbit.clear();
    orbit.push_back(w);
    ct.class_of[w] = id;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      ElementId u = orbit[q];
      for (int s = 0; s < rank; ++s) {
        ElementId v = sys.conjugate_by_gen(u, s);
        if (ct.class_of[v] == static_cast<std::uint32_t>(-1)) {
          ct.class_of[v] = id;
          orbit.push_back(v);
        }
      }
    }
    ConjugacyClass cls;
    cls.id = id;
    cls.size = orbit.size();
    cls.min_rep = w;  // ids ascend with length
    cls.members.assign(n, false);
    for (ElementId u : orbit) cls.members[u] = true;
    ct.classes.push_back(std::move(cls));
  }
  return ct;
}

ClassFunction cf_add(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += g.values[i];
  return out;
}

ClassFunction cf_scale(const ClassFunction& f, const Rational& c) {
  ClassFunction out = f;
  for (auto& v : out.values) v *= c;
  return out;
}

ClassFunction cf_pointwise(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= g.values[i];
  return out;
}

ClassFunction induced_trivial(const CoxeterSystem& sys, const ClassTable& ct, GenSet I) {
  auto xi = minimal_coset_reps(sys, I);
  ClassFunction out;
  out.values.reserve(ct.count());
  for (const auto& cls : ct.classes) {
    ElementId w = cls.min_rep;
    std::uint64_t fixed = 0;
    for (ElementId g : xi.reps) {
      // wg in gW_I  iff  g^-1 w g in W_I.
      if (sys.in_parabolic(sys.conjugate(w, g), I)) ++fixed;
    }
    out.values.push_back(Rational(fixed));
  }
  if (out.values[ct.class_of[sys.identity()]] != Rational(xi.reps.size()))
    fail(errc::internal, "induced character degree is not |X_I|");
  return out;
}

ClassFunction induced_trivial_by_conjugation_count(const CoxeterSystem& sys, const ClassTable& ct,
                                                   GenSet I) {
  const std::uint64_t sub = sys.parabolic_elements(I).size();
  ClassFunction out;
  for (const auto& cls : ct.classes) {
    ElementId w = cls.min_rep;
    std::uint64_t count = 0;
    for (ElementId x = 0; x < sys.order(); ++x)
      if (sys.in_parabolic(sys.conjugate(w, x), I)) ++count;
    Rational v = Rational(count) / Rational(sub);
    if (!is_integer(v)) fail(errc::internal, "conjugation count is not divisible by |W_I|");
    out.values.push_back(v);
  }
  return out;
}

std::vector<ClassFunction> induced_bank(const CoxeterSystem& sys, const ClassTable& ct) {
  std::vector<ClassFunction> bank;
  bank.reserve(std::size_t(1) << sys.rank());
  for (std::uint32_t m = 0; m < (1u << sys.rank()); ++m)
    bank.push_back(induced_trivial(sys, ct, GenSet(m)));
  return bank;
}

Rational scalar_product_classfn(const CoxeterSystem& sys, const ClassTable& ct,
                                const ClassFunction& f, const ClassFunction& g) {
  Rational acc = 0;
  for (const auto& cls : ct.classes) acc += Rational(cls.size) * f.values[cls.id] * g.values[cls.id];
  return acc / Rational(sys.order());
}

Rational pairing_group_algebra(const CoxeterSystem& sys, const GroupAlgebraVector& z1,
                               const GroupAlgebraVector& z2) {
  Rational acc = 0;
  for (const auto& [w, a] : z1.coeffs) {
    auto it = z2.coeffs.find(sys.inverse(w));
    if (it != z2.coeffs.end()) acc += a * it->second;
  }
  return acc;
}

ClassFunction phi(const CoxeterSystem& sys, const ClassTable& ct, const DescentAlgebraElement& d,
                  const std::vector<ClassFunction>& bank) {
  ClassFunction out;
  out.values.assign(ct.count(), Rational(0));
  for (const auto& [I, c] : d.x_coeffs) {
    const ClassFunction& ind = bank[I.mask()];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += c * ind.values[i];
  }
  return out;
}

ClassFunction phi(const CoxeterSystem& sys, const ClassTable& ct,
                  const DescentAlgebraElement& d) {
  ClassFunction out;
  out.values.assign(ct.count(), Rational(0));
  for (const auto& [I, c] : d.x_coeffs) {
    ClassFunction ind = induced_trivial(sys, ct, I);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += c * ind.values[i];
  }
  return out;
}

Rational evaluate_classfn_on_vector(const ClassTable& ct, const ClassFunction& f,
                                    const GroupAlgebraVector& z) {
  Rational acc = 0;
  for (const auto& [w, c] : z.coeffs) acc += c * f.values[ct.class_of[w]];
  return acc;
}

Rational evaluate_classfn_on_ids(const ClassTable& ct, const ClassFunction& f,
                                 const std::vector<ElementId>& ids) {
  Rational acc = 0;
  for (ElementId w : ids) acc += f.values[ct.class_of[w]];
  return acc;
}

ClassFunction idempotent_character(const CoxeterSystem& sys, const ClassTable& ct,
                                   const GroupAlgebraVector& e) {
  if (!(ga_multiply(sys, e, e) == e)) fail(errc::not_idempotent, "e*e != e");
  // chi_e(w) = sum_x e_{x w^-1 x^-1}; each u in the class of w^-1 is hit
  // |W|/|C| times.
  ClassFunction out;
  out.values.assign(ct.count(), Rational(0));
  std::vector<Rational> class_mass(ct.count(), Rational(0));
  for (const auto& [g, c] : e.coeffs) class_mass[ct.class_of[g]] += c;
  for (const auto& cls : ct.classes) {
    std::uint32_t inv_cls = ct.class_of[sys.inverse(cls.min_rep)];
    out.values[cls.id] =
        class_mass[inv_cls] * Rational(sys.order()) / Rational(cls.size);
  }
  return out;
}

GroupAlgebraVector trivial_idempotent(const CoxeterSystem& sys, GenSet I) {
  GroupAlgebraVector e;
  auto wi = sys.parabolic_elements(I);
  Rational c = Rational(1) / Rational(wi.size());
  for (ElementId w : wi) e.coeffs[w] = c;
  return e;
}

GroupAlgebraVector sign_idempotent(const CoxeterSystem& sys, GenSet I) {
  GroupAlgebraVector e;
  auto wi = sys.parabolic_elements(I);
  Rational c = Rational(1) / Rational(wi.size());
  for (ElementId w : wi) e.coeffs[w] = (sys.length(w) % 2 == 0) ? c : -c;
  return e;
}

int rank_of_classfns(const std::vector<ClassFunction>& fns) {
  if (fns.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fns) rows.push_back(f.values);
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < ncols; ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace coxsolomon
