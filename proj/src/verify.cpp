#include "coxsolomon/verify.hpp"

#include "coxsolomon/parallel.hpp"

#include <algorithm>
#include <chrono>

namespace coxsolomon {

namespace {

using json = nlohmann::json;

class Stopwatch {
public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

bool theorem_family(const CoxeterType& t) {
  // Components where the symmetry theorem is proved: A, E, F, H, I2(m).
  // B2 counts: it is the dihedral group I2(4).
  for (const auto& c : t.components)
    if ((c.family == 'B' && c.rank > 2) || c.family == 'D') return false;
  return true;
}

bool pure_type_a(const CoxeterType& t) {
  for (const auto& c : t.components)
    if (c.family != 'A') return false;
  return true;
}

GenSet subset_of_label(const std::string& label) {
  GenSet I;
  for (char ch : label) {
    if (ch < '1' || ch > '9') fail(errc::parse_error, "bad representative label " + label);
    I = I.with(ch - '1');
  }
  return I;
}

// The exhaustive scans walk every (I, J, b); keep them to desk-size groups.
constexpr std::uint64_t kScanOrderLimit = 1200;

}  // namespace

GroupTables GroupTables::build(const std::string& spec, const BuildOptions& opt, int threads) {
  return build(CoxeterSystem::build(spec, opt), threads);
}

GroupTables GroupTables::build(CoxeterSystem sys, int threads) {
  GroupTables g;
  g.sys = std::move(sys);
  g.ct = conjugacy_classes(g.sys);
  g.cct = coxeter_class_reps(g.sys, g.ct);
  g.lp = lambda_partition(g.sys, g.ct, g.cct);

  const int rank = g.sys.rank();
  const std::uint64_t n = g.sys.order();
  g.desc_mask.resize(n);
  g.idesc_mask.resize(n);
  for (ElementId w = 0; w < n; ++w) {
    g.desc_mask[w] = g.sys.descent_set(w).mask();
    g.idesc_mask[w] = g.sys.descent_set(g.sys.inverse(w)).mask();
  }

  if (rank > kFullBankRank) return g;
  g.full_bank = true;

  const std::size_t nmask = std::size_t(1) << rank;
  g.xsec.resize(nmask);
  for (std::size_t m = 0; m < nmask; ++m)
    for (ElementId w = 0; w < n; ++w)
      if ((g.desc_mask[w] & m) == 0) g.xsec[m].push_back(w);

  g.bank.resize(nmask);
  parallel_for(nmask, threads, [&](std::size_t m) {
    g.bank[m] = induced_trivial(g.sys, g.ct, GenSet(static_cast<std::uint32_t>(m)));
  });
  g.ibank.resize(nmask);
  for (std::size_t m = 0; m < nmask; ++m) {
    g.ibank[m].reserve(g.ct.count());
    for (const auto& v : g.bank[m].values) {
      if (!is_integer(v)) fail(errc::internal, "induced character has a non-integer value");
      g.ibank[m].push_back(to_int64(v));
    }
  }
  return g;
}

std::uint64_t GroupTables::phi_x_at_x(GenSet I, GenSet J) const {
  std::int64_t acc = 0;
  const auto& vals = ibank[I.mask()];
  for (ElementId w : xsec[J.mask()]) acc += vals[ct.class_of[w]];
  return static_cast<std::uint64_t>(acc);
}

DPrimeMatrix d_matrix(const GroupTables& g, int min_size, int threads) {
  if (!g.full_bank) fail(errc::internal, "rank too large for the D' computation");
  DPrimeMatrix out;
  out.min_size = min_size;
  for (const auto& cls : g.cct.classes)
    if (cls.representative.count() >= min_size) {
      out.lambda_ids.push_back(cls.id);
      out.labels.push_back(cls.representative.label(g.sys.rank()));
    }
  const std::size_t k = out.lambda_ids.size();
  const std::size_t ncls = g.ct.count();

  // Route one: factored through class counts.  a[C] = |X_I cap C|, then
  // D = sum_C a[C] * phi_mu(C).
  std::vector<std::vector<std::uint64_t>> route1(k, std::vector<std::uint64_t>(k, 0));
  parallel_for(k, threads, [&](std::size_t r) {
    GenSet I = g.cct.classes[out.lambda_ids[r]].representative;
    std::vector<std::uint64_t> counts(ncls, 0);
    for (ElementId w : g.xsec[I.mask()]) counts[g.ct.class_of[w]]++;
    for (std::size_t c = 0; c < k; ++c) {
      GenSet J = g.cct.classes[out.lambda_ids[c]].representative;
      std::uint64_t acc = 0;
      for (std::size_t C = 0; C < ncls; ++C)
        acc += counts[C] * static_cast<std::uint64_t>(g.ibank[J.mask()][C]);
      route1[r][c] = acc;
    }
  });

  // Route two: direct summation of the induced character over X_I.
  std::vector<std::vector<std::uint64_t>> route2(k, std::vector<std::uint64_t>(k, 0));
  parallel_for(k, threads, [&](std::size_t r) {
    GenSet I = g.cct.classes[out.lambda_ids[r]].representative;
    for (std::size_t c = 0; c < k; ++c)
      route2[r][c] = g.phi_x_at_x(g.cct.classes[out.lambda_ids[c]].representative, I);
  });

  if (route1 != route2)
    fail(errc::cross_check_mismatch, "factored and direct D' computations disagree");
  out.entries = std::move(route1);
  return out;
}

DPrimeMatrix reorder_to_labels(const GroupTables& g, const DPrimeMatrix& m,
                               const std::vector<std::string>& labels) {
  std::vector<std::size_t> pos;
  std::vector<bool> used(m.lambda_ids.size(), false);
  for (const auto& lab : labels) {
    std::uint32_t lam = g.cct.of(subset_of_label(lab));
    auto it = std::find(m.lambda_ids.begin(), m.lambda_ids.end(), lam);
    if (it == m.lambda_ids.end())
      fail(errc::internal, "label " + lab + " has no row in the computed matrix");
    std::size_t idx = static_cast<std::size_t>(it - m.lambda_ids.begin());
    if (used[idx]) fail(errc::internal, "label " + lab + " repeats a Coxeter class");
    used[idx] = true;
    pos.push_back(idx);
  }
  if (pos.size() != m.lambda_ids.size())
    fail(errc::internal, "label list does not cover every Coxeter class");
  DPrimeMatrix out;
  out.min_size = m.min_size;
  out.labels = labels;
  for (std::size_t r = 0; r < pos.size(); ++r) {
    out.lambda_ids.push_back(m.lambda_ids[pos[r]]);
    std::vector<std::uint64_t> row;
    for (std::size_t c = 0; c < pos.size(); ++c) row.push_back(m.entries[pos[r]][pos[c]]);
    out.entries.push_back(std::move(row));
  }
  return out;
}

WSet w_set(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b) {
  if (!is_double_coset_rep(sys, I, J, b))
    fail(errc::not_a_double_coset_rep, "b must lie in X_IJ");
  WSet out{I, J, b, {}};
  const ElementId binv = sys.inverse(b);
  for (ElementId w = 0; w < sys.order(); ++w) {
    ElementId wJ = sys.parabolic_components(w, J).first;
    ElementId lhs = sys.multiply(wJ, binv);
    ElementId rhs = sys.parabolic_components(sys.multiply(w, binv), I).second;
    if (lhs == rhs) out.members.push_back(w);
  }

  // Cross-check through the three-components characterization:
  // w = abc = uab with a in X^I_{I cap bJb^-1}, c in X^J_{J cap b^-1Ib},
  // u in X_I.
  GenSet Kc = kilmoyer_subset(sys, I, J, b);  // J cap b^-1 I b
  std::vector<ElementId> alt;
  for (ElementId w = 0; w < sys.order(); ++w) {
    auto d = double_parabolic_components(sys, w, I, J);
    if (d.b != b) continue;
    if (!(sys.descent_set(d.c) & Kc).empty()) continue;
    ElementId u = sys.multiply(w, sys.inverse(sys.multiply(d.a, d.b)));
    if (!(sys.descent_set(u) & I).empty()) continue;
    alt.push_back(w);
  }
  if (alt != out.members)
    fail(errc::cross_check_mismatch, "W(I,J,b) characterizations disagree");
  return out;
}

CheckReport check_symmetry(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "symmetry";
  const int rank = g.sys.rank();
  const std::size_t nmask = std::size_t(1) << rank;
  std::vector<std::vector<std::uint64_t>> m(nmask, std::vector<std::uint64_t>(nmask));
  for (std::size_t i = 0; i < nmask; ++i)
    for (std::size_t j = 0; j < nmask; ++j)
      m[i][j] = g.phi_x_at_x(GenSet(static_cast<std::uint32_t>(i)),
                             GenSet(static_cast<std::uint32_t>(j)));
  for (std::size_t i = 0; i < nmask; ++i)
    for (std::size_t j = i + 1; j < nmask; ++j)
      if (m[i][j] != m[j][i])
        r.witnesses.push_back({{"I", GenSet(std::uint32_t(i)).label(rank)},
                               {"J", GenSet(std::uint32_t(j)).label(rank)},
                               {"lhs", m[i][j]},
                               {"rhs", m[j][i]}});
  bool proved = theorem_family(g.sys.type());
  if (r.witnesses.empty()) r.verdict = proved ? "pass" : "open:holds";
  else r.verdict = proved ? "fail" : "open:witnesses";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_isometry(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "isometry";
  const int rank = g.sys.rank();
  const std::size_t nmask = std::size_t(1) << rank;

  // <Phi(x_I), Phi(x_J)>_W = |X_IJ| for every pair.
  for (std::size_t i = 0; i < nmask; ++i)
    for (std::size_t j = 0; j < nmask; ++j) {
      std::uint64_t xij = 0;
      for (ElementId w : g.xsec[j])
        if ((g.idesc_mask[w] & i) == 0) ++xij;
      Rational sp = scalar_product_classfn(g.sys, g.ct, g.bank[i], g.bank[j]);
      if (sp != Rational(xij))
        r.witnesses.push_back({{"I", GenSet(std::uint32_t(i)).label(rank)},
                               {"J", GenSet(std::uint32_t(j)).label(rank)},
                               {"lhs", to_string(sp)},
                               {"rhs", xij},
                               {"kind", "x-basis"}});
    }

  // <Phi(y_I), Phi(y_J)>_W counts elements with ascent sets (I, J) on the
  // two sides.
  std::vector<ClassFunction> phi_y(nmask);
  for (std::size_t i = 0; i < nmask; ++i) {
    ClassFunction acc;
    acc.values.assign(g.ct.count(), Rational(0));
    for (std::size_t k = 0; k < nmask; ++k) {
      if ((i & ~k) != 0) continue;  // need K >= I
      int sign = (std::popcount(std::uint32_t(k & ~i)) % 2 == 0) ? 1 : -1;
      acc = cf_add(acc, cf_scale(g.bank[k], Rational(sign)));
    }
    phi_y[i] = std::move(acc);
  }
  std::vector<std::vector<std::uint64_t>> counts(nmask, std::vector<std::uint64_t>(nmask, 0));
  const std::uint32_t full = GenSet::all(rank).mask();
  for (ElementId w = 0; w < g.sys.order(); ++w)
    counts[~g.desc_mask[w] & full][~g.idesc_mask[w] & full]++;
  for (std::size_t i = 0; i < nmask; ++i)
    for (std::size_t j = 0; j < nmask; ++j) {
      Rational sp = scalar_product_classfn(g.sys, g.ct, phi_y[i], phi_y[j]);
      if (sp != Rational(counts[i][j]))
        r.witnesses.push_back({{"I", GenSet(std::uint32_t(i)).label(rank)},
                               {"J", GenSet(std::uint32_t(j)).label(rank)},
                               {"lhs", to_string(sp)},
                               {"rhs", counts[i][j]},
                               {"kind", "y-basis"}});
    }

  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_gessel_counts(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "gessel";
  const int rank = g.sys.rank();
  const std::size_t nmask = std::size_t(1) << rank;
  const std::uint32_t full = GenSet::all(rank).mask();

  std::vector<ClassFunction> phi_y(nmask);
  for (std::size_t i = 0; i < nmask; ++i) {
    ClassFunction acc;
    acc.values.assign(g.ct.count(), Rational(0));
    for (std::size_t k = 0; k < nmask; ++k) {
      if ((i & ~k) != 0) continue;
      int sign = (std::popcount(std::uint32_t(k & ~i)) % 2 == 0) ? 1 : -1;
      acc = cf_add(acc, cf_scale(g.bank[k], Rational(sign)));
    }
    phi_y[i] = std::move(acc);
  }

  for (std::size_t i = 0; i < nmask; ++i)
    for (std::size_t j = 0; j < nmask; ++j) {
      // #{w in X_J : D(w^-1) = S - I}, i.e. ascent set of w^-1 equals I.
      std::uint64_t lhs = 0;
      for (ElementId w : g.xsec[j])
        if ((~g.idesc_mask[w] & full) == i) ++lhs;
      Rational rhs = scalar_product_classfn(g.sys, g.ct, phi_y[i], g.bank[j]);
      if (rhs != Rational(lhs))
        r.witnesses.push_back({{"I", GenSet(std::uint32_t(i)).label(rank)},
                               {"J", GenSet(std::uint32_t(j)).label(rank)},
                               {"lhs", lhs},
                               {"rhs", to_string(rhs)}});
    }
  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_prop_wset(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "wset";
  const int rank = g.sys.rank();
  if (g.sys.order() > kScanOrderLimit) {
    r.verdict = "skipped:size";
    r.timing_ms = sw.ms();
    return r;
  }
  for (std::uint32_t mi = 0; mi < (1u << rank); ++mi)
    for (std::uint32_t mj = 0; mj < (1u << rank); ++mj) {
      GenSet I(mi), J(mj);
      std::uint64_t total = 0;
      for (ElementId b : double_coset_reps(g.sys, I, J).reps)
        total += w_set(g.sys, I, J, b).members.size();
      std::uint64_t lhs = g.phi_x_at_x(J, I);
      if (lhs != total)
        r.witnesses.push_back(
            {{"I", I.label(rank)}, {"J", J.label(rank)}, {"lhs", lhs}, {"rhs", total}});
    }
  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_double_coset_conjecture(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "dcc";
  const int rank = g.sys.rank();
  if (g.sys.order() > kScanOrderLimit) {
    r.verdict = "skipped:size";
    r.timing_ms = sw.ms();
    return r;
  }
  bool open_scan_clean = true;
  bool proved_all = rank <= 2;  // dihedral (and smaller): fully proved
  for (std::uint32_t mi = 0; mi < (1u << rank); ++mi)
    for (std::uint32_t mj = 0; mj < (1u << rank); ++mj) {
      GenSet I(mi), J(mj);
      for (ElementId b : double_coset_reps(g.sys, I, J).reps) {
        auto lhs = w_set(g.sys, I, J, b).members.size();
        auto rhs = w_set(g.sys, J, I, g.sys.inverse(b)).members.size();
        if (lhs == rhs) continue;
        // Which proved case, if any, does this triple fall under?
        bool conj_into = true;
        for (int s : J.elements()) {
          ElementId t = g.sys.multiply(g.sys.multiply(b, g.sys.generator(s)), g.sys.inverse(b));
          int gen = g.sys.as_generator(t);
          if (gen < 0 || !I.contains(gen)) {
            conj_into = false;
            break;
          }
        }
        bool proved = proved_all || J.empty() || J == GenSet::all(rank) || I.empty() ||
                      I == GenSet::all(rank) || I.count() == 1 || J.count() == 1 || conj_into;
        r.witnesses.push_back({{"I", I.label(rank)},
                               {"J", J.label(rank)},
                               {"b", static_cast<std::uint64_t>(b)},
                               {"lhs", lhs},
                               {"rhs", rhs},
                               {"proved_case", proved}});
        if (proved) r.verdict = "fail";
        else open_scan_clean = false;
      }
    }
  if (r.verdict.empty()) {
    if (!open_scan_clean) r.verdict = "open:witnesses";
    else if (proved_all) r.verdict = "pass";
    else r.verdict = "open:holds";
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_single_generator(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "dcc-single-generator";
  const int rank = g.sys.rank();
  if (g.sys.order() > kScanOrderLimit) {
    r.verdict = "skipped:size";
    r.timing_ms = sw.ms();
    return r;
  }
  auto witness = [&](GenSet I, int t, ElementId b, const char* what) {
    r.witnesses.push_back({{"I", I.label(rank)},
                           {"t", t + 1},
                           {"b", static_cast<std::uint64_t>(b)},
                           {"failed", what}});
  };
  for (int t = 0; t < rank; ++t) {
    GenSet T = GenSet::of({t});
    for (std::uint32_t mi = 0; mi < (1u << rank); ++mi) {
      GenSet I(mi);
      auto wi = g.sys.parabolic_elements(I);
      for (ElementId b : double_coset_reps(g.sys, I, T).reps) {
        auto lhs = w_set(g.sys, I, T, b);
        auto rhs = w_set(g.sys, T, I, g.sys.inverse(b));
        if (lhs.members.size() != rhs.members.size()) witness(I, t, b, "cardinality");

        ElementId u = g.sys.multiply(g.sys.multiply(b, g.sys.generator(t)), g.sys.inverse(b));
        int ugen = g.sys.as_generator(u);
        if (ugen >= 0 && I.contains(ugen)) {
          // b t b^-1 in I: |W(I,t,b)| = |W_I| / 2.
          if (lhs.members.size() * 2 != wi.size()) witness(I, t, b, "parabolic-quotient-size");
          continue;
        }
        // Decomposition case: u = a0 d a0^-1 with d in X_II an involution.
        auto dp = double_parabolic_components(g.sys, u, I, I);
        ElementId d = dp.b, a0 = dp.a;
        if (g.sys.multiply(d, d) != g.sys.identity()) witness(I, t, b, "d-involution");
        if (dp.c != g.sys.inverse(a0)) witness(I, t, b, "a0-symmetry");
        // Fix of conjugation by u inside W_I.
        std::vector<ElementId> fix;
        for (ElementId a : wi)
          if (g.sys.multiply(g.sys.multiply(u, a), u) == a) fix.push_back(a);
        // W(I,t,b) = W_I b  disjoint-union  a0^-1 Fix b t.
        std::vector<ElementId> decomp;
        for (ElementId a : wi) decomp.push_back(g.sys.multiply(a, b));
        ElementId bt = g.sys.mult_gen(b, t);
        ElementId a0inv = g.sys.inverse(a0);
        for (ElementId a : fix) decomp.push_back(g.sys.multiply(g.sys.multiply(a0inv, a), bt));
        std::sort(decomp.begin(), decomp.end());
        if (std::adjacent_find(decomp.begin(), decomp.end()) != decomp.end())
          witness(I, t, b, "decomposition-not-disjoint");
        if (decomp != lhs.members) witness(I, t, b, "decomposition-set");
        // Count formula on the swapped side:
        // |W(t,I,b^-1)| = |W_I| + #{a in W_I : d_a t = t d_a}.
        ElementId binv = g.sys.inverse(b);
        std::uint64_t commuting = 0;
        for (ElementId a : wi) {
          ElementId v = g.sys.multiply(g.sys.multiply(binv, a), b);
          ElementId da = double_parabolic_components(g.sys, v, T, T).b;
          if (g.sys.mult_gen(da, t) == g.sys.multiply(g.sys.generator(t), da)) ++commuting;
        }
        if (rhs.members.size() != wi.size() + commuting) witness(I, t, b, "count-formula");
      }
    }
  }
  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_structure(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "structure";
  const int rank = g.sys.rank();
  auto add_witness = [&](GenSet I, GenSet J, const char* what) {
    r.witnesses.push_back({{"I", I.label(rank)}, {"J", J.label(rank)}, {"failed", what}});
  };
  for (std::uint32_t mi = 0; mi < (1u << rank); ++mi)
    for (std::uint32_t mj = 0; mj < (1u << rank); ++mj) {
      GenSet I(mi), J(mj);
      auto cs = structure_constants(g.sys, I, J);
      std::uint64_t total = 0, mass = 0;
      for (const auto& [K, a] : cs) {
        total += a;
        mass += a * g.xsec[K.mask()].size();
      }
      if (total != double_coset_reps(g.sys, I, J).reps.size()) add_witness(I, J, "sum-rule");
      if (mass != std::uint64_t(g.xsec[mi].size()) * g.xsec[mj].size())
        add_witness(I, J, "mass-rule");
      // Full expansion oracle where the product fits comfortably.
      if (std::uint64_t(g.xsec[mi].size()) * g.xsec[mj].size() <= 2000000) {
        GroupAlgebraVector rhs;
        for (const auto& [K, a] : cs)
          rhs = ga_add(rhs, ga_scale(x_element(g.sys, K), Rational(a)));
        GroupAlgebraVector lhs =
            ga_multiply(g.sys, x_element(g.sys, I), x_element(g.sys, J));
        if (!(lhs == rhs)) add_witness(I, J, "expansion-oracle");
      }
    }

  // x <-> y coefficient round trips on a deterministic pseudo-random sample.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 16; ++trial) {
    std::map<GenSet, Rational> c;
    for (std::uint32_t m = 0; m < (1u << rank); ++m) {
      std::int64_t num = static_cast<std::int64_t>(next() % 19) - 9;
      std::int64_t den = 1 + static_cast<std::int64_t>(next() % 7);
      if (num != 0) c[GenSet(m)] = Rational(num, den);
    }
    if (basis_change_y_to_x(rank, basis_change_x_to_y(rank, c)) != c)
      r.witnesses.push_back({{"failed", "basis-round-trip"}, {"trial", trial}});
  }
  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

CheckReport check_classes(const GroupTables& g) {
  Stopwatch sw;
  CheckReport r;
  r.type = g.sys.spec();
  r.check = "classes";
  const int rank = g.sys.rank();
  auto note = [&](const char* what, json info = json::object()) {
    info["failed"] = what;
    r.witnesses.push_back(info);
  };

  // Realness: w ~ w^-1.
  for (ElementId w = 0; w < g.sys.order(); ++w)
    if (g.ct.class_of[w] != g.ct.class_of[g.sys.inverse(w)]) {
      note("realness", {{"element", static_cast<std::uint64_t>(w)}});
      break;
    }

  // Kernel facts: I ~_W J forces equal class counts over X_I and X_J, for
  // conjugacy classes and for lambda-sets.
  for (const auto& lam : g.cct.classes) {
    GenSet I0 = lam.representative;
    std::vector<std::uint64_t> base(g.ct.count(), 0);
    for (ElementId w : g.xsec[I0.mask()]) base[g.ct.class_of[w]]++;
    for (const auto& J : lam.members) {
      if (J == I0) continue;
      std::vector<std::uint64_t> other(g.ct.count(), 0);
      for (ElementId w : g.xsec[J.mask()]) other[g.ct.class_of[w]]++;
      if (base != other)
        note("class-counts", {{"I", I0.label(rank)}, {"J", J.label(rank)}});
      std::vector<std::uint64_t> lbase(g.cct.count(), 0), lother(g.cct.count(), 0);
      for (std::uint32_t C = 0; C < g.ct.count(); ++C) {
        lbase[g.lp.lambda_of_class[C]] += base[C];
        lother[g.lp.lambda_of_class[C]] += other[C];
      }
      if (lbase != lother)
        note("lambda-counts", {{"I", I0.label(rank)}, {"J", J.label(rank)}});
    }
  }

  // Lambda sets partition W.
  std::uint64_t mass = 0;
  for (auto s : g.lp.lambda_size) mass += s;
  if (mass != g.sys.order()) note("lambda-partition-mass");

  // xi_lambda = sum_beta nu_{lambda beta} phi_beta, exactly.
  auto A = matrix_A(g.sys, g.ct, g.cct, g.bank);
  for (std::uint32_t lam = 0; lam < g.cct.count(); ++lam) {
    ClassFunction acc;
    acc.values.assign(g.ct.count(), Rational(0));
    for (std::uint32_t beta = 0; beta < g.cct.count(); ++beta)
      acc = cf_add(acc, cf_scale(g.bank[g.cct.classes[beta].representative.mask()],
                                 A.inverse[lam][beta]));
    if (!(acc == xi_lambda(g.ct, g.lp, lam)))
      note("xi-lambda-expansion", {{"lambda", g.cct.classes[lam].representative.label(rank)}});
  }

  // Image dimension: rank of {Phi(x_I)} equals |Lambda|, so the kernel has
  // dimension 2^rank - |Lambda|.
  int rk = rank_of_classfns(g.bank);
  if (rk != static_cast<int>(g.cct.count()))
    note("image-rank", {{"rank", rk}, {"lambda", g.cct.count()}});

  // Count equality characterizes products of symmetric groups.
  bool eq = check_coxeqequ(g.ct, g.cct);
  if (eq != pure_type_a(g.sys.type()))
    note("coxeqequ", {{"equal_counts", eq}});

  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

std::vector<CheckReport> run_suite(const GroupTables& g, const std::string& suite) {
  std::vector<CheckReport> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (!g.full_bank)
    fail(errc::internal, "rank too large for the verification suites");
  if (want("isometry")) out.push_back(check_isometry(g));
  if (want("symmetry")) out.push_back(check_symmetry(g));
  if (want("gessel")) out.push_back(check_gessel_counts(g));
  if (want("structure")) out.push_back(check_structure(g));
  if (want("classes")) out.push_back(check_classes(g));
  if (want("dcc")) {
    out.push_back(check_prop_wset(g));
    out.push_back(check_double_coset_conjecture(g));
    out.push_back(check_single_generator(g));
  }
  if (out.empty()) fail(errc::parse_error, "unknown suite '" + suite + "'");
  return out;
}

CheckReport compare_with_fixture(const std::string& type_label, int threads) {
  Stopwatch sw;
  const Fixture* fx = find_fixture(type_label);
  if (!fx) fail(errc::parse_error, "no fixture for type " + type_label);
  CheckReport r;
  r.type = type_label;
  r.check = "fixtures";

  const std::size_t n = fx->labels.size();
  if (fx->recomputable) {
    auto g = GroupTables::build(type_label, BuildOptions{}, threads);
    auto mine = reorder_to_labels(g, d_matrix(g, 2, threads), fx->labels);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mine.entries[i][j] != fx->entries[i][j])
          r.witnesses.push_back({{"row", fx->labels[i]},
                                 {"col", fx->labels[j]},
                                 {"computed", mine.entries[i][j]},
                                 {"stored", fx->entries[i][j]}});
  } else {
    // E7/E8: structural consistency only.
    CoxeterType type = CoxeterType::parse(type_label);
    const int rank = type.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (fx->entries[i][j] != fx->entries[j][i])
          r.witnesses.push_back({{"row", fx->labels[i]},
                                 {"col", fx->labels[j]},
                                 {"failed", "symmetry"}});
    // The lambda(S) row must hold the coset counts |W| / |W_I|.
    std::size_t top = n;
    for (std::size_t i = 0; i < n; ++i)
      if (subset_of_label(fx->labels[i]) == GenSet::all(rank)) top = i;
    if (top == n) {
      r.witnesses.push_back({{"failed", "missing-lambda-S-row"}});
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t expect =
            type.order() / parabolic_order(type, subset_of_label(fx->labels[j]));
        if (fx->entries[top][j] != expect)
          r.witnesses.push_back({{"col", fx->labels[j]},
                                 {"stored", fx->entries[top][j]},
                                 {"expected", expect},
                                 {"failed", "lambda-S-row"}});
      }
    }
  }
  r.verdict = r.witnesses.empty() ? "pass" : "fail";
  r.timing_ms = sw.ms();
  return r;
}

nlohmann::json report_to_json(const CheckReport& r, bool with_timing) {
  return {{"type", r.type},
          {"check", r.check},
          {"verdict", r.verdict},
          {"witnesses", r.witnesses},
          {"timing_ms", with_timing ? r.timing_ms : 0}};
}

}  // namespace coxsolomon
