// Offline generator for the covariant recipe catalog.
//
// For every classifier slot this tool searches for a covariant of the slot's
// multidegree that vanishes identically (under all qubit permutations) on the
// slot's zero rows and is nonzero, permutation-wise, on its one rows:
//
//   1. Enumerate transvectant expressions over the ground form, grouped by
//      (amplitude degree, multidegree) and deduplicated through exact
//      evaluations on fingerprint states.
//   2. Solve for linear combinations killing the zero rows symbolically:
//      amplitudes are polynomials in the family parameters, so vanishing is
//      checked identically, not on samples.
//   3. Validate the surviving combinations on the one rows at sampled
//      parameter values, under the slot's combination mode.
//   4. Emit the catalog text with a checksum, plus (optionally) the header
//      with the embedded default copy.
//
// The output is deterministic; the repository pins the generated file and the
// test suite revalidates every table row against it.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qslocc4/multiform.hpp"
#include "qslocc4/normal_forms.hpp"
#include "qslocc4/state.hpp"
#include "poly4.hpp"

using qslocc4::FamilyId;
using qslocc4::GaussianRational;
using qslocc4::MultiForm;
using qslocc4::Poly4;
using qslocc4::Rational;
using qslocc4::Specialization;
using qslocc4::State;
using GR = GaussianRational;
using MFg = MultiForm<GR>;
using MFp = MultiForm<Poly4>;

namespace {

// ---------------------------------------------------------------- expressions

struct Expr {
  int a = -1, b = -1;              // children; a == -1 marks the ground form
  std::array<int, 4> r{0, 0, 0, 0};
  int deg = 1;
  std::array<int, 4> md{1, 1, 1, 1};
};

std::vector<Expr> pool;

template <class F>
MultiForm<F> eval_expr(int id, const State<F>& s,
                       std::vector<std::optional<MultiForm<F>>>& cache) {
  if (cache.size() < pool.size()) cache.resize(pool.size());
  if (cache[static_cast<size_t>(id)]) return *cache[static_cast<size_t>(id)];
  const Expr& e = pool[static_cast<size_t>(id)];
  MultiForm<F> v;
  if (e.a < 0) {
    v = MultiForm<F>::ground(s);
  } else {
    v = transvect(eval_expr(e.a, s, cache), eval_expr(e.b, s, cache), e.r);
  }
  cache[static_cast<size_t>(id)] = v;
  return v;
}

// ------------------------------------------------------- linear algebra, Q(i)

struct RowReducer {
  size_t n = 0;
  std::vector<std::vector<GR>> rows;  // normalized: rows[i][lead[i]] == 1
  std::vector<size_t> lead;

  explicit RowReducer(size_t ncols) : n(ncols) {}

  // Returns true when v is independent of the span so far.
  bool add(std::vector<GR> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const GR& c = v[lead[i]];
      if (!c.is_zero()) {
        GR f = c;
        for (size_t j = 0; j < n; ++j) v[j] = v[j] - f * rows[i][j];
      }
    }
    size_t p = n;
    for (size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p == n) return false;
    GR inv = v[p];
    for (size_t j = 0; j < n; ++j) v[j] = v[j] / inv;
    rows.push_back(std::move(v));
    lead.push_back(p);
    return true;
  }

  size_t rank() const { return rows.size(); }

  // Basis of the solution space of (all added rows) * x = 0.
  std::vector<std::vector<GR>> nullspace() {
    // Full Gauss-Jordan pass.
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t k = 0; k < rows.size(); ++k) {
        if (k == i) continue;
        const GR c = rows[k][lead[i]];
        if (!c.is_zero())
          for (size_t j = 0; j < n; ++j)
            rows[k][j] = rows[k][j] - c * rows[i][j];
      }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : lead) is_pivot[p] = true;
    std::vector<std::vector<GR>> basis;
    for (size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      std::vector<GR> x(n, GR(0));
      x[f] = GR(1);
      for (size_t i = 0; i < rows.size(); ++i) x[lead[i]] = -rows[i][f];
      basis.push_back(std::move(x));
    }
    return basis;
  }
};

// --------------------------------------------------------------- fingerprints

std::vector<State<GR>> fp_states;
std::vector<std::vector<std::optional<MFg>>> fp_cache;

std::vector<GR> fingerprint(int id) {
  std::vector<GR> out;
  for (size_t s = 0; s < fp_states.size(); ++s) {
    MFg v = eval_expr(id, fp_states[s], fp_cache[s]);
    std::array<int, 4> md = v.md;
    for (int i0 = 0; i0 <= md[0]; ++i0)
      for (int i1 = 0; i1 <= md[1]; ++i1)
        for (int i2 = 0; i2 <= md[2]; ++i2)
          for (int i3 = 0; i3 <= md[3]; ++i3) {
            auto it = v.coef.find(MFg::key(i0, i1, i2, i3));
            out.push_back(it == v.coef.end() ? GR(0) : it->second);
          }
  }
  return out;
}

void drop_last_expr() {
  pool.pop_back();
  for (auto& c : fp_cache)
    if (c.size() > pool.size()) c.resize(pool.size());
}

// ------------------------------------------------------------------ classes

std::uint64_t class_key(int deg, const std::array<int, 4>& md) {
  return (static_cast<std::uint64_t>(deg) << 32) |
         (static_cast<std::uint64_t>(md[0]) << 24) |
         (static_cast<std::uint64_t>(md[1]) << 16) |
         (static_cast<std::uint64_t>(md[2]) << 8) |
         static_cast<std::uint64_t>(md[3]);
}

std::map<std::uint64_t, std::vector<int>> classes;
std::map<std::uint64_t, RowReducer> class_basis;

bool class_try_add(int deg, const std::array<int, 4>& md, int a, int b,
                   const std::array<int, 4>& r, size_t cap) {
  std::uint64_t ck = class_key(deg, md);
  auto& members = classes[ck];
  if (members.size() >= cap) return false;
  Expr e;
  e.a = a;
  e.b = b;
  e.r = r;
  e.deg = deg;
  e.md = md;
  pool.push_back(e);
  int id = static_cast<int>(pool.size()) - 1;
  std::vector<GR> fp = fingerprint(id);
  bool nonzero = false;
  for (const GR& v : fp)
    if (!v.is_zero()) {
      nonzero = true;
      break;
    }
  if (!nonzero) {
    drop_last_expr();
    return false;
  }
  auto [it, fresh] = class_basis.try_emplace(ck, fp.size());
  if (!it->second.add(std::move(fp))) {
    drop_last_expr();
    return false;
  }
  members.push_back(id);
  return true;
}

// Class admission by degree.  Low degrees keep everything; degree 4 keeps
// classes that can still contract to a slot target; degrees 5 and up keep the
// slot targets only.  Keeping the pools tight is what makes exact arithmetic
// affordable here.
bool md_allowed(int deg, const std::array<int, 4>& md) {
  for (int k = 0; k < 4; ++k) {
    if (md[k] < 0 || md[k] > 7) return false;
    if ((md[k] % 2) != (deg % 2)) return false;
  }
  if (deg <= 3) return true;
  if (deg == 4)
    return md[0] <= 6 && md[1] <= 6 && md[2] <= 6 && md[3] <= 6 &&
           md[0] + md[1] + md[2] + md[3] <= 14;
  if (deg == 5)
    return md[0] <= 5 && md[1] <= 3 && md[2] <= 3 && md[3] <= 3;
  if (deg == 6)
    return md[0] <= 6 && md[1] <= 4 && md[2] <= 2 && md[3] <= 2;
  if (deg == 7)
    return md == std::array<int, 4>{1, 1, 1, 1} ||
           md == std::array<int, 4>{5, 1, 1, 1} ||
           md == std::array<int, 4>{3, 3, 1, 1} ||
           md == std::array<int, 4>{3, 1, 1, 1};
  return false;
}

struct AddStats {
  long attempts = 0, cap_skips = 0, zero_drops = 0, dep_drops = 0, added = 0;
};
AddStats add_stats;

void combine_into(int deg, const std::vector<int>& A, const std::vector<int>& B,
                  bool same, size_t cap, bool only_md,
                  const std::array<int, 4>& target_md) {
  for (size_t ia = 0; ia < A.size(); ++ia) {
    size_t jb0 = same ? ia : 0;
    for (size_t jb = jb0; jb < B.size(); ++jb) {
      const Expr ea = pool[static_cast<size_t>(A[ia])];
      const Expr eb = pool[static_cast<size_t>(B[jb])];
      std::array<int, 4> rmax;
      for (int k = 0; k < 4; ++k) rmax[k] = std::min(ea.md[k], eb.md[k]);
      std::array<int, 4> r{0, 0, 0, 0};
      while (true) {
        std::array<int, 4> md;
        for (int k = 0; k < 4; ++k) md[k] = ea.md[k] + eb.md[k] - 2 * r[k];
        bool want = only_md ? (md == target_md) : md_allowed(deg, md);
        if (want) class_try_add(deg, md, A[ia], B[jb], r, cap);
        int k = 0;
        while (k < 4 && r[k] == rmax[k]) {
          r[k] = 0;
          ++k;
        }
        if (k == 4) break;
        ++r[k];
      }
    }
  }
}

std::vector<int> exprs_of_degree(int deg) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(pool.size()); ++i)
    if (pool[static_cast<size_t>(i)].deg == deg) out.push_back(i);
  return out;
}

size_t degree_cap(int deg) {
  if (deg <= 4) return 10;
  if (deg == 5) return 16;
  if (deg == 6) return 12;
  return 24;
}

void dump_class_sizes() {
  for (const auto& [ck, members] : classes) {
    if (members.empty()) continue;
    int deg = static_cast<int>(ck >> 32);
    std::cerr << "    deg " << deg << " md (" << ((ck >> 24) & 0xff) << ","
              << ((ck >> 16) & 0xff) << "," << ((ck >> 8) & 0xff) << ","
              << (ck & 0xff) << "): " << members.size() << "\n";
  }
}

void build_degree(int deg) {
  for (int d1 = 1; 2 * d1 <= deg; ++d1) {
    int d2 = deg - d1;
    auto A = exprs_of_degree(d1);
    auto B = exprs_of_degree(d2);
    combine_into(deg, A, B, d1 == d2, degree_cap(deg), false, {});
  }
  std::cerr << "  degree " << deg << " built, pool " << pool.size() << "\n";
}

// The degree 12 single-slot class is assembled from every pair shape whose
// multidegrees contract fully onto slot 0.
void build_deg12() {
  auto V4 = classes[class_key(4, {4, 0, 0, 0})];
  auto V6 = classes[class_key(6, {6, 0, 0, 0})];
  combine_into(8, V4, V4, true, 14, true, {4, 0, 0, 0});
  combine_into(8, V4, V4, true, 14, true, {6, 0, 0, 0});
  auto VH8 = classes[class_key(8, {4, 0, 0, 0})];
  auto VJ8 = classes[class_key(8, {6, 0, 0, 0})];
  const std::array<int, 4> target{6, 0, 0, 0};
  combine_into(12, V4, VH8, false, 60, true, target);
  combine_into(12, V4, VJ8, false, 60, true, target);
  combine_into(12, V6, V6, true, 60, true, target);
  for (int d5 : {5})
    for (int d7 : {7}) {
      auto A = exprs_of_degree(d5);
      auto B = exprs_of_degree(d7);
      combine_into(12, A, B, false, 60, true, target);
    }
  std::cerr << "  degree 12 built, pool " << pool.size() << " (class size "
            << classes[class_key(12, target)].size() << ")\n";
}

void bfs_build() {
  pool.clear();
  pool.push_back(Expr{});
  classes.clear();
  class_basis.clear();
  classes[class_key(1, {1, 1, 1, 1})] = {0};
  for (int deg = 2; deg <= 7; ++deg) build_degree(deg);
  build_deg12();
}

// ------------------------------------------------------------------ rows

struct RowSpec {
  std::string name;
  FamilyId fam;
  std::vector<std::string> cons;
};

struct SlotSpec {
  std::string name;
  std::array<int, 4> md;
  std::vector<int> degrees;
  bool and_coset = false;
  std::vector<RowSpec> zero_rows;  // containment-reduced
  std::vector<RowSpec> one_rows;   // complete
};

int free_arity(const RowSpec& row) {
  return qslocc4::family_arity(row.fam) - static_cast<int>(row.cons.size());
}

// Resolved parameter vector of a constrained family, over any field.
template <class F>
std::vector<F> resolve_params(const RowSpec& row, const std::vector<F>& free) {
  int arity = qslocc4::family_arity(row.fam);
  Specialization sp = Specialization::parse(row.cons, arity);
  std::vector<std::optional<F>> val(static_cast<size_t>(arity));
  std::vector<bool> constrained(static_cast<size_t>(arity), false);
  for (const auto& t : sp.terms) constrained[static_cast<size_t>(t.lhs)] = true;
  size_t next = 0;
  for (int i = 0; i < arity; ++i)
    if (!constrained[static_cast<size_t>(i)]) val[static_cast<size_t>(i)] = free[next++];
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& t : sp.terms) {
      if (val[static_cast<size_t>(t.lhs)]) continue;
      if (t.rhs == -1) {
        val[static_cast<size_t>(t.lhs)] =
            qslocc4::FieldTraits<F>::from_rational(t.coeff);
        progress = true;
      } else if (val[static_cast<size_t>(t.rhs)]) {
        val[static_cast<size_t>(t.lhs)] =
            qslocc4::FieldTraits<F>::from_rational(t.coeff) *
            *val[static_cast<size_t>(t.rhs)];
        progress = true;
      }
    }
  }
  std::vector<F> out;
  for (auto& v : val) out.push_back(*v);
  return out;
}

// The six parameter maps covering the qubit-permutation action on G.
template <class F>
std::vector<std::array<F, 4>> g_parameter_orbit(const std::array<F, 4>& t) {
  const F h = qslocc4::FieldTraits<F>::from_rational(Rational(1, 2));
  const F &a = t[0], &b = t[1], &c = t[2], &d = t[3];
  std::vector<std::array<F, 4>> out;
  out.push_back(t);
  out.push_back({a, b, qslocc4::FieldTraits<F>::zero() - c, d});
  out.push_back({(a + b - c + d) * h, (a + b + c - d) * h,
                 (b + c + d - a) * h, (a - b + c + d) * h});
  out.push_back({(a + b + c + d) * h, (a + b - c - d) * h,
                 (a - b + c - d) * h, (a - b - c + d) * h});
  out.push_back({(a + b - c + d) * h, (a + b + c - d) * h,
                 (a - b - c - d) * h, (a - b + c + d) * h});
  out.push_back({(a + b + c + d) * h, (a + b - c - d) * h,
                 (b - a - c + d) * h, (a - b - c + d) * h});
  return out;
}

// All amplitude-distinct symbolic states whose joint vanishing is equivalent
// to vanishing of the covariant on every qubit permutation of the row family.
std::vector<State<Poly4>> symbolic_states(const RowSpec& row) {
  std::vector<Poly4> free;
  for (int k = 0; k < free_arity(row); ++k) free.push_back(Poly4::variable(k));
  std::vector<State<Poly4>> out;
  if (row.fam == FamilyId::G_abcd) {
    auto params = resolve_params<Poly4>(row, free);
    std::array<Poly4, 4> t = {params[0], params[1], params[2], params[3]};
    for (const auto& m : g_parameter_orbit<Poly4>(t))
      out.push_back(qslocc4::gen_G(m[0], m[1], m[2], m[3]));
  } else {
    auto params = resolve_params<Poly4>(row, free);
    State<Poly4> base = qslocc4::gen_family<Poly4>(row.fam, params);
    for (const auto& sigma : qslocc4::all_qubit_permutations()) {
      State<Poly4> p = qslocc4::permute_qubits(base, sigma);
      bool dup = false;
      for (const auto& q : out)
        if (q == p) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(p);
    }
  }
  // Drop exact duplicates among the G images too.
  std::vector<State<Poly4>> dedup;
  for (const auto& s : out) {
    bool dup = false;
    for (const auto& q : dedup)
      if (q == s) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(s);
  }
  return dedup;
}

// ------------------------------------------------------------- one-row checks

std::vector<std::vector<Rational>> sample_values(int arity) {
  // Generic values: distinct magnitudes, no vanishing sums of two.
  static const long long pools[3][3] = {{3, 5, 7}, {2, -7, 11}, {5, 3, -2}};
  std::vector<std::vector<Rational>> out;
  for (int s = 0; s < 3; ++s) {
    std::vector<Rational> v;
    for (int k = 0; k < arity; ++k) v.push_back(Rational(pools[s][k]));
    out.push_back(v);
  }
  return out;
}

struct Candidate {
  std::vector<int> ids;
  std::vector<GR> w;
};

MFg eval_candidate(const Candidate& cand, const State<GR>& s) {
  std::vector<std::optional<MFg>> cache;
  MFg acc;
  bool first = true;
  for (size_t i = 0; i < cand.ids.size(); ++i) {
    MFg v = eval_expr(cand.ids[i], s, cache).scaled(cand.w[i]);
    if (first) {
      acc = v;
      first = false;
    } else {
      acc = acc + v;
    }
  }
  return acc;
}

bool one_row_passes(const Candidate& cand, const RowSpec& row, bool and_coset) {
  for (const auto& vals : sample_values(free_arity(row))) {
    std::vector<GR> free;
    for (const Rational& r : vals) free.push_back(GR(r));
    auto params = resolve_params<GR>(row, free);
    State<GR> s = qslocc4::gen_family<GR>(row.fam, params);
    if (!and_coset) {
      bool nz = false;
      for (const auto& sigma : qslocc4::all_qubit_permutations()) {
        if (!eval_candidate(cand, qslocc4::permute_qubits(s, sigma))
                 .exactly_zero()) {
          nz = true;
          break;
        }
      }
      if (!nz) return false;
    } else {
      for (int q = 0; q < 4 && true; ++q) {
        bool coset_nz = false;
        for (const auto& sigma : qslocc4::all_qubit_permutations()) {
          if (sigma[0] != q) continue;
          if (!eval_candidate(cand, qslocc4::permute_qubits(s, sigma))
                   .exactly_zero()) {
            coset_nz = true;
            break;
          }
        }
        if (!coset_nz) return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------- slot search

std::optional<Candidate> search_slot(const SlotSpec& slot) {
  for (int deg : slot.degrees) {
    auto it = classes.find(class_key(deg, slot.md));
    if (it == classes.end() || it->second.empty()) continue;
    const std::vector<int>& cand_ids = it->second;
    size_t n = cand_ids.size();
    RowReducer reducer(n);
    for (const RowSpec& row : slot.zero_rows) {
      for (const State<Poly4>& sym : symbolic_states(row)) {
        std::vector<std::optional<MFp>> cache;
        std::vector<MFp> vals;
        for (int id : cand_ids) vals.push_back(eval_expr(id, sym, cache));
        // Equations: for each form key and parameter monomial, the weighted
        // sum of coefficients must vanish.
        std::set<std::uint32_t> form_keys;
        for (const MFp& v : vals)
          for (const auto& [k, p] : v.coef) form_keys.insert(k);
        for (std::uint32_t fk : form_keys) {
          std::set<std::uint32_t> mono;
          for (const MFp& v : vals) {
            auto pit = v.coef.find(fk);
            if (pit == v.coef.end()) continue;
            for (const auto& [mk, c] : pit->second.t) mono.insert(mk);
          }
          for (std::uint32_t mk : mono) {
            std::vector<GR> eq(n, GR(0));
            for (size_t i = 0; i < n; ++i) {
              auto pit = vals[i].coef.find(fk);
              if (pit == vals[i].coef.end()) continue;
              auto cit = pit->second.t.find(mk);
              if (cit != pit->second.t.end()) eq[i] = cit->second;
            }
            reducer.add(std::move(eq));
            if (reducer.rank() == n) break;
          }
          if (reducer.rank() == n) break;
        }
        if (reducer.rank() == n) break;
      }
      if (reducer.rank() == n) break;
    }
    if (reducer.rank() == n) {
      std::cerr << "  degree " << deg << ": no combination kills the zero rows\n";
      continue;
    }
    auto basis = reducer.nullspace();
    std::cerr << "  degree " << deg << ": " << n << " candidates, nullspace dim "
              << basis.size() << "\n";
    // Try basis vectors, then pair sums, then seeded random small mixtures.
    std::vector<std::vector<GR>> trials = basis;
    if (basis.size() > 1) {
      for (size_t i = 0; i + 1 < basis.size() && trials.size() < 40; ++i)
        for (size_t j = i + 1; j < basis.size() && trials.size() < 40; ++j) {
          std::vector<GR> mix(n, GR(0));
          for (size_t k = 0; k < n; ++k) mix[k] = basis[i][k] + basis[j][k];
          trials.push_back(mix);
        }
      std::mt19937_64 rng(424242);
      std::uniform_int_distribution<int> coin(-2, 2);
      for (int t = 0; t < 300; ++t) {
        std::vector<GR> mix(n, GR(0));
        bool nz = false;
        for (const auto& b : basis) {
          int c = coin(rng);
          if (c == 0) continue;
          nz = true;
          for (size_t k = 0; k < n; ++k) mix[k] = mix[k] + GR(c) * b[k];
        }
        if (nz) trials.push_back(mix);
      }
    }
    for (const auto& w : trials) {
      Candidate cand;
      for (size_t i = 0; i < n; ++i)
        if (!w[i].is_zero()) {
          cand.ids.push_back(cand_ids[i]);
          cand.w.push_back(w[i]);
        }
      if (cand.ids.empty()) continue;
      bool ok = true;
      for (const RowSpec& row : slot.one_rows)
        if (!one_row_passes(cand, row, slot.and_coset)) {
          ok = false;
          break;
        }
      if (ok) return cand;
    }
    std::cerr << "  degree " << deg << ": nullspace found but one rows reject all trials\n";
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- emission

std::string rational_str(const Rational& r) { return r.to_string(); }

std::string gr_str(const GR& v) {
  return rational_str(v.re()) + ":" + rational_str(v.im());
}

void collect_reachable(int id, std::set<int>& seen) {
  if (seen.count(id)) return;
  const Expr& e = pool[static_cast<size_t>(id)];
  if (e.a >= 0) {
    collect_reachable(e.a, seen);
    collect_reachable(e.b, seen);
  }
  seen.insert(id);
}

void emit_slot(std::ostream& os, const SlotSpec& slot, const Candidate& cand,
               int degree) {
  std::set<int> reach;
  for (int id : cand.ids) collect_reachable(id, reach);
  std::map<int, std::string> names;
  os << "slot " << slot.name << "\n";
  os << "mode " << (slot.and_coset ? "and-coset" : "or") << "\n";
  os << "degree " << degree << "\n";
  os << "md " << slot.md[0] << " " << slot.md[1] << " " << slot.md[2] << " "
     << slot.md[3] << "\n";
  int counter = 0;
  for (int id : reach) {
    const Expr& e = pool[static_cast<size_t>(id)];
    if (e.a < 0) {
      names[id] = "f";
      continue;
    }
    names[id] = "n" + std::to_string(++counter);
    os << "step " << names[id] << " tv " << names[e.a] << " " << names[e.b]
       << " " << e.r[0] << " " << e.r[1] << " " << e.r[2] << " " << e.r[3]
       << "\n";
  }
  os << "step out lin";
  for (size_t i = 0; i < cand.ids.size(); ++i)
    os << " " << gr_str(cand.w[i]) << " " << names[cand.ids[i]];
  os << "\n";
  os << "endslot\n";
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = "data/covariant_recipes.txt";
  std::string header_path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) out_path = argv[++i];
    else if (arg == "--header" && i + 1 < argc) header_path = argv[++i];
    else {
      std::cerr << "usage: gen_catalog [--out FILE] [--header FILE]\n";
      return 2;
    }
  }

  // Fingerprint states: fixed generic integer amplitudes keep every exact
  // evaluation denominator-free.
  {
    const long long re1[16] = {3, -1, 2, 5, -2, 1, 4, -3,
                               1, 2, -5, 3, -1, -4, 2, 1};
    const long long im1[16] = {1, 0, -2, 1, 3, -1, 0, 2,
                               -1, 1, 2, 0, -3, 1, 0, -2};
    const long long re2[16] = {-2, 4, 1, -3, 5, 2, -1, 1,
                               3, -4, 2, 1, -2, 3, 1, -5};
    const long long im2[16] = {0, 1, -1, 2, -2, 0, 3, -1,
                               1, 0, -2, 2, 1, -1, 0, 1};
    State<GR> s1, s2;
    for (int m = 0; m < 16; ++m) {
      s1.a[m] = GR(Rational(re1[m]), Rational(im1[m]));
      s2.a[m] = GR(Rational(re2[m]), Rational(im2[m]));
    }
    fp_states.push_back(s1);
    fp_states.push_back(s2);
  }
  fp_cache.resize(fp_states.size());

  std::cerr << "building expression classes...\n";
  bfs_build();
  std::cerr << "pool size " << pool.size() << "\n";
  dump_class_sizes();

  auto R = [](const char* name, FamilyId fam,
              std::vector<std::string> cons) {
    return RowSpec{name, fam, std::move(cons)};
  };

  const RowSpec G_abcc = R("G_abcc", FamilyId::G_abcd, {"d=c"});
  const RowSpec G_abb0 = R("G_abb0", FamilyId::G_abcd, {"c=b", "d=0"});
  const RowSpec G_aam2a0 =
      R("G_aam2a0", FamilyId::G_abcd, {"b=a", "c=-2a", "d=0"});
  const RowSpec G_00aa = R("G_00aa", FamilyId::G_abcd, {"a=0", "b=0", "d=c"});
  const RowSpec G_abbb = R("G_abbb", FamilyId::G_abcd, {"c=b", "d=b"});
  const RowSpec G_ab00 = R("G_ab00", FamilyId::G_abcd, {"c=0", "d=0"});
  const RowSpec G_a000 = R("G_a000", FamilyId::G_abcd, {"b=0", "c=0", "d=0"});
  const RowSpec G_aaa0 = R("G_aaa0", FamilyId::G_abcd, {"b=a", "c=a", "d=0"});
  const RowSpec L_abc2 = R("L_abc2", FamilyId::L_abc2, {});
  const RowSpec L_abb2 = R("L_abb2", FamilyId::L_abc2, {"c=b"});
  const RowSpec L_ab02 = R("L_ab02", FamilyId::L_abc2, {"c=0"});
  const RowSpec L_a0c2 = R("L_a0c2", FamilyId::L_abc2, {"b=0"});
  const RowSpec L_a002 = R("L_a002", FamilyId::L_abc2, {"b=0", "c=0"});
  const RowSpec L_aa02 = R("L_aa02", FamilyId::L_abc2, {"b=a", "c=0"});
  const RowSpec L_00c2 = R("L_00c2", FamilyId::L_abc2, {"a=0", "b=0"});
  const RowSpec L_0cc2 = R("L_0cc2", FamilyId::L_abc2, {"a=0", "c=b"});
  const RowSpec L_02bb2 = R("L_02bb2", FamilyId::L_abc2, {"a=0", "c=b/2"});
  const RowSpec L_a2b2 = R("L_a2b2", FamilyId::L_a2b2, {});
  const RowSpec L_a2a2 = R("L_a2a2", FamilyId::L_a2b2, {"b=a"});
  const RowSpec L_02a2 = R("L_02a2", FamilyId::L_a2b2, {"a=0"});
  const RowSpec L_ab3 = R("L_ab3", FamilyId::L_ab3, {});
  const RowSpec L_0b3 = R("L_0b3", FamilyId::L_ab3, {"a=0"});
  const RowSpec L_a03 = R("L_a03", FamilyId::L_ab3, {"b=0"});
  const RowSpec L_a4 = R("L_a4", FamilyId::L_a4, {});
  const RowSpec L_a2_0 = R("L_a2_0", FamilyId::L_a2_03p1, {});

  std::vector<SlotSpec> slots;
  slots.push_back(SlotSpec{"C",
                           {1, 1, 1, 1},
                           {3, 5, 7},
                           false,
                           {G_a000},
                           {L_a002, L_0b3, L_a2a2, L_a4}});
  slots.push_back(SlotSpec{"K5",
                           {5, 1, 1, 1},
                           {5, 7},
                           false,
                           {G_abbb, L_a002, L_a2a2},
                           {L_abb2, L_ab3, L_0b3, L_a4}});
  slots.push_back(SlotSpec{"K3",
                           {3, 3, 1, 1},
                           {3, 5, 7},
                           false,
                           {G_ab00},
                           {L_ab02, L_a2b2}});
  slots.push_back(SlotSpec{"D",
                           {4, 0, 0, 0},
                           {4, 6},
                           false,
                           {G_a000, L_a002, G_aaa0},
                           {L_0b3, L_a2a2, L_a4, L_0cc2, L_a03}});
  slots.push_back(SlotSpec{"H",
                           {2, 2, 2, 0},
                           {4, 6},
                           false,
                           {G_00aa},
                           {L_aa02, L_00c2, L_02a2, L_a2_0}});
  slots.push_back(SlotSpec{"G1",
                           {3, 1, 1, 1},
                           {3, 5, 7},
                           true,
                           {G_00aa, L_aa02, L_00c2},
                           {L_02a2, L_a2_0}});
  slots.push_back(SlotSpec{"G2",
                           {3, 1, 1, 1},
                           {3, 5, 7},
                           false,
                           {G_00aa, L_00c2},
                           {L_aa02, L_02a2, L_a2_0}});
  slots.push_back(SlotSpec{"L",
                           {6, 0, 0, 0},
                           {12},
                           false,
                           {G_abcc, G_abb0, G_aam2a0, L_abb2, L_ab02, L_0b3,
                            L_a2a2, L_00c2, L_02a2},
                           {L_abc2, L_ab3, L_a2b2, L_a4, L_a0c2, L_a03,
                            L_02bb2, L_a2_0}});

  std::map<std::string, Candidate> found;
  for (const SlotSpec& slot : slots) {
    std::cerr << "slot " << slot.name << "...\n";
    auto cand = search_slot(slot);
    if (!cand) {
      std::cerr << "  no recipe found for slot " << slot.name << "\n";
      continue;
    }
    std::cerr << "  ok: " << cand->ids.size() << " term(s), degree "
              << pool[static_cast<size_t>(cand->ids[0])].deg << "\n";
    found[slot.name] = *cand;
  }

  std::ostringstream body;
  body << "# Covariant recipe catalog.  Generated by tools/gen_catalog; do\n";
  body << "# not edit by hand.  Each slot lists a transvectant DAG over the\n";
  body << "# ground form f; 'out' is a linear combination with coefficients\n";
  body << "# written re:im as plain rationals.\n";
  body << "catalog-version 1\n";
  bool all_ok = true;
  for (const SlotSpec& slot : slots) {
    auto it = found.find(slot.name);
    if (it == found.end()) {
      std::cerr << "FAILED: no recipe found for slot " << slot.name << "\n";
      all_ok = false;
      continue;
    }
    int degree = pool[static_cast<size_t>(it->second.ids[0])].deg;
    emit_slot(body, slot, it->second, degree);
  }
  if (!all_ok) {
    std::cerr << "catalog generation failed\n";
    return 1;
  }
  std::string text = body.str();
  char sum[32];
  std::snprintf(sum, sizeof sum, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  text += std::string("checksum ") + sum + "\n";

  std::ofstream out(out_path);
  out << text;
  out.close();
  std::cerr << "wrote " << out_path << "\n";

  if (!header_path.empty()) {
    std::ofstream h(header_path);
    h << "#ifndef QSLOCC4_COVARIANT_CATALOG_DEFAULT_HPP\n";
    h << "#define QSLOCC4_COVARIANT_CATALOG_DEFAULT_HPP\n\n";
    h << "// Embedded copy of data/covariant_recipes.txt.  Regenerate with\n";
    h << "// tools/gen_catalog --out data/covariant_recipes.txt --header "
         "include/qslocc4/covariant_catalog_default.hpp\n";
    h << "namespace qslocc4 {\n\n";
    h << "inline constexpr const char kDefaultCovariantCatalog[] = "
         "R\"CATALOG(";
    h << text;
    h << ")CATALOG\";\n\n";
    h << "}  // namespace qslocc4\n\n";
    h << "#endif  // QSLOCC4_COVARIANT_CATALOG_DEFAULT_HPP\n";
    std::cerr << "wrote " << header_path << "\n";
  }
  return 0;
}
