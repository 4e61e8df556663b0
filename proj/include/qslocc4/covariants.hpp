#ifndef QSLOCC4_COVARIANTS_HPP
#define QSLOCC4_COVARIANTS_HPP

// Covariant recipe catalog: parsing, evaluation, and the permutation-combined
// bits consumed by the classifier.
//
// A recipe is a straight-line transvectant program over the ground form of a
// state.  Each classifier slot stores one recipe together with a combination
// mode that says how the 24 qubit permutations enter its bit:
//
//   or        bit = 1 iff the recipe is nonzero on at least one permutation
//   and-coset bit = 1 iff every placement coset {sigma : sigma[0] = q} has a
//             permutation with nonzero value
//
// The default catalog is embedded at build time; QSLOCC4_RECIPES overrides it
// with an external file of the same format.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covariant_catalog_default.hpp"
#include "multiform.hpp"
#include "scalar.hpp"
#include "state.hpp"

namespace qslocc4 {

struct RecipeStep {
  std::string name;
  int lhs = -1, rhs = -1;  // operand step indices; -1 means the ground form
  std::array<int, 4> r{0, 0, 0, 0};
};

struct RecipeTerm {
  GaussianRational weight;
  int step = -1;  // -1: the ground form itself
};

struct SlotRecipe {
  std::string name;
  bool and_coset = false;
  int degree = 0;
  std::array<int, 4> md{0, 0, 0, 0};
  std::vector<RecipeStep> steps;
  std::vector<RecipeTerm> out;
};

struct Catalog {
  std::vector<SlotRecipe> slots;
  std::string checksum;

  const SlotRecipe& slot(const std::string& name) const {
    for (const SlotRecipe& s : slots)
      if (s.name == name) return s;
    throw std::runtime_error("catalog has no slot named " + name);
  }
};

namespace catalog_detail {

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

// Coefficients are serialized re:im with both parts plain rationals.
inline GaussianRational parse_weight(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("bad catalog coefficient: " + s);
  return GaussianRational(parse_rational(s.substr(0, colon)),
                          parse_rational(s.substr(colon + 1)));
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace catalog_detail

inline Catalog parse_catalog(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  std::string body;
  SlotRecipe cur;
  bool in_slot = false;
  std::map<std::string, int> names;
  while (std::getline(in, line)) {
    if (line.rfind("checksum ", 0) == 0) {
      cat.checksum = line.substr(9);
      std::uint64_t h = catalog_detail::fnv1a64(body);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%016llx",
                    static_cast<unsigned long long>(h));
      if (cat.checksum != buf)
        throw std::runtime_error("catalog checksum mismatch");
      continue;
    }
    body += line;
    body += '\n';
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "catalog-version") {
      int v = 0;
      ls >> v;
      if (v != 1) throw std::runtime_error("unsupported catalog version");
    } else if (tok == "slot") {
      cur = SlotRecipe{};
      names.clear();
      names["f"] = -1;
      ls >> cur.name;
      in_slot = true;
    } else if (tok == "mode") {
      std::string m;
      ls >> m;
      cur.and_coset = (m == "and-coset");
    } else if (tok == "degree") {
      ls >> cur.degree;
    } else if (tok == "md") {
      ls >> cur.md[0] >> cur.md[1] >> cur.md[2] >> cur.md[3];
    } else if (tok == "step") {
      std::string name, op;
      ls >> name >> op;
      if (op == "tv") {
        RecipeStep st;
        st.name = name;
        std::string a, b;
        ls >> a >> b >> st.r[0] >> st.r[1] >> st.r[2] >> st.r[3];
        st.lhs = names.at(a);
        st.rhs = names.at(b);
        names[name] = static_cast<int>(cur.steps.size());
        cur.steps.push_back(st);
      } else if (op == "lin") {
        std::string w, ref;
        while (ls >> w >> ref) {
          RecipeTerm t;
          t.weight = catalog_detail::parse_weight(w);
          t.step = names.at(ref);
          cur.out.push_back(t);
        }
        if (cur.out.empty())
          throw std::runtime_error("empty lin step in catalog");
      } else {
        throw std::runtime_error("unknown catalog op: " + op);
      }
    } else if (tok == "endslot") {
      if (!in_slot) throw std::runtime_error("endslot outside slot");
      cat.slots.push_back(cur);
      in_slot = false;
    } else {
      throw std::runtime_error("unknown catalog line: " + line);
    }
  }
  if (in_slot) throw std::runtime_error("unterminated slot in catalog");
  if (cat.slots.empty()) throw std::runtime_error("catalog has no slots");
  return cat;
}

// The catalog in effect: the embedded default, unless QSLOCC4_RECIPES names a
// readable file.
inline const Catalog& builtin_catalog() {
  static const Catalog cat = [] {
    if (const char* env = std::getenv("QSLOCC4_RECIPES")) {
      std::ifstream f(env);
      if (!f) throw std::runtime_error(std::string("cannot open ") + env);
      std::ostringstream ss;
      ss << f.rdbuf();
      return parse_catalog(ss.str());
    }
    return parse_catalog(kDefaultCovariantCatalog);
  }();
  return cat;
}

template <class F>
F scalar_from_gaussian(const GaussianRational& g) {
  return FieldTraits<F>::from_rational(g.re()) +
         FieldTraits<F>::imaginary() * FieldTraits<F>::from_rational(g.im());
}

// Evaluates one recipe on a state.
template <class F>
MultiForm<F> eval_recipe(const SlotRecipe& slot, const State<F>& s) {
  MultiForm<F> f = MultiForm<F>::ground(s);
  std::vector<MultiForm<F>> vals;
  vals.reserve(slot.steps.size());
  auto operand = [&](int idx) -> const MultiForm<F>& {
    return idx < 0 ? f : vals[static_cast<size_t>(idx)];
  };
  for (const RecipeStep& st : slot.steps)
    vals.push_back(transvect(operand(st.lhs), operand(st.rhs), st.r));
  MultiForm<F> acc;
  bool first = true;
  for (const RecipeTerm& t : slot.out) {
    MultiForm<F> term =
        operand(t.step).scaled(scalar_from_gaussian<F>(t.weight));
    if (first) {
      acc = term;
      first = false;
    } else {
      acc = acc + term;
    }
  }
  return acc;
}

// A recipe value is "zero" when every coefficient is zero at the coefficient
// degree of the slot.
template <class F>
bool recipe_vanishes(const SlotRecipe& slot, const State<F>& s,
                     const ZeroCtx& ctx) {
  MultiForm<F> v = eval_recipe(slot, s);
  for (const auto& [k, c] : v.coef)
    if (!ctx.is_zero(c, slot.degree)) return false;
  return true;
}

// Permutation-combined bit of one slot.
template <class F>
int slot_bit(const SlotRecipe& slot, const State<F>& s, const ZeroCtx& ctx) {
  const auto& perms = all_qubit_permutations();
  if (!slot.and_coset) {
    for (const auto& sigma : perms)
      if (!recipe_vanishes(slot, permute_qubits(s, sigma), ctx)) return 1;
    return 0;
  }
  for (int q = 0; q < 4; ++q) {
    bool coset_nz = false;
    for (const auto& sigma : perms) {
      if (sigma[0] != q) continue;
      if (!recipe_vanishes(slot, permute_qubits(s, sigma), ctx)) {
        coset_nz = true;
        break;
      }
    }
    if (!coset_nz) return 0;
  }
  return 1;
}

// Bits for a list of slot names, in order.
template <class F>
std::vector<int> ev_bits(const std::vector<std::string>& slot_names,
                         const State<F>& s, const ZeroCtx& ctx,
                         const Catalog& cat = builtin_catalog()) {
  std::vector<int> out;
  out.reserve(slot_names.size());
  for (const auto& name : slot_names)
    out.push_back(slot_bit(cat.slot(name), s, ctx));
  return out;
}

}  // namespace qslocc4

#endif  // QSLOCC4_COVARIANTS_HPP
