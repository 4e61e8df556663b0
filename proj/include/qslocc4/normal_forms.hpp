#ifndef QSLOCC4_NORMAL_FORMS_HPP
#define QSLOCC4_NORMAL_FORMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qslocc4/state.hpp"

namespace qslocc4 {

// The nine representative families: one generic four-parameter family G and
// eight degenerate L-families (the last three are nilpotent).
enum class FamilyId {
  G_abcd,
  L_abc2,
  L_a2b2,
  L_ab3,
  L_a4,
  L_a2_03p1,
  L_05p3,
  L_07p1,
  L_03p1_03p1,
};

inline int family_arity(FamilyId id) {
  switch (id) {
    case FamilyId::G_abcd: return 4;
    case FamilyId::L_abc2: return 3;
    case FamilyId::L_a2b2: return 2;
    case FamilyId::L_ab3: return 2;
    case FamilyId::L_a4: return 1;
    case FamilyId::L_a2_03p1: return 1;
    default: return 0;
  }
}

inline bool family_is_nilpotent(FamilyId id) {
  return id == FamilyId::L_05p3 || id == FamilyId::L_07p1 ||
         id == FamilyId::L_03p1_03p1;
}

// ASCII key used on the command line and in JSON.
inline const char* family_key(FamilyId id) {
  switch (id) {
    case FamilyId::G_abcd: return "G";
    case FamilyId::L_abc2: return "Labc2";
    case FamilyId::L_a2b2: return "La2b2";
    case FamilyId::L_ab3: return "Lab3";
    case FamilyId::L_a4: return "La4";
    case FamilyId::L_a2_03p1: return "La2_03+1";
    case FamilyId::L_05p3: return "L05+3";
    case FamilyId::L_07p1: return "L07+1";
    case FamilyId::L_03p1_03p1: return "L03+1_03+1";
  }
  return "?";
}

inline const char* family_display(FamilyId id) {
  switch (id) {
    case FamilyId::G_abcd: return "G_{abcd}";
    case FamilyId::L_abc2: return "L_{abc_2}";
    case FamilyId::L_a2b2: return "L_{a_2b_2}";
    case FamilyId::L_ab3: return "L_{ab_3}";
    case FamilyId::L_a4: return "L_{a_4}";
    case FamilyId::L_a2_03p1: return "L_{a_2 0_{3(+)1~}}";
    case FamilyId::L_05p3: return "L_{0_{5(+)3~}}";
    case FamilyId::L_07p1: return "L_{0_{7(+)1~}}";
    case FamilyId::L_03p1_03p1: return "L_{0_{3(+)1~} 0_{3(+)1~}}";
  }
  return "?";
}

inline std::optional<FamilyId> family_from_key(std::string_view key) {
  for (FamilyId id :
       {FamilyId::G_abcd, FamilyId::L_abc2, FamilyId::L_a2b2, FamilyId::L_ab3,
        FamilyId::L_a4, FamilyId::L_a2_03p1, FamilyId::L_05p3, FamilyId::L_07p1,
        FamilyId::L_03p1_03p1})
    if (key == family_key(id)) return id;
  return std::nullopt;
}

template <class F>
State<F> gen_G(const F& a, const F& b, const F& c, const F& d) {
  const F half = FieldTraits<F>::one() / FieldTraits<F>::from_int(2);
  State<F> s;
  s.amp(0, 0, 0, 0) = s.amp(1, 1, 1, 1) = (a + d) * half;
  s.amp(1, 1, 0, 0) = s.amp(0, 0, 1, 1) = (a - d) * half;
  s.amp(0, 1, 0, 1) = s.amp(1, 0, 1, 0) = (b + c) * half;
  s.amp(0, 1, 1, 0) = s.amp(1, 0, 0, 1) = (b - c) * half;
  return s;
}

template <class F>
State<F> gen_family(FamilyId id, const std::vector<F>& p) {
  if (static_cast<int>(p.size()) != family_arity(id))
    throw std::invalid_argument("gen_family: wrong parameter count");
  const F one = FieldTraits<F>::one();
  const F half = one / FieldTraits<F>::from_int(2);
  const F im = FieldTraits<F>::imaginary();
  State<F> s;
  switch (id) {
    case FamilyId::G_abcd:
      return gen_G(p[0], p[1], p[2], p[3]);
    case FamilyId::L_abc2:
      s.amp(0, 0, 0, 0) = s.amp(1, 1, 1, 1) = (p[0] + p[1]) * half;
      s.amp(0, 0, 1, 1) = s.amp(1, 1, 0, 0) = (p[0] - p[1]) * half;
      s.amp(0, 1, 0, 1) = s.amp(1, 0, 1, 0) = p[2];
      s.amp(0, 1, 1, 0) = one;
      return s;
    case FamilyId::L_a2b2:
      s.amp(0, 0, 0, 0) = s.amp(1, 1, 1, 1) = p[0];
      s.amp(0, 1, 0, 1) = s.amp(1, 0, 1, 0) = p[1];
      s.amp(0, 1, 1, 0) = one;
      s.amp(0, 0, 1, 1) = one;
      return s;
    case FamilyId::L_ab3:
      s.amp(0, 0, 0, 0) = s.amp(1, 1, 1, 1) = p[0];
      s.amp(0, 1, 0, 1) = s.amp(1, 0, 1, 0) = (p[0] + p[1]) * half;
      s.amp(0, 1, 1, 0) = s.amp(1, 0, 0, 1) = (p[0] - p[1]) * half;
      s.amp(0, 0, 0, 1) = s.amp(0, 0, 1, 0) = im;
      s.amp(0, 1, 1, 1) = s.amp(1, 0, 1, 1) = im;
      return s;
    case FamilyId::L_a4:
      s.amp(0, 0, 0, 0) = s.amp(0, 1, 0, 1) = p[0];
      s.amp(1, 0, 1, 0) = s.amp(1, 1, 1, 1) = p[0];
      s.amp(0, 0, 0, 1) = im;
      s.amp(0, 1, 1, 0) = one;
      s.amp(1, 0, 1, 1) = FieldTraits<F>::zero() - im;
      return s;
    case FamilyId::L_a2_03p1:
      s.amp(0, 0, 0, 0) = s.amp(1, 1, 1, 1) = p[0];
      s.amp(0, 0, 1, 1) = s.amp(0, 1, 0, 1) = s.amp(0, 1, 1, 0) = one;
      return s;
    case FamilyId::L_05p3:
      s.amp(0, 0, 0, 0) = s.amp(0, 1, 0, 1) = one;
      s.amp(1, 0, 0, 0) = s.amp(1, 1, 1, 0) = one;
      return s;
    case FamilyId::L_07p1:
      s.amp(0, 0, 0, 0) = s.amp(1, 0, 1, 1) = one;
      s.amp(1, 1, 0, 1) = s.amp(1, 1, 1, 0) = one;
      return s;
    case FamilyId::L_03p1_03p1:
      s.amp(0, 0, 0, 0) = s.amp(0, 1, 1, 1) = one;
      return s;
  }
  throw std::logic_error("gen_family: unreachable");
}

// Parameter constraints of the form  <param> = <rational> * <param>  or
// <param> = <rational>, parsed from strings like "c=d", "d=0", "c=-2a",
// "c=b/2".
struct Specialization {
  struct Term {
    int lhs = 0;         // constrained parameter index
    Rational coeff;      // multiplier (or the constant itself)
    int rhs = -1;        // source parameter index, -1 for a constant
  };
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }

  static Specialization parse(const std::vector<std::string>& eqs, int arity) {
    Specialization sp;
    for (const std::string& eq : eqs) sp.terms.push_back(parse_one(eq, arity));
    return sp;
  }

private:
  static Term parse_one(std::string_view eq, int arity) {
    auto fail = [&] {
      throw std::invalid_argument("Specialization: cannot parse '" +
                                  std::string(eq) + "'");
    };
    std::string s;
    for (char c : eq)
      if (c != ' ') s.push_back(c);
    size_t pos = s.find('=');
    if (pos == std::string::npos || pos != 1) fail();
    Term t;
    t.lhs = s[0] - 'a';
    if (t.lhs < 0 || t.lhs >= arity) fail();
    std::string_view rest = std::string_view(s).substr(2);
    if (rest.empty()) fail();

    int sign = 1;
    if (rest[0] == '+' || rest[0] == '-') {
      sign = rest[0] == '-' ? -1 : 1;
      rest.remove_prefix(1);
    }
    std::string digits;
    while (!rest.empty() && rest[0] >= '0' && rest[0] <= '9') {
      digits.push_back(rest[0]);
      rest.remove_prefix(1);
    }
    t.rhs = -1;
    if (!rest.empty() && rest[0] >= 'a' && rest[0] <= 'd') {
      t.rhs = rest[0] - 'a';
      if (t.rhs >= arity) fail();
      rest.remove_prefix(1);
    }
    BigInt num = digits.empty() ? BigInt(1ll) : BigInt::from_string(digits);
    BigInt den(1ll);
    if (!rest.empty()) {
      if (rest[0] != '/') fail();
      rest.remove_prefix(1);
      std::string dd;
      while (!rest.empty() && rest[0] >= '0' && rest[0] <= '9') {
        dd.push_back(rest[0]);
        rest.remove_prefix(1);
      }
      if (dd.empty() || !rest.empty()) fail();
      den = BigInt::from_string(dd);
    }
    if (digits.empty() && t.rhs == -1) fail();
    t.coeff = Rational(sign < 0 ? -num : num, den);
    return t;
  }
};

// Builds a family member with constrained parameters; free parameters are
// assigned, in order, to the unconstrained indices (alphabetical).
template <class F>
State<F> specialize(FamilyId id, const Specialization& sp,
                    const std::vector<F>& free_params) {
  int arity = family_arity(id);
  std::vector<std::optional<F>> val(static_cast<size_t>(arity));
  std::vector<bool> constrained(static_cast<size_t>(arity), false);
  for (const auto& t : sp.terms) {
    if (t.lhs >= arity)
      throw std::invalid_argument("specialize: constraint out of range");
    constrained[static_cast<size_t>(t.lhs)] = true;
  }
  size_t next_free = 0;
  for (int i = 0; i < arity; ++i) {
    if (!constrained[static_cast<size_t>(i)]) {
      if (next_free >= free_params.size())
        throw std::invalid_argument("specialize: too few free parameters");
      val[static_cast<size_t>(i)] = free_params[next_free++];
    }
  }
  if (next_free != free_params.size())
    throw std::invalid_argument("specialize: too many free parameters");
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& t : sp.terms) {
      if (val[static_cast<size_t>(t.lhs)]) continue;
      if (t.rhs == -1) {
        val[static_cast<size_t>(t.lhs)] = FieldTraits<F>::from_rational(t.coeff);
        progress = true;
      } else if (val[static_cast<size_t>(t.rhs)]) {
        val[static_cast<size_t>(t.lhs)] =
            FieldTraits<F>::from_rational(t.coeff) *
            *val[static_cast<size_t>(t.rhs)];
        progress = true;
      }
    }
  }
  std::vector<F> params;
  for (int i = 0; i < arity; ++i) {
    if (!val[static_cast<size_t>(i)])
      throw std::invalid_argument("specialize: unresolved constraint chain");
    params.push_back(*val[static_cast<size_t>(i)]);
  }
  return gen_family(id, params);
}

}  // namespace qslocc4

#endif  // QSLOCC4_NORMAL_FORMS_HPP
