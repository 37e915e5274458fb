#include "flagorbits/classifier.hpp"

#include <algorithm>
#include <cstdint>

namespace flagorbits {

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::NotSemilarge: return "not-semilarge";
    case Reason::FewerThanTwoLarge: return "fewer-than-two-large";
    case Reason::NoTableRow: return "no-table-row";
    case Reason::EllGe4: return "ell-ge-4";
    case Reason::BothNotLarge: return "both-not-large";
  }
  return "?";
}

namespace {

using Pred = std::function<bool(const LambdaProfile&)>;

Pred any() {
  return [](const LambdaProfile&) { return true; };
}
Pred len(std::vector<std::size_t> allowed) {
  return [allowed = std::move(allowed)](const LambdaProfile& p) {
    return std::find(allowed.begin(), allowed.end(), p.length()) != allowed.end();
  };
}
Pred large() {
  return [](const LambdaProfile& p) { return p.is_large(); };
}
Pred both(Pred a, Pred b) {
  return [a = std::move(a), b = std::move(b)](const LambdaProfile& p) { return a(p) && b(p); };
}
// Lambda(P) = (inf, b, b) with b finite, optionally bounded.
Pred inf_b2(std::int64_t max_b) {
  return [max_b](const LambdaProfile& p) {
    return p.infinite_count == 1 && p.finite_parts.size() == 2 &&
           p.finite_parts[0] == p.finite_parts[1] && p.finite_parts[0] <= max_b;
  };
}
// Lambda(P) = (inf, 1^k).
Pred inf_ones(std::size_t k) {
  return [k](const LambdaProfile& p) {
    if (p.infinite_count != 1 || p.finite_parts.size() != k) return false;
    return std::all_of(p.finite_parts.begin(), p.finite_parts.end(),
                       [](std::int64_t v) { return v == 1; });
  };
}
// Lambda(P) = (inf, 2).
Pred inf_two() {
  return [](const LambdaProfile& p) {
    return p.infinite_count == 1 && p.finite_parts == std::vector<std::int64_t>{2};
  };
}
// Lambda(P) = (inf, inf, 1).
Pred inf_inf_one() {
  return [](const LambdaProfile& p) {
    return p.infinite_count == 2 && p.finite_parts == std::vector<std::int64_t>{1};
  };
}
// Lambda(P) = (inf, c^2, 1^4) for some finite c >= 1.
Pred inf_c2_14() {
  return [](const LambdaProfile& p) {
    if (p.infinite_count != 1 || p.finite_parts.size() != 6) return false;
    if (p.finite_parts[0] != p.finite_parts[1]) return false;
    for (std::size_t i = 2; i < 6; ++i)
      if (p.finite_parts[i] != 1) return false;
    return true;
  };
}
// 1 occurs among the finite quotient dimensions.
Pred has_one() {
  return [](const LambdaProfile& p) {
    return !p.finite_parts.empty() && p.finite_parts.back() == 1;
  };
}

using Triple = std::array<const LambdaProfile*, 3>;

bool two_large(const Triple& t) {
  int n = 0;
  for (const auto* p : t) n += p->is_large();
  return n >= 2;
}

std::vector<Table1Row> build_gl_rows() {
  return {
      {"GL-1", {len({2}), len({2}), any()}, two_large},
      {"GL-2", {len({2}), len({3}), len({3, 4, 5})}, two_large},
      {"GL-3",
       {inf_two(), len({3}), any()},
       [](const Triple& t) { return (t[1]->is_large() || t[2]->is_large()) && two_large(t); }},
      {"GL-4", {len({2}), both(len({3}), has_one()), any()}, two_large},
      {"GL-5", {inf_ones(1), large(), any()}, nullptr},
  };
}

std::vector<Table1Row> build_sp_rows() {
  return {
      {"Sp-1", {len({2}), both(len({3}), large()), both(len({3, 5}), large())}, nullptr},
      {"Sp-2", {len({2}), inf_ones(2), large()}, nullptr},
      {"Sp-3", {inf_ones(2), len({3}), large()}, nullptr},
      {"Sp-4", {inf_ones(2), both(len({3}), large()), any()}, nullptr},
  };
}

std::vector<Table1Row> build_o_rows() {
  constexpr std::int64_t kNoBound = std::int64_t(1) << 60;
  return {
      {"O-1", {len({2}), inf_b2(3), large()}, nullptr},
      {"O-2", {len({2}), inf_ones(4), large()}, nullptr},
      {"O-3", {len({2}), both(len({3}), large()), both(len({3, 5}), large())}, nullptr},
      {"O-4", {len({2}), both(len({3}), large()), inf_c2_14()}, nullptr},
      {"O-5", {len({2}), both(len({3}), large()), inf_ones(8)}, nullptr},
      {"O-6", {inf_b2(kNoBound), inf_inf_one(), both(len({3, 5}), large())}, nullptr},
      {"O-7", {inf_ones(2), both(len({3}), large()), any()}, nullptr},
      {"O-8", {inf_ones(2), len({3, 4}), large()}, nullptr},
  };
}

constexpr std::array<std::array<std::size_t, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

const std::vector<Table1Row>& table1_rows(GroupKind g) {
  static const std::vector<Table1Row> gl = build_gl_rows();
  static const std::vector<Table1Row> sp = build_sp_rows();
  static const std::vector<Table1Row> o = build_o_rows();
  switch (g) {
    case GroupKind::GL: return gl;
    case GroupKind::Sp: return sp;
    default: return o;
  }
}

std::optional<TableMatch> match_table1_profiles(GroupKind g,
                                                const std::array<LambdaProfile, 3>& profiles) {
  for (const auto& row : table1_rows(g)) {
    for (const auto& perm : kPerms) {
      Triple t = {&profiles[perm[0]], &profiles[perm[1]], &profiles[perm[2]]};
      bool ok = true;
      for (std::size_t i = 0; i < 3 && ok; ++i) ok = row.factor[i](*t[i]);
      if (ok && row.side) ok = row.side(t);
      if (ok) return TableMatch{row.id, perm};
    }
  }
  return std::nullopt;
}

std::optional<TableMatch> match_table1(GroupKind g,
                                       const std::array<ParabolicSignature, 3>& sigs) {
  return match_table1_profiles(
      g, {lambda_profile(sigs[0]), lambda_profile(sigs[1]), lambda_profile(sigs[2])});
}

Verdict classify(LieType t, const std::vector<GeneralizedFlagDescriptor>& flags) {
  if (flags.empty()) throw SignatureError("classify needs at least one factor");
  for (const auto& f : flags)
    if (f.lie_type() != t) throw SignatureError("mixed Lie types in classify");

  Verdict v;
  if (flags.size() == 1) {
    v.finite = true;
    v.witness = Witness{"single-orbit", {0}};
    return v;
  }
  for (const auto& f : flags) {
    if (!is_semilarge(f)) {
      v.finite = false;
      v.reason = Reason::NotSemilarge;
      return v;
    }
  }
  if (flags.size() == 2) {
    const bool l0 = is_large(flags[0].signature());
    const bool l1 = is_large(flags[1].signature());
    if (l0 || l1) {
      v.finite = true;
      v.witness = Witness{"T1", l0 ? std::vector<std::size_t>{0, 1}
                                   : std::vector<std::size_t>{1, 0}};
    } else {
      v.finite = false;
      v.reason = Reason::BothNotLarge;
    }
    return v;
  }
  if (flags.size() >= 4) {
    v.finite = false;
    v.reason = Reason::EllGe4;
    return v;
  }

  std::array<LambdaProfile, 3> profiles = {lambda_profile(flags[0].signature()),
                                           lambda_profile(flags[1].signature()),
                                           lambda_profile(flags[2].signature())};
  int n_large = 0;
  for (const auto& p : profiles) n_large += p.is_large();
  if (n_large < 2) {
    v.finite = false;
    v.reason = Reason::FewerThanTwoLarge;
    return v;
  }
  auto match = match_table1_profiles(group_of(t), profiles);
  if (!match) {
    v.finite = false;
    v.reason = Reason::NoTableRow;
    return v;
  }
  v.finite = true;
  v.witness = Witness{match->row_id, {match->perm.begin(), match->perm.end()}};
  return v;
}

namespace {

struct Condition {
  std::string label;
  std::function<bool(const Triple&)> pred;
};

bool is_inf_b2(const LambdaProfile& p, std::int64_t min_b, std::int64_t max_b) {
  return p.infinite_count == 1 && p.finite_parts.size() == 2 &&
         p.finite_parts[0] == p.finite_parts[1] && p.finite_parts[0] >= min_b &&
         p.finite_parts[0] <= max_b;
}

bool is_inf_ones(const LambdaProfile& p, std::size_t k) {
  if (p.infinite_count != 1 || p.finite_parts.size() != k) return false;
  return std::all_of(p.finite_parts.begin(), p.finite_parts.end(),
                     [](std::int64_t v) { return v == 1; });
}

bool in_set(std::size_t v, std::initializer_list<std::size_t> s) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

constexpr std::int64_t kUnbounded = std::int64_t(1) << 60;

const std::vector<Condition>& gl_conditions() {
  static const std::vector<Condition> conds = {
      {"A.1 (D_{r+2})",
       [](const Triple& t) { return t[0]->length() == 2 && t[1]->length() == 2; }},
      {"A.1 (E_6/E_7/E_8)",
       [](const Triple& t) {
         return t[0]->length() == 2 && t[1]->length() == 3 && in_set(t[2]->length(), {3, 4, 5});
       }},
      {"A.1 (E_{r+3}^{(a)})",
       [](const Triple& t) {
         return t[0]->length() == 2 && t[1]->length() == 3 && t[0]->infinite_count == 1 &&
                t[0]->finite_parts == std::vector<std::int64_t>{2};
       }},
      {"A.1 (E_{r+3}^{(b)})",
       [](const Triple& t) {
         // c_{2,3} = 1: the smallest of the three quotient dimensions of P2 is 1.
         return t[0]->length() == 2 && t[1]->length() == 3 && !t[1]->finite_parts.empty() &&
                t[1]->finite_parts.back() == 1;
       }},
      {"A.1 (S_{q,r})",
       [](const Triple& t) { return t[0]->length() == 2 && is_inf_ones(*t[0], 1); }},
  };
  return conds;
}

const std::vector<Condition>& sp_conditions() {
  static const std::vector<Condition> conds = {
      {"A.2 (SpE_6/SpE_8)",
       [](const Triple& t) {
         return t[0]->length() == 2 && t[1]->length() == 3 && in_set(t[2]->length(), {3, 5});
       }},
      {"A.2 (SpE_{r+3}^{(b)})",
       [](const Triple& t) {
         return t[0]->length() == 2 && t[1]->length() == 3 && is_inf_ones(*t[1], 2);
       }},
      {"A.2 (SpY_{r+4})",
       [](const Triple& t) {
         return t[0]->length() == 3 && t[1]->length() == 3 && is_inf_ones(*t[0], 2);
       }},
  };
  return conds;
}

const std::vector<Condition>& o_odd_conditions() {
  static const std::vector<Condition> conds = {
      {"A.3-odd (II)",
       [](const Triple& t) {
         return t[0]->length() == 3 && t[1]->length() == 3 && is_inf_ones(*t[0], 2);
       }},
      {"A.3-odd (III/IV)",
       [](const Triple& t) {
         return t[0]->length() == 3 && t[1]->length() == 3 && in_set(t[2]->length(), {3, 5}) &&
                t[1]->infinite_count == 2 &&
                t[1]->finite_parts == std::vector<std::int64_t>{1} &&
                is_inf_b2(*t[0], 1, kUnbounded);
       }},
  };
  return conds;
}

const std::vector<Condition>& o_even_conditions() {
  static const std::vector<Condition> conds = {
      {"A.3-even (I-1/I-2)",
       [](const Triple& t) {
         return t[0]->length() == 3 && in_set(t[1]->length(), {2, 3, 4}) && is_inf_ones(*t[0], 2);
       }},
      {"A.3-even (II)",
       [](const Triple& t) {
         return t[0]->length() == 2 && (is_inf_b2(*t[1], 1, 3) || is_inf_ones(*t[1], 4));
       }},
      {"A.3-even (III-1/III-2)",
       [](const Triple& t) {
         return t[0]->length() == 2 && t[1]->length() == 3 && is_inf_b2(*t[1], 4, kUnbounded) &&
                in_set(t[2]->length(), {3, 5});
       }},
      {"A.3-even (III-3/III-4)",
       [](const Triple& t) {
         if (!(t[0]->length() == 2 && t[1]->length() == 3 && is_inf_b2(*t[1], 4, kUnbounded)))
           return false;
         const LambdaProfile& p3 = *t[2];
         const bool c2_14 = p3.infinite_count == 1 && p3.finite_parts.size() == 6 &&
                            p3.finite_parts[0] == p3.finite_parts[1] &&
                            std::all_of(p3.finite_parts.begin() + 2, p3.finite_parts.end(),
                                        [](std::int64_t v) { return v == 1; });
         return c2_14 || is_inf_ones(p3, 8);
       }},
  };
  return conds;
}

}  // namespace

std::optional<std::string> eval_finite_conditions(GroupKind g,
                                                  const std::array<LambdaProfile, 3>& profiles,
                                                  OddEvenParity parity) {
  const std::vector<Condition>* conds = nullptr;
  switch (g) {
    case GroupKind::GL: conds = &gl_conditions(); break;
    case GroupKind::Sp: conds = &sp_conditions(); break;
    case GroupKind::O:
      conds = parity == OddEvenParity::Even ? &o_even_conditions() : &o_odd_conditions();
      break;
  }
  for (const auto& c : *conds) {
    for (const auto& perm : kPerms) {
      Triple t = {&profiles[perm[0]], &profiles[perm[1]], &profiles[perm[2]]};
      if (c.pred(t)) return c.label;
    }
  }
  return std::nullopt;
}

ParitySet admissible_parities(const ParabolicSignature& sig) {
  if (!has_form(sig.lie_type())) return {true, true};
  const auto& blocks = sig.blocks();
  const std::size_t m = blocks.size();
  if (m % 2 == 0) return {false, true};
  const ExtInt& middle = blocks[m / 2];
  if (middle.is_infinite()) return {true, true};
  // Total = middle + twice the first half, so the parity of the middle
  // block is the parity of every admissible total.
  return middle.value() % 2 == 1 ? ParitySet{true, false} : ParitySet{false, true};
}

}  // namespace flagorbits
