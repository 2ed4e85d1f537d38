#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace structltl {

/// Interned table of atomic proposition names. Index order is fixed at
/// construction and used as the bit position in Assignment.
struct ApTable {
  std::vector<std::string> names;

  static ApTable from_names(std::vector<std::string> names);

  int size() const { return static_cast<int>(names.size()); }
  /// Returns -1 if the name is not present.
  int index_of(std::string_view name) const;
  const std::string& name_of(int index) const { return names.at(static_cast<size_t>(index)); }
};

/// Set of currently true propositions, bit i <-> ApTable::names[i].
using Assignment = std::uint32_t;

inline bool assignment_has(Assignment a, int prop) { return (a >> prop) & 1u; }

std::string assignment_to_string(Assignment a, const ApTable& ap);

/// Finite representation prefix . loop^omega of an infinite trace.
struct LassoTrace {
  std::vector<Assignment> prefix;
  std::vector<Assignment> loop;  // non-empty

  /// Assignment at absolute position i, wrapping into the loop.
  Assignment at(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return loop[(i - prefix.size()) % loop.size()];
  }
  size_t period_start() const { return prefix.size(); }
};

enum class LtlOp : std::uint8_t {
  True,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,
  Until,
  Eventually,
  Always,
};

/// Immutable LTL syntax tree. Subtrees are shared; nodes are never mutated
/// after construction.
class LtlFormula {
 public:
  using Ptr = std::shared_ptr<const LtlFormula>;

  LtlOp op;
  int prop = -1;  // valid iff op == Prop
  Ptr lhs;        // unary operand or left operand
  Ptr rhs;        // right operand of binary operators

  static Ptr make_true();
  /// Canonical false, represented as !true.
  static Ptr make_false();
  static Ptr make_prop(int index);
  static Ptr make_not(Ptr f);
  static Ptr make_and(Ptr a, Ptr b);
  static Ptr make_or(Ptr a, Ptr b);
  static Ptr make_implies(Ptr a, Ptr b);
  static Ptr make_next(Ptr f);
  static Ptr make_until(Ptr a, Ptr b);
  static Ptr make_eventually(Ptr f);
  static Ptr make_always(Ptr f);

 private:
  LtlFormula(LtlOp o, int p, Ptr l, Ptr r) : op(o), prop(p), lhs(std::move(l)), rhs(std::move(r)) {}
};

bool structurally_equal(const LtlFormula::Ptr& a, const LtlFormula::Ptr& b);

bool is_true(const LtlFormula::Ptr& f);
/// Recognizes the canonical false !true.
bool is_false(const LtlFormula::Ptr& f);

/// Rewrites derived operators (Or, Implies, Eventually, Always) into the core
/// set {True, Prop, Not, And, Next, Until}.
LtlFormula::Ptr expand(const LtlFormula::Ptr& f);

/// Constant folding and duplicate elimination over And/Or. No minimization.
LtlFormula::Ptr simplify(const LtlFormula::Ptr& f);

/// Printer such that parse_ltl(print_ltl(f)) is structurally equal to f.
std::string print_ltl(const LtlFormula::Ptr& f, const ApTable& ap);

struct LtlParseError : std::runtime_error {
  size_t position;
  LtlParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the concrete syntax: true/false, proposition names, ! & | -> X U F G
/// and parentheses. Precedence, tightest first: !/X/F/G, U (right-assoc), &,
/// |, ->. Unknown identifiers are an error.
LtlFormula::Ptr parse_ltl(std::string_view text, const ApTable& ap);

/// Ground-truth satisfaction of prefix.loop^omega against f. Handles derived
/// operators directly.
bool eval_trace(const LtlFormula::Ptr& f, const LassoTrace& trace);

/// One-step progression: sigma |= f iff sigma_{1..} |= progress(f, sigma_0).
/// Result is simplified.
LtlFormula::Ptr progress(const LtlFormula::Ptr& f, Assignment alpha);

/// Fragments supported by the built-in LDBA construction.
struct FragmentSpec {
  enum class Kind {
    CoSafe,              // negations on atoms; & | X U F
    Safety,              // negations on atoms; & | X G
    FgCore,              // FG(beta), beta propositional
    GfCore,              // conjunction of GF(beta_i), beta_i propositional
    BooleanCombination,  // disjunctions of the above plus reach-then-suffix chains
  };
  Kind kind = Kind::CoSafe;
};

/// Uniform-ish sampler over the supported fragment, for oracle equivalence
/// testing. depth >= 1 bounds the recursion.
LtlFormula::Ptr random_formula(FragmentSpec fragment, int depth, const ApTable& ap,
                               std::mt19937_64& rng);

/// Membership check for the grammar random_formula samples from, which is
/// exactly the fragment build_ldba accepts.
bool in_fragment(const LtlFormula::Ptr& f, FragmentSpec fragment);

}  // namespace structltl
