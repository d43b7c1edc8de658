#ifndef FICSIG_KERNEL_HPP
#define FICSIG_KERNEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ficsig/syntax.hpp"

namespace ficsig {

struct CheckFailure {
  std::string rule;     // name of the violated rule, e.g. "sig_ext"
  std::string path;     // dotted index chain, e.g. "bindings[2].ctx.decls[1].sort.args[0]"
  std::string message;
};

// Outcome of a judgment check. ok() iff no failures were recorded; checkers
// keep going after a failure where that is mechanically possible, so one
// report may cite several independent problems.
struct CheckReport {
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  bool has_rule(const std::string& rule) const;

  // One line per failure: "RULE <name> AT <path> : <message>".
  std::string to_string() const;
};

// A well-formed substitution sigma : Gamma => Delta viewed as a function
// vars(Delta) -> vars(Gamma).
struct VarMap {
  std::map<VarName, VarName> entries;
  std::set<VarName> codomain;  // vars(Gamma)

  const VarName& apply(const VarName& v) const;  // throws std::out_of_range
  std::set<VarName> domain() const;
};

// |Gamma|: the set of declared variables.
std::set<VarName> vars(const Context& ctx);

// |Gamma|_A: declared variables whose sort head is `name`.
std::set<VarName> vars_by_head(const Context& ctx, const SortName& name);

// Requires length(sub) == length(to) and every entry declared in `from`;
// violations throw std::invalid_argument.
VarMap reify(const Substitution& sub, const Context& from, const Context& to);

// Diagrammatic composite sigma . tau for sigma : gamma => delta and
// tau : delta => tau_target. Precondition violations propagate from reify.
Substitution compose_subst(const Substitution& sigma, const Substitution& tau,
                           const Context& gamma, const Context& delta,
                           const Context& tau_target);

// sigma(A tau) = A (sigma . tau), for sigma : gamma => delta and a sort
// well-formed in delta.
Sort apply_subst(const Substitution& sigma, const Sort& sort, const Context& gamma,
                 const Context& delta);

// Dependency projection. With (a : delta) a binding of sig, x declared in
// delta and y declared in gamma: if (y : a sigma) is in gamma, the result is
// reify(sigma)(x); otherwise nullopt ("fail", a normal outcome). Violated
// preconditions throw std::invalid_argument instead.
std::optional<VarName> proj(const Signature& sig, const Context& gamma, const SortName& a,
                            const Context& delta, const VarName& x, const VarName& y);

CheckReport check_signature(const Signature& sig);
CheckReport check_context(const Signature& sig, const Context& ctx);
CheckReport check_sort(const Signature& sig, const Context& ctx, const Sort& sort);
CheckReport check_term(const Signature& sig, const Context& ctx, const VarName& x,
                       const Sort& sort);
CheckReport check_subst(const Signature& sig, const Substitution& sub, const Context& gamma,
                        const Context& delta);

// Binding lookup; nullptr when the name is unbound.
const SigBinding* find_binding(const Signature& sig, const SortName& name);

}  // namespace ficsig

#endif  // FICSIG_KERNEL_HPP
