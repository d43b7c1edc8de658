#ifndef FICSIG_SYNTAX_HPP
#define FICSIG_SYNTAX_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ficsig {

// Variables and sort names are drawn from disjoint namespaces, separated by
// the case of the first character: variables start lowercase, sort names
// uppercase. Identifiers are ASCII [A-Za-z][A-Za-z0-9_]*.
struct VarName {
  std::string text;
  auto operator<=>(const VarName&) const = default;
};

struct SortName {
  std::string text;
  auto operator<=>(const SortName&) const = default;
};

bool valid_var_name(std::string_view text);
bool valid_sort_name(std::string_view text);

// A substitution is a plain list of variables. Well-typedness against a pair
// of contexts is a judgment (see kernel.hpp), not a structural invariant.
struct Substitution {
  std::vector<VarName> entries;
  bool operator==(const Substitution&) const = default;
};

// A sort is a sort name applied to a substitution, e.g. A(x,x) or O().
struct Sort {
  SortName head;
  Substitution args;
  bool operator==(const Sort&) const = default;
};

struct Declaration {
  VarName var;
  Sort sort;
  bool operator==(const Declaration&) const = default;
};

// Ordered list of declarations; later declarations may refer to earlier
// variables. Raw invariant: no variable is declared twice.
struct Context {
  std::vector<Declaration> decls;
  bool operator==(const Context&) const = default;
};

struct SigBinding {
  SortName name;
  Context ctx;
  bool operator==(const SigBinding&) const = default;
};

// Ordered list of sort bindings. Raw invariant: no sort name is bound twice.
struct Signature {
  std::vector<SigBinding> bindings;
  bool operator==(const Signature&) const = default;
};

// Raw binding discipline scans. Return the first offender, if any.
std::optional<VarName> duplicate_var(const Context& ctx);
std::optional<SortName> duplicate_sort(const Signature& sig);

// Deterministic fresh names: "x0","x1",... resp. "S0","S1",.... The index
// continues past the largest numeric suffix already present in `avoid`
// (the bare stem counts as index 0), so the result never collides.
VarName fresh_var(const std::set<VarName>& avoid);
SortName fresh_sort(const std::set<SortName>& avoid);

// Positional alpha-equivalence: the i-th binder of `a` must rename to the
// i-th binder of `b`; free variables must match verbatim and must not be
// captured by a binder of `b`. Sort names are never renamed here; for
// signatures the binding lists must agree position-wise with alpha-equal
// member contexts.
bool alpha_eq(const Context& a, const Context& b);
bool alpha_eq(const Signature& a, const Signature& b);

std::string print_subst(const Substitution& sub);
std::string print_sort(const Sort& sort);
std::string print_ctx(const Context& ctx);

// Canonical text, one binding per line: "A : (c : O(), d : O());\n".
// parse_sig(print_sig(s)) == s for every raw-valid s.
std::string print_sig(const Signature& sig);

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg);
};

// Parses the `.sig` format ("--" comments, free-form whitespace). Duplicate
// binders are rejected here, with the offending rule named in the message.
Signature parse_sig(std::string_view text);

}  // namespace ficsig

#endif  // FICSIG_SYNTAX_HPP
