#ifndef FICSIG_FIC_HPP
#define FICSIG_FIC_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "ficsig/kernel.hpp"
#include "ficsig/syntax.hpp"

namespace ficsig {

// A non-identity arrow. Identities are formal symbols and never stored.
struct Arrow {
  VarName name;
  SortName dom;
  SortName cod;
  bool operator==(const Arrow&) const = default;
};

// Finite inverse category: finite, skeletal, no non-identity endomorphisms.
// comp maps (g, f) to g.f and must cover exactly the composable pairs;
// validate_fic checks all of that, construction does not enforce it.
struct Fic {
  std::set<SortName> objects;
  std::map<VarName, Arrow> arrows;
  std::map<std::pair<VarName, VarName>, VarName> comp;  // (g, f) -> g.f
  bool operator==(const Fic&) const = default;
};

// Checks every axiom and reports each violation under its axiom name:
//   "objects"       arrow endpoints must be declared objects, keys consistent
//   "endomorphism"  no arrow may have dom == cod
//   "skeletality"   no two distinct objects with arrows both ways (for a
//                   finite category without endomorphisms this is exactly
//                   skeletality: a two-way hom pair would give mutually
//                   inverse-free cycles, i.e. an endomorphism after
//                   composing, and conversely isomorphic distinct objects
//                   need arrows both ways)
//   "comp_total"    every composable pair needs an entry
//   "comp_spurious" entries for non-composable or undeclared pairs
//   "comp_typing"   comp(g,f) must be a declared arrow dom(f) -> cod(g)
//   "associativity" h.(g.f) == (h.g).f for every composable triple
CheckReport validate_fic(const Fic& l);

// All non-identity arrows with domain k. Unknown objects throw.
std::set<VarName> cosieve(const Fic& l, const SortName& k);

// Either a named non-identity arrow or the formal identity on an object.
using ArrowOrId = std::variant<VarName, SortName>;

// Identity absorbs, otherwise a comp-table lookup. Non-composable pairs and
// unknown names throw std::invalid_argument.
ArrowOrId compose_arrows(const Fic& l, const ArrowOrId& g, const ArrowOrId& f);

struct FicIso {
  std::map<SortName, SortName> objects;
  std::map<VarName, VarName> arrows;
  std::string to_string() const;
};

// Backtracking search over object bijections and hom-set matchings that
// preserve dom, cod and the composition table.
std::optional<FicIso> iso_fic(const Fic& a, const Fic& b);

// Renames a through the iso; iso_fic(a,b) satisfies apply_iso(a, *w) == b.
Fic apply_iso(const Fic& a, const FicIso& iso);

// Parses the `.fic` format. Referential problems (unknown objects/arrows,
// duplicate declarations) are parse errors; axiom violations are not --
// validation is a separate step.
Fic parse_fic(std::string_view text);

// Canonical text: one "objects" line (sorted), then arrows sorted by name,
// then comp lines sorted. parse_fic(print_fic(l)) == l.
std::string print_fic(const Fic& l);

// Graphviz export: a node per object, a labeled edge per arrow, comp
// relations as "// g.f = h" comment lines.
std::string to_dot(const Fic& l);

}  // namespace ficsig

#endif  // FICSIG_FIC_HPP
