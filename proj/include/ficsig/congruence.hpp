#ifndef FICSIG_CONGRUENCE_HPP
#define FICSIG_CONGRUENCE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ficsig/syntax.hpp"

namespace ficsig {

// Witness for context/signature isomorphism (the equivalence closure of the
// swap congruence together with alpha-renaming).
//
// For a context witness a -> b: perm[i] is the position in b of a's i-th
// declaration, var_maps holds a single renaming map, decl_perms is empty.
//
// For a signature witness: perm permutes bindings; decl_perms[i] and
// var_maps[i] describe how a's i-th binding's context maps onto its image
// (signature isomorphism reorders and renames inside each binding
// independently, so one global renaming cannot express it). sort_map is the
// optional uniform sort renaming; empty means identity.
struct IsoWitness {
  std::vector<std::size_t> perm;
  std::vector<std::vector<std::size_t>> decl_perms;
  std::vector<std::map<VarName, VarName>> var_maps;
  std::map<SortName, SortName> sort_map;

  // Three lines: "perm: [..]", "vars: {a->b,..}", "sorts: {A->B,..}".
  std::string to_string() const;
};

// Legality of swapping the entries at `pos` and `pos+1`: for contexts,
// neither variable may occur in the other's sort (premises of ctx_swap);
// for signatures, neither sort name may head a declaration of the other's
// context (premises of sig_swap). Throws std::out_of_range for bad indices.
bool swap_ok(const Context& ctx, std::size_t pos);
bool swap_ok(const Signature& sig, std::size_t pos);

// Ground-truth reachability oracle: breadth-first search over single legal
// swaps, comparing alpha-equivalence classes at every visited node. For
// signatures the moves are adjacent binding swaps plus adjacent declaration
// swaps inside any one binding's context (the round trip through the
// category side reorders declarations, so plain binding swaps are not
// enough). Sizes above max_size throw std::invalid_argument.
bool swap_closure_oracle(const Context& a, const Context& b, std::size_t max_size);
bool swap_closure_oracle(const Signature& a, const Signature& b, std::size_t max_size);

// Backtracking search for a dependency-respecting matching with a consistent
// renaming. Returns a witness iff the two values are isomorphic; absence of
// a witness is the negative answer.
std::optional<IsoWitness> iso_ctx(const Context& a, const Context& b);

// As iso_ctx at the binding level; rename_sorts additionally allows one
// bijective renaming of the bound sort names, applied uniformly.
std::optional<IsoWitness> iso_sig(const Signature& a, const Signature& b, bool rename_sorts);

// Deterministic dependency-respecting reordering: repeatedly emits, among
// the declarations whose referenced variables are all emitted, the one with
// the least (sort head, variable name) key. Swap-congruent to the input and
// idempotent.
Context canonical_ctx(const Context& ctx);

// Applying a witness for a -> b to a yields b exactly.
Context apply_witness(const Context& a, const IsoWitness& w);
Signature apply_witness(const Signature& a, const IsoWitness& w);

IsoWitness invert_witness(const IsoWitness& w);

// Witness composition: first : a -> b, then : b -> c, result : a -> c.
IsoWitness compose_witness(const IsoWitness& first, const IsoWitness& then);

}  // namespace ficsig

#endif  // FICSIG_CONGRUENCE_HPP
