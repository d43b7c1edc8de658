#ifndef FICSIG_BRIDGE_HPP
#define FICSIG_BRIDGE_HPP

#include <utility>
#include <vector>

#include "ficsig/fic.hpp"
#include "ficsig/syntax.hpp"

namespace ficsig {

// A total order extending a set of required precedences (pairs mean
// "first before second").
template <typename T>
struct LinearExtension {
  std::vector<T> order;
  std::vector<std::pair<T, T>> constraints;

  bool satisfies() const {
    for (const auto& [before, after] : constraints) {
      std::size_t bi = order.size(), ai = order.size();
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == before) bi = i;
        if (order[i] == after) ai = i;
      }
      if (bi >= ai || ai == order.size()) return false;
    }
    return true;
  }
};

// Total order on objects extending "an arrow K' -> K puts K before K'".
// Deterministic: Kahn's algorithm taking the least available name first.
// A constraint cycle is impossible for a valid fic and throws
// std::logic_error.
LinearExtension<SortName> object_order(const Fic& l);

// Total order on cosieve(k) such that a composite precedes its factor
// (h = g.f puts h before f). Sorting by (object_order rank of the codomain,
// then name) realizes every such constraint: the codomain of g.f sits
// strictly below the codomain of f.
LinearExtension<VarName> cosieve_order(const Fic& l, const SortName& k);

// The context T_K: one declaration per arrow f in cosieve order, of sort
// K_f applied to the composites (p1.f, ..., pm.f) where p1..pm is the
// cosieve of K_f in its own cosieve order.
Context build_TK(const Fic& l, const SortName& k);

// Construction R: left-to-right fold over the bindings, one object plus its
// outgoing arrows per step; composition entries come from proj. The input is
// first renamed to a representative with signature-wide distinct variables
// (arrow names are fic-wide unique); names are kept whenever already
// distinct. Requires check_signature(sig).ok().
Fic sig_to_fic(const Signature& sig);

// Construction S: binds each object in object_order to T_K (the empty
// context when the cosieve is empty). Requires validate_fic(l).ok().
Signature fic_to_sig(const Fic& l);

}  // namespace ficsig

#endif  // FICSIG_BRIDGE_HPP
