#include "ficsig/bridge.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "ficsig/kernel.hpp"

namespace ficsig {

namespace {

// Renames contexts so no variable is declared twice anywhere in the
// signature; leaves already-distinct names alone.
Signature distinct_var_representative(const Signature& sig) {
  Signature out = sig;
  std::set<VarName> used;
  for (SigBinding& b : out.bindings) {
    std::map<VarName, VarName> rename;
    std::set<VarName> local;
    for (const Declaration& d : b.ctx.decls) local.insert(d.var);
    for (Declaration& d : b.ctx.decls) {
      if (used.count(d.var)) {
        std::set<VarName> avoid = used;
        avoid.insert(local.begin(), local.end());
        for (const auto& [from, to] : rename) avoid.insert(to);
        VarName nv = fresh_var(avoid);
        rename[d.var] = nv;
        d.var = nv;
      }
    }
    if (!rename.empty()) {
      for (Declaration& d : b.ctx.decls) {
        for (VarName& arg : d.sort.args.entries) {
          auto it = rename.find(arg);
          if (it != rename.end()) arg = it->second;
        }
      }
    }
    for (const Declaration& d : b.ctx.decls) used.insert(d.var);
  }
  return out;
}

}  // namespace

LinearExtension<SortName> object_order(const Fic& l) {
  LinearExtension<SortName> ext;
  std::set<std::pair<SortName, SortName>> cons;
  for (const auto& [name, a] : l.arrows) cons.insert({a.cod, a.dom});
  ext.constraints.assign(cons.begin(), cons.end());

  std::map<SortName, std::size_t> indeg;
  for (const SortName& o : l.objects) indeg[o] = 0;
  for (const auto& [before, after] : cons) {
    if (indeg.count(before) && indeg.count(after)) indeg[after]++;
  }
  std::set<SortName> ready;
  for (const auto& [o, d] : indeg) {
    if (d == 0) ready.insert(o);
  }
  while (!ready.empty()) {
    SortName next = *ready.begin();
    ready.erase(ready.begin());
    ext.order.push_back(next);
    for (const auto& [before, after] : cons) {
      if (before == next && indeg.count(after) && --indeg[after] == 0) ready.insert(after);
    }
  }
  if (ext.order.size() != l.objects.size()) {
    throw std::logic_error("object_order: constraint cycle; input is not a valid fic");
  }
  assert(ext.satisfies());
  return ext;
}

LinearExtension<VarName> cosieve_order(const Fic& l, const SortName& k) {
  const std::set<VarName> cs = cosieve(l, k);
  const LinearExtension<SortName> objs = object_order(l);
  std::map<SortName, std::size_t> rank;
  for (std::size_t i = 0; i < objs.order.size(); ++i) rank[objs.order[i]] = i;

  LinearExtension<VarName> ext;
  for (const VarName& f : cs) {
    const Arrow& fa = l.arrows.at(f);
    for (const VarName& g : cosieve(l, fa.cod)) {
      auto it = l.comp.find({g, f});
      if (it != l.comp.end()) ext.constraints.push_back({it->second, f});
    }
  }
  ext.order.assign(cs.begin(), cs.end());
  std::sort(ext.order.begin(), ext.order.end(), [&](const VarName& u, const VarName& v) {
    const std::size_t ru = rank.at(l.arrows.at(u).cod);
    const std::size_t rv = rank.at(l.arrows.at(v).cod);
    return ru != rv ? ru < rv : u < v;
  });
  assert(ext.satisfies());
  return ext;
}

Context build_TK(const Fic& l, const SortName& k) {
  Context out;
  for (const VarName& f : cosieve_order(l, k).order) {
    const Arrow& fa = l.arrows.at(f);
    Sort sort{fa.cod, {}};
    for (const VarName& p : cosieve_order(l, fa.cod).order) {
      auto it = l.comp.find({p, f});
      if (it == l.comp.end()) {
        throw std::logic_error("build_TK: missing composite '" + p.text + " . " + f.text +
                               "'; input is not a valid fic");
      }
      sort.args.entries.push_back(it->second);
    }
    out.decls.push_back(Declaration{f, std::move(sort)});
  }
  return out;
}

Fic sig_to_fic(const Signature& sig) {
  const Signature s = distinct_var_representative(sig);
  Fic l;
  std::map<SortName, const Context*> ctx_of;
  for (const SigBinding& b : s.bindings) {
    l.objects.insert(b.name);
    for (const Declaration& d : b.ctx.decls) {
      const SortName& target = d.sort.head;
      l.arrows[d.var] = Arrow{d.var, b.name, target};
      auto it = ctx_of.find(target);
      if (it == ctx_of.end()) {
        throw std::invalid_argument("sig_to_fic: sort '" + target.text +
                                    "' is not bound earlier in the signature");
      }
      const Context& target_ctx = *it->second;
      // g . d = proj_g(d) = [[sigma]](g) for every arrow g out of the target
      VarMap m = reify(d.sort.args, b.ctx, target_ctx);
      for (const Declaration& g : target_ctx.decls) {
        l.comp[{g.var, d.var}] = m.apply(g.var);
      }
    }
    ctx_of[b.name] = &b.ctx;
  }
  return l;
}

Signature fic_to_sig(const Fic& l) {
  Signature out;
  for (const SortName& k : object_order(l).order) {
    out.bindings.push_back(SigBinding{k, build_TK(l, k)});
  }
  return out;
}

}  // namespace ficsig
