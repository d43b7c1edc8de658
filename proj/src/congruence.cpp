#include "ficsig/congruence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "ficsig/kernel.hpp"

namespace ficsig {

namespace {

bool occurs_in(const VarName& v, const Sort& s) {
  return std::find(s.args.entries.begin(), s.args.entries.end(), v) != s.args.entries.end();
}

bool head_occurs_in(const SortName& n, const Context& ctx) {
  for (const Declaration& d : ctx.decls) {
    if (d.sort.head == n) return true;
  }
  return false;
}

// Key of the positional alpha-class. Binders are replaced by "#<position>";
// '#' cannot occur in identifiers, so free variables never collide with the
// placeholders.
std::string alpha_key(const Context& c) {
  std::map<VarName, std::size_t> pos;
  for (std::size_t i = 0; i < c.decls.size(); ++i) pos[c.decls[i].var] = i;
  std::string out;
  for (std::size_t i = 0; i < c.decls.size(); ++i) {
    const Sort& s = c.decls[i].sort;
    out += "#" + std::to_string(i) + ":" + s.head.text + "(";
    for (std::size_t k = 0; k < s.args.entries.size(); ++k) {
      if (k) out += ",";
      auto it = pos.find(s.args.entries[k]);
      out += it != pos.end() ? "#" + std::to_string(it->second) : s.args.entries[k].text;
    }
    out += ");";
  }
  return out;
}

struct CtxMatch {
  std::vector<std::size_t> perm;  // a-index -> b-position
  std::map<VarName, VarName> vmap;
};

using HeadXlat = std::function<std::optional<SortName>(const SortName&)>;

// Matches b's declarations in order against unused declarations of a,
// growing the renaming as it goes. A candidate is admissible only when all
// a-bound variables its sort references are already matched, which makes
// the resulting placement dependency-respecting.
class CtxMatcher {
 public:
  CtxMatcher(const Context& a, const Context& b, const HeadXlat& xlat)
      : a_(a), b_(b), xlat_(xlat) {
    for (const Declaration& d : a.decls) bound_a_.insert(d.var);
    for (const Declaration& d : b.decls) bound_b_.insert(d.var);
  }

  std::optional<CtxMatch> run() {
    n_ = a_.decls.size();
    if (b_.decls.size() != n_) return std::nullopt;
    used_.assign(n_, false);
    assign_.assign(n_, 0);
    if (!go(0)) return std::nullopt;
    CtxMatch m;
    m.perm.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) m.perm[assign_[j]] = j;
    m.vmap = rho_;
    return m;
  }

 private:
  bool go(std::size_t j) {
    if (j == n_) return true;
    const Declaration& target = b_.decls[j];
    for (std::size_t i = 0; i < n_; ++i) {
      if (used_[i]) continue;
      const Declaration& cand = a_.decls[i];
      std::optional<SortName> head = xlat_(cand.sort.head);
      if (!head || *head != target.sort.head) continue;
      if (cand.sort.args.entries.size() != target.sort.args.entries.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; ok && k < cand.sort.args.entries.size(); ++k) {
        const VarName& va = cand.sort.args.entries[k];
        const VarName& vb = target.sort.args.entries[k];
        if (bound_a_.count(va)) {
          auto it = rho_.find(va);
          ok = it != rho_.end() && it->second == vb;
        } else {
          ok = va == vb && !bound_b_.count(va);
        }
      }
      if (!ok) continue;
      used_[i] = true;
      assign_[j] = i;
      rho_[cand.var] = target.var;
      if (go(j + 1)) return true;
      used_[i] = false;
      rho_.erase(cand.var);
    }
    return false;
  }

  const Context& a_;
  const Context& b_;
  const HeadXlat& xlat_;
  std::set<VarName> bound_a_, bound_b_;
  std::size_t n_ = 0;
  std::vector<bool> used_;
  std::vector<std::size_t> assign_;
  std::map<VarName, VarName> rho_;
};

std::optional<CtxMatch> match_ctx(const Context& a, const Context& b, const HeadXlat& xlat) {
  return CtxMatcher(a, b, xlat).run();
}

class SigMatcher {
 public:
  SigMatcher(const Signature& a, const Signature& b, bool rename)
      : a_(a), b_(b), rename_(rename) {
    for (const SigBinding& x : a.bindings) bound_a_.insert(x.name);
    for (const SigBinding& x : b.bindings) bound_b_.insert(x.name);
  }

  std::optional<IsoWitness> run() {
    n_ = a_.bindings.size();
    if (b_.bindings.size() != n_) return std::nullopt;
    used_.assign(n_, false);
    assign_.assign(n_, 0);
    matches_.assign(n_, std::nullopt);
    if (!go(0)) return std::nullopt;
    IsoWitness w;
    w.perm.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) w.perm[assign_[j]] = j;
    w.decl_perms.resize(n_);
    w.var_maps.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      w.decl_perms[i] = matches_[i]->perm;
      w.var_maps[i] = matches_[i]->vmap;
    }
    if (rename_) w.sort_map = xmap_;
    return w;
  }

 private:
  bool go(std::size_t j) {
    if (j == n_) return true;
    const SigBinding& target = b_.bindings[j];
    for (std::size_t i = 0; i < n_; ++i) {
      if (used_[i]) continue;
      const SigBinding& cand = a_.bindings[i];
      bool added_name = false;
      if (rename_) {
        auto it = xmap_.find(cand.name);
        if (it != xmap_.end()) {
          if (it->second != target.name) continue;
        } else {
          if (images_.count(target.name)) continue;
          xmap_[cand.name] = target.name;
          images_.insert(target.name);
          added_name = true;
        }
      } else {
        if (cand.name != target.name) continue;
        if (!xmap_.count(cand.name)) {
          xmap_[cand.name] = cand.name;
          added_name = true;
        }
      }
      HeadXlat xlat = [&](const SortName& h) -> std::optional<SortName> {
        if (bound_a_.count(h)) {
          auto it = xmap_.find(h);
          if (it == xmap_.end()) return std::nullopt;  // dependency not placed yet
          return it->second;
        }
        if (bound_b_.count(h)) return std::nullopt;  // free head would be captured
        return h;
      };
      std::optional<CtxMatch> cm = match_ctx(cand.ctx, target.ctx, xlat);
      if (cm) {
        used_[i] = true;
        assign_[j] = i;
        matches_[i] = std::move(cm);
        if (go(j + 1)) return true;
        used_[i] = false;
        matches_[i].reset();
      }
      if (added_name) {
        images_.erase(xmap_[cand.name]);
        xmap_.erase(cand.name);
      }
    }
    return false;
  }

  const Signature& a_;
  const Signature& b_;
  bool rename_;
  std::set<SortName> bound_a_, bound_b_;
  std::size_t n_ = 0;
  std::vector<bool> used_;
  std::vector<std::size_t> assign_;
  std::vector<std::optional<CtxMatch>> matches_;
  std::map<SortName, SortName> xmap_;
  std::set<SortName> images_;
};

std::map<VarName, VarName> merged_var_map(const IsoWitness& w) {
  std::map<VarName, VarName> out;
  for (const auto& m : w.var_maps) {
    for (const auto& [k, v] : m) {
      auto [it, fresh] = out.emplace(k, v);
      if (!fresh && it->second != v) {
        throw std::invalid_argument("witness renames '" + k.text + "' inconsistently");
      }
    }
  }
  return out;
}

Context apply_to_ctx(const Context& ctx, const std::vector<std::size_t>& perm,
                     const std::map<VarName, VarName>& rho,
                     const std::map<SortName, SortName>& smap) {
  if (perm.size() != ctx.decls.size()) {
    throw std::invalid_argument("witness permutation does not fit the context");
  }
  auto rename_var = [&](const VarName& v) {
    auto it = rho.find(v);
    return it != rho.end() ? it->second : v;
  };
  auto rename_head = [&](const SortName& s) {
    auto it = smap.find(s);
    return it != smap.end() ? it->second : s;
  };
  Context out;
  out.decls.resize(ctx.decls.size());
  for (std::size_t i = 0; i < ctx.decls.size(); ++i) {
    Declaration d;
    d.var = rename_var(ctx.decls[i].var);
    d.sort.head = rename_head(ctx.decls[i].sort.head);
    for (const VarName& arg : ctx.decls[i].sort.args.entries) {
      d.sort.args.entries.push_back(rename_var(arg));
    }
    out.decls[perm[i]] = std::move(d);
  }
  return out;
}

std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

template <typename K>
std::map<K, K> invert_map(const std::map<K, K>& m) {
  std::map<K, K> out;
  for (const auto& [k, v] : m) {
    if (!out.emplace(v, k).second) {
      throw std::invalid_argument("witness map is not a bijection");
    }
  }
  return out;
}

template <typename K>
std::map<K, K> compose_map(const std::map<K, K>& first, const std::map<K, K>& then) {
  if (first.empty()) return then;
  if (then.empty()) return first;
  std::map<K, K> out;
  for (const auto& [k, v] : first) {
    auto it = then.find(v);
    out[k] = it != then.end() ? it->second : v;
  }
  return out;
}

bool is_sig_witness(const IsoWitness& w) { return !w.decl_perms.empty(); }

}  // namespace

std::string IsoWitness::to_string() const {
  std::string out = "perm: [";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(perm[i]);
  }
  out += "]\nvars: {";
  std::set<std::pair<VarName, VarName>> pairs;
  for (const auto& m : var_maps) {
    for (const auto& [k, v] : m) pairs.insert({k, v});
  }
  bool first = true;
  for (const auto& [k, v] : pairs) {
    if (!first) out += ",";
    out += k.text + "->" + v.text;
    first = false;
  }
  out += "}\nsorts: {";
  first = true;
  for (const auto& [k, v] : sort_map) {
    if (!first) out += ",";
    out += k.text + "->" + v.text;
    first = false;
  }
  return out + "}\n";
}

bool swap_ok(const Context& ctx, std::size_t pos) {
  if (pos + 1 >= ctx.decls.size()) {
    throw std::out_of_range("swap_ok: no adjacent pair at position " + std::to_string(pos));
  }
  const Declaration& d1 = ctx.decls[pos];
  const Declaration& d2 = ctx.decls[pos + 1];
  return !occurs_in(d1.var, d2.sort) && !occurs_in(d2.var, d1.sort);
}

bool swap_ok(const Signature& sig, std::size_t pos) {
  if (pos + 1 >= sig.bindings.size()) {
    throw std::out_of_range("swap_ok: no adjacent pair at position " + std::to_string(pos));
  }
  const SigBinding& b1 = sig.bindings[pos];
  const SigBinding& b2 = sig.bindings[pos + 1];
  return !head_occurs_in(b1.name, b2.ctx) && !head_occurs_in(b2.name, b1.ctx);
}

bool swap_closure_oracle(const Context& a, const Context& b, std::size_t max_size) {
  if (a.decls.size() > max_size || b.decls.size() > max_size) {
    throw std::invalid_argument("swap_closure_oracle: size bound exceeded");
  }
  if (a.decls.size() != b.decls.size()) return false;
  const std::string target = alpha_key(b);
  std::set<std::string> seen;
  std::deque<Context> queue;
  auto visit = [&](const Context& c) {
    std::string key = alpha_key(c);
    if (key == target) return true;
    if (seen.insert(std::move(key)).second) queue.push_back(c);
    return false;
  };
  if (visit(a)) return true;
  while (!queue.empty()) {
    Context cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos + 1 < cur.decls.size(); ++pos) {
      if (!swap_ok(cur, pos)) continue;
      Context nxt = cur;
      std::swap(nxt.decls[pos], nxt.decls[pos + 1]);
      if (visit(nxt)) return true;
    }
  }
  return false;
}

// The signature closure factorizes: binding swaps never touch context
// contents and context swaps never touch binding order, so reachability is
// "some swap-reachable binding arrangement whose names align with b and
// whose contexts are pairwise swap/alpha-reachable". The binding arrangement
// is searched breadth-first; each context pair gets its own BFS (memoized).
bool swap_closure_oracle(const Signature& a, const Signature& b, std::size_t max_size) {
  if (a.bindings.size() > max_size || b.bindings.size() > max_size) {
    throw std::invalid_argument("swap_closure_oracle: size bound exceeded");
  }
  if (a.bindings.size() != b.bindings.size()) return false;
  const std::size_t n = a.bindings.size();
  std::map<std::pair<std::size_t, std::size_t>, bool> ctx_memo;
  auto ctx_reaches = [&](std::size_t ai, std::size_t bj) {
    auto key = std::make_pair(ai, bj);
    auto it = ctx_memo.find(key);
    if (it == ctx_memo.end()) {
      it = ctx_memo.emplace(key, swap_closure_oracle(a.bindings[ai].ctx, b.bindings[bj].ctx,
                                                     max_size))
               .first;
    }
    return it->second;
  };
  auto arrangement_hits = [&](const std::vector<std::size_t>& order) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.bindings[order[j]].name != b.bindings[j].name) return false;
      if (!ctx_reaches(order[j], j)) return false;
    }
    return true;
  };
  std::vector<std::size_t> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = i;
  std::set<std::vector<std::size_t>> seen{start};
  std::deque<std::vector<std::size_t>> queue{start};
  if (arrangement_hits(start)) return true;
  while (!queue.empty()) {
    std::vector<std::size_t> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
      const SigBinding& b1 = a.bindings[cur[pos]];
      const SigBinding& b2 = a.bindings[cur[pos + 1]];
      if (head_occurs_in(b1.name, b2.ctx) || head_occurs_in(b2.name, b1.ctx)) continue;
      std::vector<std::size_t> nxt = cur;
      std::swap(nxt[pos], nxt[pos + 1]);
      if (seen.insert(nxt).second) {
        if (arrangement_hits(nxt)) return true;
        queue.push_back(nxt);
      }
    }
  }
  return false;
}

std::optional<IsoWitness> iso_ctx(const Context& a, const Context& b) {
  HeadXlat identity = [](const SortName& h) { return std::optional<SortName>(h); };
  std::optional<CtxMatch> m = match_ctx(a, b, identity);
  if (!m) return std::nullopt;
  IsoWitness w;
  w.perm = std::move(m->perm);
  w.var_maps.push_back(std::move(m->vmap));
  return w;
}

std::optional<IsoWitness> iso_sig(const Signature& a, const Signature& b, bool rename_sorts) {
  return SigMatcher(a, b, rename_sorts).run();
}

Context canonical_ctx(const Context& ctx) {
  const std::size_t n = ctx.decls.size();
  const std::set<VarName> declared = vars(ctx);
  std::vector<bool> emitted(n, false);
  std::set<VarName> have;
  Context out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    std::pair<std::string, std::string> best_key;
    for (std::size_t i = 0; i < n; ++i) {
      if (emitted[i]) continue;
      const Declaration& d = ctx.decls[i];
      bool ready = true;
      for (const VarName& arg : d.sort.args.entries) {
        if (declared.count(arg) && !have.count(arg)) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      std::pair<std::string, std::string> key{d.sort.head.text, d.var.text};
      if (best == n || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (best == n) {
      throw std::invalid_argument("canonical_ctx: cyclic variable dependencies");
    }
    emitted[best] = true;
    have.insert(ctx.decls[best].var);
    out.decls.push_back(ctx.decls[best]);
  }
  return out;
}

Context apply_witness(const Context& a, const IsoWitness& w) {
  return apply_to_ctx(a, w.perm, merged_var_map(w), w.sort_map);
}

Signature apply_witness(const Signature& a, const IsoWitness& w) {
  if (w.perm.size() != a.bindings.size() || w.decl_perms.size() != a.bindings.size() ||
      w.var_maps.size() != a.bindings.size()) {
    throw std::invalid_argument("witness does not fit the signature");
  }
  auto rename_name = [&](const SortName& s) {
    auto it = w.sort_map.find(s);
    return it != w.sort_map.end() ? it->second : s;
  };
  Signature out;
  out.bindings.resize(a.bindings.size());
  for (std::size_t i = 0; i < a.bindings.size(); ++i) {
    SigBinding nb;
    nb.name = rename_name(a.bindings[i].name);
    nb.ctx = apply_to_ctx(a.bindings[i].ctx, w.decl_perms[i], w.var_maps[i], w.sort_map);
    out.bindings[w.perm[i]] = std::move(nb);
  }
  return out;
}

IsoWitness invert_witness(const IsoWitness& w) {
  IsoWitness out;
  out.perm = invert_perm(w.perm);
  if (is_sig_witness(w)) {
    out.decl_perms.resize(w.perm.size());
    out.var_maps.resize(w.perm.size());
    for (std::size_t i = 0; i < w.perm.size(); ++i) {
      out.decl_perms[w.perm[i]] = invert_perm(w.decl_perms[i]);
      out.var_maps[w.perm[i]] = invert_map(w.var_maps[i]);
    }
  } else if (!w.var_maps.empty()) {
    out.var_maps.push_back(invert_map(w.var_maps[0]));
  }
  out.sort_map = invert_map(w.sort_map);
  return out;
}

IsoWitness compose_witness(const IsoWitness& first, const IsoWitness& then) {
  if (first.perm.size() != then.perm.size()) {
    throw std::invalid_argument("witness sizes differ");
  }
  IsoWitness out;
  out.perm.resize(first.perm.size());
  for (std::size_t i = 0; i < first.perm.size(); ++i) out.perm[i] = then.perm[first.perm[i]];
  if (is_sig_witness(first) || is_sig_witness(then)) {
    if (!is_sig_witness(first) || !is_sig_witness(then)) {
      throw std::invalid_argument("cannot compose witnesses of different shapes");
    }
    out.decl_perms.resize(first.perm.size());
    out.var_maps.resize(first.perm.size());
    for (std::size_t i = 0; i < first.perm.size(); ++i) {
      const std::size_t mid = first.perm[i];
      out.decl_perms[i].resize(first.decl_perms[i].size());
      for (std::size_t k = 0; k < first.decl_perms[i].size(); ++k) {
        out.decl_perms[i][k] = then.decl_perms[mid][first.decl_perms[i][k]];
      }
      out.var_maps[i] = compose_map(first.var_maps[i], then.var_maps[mid]);
    }
  } else if (!first.var_maps.empty() || !then.var_maps.empty()) {
    std::map<VarName, VarName> f = first.var_maps.empty() ? std::map<VarName, VarName>{}
                                                          : first.var_maps[0];
    std::map<VarName, VarName> t = then.var_maps.empty() ? std::map<VarName, VarName>{}
                                                         : then.var_maps[0];
    out.var_maps.push_back(compose_map(f, t));
  }
  out.sort_map = compose_map(first.sort_map, then.sort_map);
  return out;
}

}  // namespace ficsig
