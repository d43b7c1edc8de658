#include "ficsig/kernel.hpp"

#include <stdexcept>

namespace ficsig {

namespace {

std::string jp(const std::string& prefix, const std::string& component) {
  return prefix.empty() ? component : prefix + "." + component;
}

std::string at_index(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

void check_term_at(const Signature& sig, const Context& ctx, const VarName& x,
                   const Sort& want, const std::string& path, CheckReport& rep);

void check_subst_at(const Signature& sig, const Substitution& sub, const Context& gamma,
                    const Context& delta, const std::string& path, CheckReport& rep) {
  if (sub.entries.size() != delta.decls.size()) {
    const char* rule = delta.decls.empty() ? "sub_empty" : "sub_ext";
    rep.failures.push_back(
        {rule, path,
         "substitution length " + std::to_string(sub.entries.size()) +
             " does not match target context length " + std::to_string(delta.decls.size())});
    return;
  }
  // sigma_i maps the target prefix's variables to the entries chosen so far;
  // each entry must inhabit the instantiated declared sort.
  std::map<VarName, VarName> partial;
  for (std::size_t i = 0; i < sub.entries.size(); ++i) {
    const Declaration& d = delta.decls[i];
    Sort want{d.sort.head, {}};
    bool instantiable = true;
    for (const VarName& arg : d.sort.args.entries) {
      auto it = partial.find(arg);
      if (it == partial.end()) {
        rep.failures.push_back({"sub_ext", at_index(path, i),
                                "target context argument '" + arg.text +
                                    "' is not bound earlier in the target context"});
        instantiable = false;
        break;
      }
      want.args.entries.push_back(it->second);
    }
    if (instantiable) {
      check_term_at(sig, gamma, sub.entries[i], want, at_index(path, i), rep);
    }
    partial[d.var] = sub.entries[i];
  }
}

void check_term_at(const Signature& sig, const Context& ctx, const VarName& x,
                   const Sort& want, const std::string& path, CheckReport& rep) {
  (void)sig;
  for (const Declaration& d : ctx.decls) {
    if (d.var == x) {
      if (!(d.sort == want)) {
        rep.failures.push_back({"type_var", path,
                                "variable '" + x.text + "' has sort " + print_sort(d.sort) +
                                    ", required " + print_sort(want)});
      }
      return;
    }
  }
  rep.failures.push_back({"type_var", path, "variable '" + x.text + "' not bound in context"});
}

void check_sort_at(const Signature& sig, const Context& ctx, const Sort& sort,
                   const std::string& path, CheckReport& rep) {
  const SigBinding* b = find_binding(sig, sort.head);
  if (!b) {
    rep.failures.push_back({"type_sort", path, "unbound sort name '" + sort.head.text + "'"});
    return;
  }
  check_subst_at(sig, sort.args, ctx, b->ctx, jp(path, "args"), rep);
}

void check_context_at(const Signature& sig, const Context& ctx, const std::string& prefix,
                      CheckReport& rep) {
  for (std::size_t i = 0; i < ctx.decls.size(); ++i) {
    const std::string path = jp(prefix, at_index("decls", i));
    for (std::size_t j = 0; j < i; ++j) {
      if (ctx.decls[j].var == ctx.decls[i].var) {
        rep.failures.push_back(
            {"ctx_ext", path, "duplicate variable '" + ctx.decls[i].var.text + "'"});
        break;
      }
    }
    Context head{{ctx.decls.begin(), ctx.decls.begin() + static_cast<std::ptrdiff_t>(i)}};
    check_sort_at(sig, head, ctx.decls[i].sort, path + ".sort", rep);
  }
}

}  // namespace

bool CheckReport::has_rule(const std::string& rule) const {
  for (const CheckFailure& f : failures) {
    if (f.rule == rule) return true;
  }
  return false;
}

std::string CheckReport::to_string() const {
  std::string out;
  for (const CheckFailure& f : failures) {
    out += "RULE " + f.rule + " AT " + f.path + " : " + f.message + "\n";
  }
  return out;
}

const VarName& VarMap::apply(const VarName& v) const {
  auto it = entries.find(v);
  if (it == entries.end()) {
    throw std::out_of_range("substitution function has no entry for '" + v.text + "'");
  }
  return it->second;
}

std::set<VarName> VarMap::domain() const {
  std::set<VarName> out;
  for (const auto& [k, v] : entries) out.insert(k);
  return out;
}

std::set<VarName> vars(const Context& ctx) {
  std::set<VarName> out;
  for (const Declaration& d : ctx.decls) out.insert(d.var);
  return out;
}

std::set<VarName> vars_by_head(const Context& ctx, const SortName& name) {
  std::set<VarName> out;
  for (const Declaration& d : ctx.decls) {
    if (d.sort.head == name) out.insert(d.var);
  }
  return out;
}

const SigBinding* find_binding(const Signature& sig, const SortName& name) {
  for (const SigBinding& b : sig.bindings) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

VarMap reify(const Substitution& sub, const Context& from, const Context& to) {
  if (sub.entries.size() != to.decls.size()) {
    throw std::invalid_argument("reify: substitution length " +
                                std::to_string(sub.entries.size()) +
                                " does not match target context length " +
                                std::to_string(to.decls.size()));
  }
  VarMap map;
  map.codomain = vars(from);
  for (std::size_t i = 0; i < sub.entries.size(); ++i) {
    if (!map.codomain.count(sub.entries[i])) {
      throw std::invalid_argument("reify: entry '" + sub.entries[i].text +
                                  "' is not declared in the source context");
    }
    map.entries[to.decls[i].var] = sub.entries[i];
  }
  return map;
}

Substitution compose_subst(const Substitution& sigma, const Substitution& tau,
                           const Context& gamma, const Context& delta,
                           const Context& tau_target) {
  VarMap map = reify(sigma, gamma, delta);
  if (tau.entries.size() != tau_target.decls.size()) {
    throw std::invalid_argument("compose_subst: second substitution does not fit its target");
  }
  Substitution out;
  out.entries.reserve(tau.entries.size());
  for (const VarName& z : tau.entries) out.entries.push_back(map.apply(z));
  return out;
}

Sort apply_subst(const Substitution& sigma, const Sort& sort, const Context& gamma,
                 const Context& delta) {
  VarMap map = reify(sigma, gamma, delta);
  Sort out{sort.head, {}};
  out.args.entries.reserve(sort.args.entries.size());
  for (const VarName& z : sort.args.entries) out.args.entries.push_back(map.apply(z));
  return out;
}

std::optional<VarName> proj(const Signature& sig, const Context& gamma, const SortName& a,
                            const Context& delta, const VarName& x, const VarName& y) {
  const SigBinding* b = find_binding(sig, a);
  if (!b || !(b->ctx == delta)) {
    throw std::invalid_argument("proj: (" + a.text +
                                " : ...) with the given context is not a binding of the "
                                "signature");
  }
  if (!vars(delta).count(x)) {
    throw std::invalid_argument("proj: '" + x.text + "' is not declared in the sort's context");
  }
  bool y_found = false;
  for (const Declaration& d : gamma.decls) {
    if (d.var == y) {
      y_found = true;
      if (d.sort.head != a) return std::nullopt;  // the "otherwise ... fail" clause
      return reify(d.sort.args, gamma, delta).apply(x);
    }
  }
  (void)y_found;
  throw std::invalid_argument("proj: '" + y.text + "' is not declared in the context");
}

CheckReport check_signature(const Signature& sig) {
  CheckReport rep;
  for (std::size_t i = 0; i < sig.bindings.size(); ++i) {
    const std::string path = at_index("bindings", i);
    for (std::size_t j = 0; j < i; ++j) {
      if (sig.bindings[j].name == sig.bindings[i].name) {
        rep.failures.push_back(
            {"sig_ext", path, "duplicate sort name '" + sig.bindings[i].name.text + "'"});
        break;
      }
    }
    Signature head{{sig.bindings.begin(), sig.bindings.begin() + static_cast<std::ptrdiff_t>(i)}};
    check_context_at(head, sig.bindings[i].ctx, path + ".ctx", rep);
  }
  return rep;
}

CheckReport check_context(const Signature& sig, const Context& ctx) {
  CheckReport rep;
  check_context_at(sig, ctx, "", rep);
  return rep;
}

CheckReport check_sort(const Signature& sig, const Context& ctx, const Sort& sort) {
  CheckReport rep;
  check_sort_at(sig, ctx, sort, "sort", rep);
  return rep;
}

CheckReport check_term(const Signature& sig, const Context& ctx, const VarName& x,
                       const Sort& sort) {
  CheckReport rep;
  check_term_at(sig, ctx, x, sort, "term", rep);
  return rep;
}

CheckReport check_subst(const Signature& sig, const Substitution& sub, const Context& gamma,
                        const Context& delta) {
  CheckReport rep;
  check_subst_at(sig, sub, gamma, delta, "args", rep);
  return rep;
}

}  // namespace ficsig
