#include "ficsig/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ficsig {

namespace {

bool ascii_ident(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Recognizes stem, stem0, stem1, ... and yields the numeric index (bare
// stem counts as 0). Anything else, including overlong suffixes, is ignored.
std::optional<long long> suffix_index(const std::string& text, char stem) {
  if (text.empty() || text[0] != stem) return std::nullopt;
  std::string_view rest = std::string_view(text).substr(1);
  if (rest.empty()) return 0;
  if (rest.size() > 17) return std::nullopt;
  long long value = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string join_vars(const std::vector<VarName>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += vs[i].text;
  }
  return out;
}

}  // namespace

bool valid_var_name(std::string_view text) {
  return ascii_ident(text) && std::islower(static_cast<unsigned char>(text[0]));
}

bool valid_sort_name(std::string_view text) {
  return ascii_ident(text) && std::isupper(static_cast<unsigned char>(text[0]));
}

std::optional<VarName> duplicate_var(const Context& ctx) {
  std::set<VarName> seen;
  for (const Declaration& d : ctx.decls) {
    if (!seen.insert(d.var).second) return d.var;
  }
  return std::nullopt;
}

std::optional<SortName> duplicate_sort(const Signature& sig) {
  std::set<SortName> seen;
  for (const SigBinding& b : sig.bindings) {
    if (!seen.insert(b.name).second) return b.name;
  }
  return std::nullopt;
}

VarName fresh_var(const std::set<VarName>& avoid) {
  long long next = 0;
  for (const VarName& v : avoid) {
    if (auto i = suffix_index(v.text, 'x')) next = std::max(next, *i + 1);
  }
  VarName out{"x" + std::to_string(next)};
  while (avoid.count(out)) out.text = "x" + std::to_string(++next);
  return out;
}

SortName fresh_sort(const std::set<SortName>& avoid) {
  long long next = 0;
  for (const SortName& s : avoid) {
    if (auto i = suffix_index(s.text, 'S')) next = std::max(next, *i + 1);
  }
  SortName out{"S" + std::to_string(next)};
  while (avoid.count(out)) out.text = "S" + std::to_string(++next);
  return out;
}

bool alpha_eq(const Context& a, const Context& b) {
  if (a.decls.size() != b.decls.size()) return false;
  std::set<VarName> bound_a, bound_b;
  for (const Declaration& d : a.decls) bound_a.insert(d.var);
  for (const Declaration& d : b.decls) bound_b.insert(d.var);
  std::map<VarName, VarName> rho;
  for (std::size_t i = 0; i < a.decls.size(); ++i) rho[a.decls[i].var] = b.decls[i].var;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const Sort& sa = a.decls[i].sort;
    const Sort& sb = b.decls[i].sort;
    if (sa.head != sb.head) return false;
    if (sa.args.entries.size() != sb.args.entries.size()) return false;
    for (std::size_t k = 0; k < sa.args.entries.size(); ++k) {
      const VarName& va = sa.args.entries[k];
      const VarName& vb = sb.args.entries[k];
      if (bound_a.count(va)) {
        if (rho.at(va) != vb) return false;
      } else {
        // free: must survive untouched and uncaptured
        if (va != vb || bound_b.count(va)) return false;
      }
    }
  }
  return true;
}

bool alpha_eq(const Signature& a, const Signature& b) {
  if (a.bindings.size() != b.bindings.size()) return false;
  for (std::size_t i = 0; i < a.bindings.size(); ++i) {
    if (a.bindings[i].name != b.bindings[i].name) return false;
    if (!alpha_eq(a.bindings[i].ctx, b.bindings[i].ctx)) return false;
  }
  return true;
}

std::string print_subst(const Substitution& sub) {
  return "(" + join_vars(sub.entries, ",") + ")";
}

std::string print_sort(const Sort& sort) {
  return sort.head.text + print_subst(sort.args);
}

std::string print_ctx(const Context& ctx) {
  std::string out = "(";
  for (std::size_t i = 0; i < ctx.decls.size(); ++i) {
    if (i) out += ", ";
    out += ctx.decls[i].var.text + " : " + print_sort(ctx.decls[i].sort);
  }
  return out + ")";
}

std::string print_sig(const Signature& sig) {
  std::string out;
  for (const SigBinding& b : sig.bindings) {
    out += b.name.text + " : " + print_ctx(b.ctx) + ";\n";
  }
  return out;
}

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

}  // namespace ficsig
