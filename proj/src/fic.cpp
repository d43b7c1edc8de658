#include "ficsig/fic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lexer.hpp"

namespace ficsig {

namespace {

std::string comp_path(const VarName& g, const VarName& f) {
  return "comp[" + g.text + "." + f.text + "]";
}

struct ArrowSide {
  SortName dom;
  SortName cod;
  const VarName* name = nullptr;  // nullptr for identities
};

ArrowSide resolve(const Fic& l, const ArrowOrId& a) {
  if (const SortName* k = std::get_if<SortName>(&a)) {
    if (!l.objects.count(*k)) {
      throw std::invalid_argument("unknown object '" + k->text + "'");
    }
    return {*k, *k, nullptr};
  }
  const VarName& name = std::get<VarName>(a);
  auto it = l.arrows.find(name);
  if (it == l.arrows.end()) {
    throw std::invalid_argument("unknown arrow '" + name.text + "'");
  }
  return {it->second.dom, it->second.cod, &it->first};
}

}  // namespace

CheckReport validate_fic(const Fic& l) {
  CheckReport rep;
  auto fail = [&](const char* rule, std::string path, std::string msg) {
    rep.failures.push_back({rule, std::move(path), std::move(msg)});
  };

  for (const auto& [name, a] : l.arrows) {
    const std::string path = "arrows[" + name.text + "]";
    if (a.name != name) {
      fail("objects", path, "arrow is keyed '" + name.text + "' but named '" + a.name.text + "'");
    }
    if (!l.objects.count(a.dom)) {
      fail("objects", path, "domain '" + a.dom.text + "' is not a declared object");
    }
    if (!l.objects.count(a.cod)) {
      fail("objects", path, "codomain '" + a.cod.text + "' is not a declared object");
    }
    if (a.dom == a.cod) {
      fail("endomorphism", path,
           "arrow '" + name.text + "' is a non-identity endomorphism on '" + a.dom.text + "'");
    }
  }

  // Two-way homs between distinct objects.
  std::set<std::pair<SortName, SortName>> hom;
  for (const auto& [name, a] : l.arrows) hom.insert({a.dom, a.cod});
  for (const auto& [x, y] : hom) {
    if (x < y && hom.count({y, x})) {
      fail("skeletality", "objects",
           "objects '" + x.text + "' and '" + y.text + "' have arrows in both directions");
    }
  }

  for (const auto& [gf, h] : l.comp) {
    const auto& [g, f] = gf;
    const std::string path = comp_path(g, f);
    auto gi = l.arrows.find(g);
    auto fi = l.arrows.find(f);
    if (gi == l.arrows.end() || fi == l.arrows.end()) {
      fail("comp_spurious", path, "composition entry names an undeclared arrow");
      continue;
    }
    if (fi->second.cod != gi->second.dom) {
      fail("comp_spurious", path, "pair is not composable");
      continue;
    }
    auto hi = l.arrows.find(h);
    if (hi == l.arrows.end()) {
      fail("comp_typing", path, "composite '" + h.text + "' is not a declared arrow");
      continue;
    }
    if (hi->second.dom != fi->second.dom || hi->second.cod != gi->second.cod) {
      fail("comp_typing", path,
           "composite '" + h.text + "' has type " + hi->second.dom.text + " -> " +
               hi->second.cod.text + ", expected " + fi->second.dom.text + " -> " +
               gi->second.cod.text);
    }
  }

  for (const auto& [fn, f] : l.arrows) {
    for (const auto& [gn, g] : l.arrows) {
      if (f.cod != g.dom) continue;
      if (!l.comp.count({gn, fn})) {
        fail("comp_total", comp_path(gn, fn),
             "missing composite for '" + gn.text + " . " + fn.text + "'");
      }
    }
  }

  // Exhaustive associativity scan; triples with missing inner composites are
  // already reported by comp_total.
  for (const auto& [fn, f] : l.arrows) {
    for (const auto& [gn, g] : l.arrows) {
      if (f.cod != g.dom) continue;
      for (const auto& [hn, h] : l.arrows) {
        if (g.cod != h.dom) continue;
        auto gf = l.comp.find({gn, fn});
        auto hg = l.comp.find({hn, gn});
        if (gf == l.comp.end() || hg == l.comp.end()) continue;
        auto lhs = l.comp.find({hn, gf->second});
        auto rhs = l.comp.find({hg->second, fn});
        if (lhs == l.comp.end() || rhs == l.comp.end()) continue;
        if (lhs->second != rhs->second) {
          fail("associativity", comp_path(hn, fn),
               hn.text + ".(" + gn.text + "." + fn.text + ") = " + lhs->second.text + " but (" +
                   hn.text + "." + gn.text + ")." + fn.text + " = " + rhs->second.text);
        }
      }
    }
  }

  return rep;
}

std::set<VarName> cosieve(const Fic& l, const SortName& k) {
  if (!l.objects.count(k)) {
    throw std::invalid_argument("cosieve: unknown object '" + k.text + "'");
  }
  std::set<VarName> out;
  for (const auto& [name, a] : l.arrows) {
    if (a.dom == k) out.insert(name);
  }
  return out;
}

ArrowOrId compose_arrows(const Fic& l, const ArrowOrId& g, const ArrowOrId& f) {
  ArrowSide gs = resolve(l, g);
  ArrowSide fs = resolve(l, f);
  if (fs.cod != gs.dom) {
    throw std::invalid_argument("compose_arrows: pair is not composable");
  }
  if (!fs.name) return g;
  if (!gs.name) return f;
  auto it = l.comp.find({*gs.name, *fs.name});
  if (it == l.comp.end()) {
    throw std::invalid_argument("compose_arrows: missing composite for '" + gs.name->text +
                                " . " + fs.name->text + "'");
  }
  return ArrowOrId{it->second};
}

std::string FicIso::to_string() const {
  std::string out = "objects: {";
  bool first = true;
  for (const auto& [k, v] : objects) {
    if (!first) out += ",";
    out += k.text + "->" + v.text;
    first = false;
  }
  out += "}\narrows: {";
  first = true;
  for (const auto& [k, v] : arrows) {
    if (!first) out += ",";
    out += k.text + "->" + v.text;
    first = false;
  }
  return out + "}\n";
}

namespace {

// Object fingerprint that any isomorphism preserves.
struct Degree {
  std::size_t out = 0;
  std::size_t in = 0;
  auto operator<=>(const Degree&) const = default;
};

std::map<SortName, Degree> degrees(const Fic& l) {
  std::map<SortName, Degree> out;
  for (const SortName& o : l.objects) out[o];
  for (const auto& [name, a] : l.arrows) {
    out[a.dom].out++;
    out[a.cod].in++;
  }
  return out;
}

class FicMatcher {
 public:
  FicMatcher(const Fic& a, const Fic& b) : a_(a), b_(b) {}

  std::optional<FicIso> run() {
    if (a_.objects.size() != b_.objects.size() || a_.arrows.size() != b_.arrows.size()) {
      return std::nullopt;
    }
    deg_a_ = degrees(a_);
    deg_b_ = degrees(b_);
    objs_a_.assign(a_.objects.begin(), a_.objects.end());
    objs_b_.assign(b_.objects.begin(), b_.objects.end());
    arrows_a_.clear();
    for (const auto& [name, arr] : a_.arrows) arrows_a_.push_back(name);
    if (!match_object(0)) return std::nullopt;
    return iso_;
  }

 private:
  bool match_object(std::size_t idx) {
    if (idx == objs_a_.size()) return match_arrow(0);
    const SortName& x = objs_a_[idx];
    for (const SortName& y : objs_b_) {
      if (used_obj_.count(y)) continue;
      if (deg_a_.at(x) != deg_b_.at(y)) continue;
      iso_.objects[x] = y;
      used_obj_.insert(y);
      if (hom_sizes_compatible(idx) && match_object(idx + 1)) return true;
      iso_.objects.erase(x);
      used_obj_.erase(y);
    }
    return false;
  }

  // Once every object through idx is mapped, matched hom-sets must agree in
  // cardinality; checking after each object assignment prunes early.
  bool hom_sizes_compatible(std::size_t idx) {
    const SortName& x = objs_a_[idx];
    for (std::size_t k = 0; k <= idx; ++k) {
      const SortName& w = objs_a_[k];
      if (hom_size(a_, x, w) != hom_size(b_, iso_.objects.at(x), iso_.objects.at(w))) return false;
      if (hom_size(a_, w, x) != hom_size(b_, iso_.objects.at(w), iso_.objects.at(x))) return false;
    }
    return true;
  }

  static std::size_t hom_size(const Fic& l, const SortName& x, const SortName& y) {
    std::size_t n = 0;
    for (const auto& [name, a] : l.arrows) {
      if (a.dom == x && a.cod == y) ++n;
    }
    return n;
  }

  bool match_arrow(std::size_t idx) {
    if (idx == arrows_a_.size()) return true;
    const VarName& u = arrows_a_[idx];
    const Arrow& ua = a_.arrows.at(u);
    const SortName dom = iso_.objects.at(ua.dom);
    const SortName cod = iso_.objects.at(ua.cod);
    for (const auto& [v, va] : b_.arrows) {
      if (used_arr_.count(v)) continue;
      if (va.dom != dom || va.cod != cod) continue;
      iso_.arrows[u] = v;
      used_arr_.insert(v);
      if (comp_consistent() && match_arrow(idx + 1)) return true;
      iso_.arrows.erase(u);
      used_arr_.erase(v);
    }
    return false;
  }

  // Every a-composition whose three participants are all mapped must be
  // mirrored in b.
  bool comp_consistent() {
    for (const auto& [gf, h] : a_.comp) {
      auto gi = iso_.arrows.find(gf.first);
      auto fi = iso_.arrows.find(gf.second);
      auto hi = iso_.arrows.find(h);
      if (gi == iso_.arrows.end() || fi == iso_.arrows.end() || hi == iso_.arrows.end()) continue;
      auto it = b_.comp.find({gi->second, fi->second});
      if (it == b_.comp.end() || it->second != hi->second) return false;
    }
    return true;
  }

  const Fic& a_;
  const Fic& b_;
  std::map<SortName, Degree> deg_a_, deg_b_;
  std::vector<SortName> objs_a_, objs_b_;
  std::vector<VarName> arrows_a_;
  std::set<SortName> used_obj_;
  std::set<VarName> used_arr_;
  FicIso iso_;
};

}  // namespace

std::optional<FicIso> iso_fic(const Fic& a, const Fic& b) { return FicMatcher(a, b).run(); }

Fic apply_iso(const Fic& a, const FicIso& iso) {
  auto obj = [&](const SortName& s) { return iso.objects.at(s); };
  auto arr = [&](const VarName& v) { return iso.arrows.at(v); };
  Fic out;
  for (const SortName& o : a.objects) out.objects.insert(obj(o));
  for (const auto& [name, ar] : a.arrows) {
    out.arrows[arr(name)] = Arrow{arr(name), obj(ar.dom), obj(ar.cod)};
  }
  for (const auto& [gf, h] : a.comp) {
    out.comp[{arr(gf.first), arr(gf.second)}] = arr(h);
  }
  return out;
}

Fic parse_fic(std::string_view text) {
  using detail::Lexer;
  using detail::Tok;
  using detail::Token;
  Lexer lx(text);
  Fic l;

  Token kw = lx.expect(Tok::ident, "'objects'");
  if (kw.text != "objects") {
    throw ParseError(kw.line, kw.col, "expected 'objects', got '" + kw.text + "'");
  }
  if (lx.peek().kind == Tok::ident) {
    while (true) {
      Token t = lx.expect(Tok::ident, "object name");
      if (!valid_sort_name(t.text)) {
        throw ParseError(t.line, t.col, "object name must start uppercase: '" + t.text + "'");
      }
      if (!l.objects.insert(SortName{t.text}).second) {
        throw ParseError(t.line, t.col, "duplicate object '" + t.text + "'");
      }
      if (lx.peek().kind == Tok::comma) {
        lx.take();
        continue;
      }
      break;
    }
  }
  lx.expect(Tok::semi, "';'");

  auto expect_lvar = [&](const char* what) {
    Token t = lx.expect(Tok::ident, what);
    if (!valid_var_name(t.text)) {
      throw ParseError(t.line, t.col,
                       std::string(what) + " must start lowercase: '" + t.text + "'");
    }
    return std::pair<VarName, Token>{VarName{t.text}, t};
  };
  auto expect_object = [&]() {
    Token t = lx.expect(Tok::ident, "object name");
    SortName s{t.text};
    if (!l.objects.count(s)) {
      throw ParseError(t.line, t.col, "unknown object '" + t.text + "'");
    }
    return s;
  };
  auto expect_arrow_ref = [&](const char* what) {
    auto [v, t] = expect_lvar(what);
    if (!l.arrows.count(v)) {
      throw ParseError(t.line, t.col, "unknown arrow '" + v.text + "'");
    }
    return v;
  };

  while (lx.peek().kind != Tok::eof) {
    Token head = lx.expect(Tok::ident, "'arrow' or 'comp'");
    if (head.text == "arrow") {
      auto [name, tok] = expect_lvar("arrow name");
      if (l.arrows.count(name)) {
        throw ParseError(tok.line, tok.col, "duplicate arrow name '" + name.text + "'");
      }
      lx.expect(Tok::colon, "':'");
      SortName dom = expect_object();
      lx.expect(Tok::arrow, "'->'");
      SortName cod = expect_object();
      lx.expect(Tok::semi, "';'");
      l.arrows[name] = Arrow{name, dom, cod};
    } else if (head.text == "comp") {
      VarName g = expect_arrow_ref("arrow name");
      Token dot = lx.peek();
      lx.expect(Tok::dot, "'.'");
      VarName f = expect_arrow_ref("arrow name");
      lx.expect(Tok::equal, "'='");
      VarName h = expect_arrow_ref("arrow name");
      lx.expect(Tok::semi, "';'");
      if (!l.comp.emplace(std::make_pair(g, f), h).second) {
        throw ParseError(dot.line, dot.col,
                         "duplicate composition entry for '" + g.text + " . " + f.text + "'");
      }
    } else {
      throw ParseError(head.line, head.col, "expected 'arrow' or 'comp', got '" + head.text + "'");
    }
  }
  return l;
}

std::string print_fic(const Fic& l) {
  std::string out = "objects ";
  bool first = true;
  for (const SortName& o : l.objects) {
    if (!first) out += ", ";
    out += o.text;
    first = false;
  }
  out += ";\n";
  for (const auto& [name, a] : l.arrows) {
    out += "arrow " + name.text + " : " + a.dom.text + " -> " + a.cod.text + ";\n";
  }
  for (const auto& [gf, h] : l.comp) {
    out += "comp " + gf.first.text + " . " + gf.second.text + " = " + h.text + ";\n";
  }
  return out;
}

std::string to_dot(const Fic& l) {
  std::string out = "digraph fic {\n";
  for (const SortName& o : l.objects) out += "  " + o.text + ";\n";
  for (const auto& [name, a] : l.arrows) {
    out += "  " + a.dom.text + " -> " + a.cod.text + " [label=\"" + name.text + "\"];\n";
  }
  for (const auto& [gf, h] : l.comp) {
    out += "  // " + gf.first.text + "." + gf.second.text + " = " + h.text + "\n";
  }
  return out + "}\n";
}

}  // namespace ficsig
