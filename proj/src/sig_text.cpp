#include "ficsig/syntax.hpp"

#include <set>

#include "lexer.hpp"

namespace ficsig {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

VarName expect_var(Lexer& lx) {
  Token t = lx.expect(Tok::ident, "variable");
  if (!valid_var_name(t.text)) {
    throw ParseError(t.line, t.col, "variable must start lowercase: '" + t.text + "'");
  }
  return VarName{t.text};
}

SortName expect_sort_name(Lexer& lx) {
  Token t = lx.expect(Tok::ident, "sort name");
  if (!valid_sort_name(t.text)) {
    throw ParseError(t.line, t.col, "sort name must start uppercase: '" + t.text + "'");
  }
  return SortName{t.text};
}

Sort parse_sort_node(Lexer& lx) {
  Sort s;
  s.head = expect_sort_name(lx);
  lx.expect(Tok::lparen, "'('");
  if (lx.peek().kind != Tok::rparen) {
    while (true) {
      s.args.entries.push_back(expect_var(lx));
      if (lx.peek().kind == Tok::comma) {
        lx.take();
        continue;
      }
      break;
    }
  }
  lx.expect(Tok::rparen, "')'");
  return s;
}

}  // namespace

Signature parse_sig(std::string_view text) {
  Lexer lx(text);
  Signature sig;
  std::set<SortName> bound;
  while (lx.peek().kind != Tok::eof) {
    Token name_tok = lx.peek();
    SortName name = expect_sort_name(lx);
    if (bound.count(name)) {
      throw ParseError(name_tok.line, name_tok.col,
                       "duplicate sort name '" + name.text + "' (rule sig_ext)");
    }
    lx.expect(Tok::colon, "':'");
    lx.expect(Tok::lparen, "'('");
    Context ctx;
    std::set<VarName> declared;
    if (lx.peek().kind != Tok::rparen) {
      while (true) {
        Token var_tok = lx.peek();
        VarName var = expect_var(lx);
        if (declared.count(var)) {
          throw ParseError(var_tok.line, var_tok.col,
                           "duplicate variable '" + var.text + "' (rule ctx_ext)");
        }
        lx.expect(Tok::colon, "':'");
        ctx.decls.push_back(Declaration{var, parse_sort_node(lx)});
        declared.insert(var);
        if (lx.peek().kind == Tok::comma) {
          lx.take();
          continue;
        }
        break;
      }
    }
    lx.expect(Tok::rparen, "')'");
    lx.expect(Tok::semi, "';'");
    sig.bindings.push_back(SigBinding{name, ctx});
    bound.insert(name);
  }
  return sig;
}

}  // namespace ficsig
