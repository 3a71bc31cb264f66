#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcalab/val.hpp"

namespace pcalab {

// ---- programs ---------------------------------------------------------------

enum class Tag : std::uint8_t {
  Input = 0,
  Num = 1,
  Pair = 2,
  Fst = 3,
  Snd = 4,
  IfEq = 5,
  Run = 6,
  Prim = 7,
  Pad = 8,
  Bot = 9,
  Len = 10,
  At = 11,
  Append = 12,
  // Builder-only: a subtree of a quoted program whose *code* is computed by
  // the carried expression. Never encodable, never evaluated.
  Splice = 13,
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  Tag tag;
  Val k;          // Num payload, Prim id, Pad index
  AstPtr a, b, c, d;
};

namespace ast {
AstPtr input();
AstPtr num(Val k);
AstPtr num(std::uint64_t k);
AstPtr pair(AstPtr a, AstPtr b);
AstPtr fst(AstPtr a);
AstPtr snd(AstPtr a);
AstPtr if_eq(AstPtr a, AstPtr b, AstPtr then_, AstPtr else_);
AstPtr run(AstPtr code, AstPtr arg);
AstPtr prim(std::uint64_t id, AstPtr a);
AstPtr pad(Val i, AstPtr a);
AstPtr bot();
AstPtr len(AstPtr a);
AstPtr at(AstPtr a, AstPtr i);
AstPtr append(AstPtr a, AstPtr x);
AstPtr splice(AstPtr expr);
}  // namespace ast

// ---- codes ------------------------------------------------------------------

using Code = Val;

Code encode_ast(const AstPtr& a);
// Total: every natural is a code; nullptr means "invalid", i.e. the
// everywhere-undefined function.
AstPtr decode_ast(Code c);

// ---- oracles ----------------------------------------------------------------

// Ordered table of total deterministic host functions, keyed by stable ids.
class OracleTable {
 public:
  OracleTable() = default;
  OracleTable& add(std::uint64_t id, std::function<Val(Val)> fn);
  const std::function<Val(Val)>* find(std::uint64_t id) const;
  OracleTable merged(const OracleTable& other) const;
  std::size_t size() const { return fns_.size(); }

 private:
  std::map<std::uint64_t, std::function<Val(Val)>> fns_;
};

// ---- evaluation ---------------------------------------------------------------

struct Outcome {
  bool defined;
  Val value;            // valid when defined
  std::uint64_t steps;  // valid when defined; independent of the fuel bound

  static Outcome ok(Val v, std::uint64_t s) { return {true, v, s}; }
  static Outcome out_of_fuel() { return {false, Val(), 0}; }
};

Outcome eval(Code e, Val x, std::uint64_t fuel, const OracleTable& oracles);
Outcome eval_ast(const AstPtr& a, Val x, std::uint64_t fuel, const OracleTable& oracles);

// Left-associated application chain e·a0·…·a(k-1) under one shared budget.
Outcome eval_chain(Code e, const std::vector<Val>& args, std::uint64_t fuel,
                   const OracleTable& oracles);

// ---- index constructors ---------------------------------------------------

// Φ_{s11(e,y)}(z) ≃ Φ_e(pair2(y, z)); injective, never 0.
Code s11(Code e, Val y);

// Semantically transparent, injective in (e, i), pad(e, i) > e.
Code pad(Code e, Val i);

// Kleene's second recursion theorem, as a pure syntactic diagonal:
// n = fix(t) satisfies Φ_n ≃ Φ_{Φ_t(n)} once Φ_t(n) is defined.
Code fix(Code template_code);
// Same, but the produced fixed point is pad(·, r)-rooted, so it can be forced
// to differ from any given code by choosing r.
Code fix_padded(Code template_code, Val r);
Code fix_from(const AstPtr& template_ast);

// Smallest r in {1, 2, 3} such that no value in `avoid` is pad(·, r)-rooted.
Val pad_index_avoiding(const std::vector<Val>& avoid);

// ---- staging ----------------------------------------------------------------
//
// quote(t) is an expression that evaluates to encode_ast(t). Splice subtrees
// are emitted verbatim: the carried expression computes that subtree's code
// at run time. Nesting splices escapes one quoting level per layer, which is
// how templates for fix() embed their own future code.

AstPtr quote(const AstPtr& t);

namespace stage {
// Expression combinators computing node codes from child-code expressions.
AstPtr qnum(AstPtr payload);              // P(1, ·)
AstPtr qpair(AstPtr a, AstPtr b);         // P(2, P(·,·))
AstPtr qfst(AstPtr a);
AstPtr qsnd(AstPtr a);
AstPtr qifeq(AstPtr a, AstPtr b, AstPtr t, AstPtr e);
AstPtr qrun(AstPtr c, AstPtr x);
AstPtr qprim(std::uint64_t id, AstPtr a);
AstPtr qpad(AstPtr i, AstPtr a);
AstPtr qlen(AstPtr a);
AstPtr qat(AstPtr a, AstPtr i);
AstPtr qappend(AstPtr a, AstPtr x);
AstPtr qlit(const AstPtr& closed);        // Num(encode_ast(closed))
AstPtr qinput();
AstPtr qbot();

// dyn_num(e): a Num leaf whose payload is computed by e (one splice layer).
AstPtr dyn_num(AstPtr payload_expr);
// s11_expr(e, y): expression computing s11(value of e, value of y).
AstPtr s11_expr(AstPtr e, AstPtr y);
// Expression computing value+1 (AppendElem(Fst e, Snd e)).
AstPtr succ_expr(AstPtr e);
}  // namespace stage

// ---- misc -------------------------------------------------------------------

std::string ast_to_string(const AstPtr& a);

}  // namespace pcalab
