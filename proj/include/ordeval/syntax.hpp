#ifndef ORDEVAL_SYNTAX_HPP
#define ORDEVAL_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordeval/ordinal.hpp"

namespace ordeval {

struct ObjTerm;
struct MapTerm;
using ObjPtr = std::shared_ptr<const ObjTerm>;
using MapPtr = std::shared_ptr<const MapTerm>;

// Objects: the terminal 1, the NNO N, binary products, and predicate
// abstractions {A|chi}.
struct ObjTerm {
  enum class Kind { Unit, Nat, Prod, Sub };
  Kind kind;
  ObjPtr left, right;  // Prod
  ObjPtr base;         // Sub
  MapPtr pred;         // Sub
};

// Map codes: basic constants plus composition, cylindrification,
// iteration and restriction to abstraction objects.
//
// Comp(v, u) is v after u (u applied first). Cyl(A, v) is id_A x v.
// Iter(u) requires an endo u: A -> A and has type A x N -> A.
struct MapTerm {
  enum class Kind {
    Id, Zero, Succ, Bang, Diag, Swap, ProjL, ProjR,
    Comp, Cyl, Iter, Abstr
  };
  Kind kind;
  ObjPtr a, b;      // object parameters
  MapPtr f, g, h;   // Comp: f=v (outer), g=u (inner); Cyl/Iter: f=body;
                    // Abstr: f=dom pred, g=core, h=cod pred
  OrdinalPoly cplx; // evaluation complexity, filled at construction
};

// ---- constructors ----

inline ObjPtr obj_unit() {
  static const ObjPtr o = std::make_shared<ObjTerm>(ObjTerm{ObjTerm::Kind::Unit});
  return o;
}
inline ObjPtr obj_nat() {
  static const ObjPtr o = std::make_shared<ObjTerm>(ObjTerm{ObjTerm::Kind::Nat});
  return o;
}
inline ObjPtr obj_prod(ObjPtr l, ObjPtr r) {
  return std::make_shared<ObjTerm>(ObjTerm{ObjTerm::Kind::Prod, std::move(l), std::move(r), nullptr, nullptr});
}
inline ObjPtr obj_sub(ObjPtr base, MapPtr pred) {
  return std::make_shared<ObjTerm>(ObjTerm{ObjTerm::Kind::Sub, nullptr, nullptr, std::move(base), std::move(pred)});
}

inline MapPtr mk(MapTerm t) {
  switch (t.kind) {
    case MapTerm::Kind::Id: break;
    case MapTerm::Kind::Comp:
      t.cplx = ord_add(ord_add(t.g->cplx, t.f->cplx), ord_from_nat(1));
      break;
    case MapTerm::Kind::Cyl:
      t.cplx = ord_add(t.f->cplx, ord_from_nat(1));
      break;
    case MapTerm::Kind::Iter:
      t.cplx = ord_mul_omega(ord_add(t.f->cplx, ord_from_nat(1)));
      break;
    case MapTerm::Kind::Abstr:
      t.cplx = t.g->cplx;
      break;
    default:
      t.cplx = ord_from_nat(1);
      break;
  }
  return std::make_shared<MapTerm>(std::move(t));
}

inline MapPtr mk_id(ObjPtr A) { return mk({MapTerm::Kind::Id, std::move(A), nullptr, nullptr, nullptr, nullptr}); }
inline MapPtr mk_zero() {
  static const MapPtr m = mk({MapTerm::Kind::Zero, nullptr, nullptr, nullptr, nullptr, nullptr});
  return m;
}
inline MapPtr mk_succ() {
  static const MapPtr m = mk({MapTerm::Kind::Succ, nullptr, nullptr, nullptr, nullptr, nullptr});
  return m;
}
inline MapPtr mk_bang(ObjPtr A) { return mk({MapTerm::Kind::Bang, std::move(A), nullptr, nullptr, nullptr, nullptr}); }
inline MapPtr mk_diag(ObjPtr A) { return mk({MapTerm::Kind::Diag, std::move(A), nullptr, nullptr, nullptr, nullptr}); }
inline MapPtr mk_swap(ObjPtr A, ObjPtr B) { return mk({MapTerm::Kind::Swap, std::move(A), std::move(B), nullptr, nullptr, nullptr}); }
inline MapPtr mk_projl(ObjPtr A, ObjPtr B) { return mk({MapTerm::Kind::ProjL, std::move(A), std::move(B), nullptr, nullptr, nullptr}); }
inline MapPtr mk_projr(ObjPtr A, ObjPtr B) { return mk({MapTerm::Kind::ProjR, std::move(A), std::move(B), nullptr, nullptr, nullptr}); }
inline MapPtr mk_comp(MapPtr v, MapPtr u) { return mk({MapTerm::Kind::Comp, nullptr, nullptr, std::move(v), std::move(u), nullptr}); }
inline MapPtr mk_cyl(ObjPtr A, MapPtr v) { return mk({MapTerm::Kind::Cyl, std::move(A), nullptr, std::move(v), nullptr, nullptr}); }
inline MapPtr mk_iter(MapPtr u) { return mk({MapTerm::Kind::Iter, nullptr, nullptr, std::move(u), nullptr, nullptr}); }
inline MapPtr mk_abstr(MapPtr chi, MapPtr core, MapPtr psi) {
  return mk({MapTerm::Kind::Abstr, nullptr, nullptr, std::move(chi), std::move(core), std::move(psi)});
}

// ---- structural equality ----

inline bool map_eq(const MapPtr& x, const MapPtr& y);

inline bool obj_eq(const ObjPtr& x, const ObjPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ObjTerm::Kind::Unit:
    case ObjTerm::Kind::Nat: return true;
    case ObjTerm::Kind::Prod: return obj_eq(x->left, y->left) && obj_eq(x->right, y->right);
    case ObjTerm::Kind::Sub: return obj_eq(x->base, y->base) && map_eq(x->pred, y->pred);
  }
  return false;
}

inline bool map_eq(const MapPtr& x, const MapPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind) return false;
  auto oeq = [](const ObjPtr& a, const ObjPtr& b) { return (!a && !b) || (a && b && obj_eq(a, b)); };
  auto meq = [](const MapPtr& a, const MapPtr& b) { return (!a && !b) || (a && b && map_eq(a, b)); };
  return oeq(x->a, y->a) && oeq(x->b, y->b) && meq(x->f, y->f) && meq(x->g, y->g) && meq(x->h, y->h);
}

inline bool is_id(const MapPtr& t) { return t->kind == MapTerm::Kind::Id; }

// ---- errors ----

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& what) : std::runtime_error("type error: " + what) {}
};

// ---- rendering ----

inline std::string render(const MapPtr& t);

inline std::string render(const ObjPtr& o) {
  switch (o->kind) {
    case ObjTerm::Kind::Unit: return "1";
    case ObjTerm::Kind::Nat: return "N";
    case ObjTerm::Kind::Prod: return "(" + render(o->left) + "*" + render(o->right) + ")";
    case ObjTerm::Kind::Sub: return "{" + render(o->base) + "|" + render(o->pred) + "}";
  }
  return "?";
}

inline std::string render(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: return "id[" + render(t->a) + "]";
    case MapTerm::Kind::Zero: return "zero";
    case MapTerm::Kind::Succ: return "s";
    case MapTerm::Kind::Bang: return "bang[" + render(t->a) + "]";
    case MapTerm::Kind::Diag: return "diag[" + render(t->a) + "]";
    case MapTerm::Kind::Swap: return "swap[" + render(t->a) + "," + render(t->b) + "]";
    case MapTerm::Kind::ProjL: return "l[" + render(t->a) + "," + render(t->b) + "]";
    case MapTerm::Kind::ProjR: return "r[" + render(t->a) + "," + render(t->b) + "]";
    case MapTerm::Kind::Comp: return "comp(" + render(t->f) + "," + render(t->g) + ")";
    case MapTerm::Kind::Cyl: return "cyl(" + render(t->a) + "," + render(t->f) + ")";
    case MapTerm::Kind::Iter: return "iter(" + render(t->f) + ")";
    case MapTerm::Kind::Abstr:
      return "abstr(" + render(t->f) + "," + render(t->g) + "," + render(t->h) + ")";
  }
  return "?";
}

// Injective numeric serialization, display only: each token becomes a
// two-digit group, so distinct terms get distinct digit strings.
inline void serial_code_into(const MapPtr& t, std::string& out);

inline void serial_code_into(const ObjPtr& o, std::string& out) {
  switch (o->kind) {
    case ObjTerm::Kind::Unit: out += "21"; break;
    case ObjTerm::Kind::Nat: out += "22"; break;
    case ObjTerm::Kind::Prod:
      out += "23";
      serial_code_into(o->left, out);
      serial_code_into(o->right, out);
      break;
    case ObjTerm::Kind::Sub:
      out += "24";
      serial_code_into(o->base, out);
      serial_code_into(o->pred, out);
      break;
  }
}

inline void serial_code_into(const MapPtr& t, std::string& out) {
  static const char* tag[] = {"01", "02", "03", "04", "05", "06", "07", "08",
                              "09", "10", "11", "12"};
  out += tag[static_cast<int>(t->kind)];
  if (t->a) serial_code_into(t->a, out);
  if (t->b) serial_code_into(t->b, out);
  if (t->f) serial_code_into(t->f, out);
  if (t->g) serial_code_into(t->g, out);
  if (t->h) serial_code_into(t->h, out);
}

inline std::string serial_code(const MapPtr& t) {
  std::string out;
  serial_code_into(t, out);
  return out;
}

// ---- typecheck ----

struct MapType {
  ObjPtr dom, cod;
};

inline MapType typecheck(const MapPtr& t);

namespace detail {
inline bool is_predicate_cod(const ObjPtr& cod) {
  // Predicates target 2 in the Reiter sense: N-valued maps. A structural
  // {N|lt2}-shaped codomain is accepted too.
  if (cod->kind == ObjTerm::Kind::Nat) return true;
  return cod->kind == ObjTerm::Kind::Sub && cod->base->kind == ObjTerm::Kind::Nat;
}
}  // namespace detail

inline void check_obj(const ObjPtr& o) {
  switch (o->kind) {
    case ObjTerm::Kind::Unit:
    case ObjTerm::Kind::Nat: return;
    case ObjTerm::Kind::Prod:
      check_obj(o->left);
      check_obj(o->right);
      return;
    case ObjTerm::Kind::Sub: {
      check_obj(o->base);
      MapType pt = typecheck(o->pred);
      if (!obj_eq(pt.dom, o->base))
        throw TypeError("abstraction predicate domain mismatch in " + render(o));
      if (!detail::is_predicate_cod(pt.cod))
        throw TypeError("abstraction predicate must target 2 in " + render(o));
      return;
    }
  }
}

inline MapType typecheck(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: check_obj(t->a); return {t->a, t->a};
    case MapTerm::Kind::Zero: return {obj_unit(), obj_nat()};
    case MapTerm::Kind::Succ: return {obj_nat(), obj_nat()};
    case MapTerm::Kind::Bang: check_obj(t->a); return {t->a, obj_unit()};
    case MapTerm::Kind::Diag: check_obj(t->a); return {t->a, obj_prod(t->a, t->a)};
    case MapTerm::Kind::Swap:
      check_obj(t->a); check_obj(t->b);
      return {obj_prod(t->a, t->b), obj_prod(t->b, t->a)};
    case MapTerm::Kind::ProjL:
      check_obj(t->a); check_obj(t->b);
      return {obj_prod(t->a, t->b), t->a};
    case MapTerm::Kind::ProjR:
      check_obj(t->a); check_obj(t->b);
      return {obj_prod(t->a, t->b), t->b};
    case MapTerm::Kind::Comp: {
      MapType tu = typecheck(t->g);
      MapType tv = typecheck(t->f);
      if (!obj_eq(tu.cod, tv.dom))
        throw TypeError("composition mismatch in " + render(t) + ": cod " +
                        render(tu.cod) + " vs dom " + render(tv.dom));
      return {tu.dom, tv.cod};
    }
    case MapTerm::Kind::Cyl: {
      check_obj(t->a);
      MapType tv = typecheck(t->f);
      return {obj_prod(t->a, tv.dom), obj_prod(t->a, tv.cod)};
    }
    case MapTerm::Kind::Iter: {
      MapType tu = typecheck(t->f);
      if (!obj_eq(tu.dom, tu.cod))
        throw TypeError("iterated body must be an endomap in " + render(t));
      return {obj_prod(tu.dom, obj_nat()), tu.dom};
    }
    case MapTerm::Kind::Abstr: {
      MapType tchi = typecheck(t->f);
      MapType tpsi = typecheck(t->h);
      MapType tcore = typecheck(t->g);
      if (!detail::is_predicate_cod(tchi.cod) || !detail::is_predicate_cod(tpsi.cod))
        throw TypeError("abstraction predicates must target 2 in " + render(t));
      if (!obj_eq(tcore.dom, tchi.dom))
        throw TypeError("abstraction core domain mismatch in " + render(t));
      if (!obj_eq(tcore.cod, tpsi.dom))
        throw TypeError("abstraction core codomain mismatch in " + render(t));
      return {obj_sub(tchi.dom, t->f), obj_sub(tpsi.dom, t->h)};
    }
  }
  throw TypeError("malformed term");
}

// Structural domain/codomain, total even on ill-typed codes; step needs a
// codomain for the bottom-absorbing rewrite.
inline ObjPtr cod_of(const MapPtr& t);
inline ObjPtr dom_of(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: return t->a;
    case MapTerm::Kind::Zero: return obj_unit();
    case MapTerm::Kind::Succ: return obj_nat();
    case MapTerm::Kind::Bang:
    case MapTerm::Kind::Diag: return t->a;
    case MapTerm::Kind::Swap:
    case MapTerm::Kind::ProjL:
    case MapTerm::Kind::ProjR: return obj_prod(t->a, t->b);
    case MapTerm::Kind::Comp: return dom_of(t->g);
    case MapTerm::Kind::Cyl: return obj_prod(t->a, dom_of(t->f));
    case MapTerm::Kind::Iter: return obj_prod(dom_of(t->f), obj_nat());
    case MapTerm::Kind::Abstr: return obj_sub(dom_of(t->f), t->f);
  }
  return obj_unit();
}
inline ObjPtr cod_of(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: return t->a;
    case MapTerm::Kind::Zero:
    case MapTerm::Kind::Succ: return obj_nat();
    case MapTerm::Kind::Bang: return obj_unit();
    case MapTerm::Kind::Diag: return obj_prod(t->a, t->a);
    case MapTerm::Kind::Swap: return obj_prod(t->b, t->a);
    case MapTerm::Kind::ProjL: return t->a;
    case MapTerm::Kind::ProjR: return t->b;
    case MapTerm::Kind::Comp: return cod_of(t->f);
    case MapTerm::Kind::Cyl: return obj_prod(t->a, cod_of(t->f));
    case MapTerm::Kind::Iter: return cod_of(t->f);
    case MapTerm::Kind::Abstr: return obj_sub(dom_of(t->h), t->h);
  }
  return obj_unit();
}

// ---- depth ----

inline std::uint64_t depth(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: return 0;
    case MapTerm::Kind::Zero:
    case MapTerm::Kind::Succ:
    case MapTerm::Kind::Bang:
    case MapTerm::Kind::Diag:
    case MapTerm::Kind::Swap:
    case MapTerm::Kind::ProjL:
    case MapTerm::Kind::ProjR: return 1;
    case MapTerm::Kind::Comp: return depth(t->g) + depth(t->f) + 1;
    case MapTerm::Kind::Cyl: return depth(t->f) + 1;
    case MapTerm::Kind::Iter: return depth(t->f) + 1;
    case MapTerm::Kind::Abstr: return depth(t->g);
  }
  return 0;
}

// ---- sugar: induced maps ----
//
// times(f,g) = (id x g) o (f x id),  f x id = swap o (id x f) o swap
// pair(f,g)  = times(f,g) o diag

inline MapPtr mk_times(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f);
  MapType tg = typecheck(g);
  return mk_comp(
      mk_cyl(tf.cod, g),
      mk_comp(mk_swap(tg.dom, tf.cod),
              mk_comp(mk_cyl(tg.dom, f), mk_swap(tf.dom, tg.dom))));
}

inline MapPtr mk_pair(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f);
  MapType tg = typecheck(g);
  if (!obj_eq(tf.dom, tg.dom))
    throw TypeError("pair components must share a domain: " + render(f) + " vs " + render(g));
  return mk_comp(mk_times(f, g), mk_diag(tf.dom));
}

// Structural inverses of the two builders.
inline std::optional<std::pair<MapPtr, MapPtr>> match_times(const MapPtr& t) {
  // comp(cyl(B,g), comp(swap(C,B), comp(cyl(C,f), swap(A,C))))
  if (t->kind != MapTerm::Kind::Comp) return std::nullopt;
  const MapPtr& c1 = t->f;
  const MapPtr& rest1 = t->g;
  if (c1->kind != MapTerm::Kind::Cyl || rest1->kind != MapTerm::Kind::Comp) return std::nullopt;
  const MapPtr& sw1 = rest1->f;
  const MapPtr& rest2 = rest1->g;
  if (sw1->kind != MapTerm::Kind::Swap || rest2->kind != MapTerm::Kind::Comp) return std::nullopt;
  const MapPtr& c2 = rest2->f;
  const MapPtr& sw2 = rest2->g;
  if (c2->kind != MapTerm::Kind::Cyl || sw2->kind != MapTerm::Kind::Swap) return std::nullopt;
  const MapPtr& g = c1->f;
  const MapPtr& f = c2->f;
  // object consistency: cyl(B,g), swap(C,B), cyl(C,f), swap(A,C)
  const ObjPtr& B = c1->a;
  const ObjPtr& C = c2->a;
  if (!obj_eq(sw1->a, C) || !obj_eq(sw1->b, B)) return std::nullopt;
  if (!obj_eq(sw2->b, C)) return std::nullopt;
  MapType tf, tg;
  try {
    tf = typecheck(f);
    tg = typecheck(g);
  } catch (const TypeError&) {
    return std::nullopt;
  }
  if (!obj_eq(tf.cod, B) || !obj_eq(tg.dom, C) || !obj_eq(sw2->a, tf.dom)) return std::nullopt;
  return std::make_pair(f, g);
}

inline std::optional<std::pair<MapPtr, MapPtr>> match_pair(const MapPtr& t) {
  if (t->kind != MapTerm::Kind::Comp) return std::nullopt;
  if (t->g->kind != MapTerm::Kind::Diag) return std::nullopt;
  auto fg = match_times(t->f);
  if (!fg) return std::nullopt;
  try {
    MapType tf = typecheck(fg->first);
    MapType tg = typecheck(fg->second);
    if (!obj_eq(tf.dom, tg.dom) || !obj_eq(tf.dom, t->g->a)) return std::nullopt;
  } catch (const TypeError&) {
    return std::nullopt;
  }
  return fg;
}

// ---- parser ----

namespace detail {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw SyntaxError(pos, std::string("expected '") + c + "' " + what);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw SyntaxError(pos, "expected a name");
    return s.substr(start, pos - start);
  }

  ObjPtr object() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError(pos, "expected an object");
    char c = s[pos];
    if (c == '1') { ++pos; return obj_unit(); }
    if (c == 'N') { ++pos; return obj_nat(); }
    if (c == '(') {
      ++pos;
      ObjPtr l = object();
      expect('*', "in product object");
      ObjPtr r = object();
      expect(')', "closing product object");
      return obj_prod(std::move(l), std::move(r));
    }
    if (c == '{') {
      ++pos;
      ObjPtr base = object();
      expect('|', "in abstraction object");
      MapPtr chi = map();
      expect('}', "closing abstraction object");
      return obj_sub(std::move(base), std::move(chi));
    }
    throw SyntaxError(pos, "expected an object");
  }

  MapPtr map() {
    std::string name = ident();
    if (name == "zero") return mk_zero();
    if (name == "s") return mk_succ();
    if (name == "id" || name == "bang" || name == "diag") {
      expect('[', ("after " + name).c_str());
      ObjPtr A = object();
      expect(']', ("closing " + name).c_str());
      if (name == "id") return mk_id(std::move(A));
      if (name == "bang") return mk_bang(std::move(A));
      return mk_diag(std::move(A));
    }
    if (name == "swap" || name == "l" || name == "r") {
      expect('[', ("after " + name).c_str());
      ObjPtr A = object();
      expect(',', ("between objects of " + name).c_str());
      ObjPtr B = object();
      expect(']', ("closing " + name).c_str());
      if (name == "swap") return mk_swap(std::move(A), std::move(B));
      if (name == "l") return mk_projl(std::move(A), std::move(B));
      return mk_projr(std::move(A), std::move(B));
    }
    if (name == "comp" || name == "pair" || name == "times") {
      expect('(', ("after " + name).c_str());
      MapPtr f = map();
      expect(',', ("between arguments of " + name).c_str());
      MapPtr g = map();
      expect(')', ("closing " + name).c_str());
      if (name == "comp") return mk_comp(std::move(f), std::move(g));
      std::size_t at = pos;
      try {
        return name == "pair" ? mk_pair(f, g) : mk_times(f, g);
      } catch (const TypeError& e) {
        throw SyntaxError(at, e.what());
      }
    }
    if (name == "cyl") {
      expect('(', "after cyl");
      ObjPtr A = object();
      expect(',', "in cyl");
      MapPtr v = map();
      expect(')', "closing cyl");
      return mk_cyl(std::move(A), std::move(v));
    }
    if (name == "iter") {
      expect('(', "after iter");
      MapPtr u = map();
      expect(')', "closing iter");
      return mk_iter(std::move(u));
    }
    if (name == "abstr") {
      expect('(', "after abstr");
      MapPtr chi = map();
      expect(',', "in abstr");
      MapPtr core = map();
      expect(',', "in abstr");
      MapPtr psi = map();
      expect(')', "closing abstr");
      return mk_abstr(std::move(chi), std::move(core), std::move(psi));
    }
    throw SyntaxError(pos, "unknown map constant '" + name + "'");
  }

  void done() {
    skip_ws();
    if (pos != s.size()) throw SyntaxError(pos, "trailing input");
  }
};

}  // namespace detail

inline MapPtr parse_map(const std::string& text) {
  detail::Parser p(text);
  MapPtr t = p.map();
  p.done();
  return t;
}

inline ObjPtr parse_obj(const std::string& text) {
  detail::Parser p(text);
  ObjPtr o = p.object();
  p.done();
  return o;
}

struct Parsed {
  MapPtr map;  // exactly one of the two is set
  ObjPtr obj;
};

inline Parsed parse(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '(' || text[i] == '{' || text[i] == '1' || text[i] == 'N'))
    return {nullptr, parse_obj(text)};
  return {parse_map(text), nullptr};
}

// ---- small library of standard terms ----

// n as a point 1 -> N with n successors.
inline MapPtr numeral(std::uint64_t n) {
  MapPtr t = mk_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = mk_comp(mk_succ(), t);
  return t;
}

// 0 after the terminal map: the constant-zero endo A -> N.
inline MapPtr mk_const_zero(const ObjPtr& A) { return mk_comp(mk_zero(), mk_bang(A)); }

namespace lib {

// predecessor: n |-> n-1 (0 at 0), via the pair chain (a,b) -> (s a, a):
//   pred = r o iter(pair(s o l, l)) o pair(<0,0> o !, id)
inline MapPtr pred() {
  static const MapPtr m = [] {
    ObjPtr N = obj_nat();
    ObjPtr NN = obj_prod(N, N);
    MapPtr step = mk_pair(mk_comp(mk_succ(), mk_projl(N, N)), mk_projl(N, N));
    MapPtr z2 = mk_pair(mk_zero(), mk_zero());
    MapPtr seed = mk_pair(mk_comp(z2, mk_bang(N)), mk_id(N));
    return mk_comp(mk_projr(N, N), mk_comp(mk_iter(step), seed));
  }();
  return m;
}

// truncated subtraction as the iterated predecessor: (a,n) |-> a - n
inline MapPtr sub() {
  static const MapPtr m = mk_iter(pred());
  return m;
}

// addition s^§: (a,n) |-> a + n
inline MapPtr add() {
  static const MapPtr m = mk_iter(mk_succ());
  return m;
}

// boolean complement on {0,1}: b |-> 1 - b
inline MapPtr bnot() {
  static const MapPtr m = [] {
    ObjPtr N = obj_nat();
    return mk_comp(sub(), mk_pair(mk_comp(numeral(1), mk_bang(N)), mk_id(N)));
  }();
  return m;
}

// n < 2, i.e. 1 - (n - 1)
inline MapPtr lt2() {
  static const MapPtr m = mk_comp(bnot(), pred());
  return m;
}

// parity: n |-> 1 if n even else 0, flipping a bit n times from 1
inline MapPtr even() {
  static const MapPtr m = [] {
    ObjPtr N = obj_nat();
    return mk_comp(mk_iter(bnot()),
                   mk_pair(mk_comp(numeral(1), mk_bang(N)), mk_id(N)));
  }();
  return m;
}

}  // namespace lib

// The truth-value object, Reiter style: {N | lt2}.
inline ObjPtr obj_two() {
  static const ObjPtr o = obj_sub(obj_nat(), lib::lt2());
  return o;
}

}  // namespace ordeval

#endif  // ORDEVAL_SYNTAX_HPP
