#ifndef ORDEVAL_DEDUCTION_HPP
#define ORDEVAL_DEDUCTION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordeval/evaluator.hpp"

namespace ordeval {

// ---- similarity trees ----
//
// Binary trees over similarity pairs u/x ~ v/y. A tree is dummy when every
// argument in every label is box. Complexity and dummyness are cached at
// construction; trees are immutable.

struct STree;
using SPtr = std::shared_ptr<const STree>;

struct STree {
  MapPtr lu, rv;
  XPtr lx, ry;
  SPtr left, right;
  bool dummy = false;
  OrdinalPoly cdeep;
};

inline SPtr make_stree(MapPtr lu, XPtr lx, MapPtr rv, XPtr ry, SPtr left = nullptr,
                       SPtr right = nullptr) {
  STree t{std::move(lu), std::move(rv), std::move(lx), std::move(ry),
          std::move(left), std::move(right)};
  t.dummy = x_is_box(t.lx) && x_is_box(t.ry) && (!t.left || t.left->dummy) &&
            (!t.right || t.right->dummy);
  OrdinalPoly c = ord_add(complexity(t.lu), complexity(t.rv));
  if (t.left) c = ord_add(c, t.left->cdeep);
  if (t.right) c = ord_add(c, t.right->cdeep);
  if (t.left || t.right) c = ord_add(c, ord_from_nat(1));  // one inference bar per parent
  t.cdeep = std::move(c);
  return std::make_shared<STree>(std::move(t));
}

inline const OrdinalPoly& tree_complexity(const SPtr& t) { return t->cdeep; }

inline bool stree_eq(const SPtr& a, const SPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (!map_eq(a->lu, b->lu) || !map_eq(a->rv, b->rv) || !x_eq(a->lx, b->lx) ||
      !x_eq(a->ry, b->ry))
    return false;
  if (static_cast<bool>(a->left) != static_cast<bool>(b->left) ||
      static_cast<bool>(a->right) != static_cast<bool>(b->right))
    return false;
  return (!a->left || stree_eq(a->left, b->left)) &&
         (!a->right || stree_eq(a->right, b->right));
}

inline bool is_leaf(const SPtr& t) { return !t->left && !t->right; }
inline bool is_id_leaf(const SPtr& t) {
  return is_leaf(t) && is_id(t->lu) && is_id(t->rv);
}

// The abort target for irregular trees.
inline SPtr abort_tree() {
  static const SPtr t = make_stree(mk_id(obj_unit()), x_box(), mk_id(obj_unit()), x_box());
  return t;
}

inline std::size_t node_count(const SPtr& t) {
  return 1 + (t->left ? node_count(t->left) : 0) + (t->right ? node_count(t->right) : 0);
}

// ---- deduction trees ----

enum class ProofRule {
  Refl, Sym, Trans, CompCompat, CylCompat, Assoc, IdLeft, IdRight,
  TerminalUnique, Godement, FourmanUnique, IterAnchor, IterStep, FreydUnique
};

inline const char* rule_name(ProofRule r) {
  switch (r) {
    case ProofRule::Refl: return "refl";
    case ProofRule::Sym: return "sym";
    case ProofRule::Trans: return "trans";
    case ProofRule::CompCompat: return "comp_compat";
    case ProofRule::CylCompat: return "cyl_compat";
    case ProofRule::Assoc: return "assoc";
    case ProofRule::IdLeft: return "id_left";
    case ProofRule::IdRight: return "id_right";
    case ProofRule::TerminalUnique: return "terminal_unique";
    case ProofRule::Godement: return "godement";
    case ProofRule::FourmanUnique: return "fourman_unique";
    case ProofRule::IterAnchor: return "iter_anchor";
    case ProofRule::IterStep: return "iter_step";
    case ProofRule::FreydUnique: return "freyd_unique";
  }
  return "?";
}

inline std::optional<ProofRule> rule_from_name(const std::string& s) {
  static const std::map<std::string, ProofRule> table = {
      {"refl", ProofRule::Refl}, {"sym", ProofRule::Sym}, {"trans", ProofRule::Trans},
      {"comp_compat", ProofRule::CompCompat}, {"cyl_compat", ProofRule::CylCompat},
      {"assoc", ProofRule::Assoc}, {"id_left", ProofRule::IdLeft},
      {"id_right", ProofRule::IdRight}, {"terminal_unique", ProofRule::TerminalUnique},
      {"godement", ProofRule::Godement}, {"fourman_unique", ProofRule::FourmanUnique},
      {"iter_anchor", ProofRule::IterAnchor}, {"iter_step", ProofRule::IterStep},
      {"freyd_unique", ProofRule::FreydUnique}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct DTree;
using DPtr = std::shared_ptr<const DTree>;

struct DTree {
  ProofRule rule;
  MapPtr lhs, rhs;
  std::vector<DPtr> premises;
};

inline DPtr make_dtree(ProofRule rule, MapPtr lhs, MapPtr rhs, std::vector<DPtr> premises = {}) {
  return std::make_shared<DTree>(DTree{rule, std::move(lhs), std::move(rhs), std::move(premises)});
}

struct ProofError : std::runtime_error {
  explicit ProofError(const std::string& what) : std::runtime_error("proof error: " + what) {}
};

struct Equation {
  MapPtr lhs, rhs;
};

namespace detail {

[[noreturn]] inline void proof_fail(const DPtr& d, const std::string& what) {
  throw ProofError(std::string(rule_name(d->rule)) + " node \"" + render(d->lhs) +
                   "\" = \"" + render(d->rhs) + "\": " + what);
}

inline bool is_const_zero_on(const MapPtr& t, const ObjPtr& A) {
  // 0 o !_A
  return t->kind == MapTerm::Kind::Comp && t->f->kind == MapTerm::Kind::Zero &&
         t->g->kind == MapTerm::Kind::Bang && obj_eq(t->g->a, A);
}

// lhs must be comp(iter(u), P) with P = pair(g, 0 o !); returns (u, g).
inline std::optional<std::pair<MapPtr, MapPtr>> match_iter_anchor_lhs(const MapPtr& lhs) {
  if (lhs->kind != MapTerm::Kind::Comp || lhs->f->kind != MapTerm::Kind::Iter)
    return std::nullopt;
  auto p = match_pair(lhs->g);
  if (!p) return std::nullopt;
  MapType tg;
  try {
    tg = typecheck(p->first);
  } catch (const TypeError&) {
    return std::nullopt;
  }
  if (!is_const_zero_on(p->second, tg.dom)) return std::nullopt;
  return std::make_pair(lhs->f->f, p->first);
}

// comp(iter(u), cyl(A, s)) with A = dom(u); returns u.
inline std::optional<MapPtr> match_iter_shift_lhs(const MapPtr& lhs) {
  if (lhs->kind != MapTerm::Kind::Comp || lhs->f->kind != MapTerm::Kind::Iter)
    return std::nullopt;
  const MapPtr& cyl = lhs->g;
  if (cyl->kind != MapTerm::Kind::Cyl || cyl->f->kind != MapTerm::Kind::Succ)
    return std::nullopt;
  const MapPtr& u = lhs->f->f;
  if (!obj_eq(cyl->a, dom_of(u))) return std::nullopt;
  return u;
}

inline bool godement_instance(const MapPtr& lhs, const MapPtr& rhs) {
  // l o <f,g> = f   and   r o <f,g> = g
  if (lhs->kind == MapTerm::Kind::Comp &&
      (lhs->f->kind == MapTerm::Kind::ProjL || lhs->f->kind == MapTerm::Kind::ProjR)) {
    if (auto p = match_pair(lhs->g)) {
      const MapPtr& want = lhs->f->kind == MapTerm::Kind::ProjL ? p->first : p->second;
      if (map_eq(want, rhs)) return true;
    }
  }
  // <f,g> o h = <f o h, g o h>
  if (lhs->kind == MapTerm::Kind::Comp) {
    if (auto p = match_pair(lhs->f)) {
      const MapPtr& h = lhs->g;
      try {
        MapPtr built = mk_pair(mk_comp(p->first, h), mk_comp(p->second, h));
        if (map_eq(built, rhs)) return true;
      } catch (const TypeError&) {
      }
    }
  }
  // times(f,g) = <f o l, g o r>
  if (auto tm = match_times(lhs)) {
    try {
      MapType tf = typecheck(tm->first);
      MapType tg = typecheck(tm->second);
      MapPtr built = mk_pair(mk_comp(tm->first, mk_projl(tf.dom, tg.dom)),
                             mk_comp(tm->second, mk_projr(tf.dom, tg.dom)));
      if (map_eq(built, rhs)) return true;
    } catch (const TypeError&) {
    }
  }
  // cyl(A, g) = times(id_A, g)
  if (lhs->kind == MapTerm::Kind::Cyl) {
    if (auto tm = match_times(rhs)) {
      if (is_id(tm->first) && obj_eq(tm->first->a, lhs->a) && map_eq(tm->second, lhs->f))
        return true;
    }
  }
  // swap[A,B] = <r,l>
  if (lhs->kind == MapTerm::Kind::Swap) {
    if (auto p = match_pair(rhs)) {
      if (p->first->kind == MapTerm::Kind::ProjR && p->second->kind == MapTerm::Kind::ProjL &&
          obj_eq(p->first->a, lhs->a) && obj_eq(p->first->b, lhs->b) &&
          obj_eq(p->second->a, lhs->a) && obj_eq(p->second->b, lhs->b))
        return true;
    }
  }
  return false;
}

inline bool fourman_instance(const MapPtr& lhs, const MapPtr& rhs) {
  auto p = match_pair(lhs);
  if (!p) return false;
  // <l o h, r o h> = h
  if (p->first->kind == MapTerm::Kind::Comp && p->second->kind == MapTerm::Kind::Comp &&
      p->first->f->kind == MapTerm::Kind::ProjL && p->second->f->kind == MapTerm::Kind::ProjR &&
      obj_eq(p->first->f->a, p->second->f->a) && obj_eq(p->first->f->b, p->second->f->b) &&
      map_eq(p->first->g, p->second->g) && map_eq(p->first->g, rhs))
    return true;
  // <l,r> = id
  if (p->first->kind == MapTerm::Kind::ProjL && p->second->kind == MapTerm::Kind::ProjR &&
      obj_eq(p->first->a, p->second->a) && obj_eq(p->first->b, p->second->b) && is_id(rhs) &&
      obj_eq(rhs->a, obj_prod(p->first->a, p->first->b)))
    return true;
  return false;
}

}  // namespace detail

// Canonical anchor point <id_A, 0 o !_A> : A -> A x N.
inline MapPtr anchor_point(const ObjPtr& A) {
  return mk_pair(mk_id(A), mk_const_zero(A));
}

// Validates the tree and returns its root equation.
inline Equation check_proof(const DPtr& d) {
  MapType tl, tr;
  try {
    tl = typecheck(d->lhs);
    tr = typecheck(d->rhs);
  } catch (const TypeError& e) {
    detail::proof_fail(d, e.what());
  }
  if (!obj_eq(tl.dom, tr.dom) || !obj_eq(tl.cod, tr.cod))
    detail::proof_fail(d, "equation sides have different types");

  auto need_premises = [&](std::size_t n) {
    if (d->premises.size() != n)
      detail::proof_fail(d, "expected " + std::to_string(n) + " premises, got " +
                                std::to_string(d->premises.size()));
  };
  std::vector<Equation> prem;
  prem.reserve(d->premises.size());
  for (const DPtr& p : d->premises) prem.push_back(check_proof(p));

  switch (d->rule) {
    case ProofRule::Refl:
      need_premises(0);
      if (!map_eq(d->lhs, d->rhs)) detail::proof_fail(d, "sides differ");
      break;
    case ProofRule::Sym:
      need_premises(1);
      if (!map_eq(d->lhs, prem[0].rhs) || !map_eq(d->rhs, prem[0].lhs))
        detail::proof_fail(d, "conclusion is not the mirrored premise");
      break;
    case ProofRule::Trans:
      need_premises(2);
      if (!map_eq(prem[0].rhs, prem[1].lhs))
        detail::proof_fail(d, "premises do not chain");
      if (!map_eq(d->lhs, prem[0].lhs) || !map_eq(d->rhs, prem[1].rhs))
        detail::proof_fail(d, "conclusion does not join the premise chain");
      break;
    case ProofRule::CompCompat:
      need_premises(2);
      if (d->lhs->kind != MapTerm::Kind::Comp || d->rhs->kind != MapTerm::Kind::Comp)
        detail::proof_fail(d, "conclusion sides must be compositions");
      if (!map_eq(d->lhs->f, prem[0].lhs) || !map_eq(d->rhs->f, prem[0].rhs) ||
          !map_eq(d->lhs->g, prem[1].lhs) || !map_eq(d->rhs->g, prem[1].rhs))
        detail::proof_fail(d, "factors do not match the premises");
      break;
    case ProofRule::CylCompat:
      need_premises(1);
      if (d->lhs->kind != MapTerm::Kind::Cyl || d->rhs->kind != MapTerm::Kind::Cyl ||
          !obj_eq(d->lhs->a, d->rhs->a) || !map_eq(d->lhs->f, prem[0].lhs) ||
          !map_eq(d->rhs->f, prem[0].rhs))
        detail::proof_fail(d, "conclusion is not the cylindrified premise");
      break;
    case ProofRule::Assoc: {
      need_premises(0);
      const MapPtr& l = d->lhs;
      const MapPtr& r = d->rhs;
      bool ok = l->kind == MapTerm::Kind::Comp && l->f->kind == MapTerm::Kind::Comp &&
                r->kind == MapTerm::Kind::Comp && r->g->kind == MapTerm::Kind::Comp &&
                map_eq(l->f->f, r->f) && map_eq(l->f->g, r->g->f) && map_eq(l->g, r->g->g);
      if (!ok) detail::proof_fail(d, "not an associativity instance");
      break;
    }
    case ProofRule::IdLeft:
      need_premises(0);
      if (d->lhs->kind != MapTerm::Kind::Comp || !is_id(d->lhs->f) ||
          !map_eq(d->lhs->g, d->rhs))
        detail::proof_fail(d, "not an identity-left instance");
      break;
    case ProofRule::IdRight:
      need_premises(0);
      if (d->lhs->kind != MapTerm::Kind::Comp || !is_id(d->lhs->g) ||
          !map_eq(d->lhs->f, d->rhs))
        detail::proof_fail(d, "not an identity-right instance");
      break;
    case ProofRule::TerminalUnique:
      need_premises(0);
      if (tl.cod->kind != ObjTerm::Kind::Unit)
        detail::proof_fail(d, "sides must target the terminal object");
      break;
    case ProofRule::Godement:
      need_premises(0);
      if (!detail::godement_instance(d->lhs, d->rhs))
        detail::proof_fail(d, "not a product-structure instance");
      break;
    case ProofRule::FourmanUnique:
      need_premises(0);
      if (!detail::fourman_instance(d->lhs, d->rhs))
        detail::proof_fail(d, "not an induced-uniqueness instance");
      break;
    case ProofRule::IterAnchor: {
      need_premises(0);
      auto m = detail::match_iter_anchor_lhs(d->lhs);
      if (!m || !map_eq(m->second, d->rhs))
        detail::proof_fail(d, "not an iteration anchor instance");
      break;
    }
    case ProofRule::IterStep: {
      need_premises(0);
      auto u = detail::match_iter_shift_lhs(d->lhs);
      if (!u) detail::proof_fail(d, "left side is not iter(u) o cyl(A, s)");
      bool top_down = d->rhs->kind == MapTerm::Kind::Comp && map_eq(d->rhs->f, *u) &&
                      d->rhs->g->kind == MapTerm::Kind::Iter && map_eq(d->rhs->g->f, *u);
      bool bottom_up = false;
      if (d->rhs->kind == MapTerm::Kind::Comp && d->rhs->f->kind == MapTerm::Kind::Iter &&
          map_eq(d->rhs->f->f, *u)) {
        if (auto tm = match_times(d->rhs->g))
          bottom_up = map_eq(tm->first, *u) && is_id(tm->second) &&
                      tm->second->a->kind == ObjTerm::Kind::Nat;
      }
      if (!top_down && !bottom_up)
        detail::proof_fail(d, "right side is neither iteration-step form");
      break;
    }
    case ProofRule::FreydUnique: {
      need_premises(2);
      const Equation& anchor = prem[0];
      const Equation& step_eq = prem[1];
      // shared comparison candidate w on both premises
      if (anchor.lhs->kind != MapTerm::Kind::Comp || step_eq.lhs->kind != MapTerm::Kind::Comp ||
          !map_eq(anchor.lhs->f, step_eq.lhs->f))
        detail::proof_fail(d, "premises do not share a comparison candidate");
      const MapPtr& w = anchor.lhs->f;
      if (step_eq.rhs->kind != MapTerm::Kind::Comp || !map_eq(step_eq.rhs->g, w))
        detail::proof_fail(d, "step premise right side must be v o w");
      const MapPtr& v = step_eq.rhs->f;
      if (!map_eq(d->lhs, w)) detail::proof_fail(d, "conclusion left side must be w");

      // parameterized form: w o <id,0 o !> = u,  w o (id x s) = v o w
      //                  |-  w = iter(v) o times(u, id)
      bool param = false;
      if (auto p = match_pair(anchor.lhs->g)) {
        if (is_id(p->first) && detail::is_const_zero_on(p->second, p->first->a)) {
          const ObjPtr& A = p->first->a;
          const MapPtr& u = anchor.rhs;
          bool step_ok = step_eq.lhs->g->kind == MapTerm::Kind::Cyl &&
                         obj_eq(step_eq.lhs->g->a, A) &&
                         step_eq.lhs->g->f->kind == MapTerm::Kind::Succ;
          if (step_ok && d->rhs->kind == MapTerm::Kind::Comp &&
              d->rhs->f->kind == MapTerm::Kind::Iter && map_eq(d->rhs->f->f, v)) {
            if (auto tm = match_times(d->rhs->g))
              param = map_eq(tm->first, u) && is_id(tm->second) &&
                      tm->second->a->kind == ObjTerm::Kind::Nat;
          }
        }
      }
      // simple form: w o 0 = a0,  w o s = v o w  |-  w = iter(v) o <a0 o !, id>
      bool simple = false;
      if (!param && anchor.lhs->g->kind == MapTerm::Kind::Zero &&
          step_eq.lhs->g->kind == MapTerm::Kind::Succ) {
        const MapPtr& a0 = anchor.rhs;
        if (d->rhs->kind == MapTerm::Kind::Comp && d->rhs->f->kind == MapTerm::Kind::Iter &&
            map_eq(d->rhs->f->f, v)) {
          if (auto p = match_pair(d->rhs->g)) {
            simple = p->first->kind == MapTerm::Kind::Comp && map_eq(p->first->f, a0) &&
                     p->first->g->kind == MapTerm::Kind::Bang &&
                     p->first->g->a->kind == ObjTerm::Kind::Nat && is_id(p->second) &&
                     p->second->a->kind == ObjTerm::Kind::Nat;
          }
        }
      }
      if (!param && !simple) detail::proof_fail(d, "not a uniqueness-of-the-iterated instance");
      break;
    }
  }
  return {d->lhs, d->rhs};
}

// The dummy argumentation of a deduction tree: single premises become left
// children; for binary rules premise order is kept (compatibility premises:
// outer factors left, first-applied factors right).
inline SPtr dummy_tree(const DPtr& d) {
  SPtr l, r;
  if (d->premises.size() >= 1) l = dummy_tree(d->premises[0]);
  if (d->premises.size() >= 2) r = dummy_tree(d->premises[1]);
  return make_stree(d->lhs, x_box(), d->rhs, x_box(), l, r);
}

// ---- top-down argumentation ----
//
// Spread an argument through a dummy tree; dispatch is structural on the
// two upper layers, mirroring the rule templates. Returns nothing when the
// shape or the argument's pair structure does not fit.

inline std::optional<SPtr> spread_argument(const SPtr& t, const XPtr& x) {
  if (x_is_box(x)) return t;  // dummy argumentation is the tree itself
  if (!t->dummy) return std::nullopt;

  if (is_leaf(t)) return make_stree(t->lu, x, t->rv, x);

  // uniqueness of the iterated, parameterized: anchor gets the left pair
  // component, the step premise the full pair
  if (t->left && t->right && t->rv->kind == MapTerm::Kind::Comp &&
      t->rv->f->kind == MapTerm::Kind::Iter) {
    const MapPtr& w = t->lu;
    bool anchor_ok = t->left->lu->kind == MapTerm::Kind::Comp && map_eq(t->left->lu->f, w) &&
                     match_pair(t->left->lu->g).has_value();
    bool step_ok = t->right->lu->kind == MapTerm::Kind::Comp && map_eq(t->right->lu->f, w) &&
                   t->right->lu->g->kind == MapTerm::Kind::Cyl;
    if (anchor_ok && step_ok && match_times(t->rv->g)) {
      if (!x_is_pair(x)) return std::nullopt;
      auto l = spread_argument(t->left, x->a);
      auto r = spread_argument(t->right, x);
      if (!l || !r) return std::nullopt;
      return make_stree(t->lu, x, t->rv, x, *l, *r);
    }
    // simple form: anchor (dom 1) gets the unit point, the step premise x
    bool anchor0_ok = t->left->lu->kind == MapTerm::Kind::Comp &&
                      map_eq(t->left->lu->f, w) &&
                      t->left->lu->g->kind == MapTerm::Kind::Zero;
    bool steps_ok = t->right->lu->kind == MapTerm::Kind::Comp && map_eq(t->right->lu->f, w) &&
                    t->right->lu->g->kind == MapTerm::Kind::Succ;
    if (anchor0_ok && steps_ok && match_pair(t->rv->g)) {
      auto l = spread_argument(t->left, x_single(0));
      auto r = spread_argument(t->right, x);
      if (!l || !r) return std::nullopt;
      return make_stree(t->lu, x, t->rv, x, *l, *r);
    }
  }

  // composition compatibility: the actual argument goes to the premise of
  // first-applied factors; the outer-factor premise waits dummy
  if (t->left && t->right && t->lu->kind == MapTerm::Kind::Comp &&
      t->rv->kind == MapTerm::Kind::Comp && map_eq(t->left->lu, t->lu->f) &&
      map_eq(t->left->rv, t->rv->f) && map_eq(t->right->lu, t->lu->g) &&
      map_eq(t->right->rv, t->rv->g)) {
    auto r = spread_argument(t->right, x);
    if (!r) return std::nullopt;
    return make_stree(t->lu, x, t->rv, x, t->left, *r);
  }

  // cylindrification compatibility: evaluate in the cylindrified component
  if (t->left && !t->right && t->lu->kind == MapTerm::Kind::Cyl &&
      t->rv->kind == MapTerm::Kind::Cyl && map_eq(t->left->lu, t->lu->f) &&
      map_eq(t->left->rv, t->rv->f)) {
    if (!x_is_pair(x)) return std::nullopt;
    auto l = spread_argument(t->left, x->b);
    if (!l) return std::nullopt;
    return make_stree(t->lu, x, t->rv, x, *l, nullptr);
  }

  // transitivity forking
  if (t->left && t->right && map_eq(t->left->lu, t->lu) && map_eq(t->right->rv, t->rv) &&
      map_eq(t->left->rv, t->right->lu)) {
    auto l = spread_argument(t->left, x);
    auto r = spread_argument(t->right, x);
    if (!l || !r) return std::nullopt;
    return make_stree(t->lu, x, t->rv, x, *l, *r);
  }

  // symmetry
  if (t->left && !t->right && map_eq(t->left->lu, t->rv) && map_eq(t->left->rv, t->lu)) {
    auto l = spread_argument(t->left, x);
    if (!l) return std::nullopt;
    return make_stree(t->lu, x, t->rv, x, *l, nullptr);
  }

  return std::nullopt;
}

struct ArgueError : std::runtime_error {
  explicit ArgueError(const std::string& what) : std::runtime_error("argumentation error: " + what) {}
};

inline SPtr argue(const DPtr& d, const XPtr& x) {
  auto t = spread_argument(dummy_tree(d), x);
  if (!t)
    throw ArgueError("argument " + x_render(x) + " does not fit the tree of \"" +
                     render(d->lhs) + "\" = \"" + render(d->rhs) + "\"");
  return *t;
}

// ---- the tree evaluation step ----
//
// Case priority: near-flat collapse, argument-shift rendezvous, standard
// componentwise stepping (labels wait while a dummy premise is present),
// abort for everything irregular.

inline SPtr tree_step(const SPtr& t) {
  if (t->cdeep.is_zero()) return t;
  if (t->dummy) return abort_tree();

  // near flat: every existing child is an evaluated id-leaf
  bool has_child = t->left || t->right;
  bool children_done = has_child && (!t->left || is_id_leaf(t->left)) &&
                       (!t->right || is_id_leaf(t->right));
  if (children_done) return make_stree(t->lu, t->lx, t->rv, t->ry);

  // shift and simplification: the evaluated right premise hands its common
  // value to the waiting dummy premise of the outer factors
  if (t->left && t->right && t->left->dummy && is_id_leaf(t->right) &&
      x_eq(t->lx, t->ry) && !x_is_box(t->lx) && !x_is_box(t->right->lx) &&
      x_eq(t->right->lx, t->right->ry) && t->lu->kind == MapTerm::Kind::Comp &&
      t->rv->kind == MapTerm::Kind::Comp && map_eq(t->left->lu, t->lu->f) &&
      map_eq(t->left->rv, t->rv->f)) {
    if (auto shifted = spread_argument(t->left, t->right->lx)) return *shifted;
  }

  // standard case
  bool waiting = (t->left && t->left->dummy) || (t->right && t->right->dummy);
  MapPtr nlu = t->lu, nrv = t->rv;
  XPtr nlx = t->lx, nry = t->ry;
  if (!waiting && !x_is_box(t->lx) && !x_is_box(t->ry)) {
    EvalState l = step({t->lu, t->lx});
    EvalState r = step({t->rv, t->ry});
    nlu = l.code; nlx = l.arg;
    nrv = r.code; nry = r.arg;
  }
  SPtr nl = t->left && !t->left->dummy ? tree_step(t->left) : t->left;
  SPtr nr = t->right && !t->right->dummy ? tree_step(t->right) : t->right;
  SPtr out = make_stree(nlu, nlx, nrv, nry, nl, nr);
  if (stree_eq(out, t)) return abort_tree();  // irregular: no case can advance it
  return out;
}

struct TreeEvalResult {
  enum class Status { Terminated, FuelExhausted };
  Status status;
  SPtr tree;
  std::uint64_t steps = 0;
};

inline TreeEvalResult tree_eval(SPtr t, std::uint64_t fuel) {
  std::uint64_t steps = 0;
  while (!t->cdeep.is_zero() && steps < fuel) {
    t = tree_step(t);
    ++steps;
  }
  return {t->cdeep.is_zero() ? TreeEvalResult::Status::Terminated
                             : TreeEvalResult::Status::FuelExhausted,
          t, steps};
}

// ---- the soundness checker ----

struct Verdict {
  enum class Kind { Sound, NotTerminated, Unsound };
  Kind kind;
  XPtr value;            // Sound
  OrdinalPoly residual;  // NotTerminated
  XPtr left, right;      // Unsound witnesses: the direct evaluation values
  XPtr tree_left, tree_right;
  std::uint64_t tree_steps = 0;
};

inline Verdict soundness_check(const DPtr& d, const XPtr& x, std::uint64_t fuel) {
  check_proof(d);
  SPtr argued = argue(d, x);
  TreeEvalResult r = tree_eval(argued, fuel);
  if (r.status == TreeEvalResult::Status::FuelExhausted)
    return {Verdict::Kind::NotTerminated, nullptr, tree_complexity(r.tree),
            nullptr, nullptr, nullptr, nullptr, r.steps};
  EvalOutcome el = eval(d->lhs, x, fuel);
  EvalOutcome er = eval(d->rhs, x, fuel);
  if (el.status != EvalOutcome::Status::Terminated)
    return {Verdict::Kind::NotTerminated, nullptr, el.final_complexity,
            nullptr, nullptr, nullptr, nullptr, r.steps};
  if (er.status != EvalOutcome::Status::Terminated)
    return {Verdict::Kind::NotTerminated, nullptr, er.final_complexity,
            nullptr, nullptr, nullptr, nullptr, r.steps};
  const XPtr& tl = r.tree->lx;
  const XPtr& tr = r.tree->ry;
  bool ok = x_eq(tl, tr) && x_eq(tl, el.value) && x_eq(tr, er.value);
  if (ok)
    return {Verdict::Kind::Sound, el.value, OrdinalPoly{}, nullptr, nullptr, tl, tr, r.steps};
  return {Verdict::Kind::Unsound, nullptr, OrdinalPoly{}, el.value, er.value, tl, tr, r.steps};
}

// ---- proof files ----
//
// Line oriented, one node per line:
//   node <id> <rule> "<lhs>" "<rhs>" [premise-ids...]
// '#' starts a comment; the last node is the root.

inline std::string save_proof(const DPtr& root) {
  std::ostringstream out;
  std::map<const DTree*, std::string> ids;
  std::uint64_t next = 0;
  struct Emit {
    std::ostringstream& out;
    std::map<const DTree*, std::string>& ids;
    std::uint64_t& next;
    std::string operator()(const DPtr& d) {
      auto it = ids.find(d.get());
      if (it != ids.end()) return it->second;
      std::vector<std::string> ps;
      for (const DPtr& p : d->premises) ps.push_back((*this)(p));
      std::string id = "n" + std::to_string(next++);
      ids[d.get()] = id;
      out << "node " << id << " " << rule_name(d->rule) << " \"" << render(d->lhs)
          << "\" \"" << render(d->rhs) << "\"";
      for (const std::string& p : ps) out << " " << p;
      out << "\n";
      return id;
    }
  } emit{out, ids, next};
  emit(root);
  return out.str();
}

inline DPtr load_proof(std::istream& in) {
  std::map<std::string, DPtr> nodes;
  DPtr last;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') continue;
    auto fail = [&](const std::string& what) -> void {
      throw ProofError("line " + std::to_string(line_no) + ": " + what);
    };
    auto word = [&]() -> std::string {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      return line.substr(start, i - start);
    };
    auto quoted = [&]() -> std::string {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size() || line[i] != '"') fail("expected a quoted term");
      std::size_t start = ++i;
      while (i < line.size() && line[i] != '"') ++i;
      if (i >= line.size()) fail("unterminated quote");
      std::string s = line.substr(start, i - start);
      ++i;
      return s;
    };
    if (word() != "node") fail("expected 'node'");
    std::string id = word();
    if (id.empty()) fail("missing node id");
    std::string rname = word();
    auto rule = rule_from_name(rname);
    if (!rule) fail("unknown rule '" + rname + "'");
    MapPtr lhs, rhs;
    try {
      lhs = parse_map(quoted());
      rhs = parse_map(quoted());
    } catch (const SyntaxError& e) {
      fail(e.what());
    }
    std::vector<DPtr> prem;
    while (true) {
      std::string p = word();
      if (p.empty()) break;
      auto it = nodes.find(p);
      if (it == nodes.end()) fail("unknown premise id '" + p + "'");
      prem.push_back(it->second);
    }
    if (nodes.count(id)) fail("duplicate node id '" + id + "'");
    DPtr node = make_dtree(*rule, lhs, rhs, std::move(prem));
    nodes[id] = node;
    last = node;
  }
  if (!last) throw ProofError("empty proof file");
  return last;
}

}  // namespace ordeval

#endif  // ORDEVAL_DEDUCTION_HPP
