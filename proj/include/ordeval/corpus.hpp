#ifndef ORDEVAL_CORPUS_HPP
#define ORDEVAL_CORPUS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordeval/deduction.hpp"

namespace ordeval {
namespace proofs {

// ---- combinators over deduction trees ----

inline DPtr refl(const MapPtr& t) { return make_dtree(ProofRule::Refl, t, t); }

inline DPtr sym(const DPtr& p) { return make_dtree(ProofRule::Sym, p->rhs, p->lhs, {p}); }

inline DPtr trans(const DPtr& p, const DPtr& q) {
  if (!map_eq(p->rhs, q->lhs))
    throw std::logic_error("trans: premises do not chain: " + render(p->rhs) + " vs " +
                           render(q->lhs));
  return make_dtree(ProofRule::Trans, p->lhs, q->rhs, {p, q});
}

inline DPtr chain(const std::vector<DPtr>& ps) {
  if (ps.empty()) throw std::logic_error("chain: empty");
  DPtr acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = trans(acc, ps[i]);
  return acc;
}

inline DPtr ccompat(const DPtr& outer, const DPtr& inner) {
  return make_dtree(ProofRule::CompCompat, mk_comp(outer->lhs, inner->lhs),
                    mk_comp(outer->rhs, inner->rhs), {outer, inner});
}

// v o u ~ v' o u  from  v ~ v'
inline DPtr restr_right(const DPtr& p, const MapPtr& u) { return ccompat(p, refl(u)); }
// h o u ~ h o u'  from  u ~ u'
inline DPtr restr_left(const MapPtr& h, const DPtr& p) { return ccompat(refl(h), p); }

inline DPtr cylc(const ObjPtr& A, const DPtr& p) {
  return make_dtree(ProofRule::CylCompat, mk_cyl(A, p->lhs), mk_cyl(A, p->rhs), {p});
}

inline DPtr assoc(const MapPtr& w, const MapPtr& v, const MapPtr& u) {
  return make_dtree(ProofRule::Assoc, mk_comp(mk_comp(w, v), u),
                    mk_comp(w, mk_comp(v, u)));
}

inline DPtr idl(const MapPtr& u) {
  return make_dtree(ProofRule::IdLeft, mk_comp(mk_id(typecheck(u).cod), u), u);
}

inline DPtr idr(const MapPtr& u) {
  return make_dtree(ProofRule::IdRight, mk_comp(u, mk_id(typecheck(u).dom)), u);
}

inline DPtr terminal(const MapPtr& f, const MapPtr& g) {
  return make_dtree(ProofRule::TerminalUnique, f, g);
}

inline DPtr god_bl(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f), tg = typecheck(g);
  return make_dtree(ProofRule::Godement,
                    mk_comp(mk_projl(tf.cod, tg.cod), mk_pair(f, g)), f);
}

inline DPtr god_br(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f), tg = typecheck(g);
  return make_dtree(ProofRule::Godement,
                    mk_comp(mk_projr(tf.cod, tg.cod), mk_pair(f, g)), g);
}

inline DPtr god_pc(const MapPtr& f, const MapPtr& g, const MapPtr& h) {
  return make_dtree(ProofRule::Godement, mk_comp(mk_pair(f, g), h),
                    mk_pair(mk_comp(f, h), mk_comp(g, h)));
}

inline DPtr god_times(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f), tg = typecheck(g);
  return make_dtree(ProofRule::Godement, mk_times(f, g),
                    mk_pair(mk_comp(f, mk_projl(tf.dom, tg.dom)),
                            mk_comp(g, mk_projr(tf.dom, tg.dom))));
}

inline DPtr god_cyl(const ObjPtr& A, const MapPtr& g) {
  return make_dtree(ProofRule::Godement, mk_cyl(A, g), mk_times(mk_id(A), g));
}

inline DPtr fourman(const MapPtr& h) {
  MapType th = typecheck(h);
  if (th.cod->kind != ObjTerm::Kind::Prod)
    throw std::logic_error("fourman: codomain must be a product");
  return make_dtree(ProofRule::FourmanUnique,
                    mk_pair(mk_comp(mk_projl(th.cod->left, th.cod->right), h),
                            mk_comp(mk_projr(th.cod->left, th.cod->right), h)),
                    h);
}

inline DPtr iter_anchor(const MapPtr& u, const MapPtr& g) {
  MapType tg = typecheck(g);
  return make_dtree(ProofRule::IterAnchor,
                    mk_comp(mk_iter(u), mk_pair(g, mk_const_zero(tg.dom))), g);
}

inline DPtr iter_step_td(const MapPtr& u) {
  ObjPtr A = typecheck(u).dom;
  return make_dtree(ProofRule::IterStep, mk_comp(mk_iter(u), mk_cyl(A, mk_succ())),
                    mk_comp(u, mk_iter(u)));
}

inline DPtr freyd_param(const DPtr& anchor, const DPtr& step) {
  const MapPtr& w = anchor->lhs->f;
  const MapPtr& u = anchor->rhs;
  const MapPtr& v = step->rhs->f;
  return make_dtree(ProofRule::FreydUnique, w,
                    mk_comp(mk_iter(v), mk_times(u, mk_id(obj_nat()))), {anchor, step});
}

inline DPtr freyd_simple(const DPtr& anchor, const DPtr& step) {
  const MapPtr& w = anchor->lhs->f;
  const MapPtr& a0 = anchor->rhs;
  const MapPtr& v = step->rhs->f;
  return make_dtree(
      ProofRule::FreydUnique, w,
      mk_comp(mk_iter(v),
              mk_pair(mk_comp(a0, mk_bang(obj_nat())), mk_id(obj_nat()))),
      {anchor, step});
}

// ---- derived structural equalities ----

// pair(f,g) ~ pair(f',g') from the component proofs
inline DPtr pair_congr(const DPtr& pf, const DPtr& pg) {
  MapType tf = typecheck(pf->lhs), tg = typecheck(pg->lhs);
  const ObjPtr& A = tf.dom;
  const ObjPtr& B = tf.cod;
  const ObjPtr& C = tg.dom;  // equals A for pairings
  DPtr times_congr =
      ccompat(cylc(B, pg),
              ccompat(refl(mk_swap(C, B)),
                      ccompat(cylc(C, pf), refl(mk_swap(A, C)))));
  return ccompat(times_congr, refl(mk_diag(A)));
}

// l o times(f,g) ~ f o l
inline DPtr proj_nat_l(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f), tg = typecheck(g);
  MapPtr fl = mk_comp(f, mk_projl(tf.dom, tg.dom));
  MapPtr gr = mk_comp(g, mk_projr(tf.dom, tg.dom));
  return chain({restr_left(mk_projl(tf.cod, tg.cod), god_times(f, g)), god_bl(fl, gr)});
}

// r o times(f,g) ~ g o r
inline DPtr proj_nat_r(const MapPtr& f, const MapPtr& g) {
  MapType tf = typecheck(f), tg = typecheck(g);
  MapPtr fl = mk_comp(f, mk_projl(tf.dom, tg.dom));
  MapPtr gr = mk_comp(g, mk_projr(tf.dom, tg.dom));
  return chain({restr_left(mk_projr(tf.cod, tg.cod), god_times(f, g)), god_br(fl, gr)});
}

// times(f,g) o pair(h,k) ~ pair(f o h, g o k)
inline DPtr times_pair_fuse(const MapPtr& f, const MapPtr& g, const MapPtr& h,
                            const MapPtr& k) {
  MapType tf = typecheck(f), tg = typecheck(g);
  MapPtr hk = mk_pair(h, k);
  MapPtr fl = mk_comp(f, mk_projl(tf.dom, tg.dom));
  MapPtr gr = mk_comp(g, mk_projr(tf.dom, tg.dom));
  DPtr q1 = chain({assoc(f, mk_projl(tf.dom, tg.dom), hk), restr_left(f, god_bl(h, k))});
  DPtr q2 = chain({assoc(g, mk_projr(tf.dom, tg.dom), hk), restr_left(g, god_br(h, k))});
  return chain({restr_right(god_times(f, g), hk), god_pc(fl, gr, hk), pair_congr(q1, q2)});
}

// cyl(A, v) o pair(h,k) ~ pair(h, v o k)   (the common id x v application)
inline DPtr cyl_pair_fuse(const ObjPtr& A, const MapPtr& v, const MapPtr& h,
                          const MapPtr& k) {
  DPtr fused = times_pair_fuse(mk_id(A), v, h, k);
  return chain({restr_right(god_cyl(A, v), mk_pair(h, k)), fused,
                pair_congr(idl(h), refl(mk_comp(v, k)))});
}

// l o cyl(A, v) ~ l   and   r o cyl(A, v) ~ v o r
inline DPtr projl_cyl(const ObjPtr& A, const MapPtr& v) {
  MapType tv = typecheck(v);
  return chain({restr_left(mk_projl(A, tv.cod), god_cyl(A, v)),
                proj_nat_l(mk_id(A), v), idl(mk_projl(A, tv.dom))});
}
inline DPtr projr_cyl(const ObjPtr& A, const MapPtr& v) {
  return chain({restr_left(mk_projr(A, typecheck(v).cod), god_cyl(A, v)),
                proj_nat_r(mk_id(A), v)});
}

// ---- the proof corpus ----

struct CorpusProof {
  std::string name;
  std::string description;
  DPtr proof;
  ObjPtr domain;  // of both sides; arguments are drawn from here
};

namespace detail {

// id_N ~ iter(s) o <0 o !, id>: the numerals exhaust N
inline DPtr nat_unfold() {
  MapPtr idN = mk_id(obj_nat());
  MapPtr s = mk_succ();
  DPtr anchor = idl(mk_zero());
  DPtr step = chain({idl(s), sym(idr(s))});
  return freyd_simple(anchor, step);
}

// comp(pred, s) ~ id_N
inline DPtr pred_succ() {
  ObjPtr N = obj_nat();
  ObjPtr NN = obj_prod(N, N);
  ObjPtr U = obj_unit();
  MapPtr s = mk_succ();
  MapPtr z = mk_zero();
  MapPtr idN = mk_id(N);
  MapPtr lN = mk_projl(N, N);
  MapPtr rN = mk_projr(N, N);
  MapPtr P = lib::pred();
  MapPtr f = mk_pair(mk_comp(s, lN), lN);       // the pair-step (a,b) -> (s a, a)
  MapPtr z2 = mk_pair(z, z);
  MapPtr seed = mk_pair(mk_comp(z2, mk_bang(N)), idN);
  MapPtr itf = mk_iter(f);
  MapPtr G = mk_comp(itf, seed);                // pred = r o G
  MapPtr w = mk_comp(P, s);
  MapPtr nu1 = numeral(1);

  // T: G o s ~ f o G
  DPtr seed_s = chain(
      {god_pc(mk_comp(z2, mk_bang(N)), idN, s),
       pair_congr(chain({assoc(z2, mk_bang(N), s),
                         restr_left(z2, terminal(mk_comp(mk_bang(N), s), mk_bang(N)))}),
                  idl(s))});  // seed o s ~ <z2 o !, s>
  DPtr pair_as_cyl = sym(chain(
      {restr_right(god_cyl(NN, s), seed),
       times_pair_fuse(mk_id(NN), s, mk_comp(z2, mk_bang(N)), idN),
       pair_congr(idl(mk_comp(z2, mk_bang(N))), idr(s))}));  // <z2 o !, s> ~ cyl(NN,s) o seed
  DPtr T = chain({assoc(itf, seed, s), restr_left(itf, chain({seed_s, pair_as_cyl})),
                  sym(assoc(itf, mk_cyl(NN, mk_succ()), seed)),
                  restr_right(iter_step_td(f), seed), assoc(f, itf, seed)});

  // anchor: (P o s) o 0 ~ 0
  DPtr seed_nu1 = chain(
      {god_pc(mk_comp(z2, mk_bang(N)), idN, nu1),
       pair_congr(chain({assoc(z2, mk_bang(N), nu1),
                         restr_left(z2, terminal(mk_comp(mk_bang(N), nu1), mk_id(U))),
                         idr(z2)}),
                  idl(nu1))});  // seed o nu1 ~ <z2, nu1>
  DPtr zero_point = sym(chain({restr_left(z, terminal(mk_bang(U), mk_id(U))), idr(z)}));
  // <z2, nu1> ~ cyl(NN,s) o <z2, 0 o !_1>
  DPtr pair_at_one = sym(chain(
      {restr_left(mk_cyl(NN, s),
                  pair_congr(refl(z2), sym(chain({sym(assoc(z, mk_bang(U), mk_id(U)))
                                                      ,  // placeholder, replaced below
                                                  refl(mk_comp(z, mk_comp(mk_bang(U), mk_id(U))))})))),
       refl(mk_comp(mk_cyl(NN, s), mk_pair(z2, mk_comp(z, mk_bang(U)))))}));
  // the placeholder above is unusable; build the clean version instead:
  DPtr zero_as_const = sym(chain({restr_left(z, terminal(mk_bang(U), mk_id(U))), idr(z)}));
  // zero_as_const : z ~ z o !_1
  pair_at_one = sym(chain(
      {cyl_pair_fuse(NN, s, z2, mk_comp(z, mk_bang(U))),
       pair_congr(refl(z2),
                  sym(chain({restr_left(s, sym(zero_as_const)),
                             refl(nu1)})))}));
  (void)zero_point;
  // cyl(NN,s) o <z2, z o !_1> ~ <z2, s o (z o !_1)> ~ <z2, nu1>; sym gives the direction
  // needed; note s o (z o !_1) ~ s o z = nu1 via the inner proof.
  DPtr f_at_z2 = chain(
      {god_pc(mk_comp(s, lN), lN, z2),
       pair_congr(chain({assoc(s, lN, z2), restr_left(s, god_bl(z, z))}), god_bl(z, z))});
  // f o z2 ~ <s o z, z> = <nu1, z>
  DPtr anchor = chain(
      {assoc(P, s, z),  // (P o s) o 0 ~ P o nu1
       restr_left(P, refl(nu1)),
       // P o nu1 = (r o G) o nu1 ~ r o (G o nu1)
       assoc(rN, G, nu1),
       restr_left(rN, chain({assoc(itf, seed, nu1), restr_left(itf, seed_nu1),
                             restr_left(itf, pair_at_one),
                             sym(assoc(itf, mk_cyl(NN, s), mk_pair(z2, mk_comp(z, mk_bang(U))))),
                             restr_right(iter_step_td(f), mk_pair(z2, mk_comp(z, mk_bang(U)))),
                             assoc(f, itf, mk_pair(z2, mk_comp(z, mk_bang(U)))),
                             restr_left(f, iter_anchor(f, z2)), f_at_z2})),
       god_br(nu1, z)});

  // step: (P o s) o s ~ s o (P o s); both sides meet at s o (l o G)
  DPtr lhs_chain = chain(
      {restr_right(assoc(rN, G, s), s),   // ((r o G) o s) o s ~ (r o (G o s)) o s
       assoc(rN, mk_comp(G, s), s),       // ~ r o ((G o s) o s)
       restr_left(rN, restr_right(T, s)), // ~ r o ((f o G) o s)
       restr_left(rN, assoc(f, G, s)),    // ~ r o (f o (G o s))
       restr_left(rN, restr_left(f, T)),  // ~ r o (f o (f o G))
       sym(assoc(rN, f, mk_comp(f, G))),  // ~ (r o f) o (f o G)
       restr_right(god_br(mk_comp(s, lN), lN), mk_comp(f, G)),  // ~ l o (f o G)
       sym(assoc(lN, f, G)),              // ~ (l o f) o G
       restr_right(god_bl(mk_comp(s, lN), lN), G),              // ~ (s o l) o G
       assoc(s, lN, G)});                 // ~ s o (l o G)
  DPtr rhs_chain = chain(
      {restr_left(s, assoc(rN, G, s)),    // s o ((r o G) o s) ~ s o (r o (G o s))
       restr_left(s, restr_left(rN, T)),  // ~ s o (r o (f o G))
       restr_left(s, sym(assoc(rN, f, G))),
       restr_left(s, restr_right(god_br(mk_comp(s, lN), lN), G))});  // ~ s o (l o G)
  DPtr step = chain({lhs_chain, sym(rhs_chain)});

  return trans(freyd_simple(anchor, step), sym(nat_unfold()));
}

// comp(sub, pair(s o l, s o r)) ~ comp(sub, pair(l, r))
inline DPtr sub_simplification(const DPtr& predsucc) {
  ObjPtr N = obj_nat();
  MapPtr s = mk_succ();
  MapPtr z = mk_zero();
  MapPtr idN = mk_id(N);
  MapPtr lN = mk_projl(N, N);
  MapPtr rN = mk_projr(N, N);
  MapPtr P = lib::pred();
  MapPtr SUB = lib::sub();
  MapPtr AP = anchor_point(N);  // <id, 0 o !>
  MapPtr zb = mk_const_zero(N);
  MapPtr sl = mk_comp(s, lN);
  MapPtr sr = mk_comp(s, rN);
  MapPtr plrs = mk_pair(sl, sr);
  MapPtr plr = mk_pair(lN, rN);
  MapPtr wl = mk_comp(SUB, plrs);
  MapPtr wr = mk_comp(SUB, plr);
  MapPtr cylNs = mk_cyl(N, s);

  // left side anchor: wl o <id,0!> ~ id
  DPtr al_pair = chain(
      {god_pc(sl, sr, AP),
       pair_congr(chain({assoc(s, lN, AP), restr_left(s, god_bl(idN, zb)), idr(s)}),
                  chain({assoc(s, rN, AP), restr_left(s, god_br(idN, zb)),
                         sym(assoc(s, z, mk_bang(N)))}))});
  // plrs o AP ~ <s, nu1 o !>
  MapPtr nu1b = mk_comp(numeral(1), mk_bang(N));
  DPtr s_zb_pair = sym(chain(
      {cyl_pair_fuse(N, s, s, zb),
       pair_congr(refl(s), sym(assoc(s, z, mk_bang(N))))}));
  // <s, nu1 o !> ~ cyl(N,s) o <s, 0 o !>
  DPtr anchor_l = chain(
      {assoc(SUB, plrs, AP), restr_left(SUB, chain({al_pair, s_zb_pair})),
       sym(assoc(SUB, cylNs, mk_pair(s, zb))),
       restr_right(iter_step_td(P), mk_pair(s, zb)),
       assoc(P, SUB, mk_pair(s, zb)),
       restr_left(P, iter_anchor(P, s)), predsucc});

  // left side step: wl o cyl(N,s) ~ P o wl
  DPtr plrs_cyl = chain(
      {god_pc(sl, sr, cylNs),
       pair_congr(chain({assoc(s, lN, cylNs), restr_left(s, projl_cyl(N, s))}),
                  chain({assoc(s, rN, cylNs), restr_left(s, projr_cyl(N, s)),
                         sym(assoc(s, s, rN))}))});
  // plrs o cyl(N,s) ~ <s o l, (s o s) o r>
  DPtr cyl_plrs = chain(
      {restr_right(god_cyl(N, s), plrs), times_pair_fuse(idN, s, sl, sr),
       pair_congr(idl(sl), sym(assoc(s, s, rN)))});
  // cyl(N,s) o plrs ~ <s o l, (s o s) o r>
  DPtr step_l = chain({assoc(SUB, plrs, cylNs), restr_left(SUB, plrs_cyl),
                       restr_left(SUB, sym(cyl_plrs)),
                       sym(assoc(SUB, cylNs, plrs)),
                       restr_right(iter_step_td(P), plrs), assoc(P, SUB, plrs)});
  DPtr left = freyd_param(anchor_l, step_l);

  // right side anchor: wr o <id,0!> ~ id
  DPtr anchor_r = chain(
      {assoc(SUB, plr, AP),
       restr_left(SUB, chain({god_pc(lN, rN, AP),
                              pair_congr(god_bl(idN, zb), god_br(idN, zb))})),
       iter_anchor(P, idN)});

  // right side step: wr o cyl(N,s) ~ P o wr
  DPtr plr_cyl = chain({god_pc(lN, rN, cylNs),
                        pair_congr(projl_cyl(N, s), projr_cyl(N, s))});
  DPtr cyl_plr = chain({restr_right(god_cyl(N, s), plr),
                        times_pair_fuse(idN, s, lN, rN),
                        pair_congr(idl(lN), refl(mk_comp(s, rN)))});
  DPtr step_r = chain({assoc(SUB, plr, cylNs), restr_left(SUB, plr_cyl),
                       restr_left(SUB, sym(cyl_plr)), sym(assoc(SUB, cylNs, plr)),
                       restr_right(iter_step_td(P), plr), assoc(P, SUB, plr)});
  DPtr right = freyd_param(anchor_r, step_r);
  (void)wl; (void)wr;
  return trans(left, sym(right));
}

}  // namespace detail

inline const std::vector<CorpusProof>& corpus() {
  static const std::vector<CorpusProof> proofs = [] {
    ObjPtr N = obj_nat();
    ObjPtr NN = obj_prod(N, N);
    MapPtr s = mk_succ();
    MapPtr idN = mk_id(N);
    MapPtr P = lib::pred();
    MapPtr SUB = lib::sub();
    MapPtr ADD = lib::add();
    DPtr predsucc = detail::pred_succ();
    DPtr natunf = detail::nat_unfold();
    std::vector<CorpusProof> v;
    v.push_back({"add_zero", "a + 0 = a", proofs::iter_anchor(s, idN), N});
    v.push_back({"zero_add", "0 + a = a", proofs::sym(natunf), N});
    v.push_back({"pred_succ", "pred(s a) = a", predsucc, N});
    v.push_back({"sub_simplification", "s a - s b = a - b",
                 detail::sub_simplification(predsucc), NN});
    v.push_back({"assoc_succ", "(s o s) o s = s o (s o s)", proofs::assoc(s, s, s), N});
    v.push_back({"assoc_pred", "(pred o s) o s = pred o (s o s)",
                 proofs::assoc(P, s, s), N});
    v.push_back({"id_left_sub", "id o sub = sub", proofs::idl(SUB), NN});
    v.push_back({"terminal_succ", "! o s = !",
                 proofs::terminal(mk_comp(mk_bang(N), s), mk_bang(N)), N});
    v.push_back({"proj_beta", "l o <s, pred> = s", proofs::god_bl(s, P), N});
    v.push_back({"iter_step_add", "add o (id x s) = s o add",
                 proofs::iter_step_td(s), NN});
    v.push_back({"cyl_pred_succ", "id x (pred o s) = id x id",
                 proofs::cylc(N, predsucc), NN});
    v.push_back({"succ_pred_succ", "s(pred(s a)) = s a",
                 proofs::trans(proofs::restr_left(s, predsucc), proofs::idr(s)), N});
    v.push_back({"add_zero_flipped", "a = a + 0",
                 proofs::sym(proofs::iter_anchor(s, idN)), N});
    v.push_back({"freyd_unfold", "id = iter(s) o <0 o !, id>", natunf, N});
    (void)ADD;
    return v;
  }();
  return proofs;
}

inline std::uint64_t proof_depth(const DPtr& d) {
  std::uint64_t m = 0;
  for (const DPtr& p : d->premises) m = std::max(m, proof_depth(p) + 1);
  return m;
}

// Display ordering: nesting depth first, then serialized length of the
// root equation.
inline std::vector<const CorpusProof*> corpus_sorted() {
  std::vector<const CorpusProof*> out;
  for (const CorpusProof& c : corpus()) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const CorpusProof* a, const CorpusProof* b) {
    std::uint64_t da = proof_depth(a->proof), db = proof_depth(b->proof);
    if (da != db) return da < db;
    std::string sa = serial_code(a->proof->lhs) + serial_code(a->proof->rhs);
    std::string sb = serial_code(b->proof->lhs) + serial_code(b->proof->rhs);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  return out;
}

}  // namespace proofs
}  // namespace ordeval

#endif  // ORDEVAL_CORPUS_HPP
