#ifndef ORDEVAL_EVALUATOR_HPP
#define ORDEVAL_EVALUATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordeval/ordinal.hpp"
#include "ordeval/syntax.hpp"
#include "ordeval/values.hpp"

namespace ordeval {

// ---- evaluation complexity ----
//
//   c(id) = 0, c(bas') = 1, c(v o u) = c(u)+c(v)+1, c(id_A x v) = c(v)+1,
//   c(u^iter) = w*(c(u)+1); restriction to abstraction objects is free.

inline OrdinalPoly complexity(const MapPtr& t) {
  switch (t->kind) {
    case MapTerm::Kind::Id: return OrdinalPoly{};
    case MapTerm::Kind::Zero:
    case MapTerm::Kind::Succ:
    case MapTerm::Kind::Bang:
    case MapTerm::Kind::Diag:
    case MapTerm::Kind::Swap:
    case MapTerm::Kind::ProjL:
    case MapTerm::Kind::ProjR: return ord_from_nat(1);
    case MapTerm::Kind::Comp:
      return ord_add(ord_add(complexity(t->g), complexity(t->f)), ord_from_nat(1));
    case MapTerm::Kind::Cyl: return ord_add(complexity(t->f), ord_from_nat(1));
    case MapTerm::Kind::Iter:
      return ord_mul_omega(ord_add(complexity(t->f), ord_from_nat(1)));
    case MapTerm::Kind::Abstr: return complexity(t->g);
  }
  return OrdinalPoly{};
}

// Run-time code expansion: u^[0] = id, u^[n+1] = u^[n] o u.
inline MapPtr expand(const MapPtr& u, std::uint64_t n) {
  MapPtr t = mk_id(dom_of(u));
  for (std::uint64_t i = 0; i < n; ++i) t = mk_comp(t, u);
  return t;
}

// ---- denotational oracle ----
//
// Direct structural evaluation; the comparison side of the Objectivity
// checks. Total up to the optional work budget (used by membership tests
// so that abstraction predicates cannot run away).

namespace detail {

inline std::optional<XPtr> oracle_impl(const MapPtr& t, const XPtr& x, std::uint64_t* budget);

inline bool oracle_spend(std::uint64_t* budget, std::uint64_t amount = 1) {
  if (!budget) return true;
  if (*budget < amount) { *budget = 0; return false; }
  *budget -= amount;
  return true;
}

enum class Tri { In, Out, Unknown };

inline Tri member_impl(const ObjPtr& A, const XPtr& x, std::uint64_t* budget) {
  if (x->kind == XValue::Kind::Bot || x->kind == XValue::Kind::Box) return Tri::Out;
  switch (A->kind) {
    case ObjTerm::Kind::Unit:
      return (x->kind == XValue::Kind::Single && x->n == 0) ? Tri::In : Tri::Out;
    case ObjTerm::Kind::Nat:
      return x->kind == XValue::Kind::Single ? Tri::In : Tri::Out;
    case ObjTerm::Kind::Prod: {
      if (x->kind != XValue::Kind::Pair) return Tri::Out;
      Tri l = member_impl(A->left, x->a, budget);
      if (l == Tri::Out) return Tri::Out;
      Tri r = member_impl(A->right, x->b, budget);
      if (r == Tri::Out) return Tri::Out;
      return (l == Tri::In && r == Tri::In) ? Tri::In : Tri::Unknown;
    }
    case ObjTerm::Kind::Sub: {
      Tri base = member_impl(A->base, x, budget);
      if (base != Tri::In) return base;
      std::optional<XPtr> v = oracle_impl(A->pred, x, budget);
      if (!v) return Tri::Unknown;
      return (x_is_single(*v) && (*v)->n == 1) ? Tri::In : Tri::Out;
    }
  }
  return Tri::Out;
}

inline std::optional<XPtr> oracle_impl(const MapPtr& t, const XPtr& x, std::uint64_t* budget) {
  if (!oracle_spend(budget)) return std::nullopt;
  if (x->kind == XValue::Kind::Bot || x->kind == XValue::Kind::Box) return x_bot();
  switch (t->kind) {
    case MapTerm::Kind::Id: return x;
    case MapTerm::Kind::Zero:
      return (x_is_single(x) && x->n == 0) ? x_single(0) : x_bot();
    case MapTerm::Kind::Succ:
      return x_is_single(x) ? x_single(x->n + 1) : x_bot();
    case MapTerm::Kind::Bang:
      return member_impl(t->a, x, budget) == Tri::In ? x_single(0) : x_bot();
    case MapTerm::Kind::Diag:
      return member_impl(t->a, x, budget) == Tri::In ? x_pair(x, x) : x_bot();
    case MapTerm::Kind::Swap:
      if (x_is_pair(x) && member_impl(t->a, x->a, budget) == Tri::In &&
          member_impl(t->b, x->b, budget) == Tri::In)
        return x_pair(x->b, x->a);
      return x_bot();
    case MapTerm::Kind::ProjL:
      if (x_is_pair(x) && member_impl(t->a, x->a, budget) == Tri::In &&
          member_impl(t->b, x->b, budget) == Tri::In)
        return x->a;
      return x_bot();
    case MapTerm::Kind::ProjR:
      if (x_is_pair(x) && member_impl(t->a, x->a, budget) == Tri::In &&
          member_impl(t->b, x->b, budget) == Tri::In)
        return x->b;
      return x_bot();
    case MapTerm::Kind::Comp: {
      std::optional<XPtr> mid = oracle_impl(t->g, x, budget);
      if (!mid) return std::nullopt;
      return oracle_impl(t->f, *mid, budget);
    }
    case MapTerm::Kind::Cyl: {
      if (!x_is_pair(x)) return x_bot();
      std::optional<XPtr> r = oracle_impl(t->f, x->b, budget);
      if (!r) return std::nullopt;
      if (x_is_bot(*r)) return x_bot();
      return x_pair(x->a, *r);
    }
    case MapTerm::Kind::Iter: {
      if (!x_is_pair(x) || !x_is_single(x->b)) return x_bot();
      XPtr acc = x->a;
      for (std::uint64_t i = 0; i < x->b->n; ++i) {
        std::optional<XPtr> next = oracle_impl(t->f, acc, budget);
        if (!next) return std::nullopt;
        acc = *next;
        if (x_is_bot(acc)) return acc;
      }
      return acc;
    }
    case MapTerm::Kind::Abstr: {
      std::optional<XPtr> chi = oracle_impl(t->f, x, budget);
      if (!chi) return std::nullopt;
      if (!(x_is_single(*chi) && (*chi)->n == 1)) return x_bot();
      std::optional<XPtr> r = oracle_impl(t->g, x, budget);
      if (!r) return std::nullopt;
      if (x_is_bot(*r)) return *r;
      std::optional<XPtr> psi = oracle_impl(t->h, *r, budget);
      if (!psi) return std::nullopt;
      if (!(x_is_single(*psi) && (*psi)->n == 1)) return x_bot();
      return *r;
    }
  }
  return x_bot();
}

}  // namespace detail

inline XPtr oracle_eval(const MapPtr& t, const XPtr& x) {
  return *detail::oracle_impl(t, x, nullptr);
}

// ---- membership ----

enum class Membership { In, Out, Unknown };

inline Membership member(const ObjPtr& A, const XPtr& x, std::uint64_t fuel = 1'000'000) {
  std::uint64_t budget = fuel;
  switch (detail::member_impl(A, x, &budget)) {
    case detail::Tri::In: return Membership::In;
    case detail::Tri::Out: return Membership::Out;
    default: return Membership::Unknown;
  }
}

// ---- the evaluation step ----

struct EvalState {
  MapPtr code;
  XPtr arg;
};

inline bool state_eq(const EvalState& a, const EvalState& b) {
  return map_eq(a.code, b.code) && x_eq(a.arg, b.arg);
}

namespace detail {

constexpr std::uint64_t kMemberBudget = 1'000'000;

inline bool screen(const ObjPtr& A, const XPtr& x) {
  std::uint64_t budget = kMemberBudget;
  return member_impl(A, x, &budget) == Tri::In;  // Unknown is sent to bottom
}

inline EvalState bot_state(const MapPtr& code) { return {mk_id(cod_of(code)), x_bot()}; }

}  // namespace detail

// One deterministic small step. Stationary at complexity zero, strictly
// descending above it; ill-matched arguments are absorbed into bottom.
inline EvalState step(const EvalState& st) {
  const MapPtr& t = st.code;
  const XPtr& x = st.arg;
  if (complexity(t).is_zero()) return st;
  if (x_is_bot(x) || x_is_box(x)) return detail::bot_state(t);
  switch (t->kind) {
    case MapTerm::Kind::Id: return st;  // unreachable: complexity zero
    case MapTerm::Kind::Zero:
      if (x_is_single(x) && x->n == 0) return {mk_id(obj_nat()), x_single(0)};
      return detail::bot_state(t);
    case MapTerm::Kind::Succ:
      if (x_is_single(x)) return {mk_id(obj_nat()), x_single(x->n + 1)};
      return detail::bot_state(t);
    case MapTerm::Kind::Bang:
      if (detail::screen(t->a, x)) return {mk_id(obj_unit()), x_single(0)};
      return detail::bot_state(t);
    case MapTerm::Kind::Diag:
      if (detail::screen(t->a, x)) return {mk_id(obj_prod(t->a, t->a)), x_pair(x, x)};
      return detail::bot_state(t);
    case MapTerm::Kind::Swap:
      if (x_is_pair(x) && detail::screen(t->a, x->a) && detail::screen(t->b, x->b))
        return {mk_id(obj_prod(t->b, t->a)), x_pair(x->b, x->a)};
      return detail::bot_state(t);
    case MapTerm::Kind::ProjL:
      if (x_is_pair(x) && detail::screen(t->a, x->a) && detail::screen(t->b, x->b))
        return {mk_id(t->a), x->a};
      return detail::bot_state(t);
    case MapTerm::Kind::ProjR:
      if (x_is_pair(x) && detail::screen(t->a, x->a) && detail::screen(t->b, x->b))
        return {mk_id(t->b), x->b};
      return detail::bot_state(t);
    case MapTerm::Kind::Comp: {
      // anchoring once the first factor is exhausted
      if (complexity(t->g).is_zero()) return {t->f, x};
      EvalState sub = step({t->g, x});
      return {mk_comp(t->f, sub.code), sub.arg};
    }
    case MapTerm::Kind::Cyl: {
      if (!x_is_pair(x)) return detail::bot_state(t);
      if (complexity(t->f).is_zero())
        return {mk_id(obj_prod(t->a, cod_of(t->f))), x};
      EvalState sub = step({t->f, x->b});
      XPtr arg = x_is_bot(sub.arg) ? x_bot() : x_pair(x->a, sub.arg);
      return {mk_cyl(t->a, sub.code), arg};
    }
    case MapTerm::Kind::Iter: {
      if (x_is_pair(x) && x_is_single(x->b)) return {expand(t->f, x->b->n), x->a};
      return detail::bot_state(t);
    }
    case MapTerm::Kind::Abstr: {
      // oracle test on the domain predicate, then step straight into the core
      XPtr chi = oracle_eval(t->f, x);
      if (x_is_single(chi) && chi->n == 1) return step({t->g, x});
      return detail::bot_state(t);
    }
  }
  return st;
}

// ---- complexity controlled iteration ----

struct EvalOutcome {
  enum class Status { Terminated, FuelExhausted };
  Status status;
  XPtr value;  // set iff Terminated
  std::uint64_t steps_used = 0;
  OrdinalPoly final_complexity;
};

inline EvalOutcome eval(const MapPtr& u, const XPtr& x, std::uint64_t fuel) {
  EvalState st{u, x};
  std::uint64_t steps = 0;
  OrdinalPoly c = complexity(st.code);
  while (!c.is_zero() && steps < fuel) {
    st = step(st);
    ++steps;
    c = complexity(st.code);
  }
  if (c.is_zero())
    return {EvalOutcome::Status::Terminated, st.arg, steps, OrdinalPoly{}};
  return {EvalOutcome::Status::FuelExhausted, nullptr, steps, c};
}

struct TraceEntry {
  MapPtr code;
  XPtr arg;
  OrdinalPoly complexity;
};

struct StepTrace {
  std::vector<TraceEntry> entries;
  bool terminated = false;
};

inline StepTrace trace(const MapPtr& u, const XPtr& x, std::uint64_t fuel) {
  StepTrace tr;
  EvalState st{u, x};
  OrdinalPoly c = complexity(st.code);
  tr.entries.push_back({st.code, st.arg, c});
  std::uint64_t steps = 0;
  while (!c.is_zero() && steps < fuel) {
    st = step(st);
    ++steps;
    c = complexity(st.code);
    tr.entries.push_back({st.code, st.arg, c});
  }
  tr.terminated = c.is_zero();
  return tr;
}

// JSON with a fixed field order, for golden-file comparisons.
inline std::string trace_to_json(const StepTrace& tr) {
  std::string out = "[";
  for (std::size_t i = 0; i < tr.entries.size(); ++i) {
    const TraceEntry& e = tr.entries[i];
    if (i) out += ",";
    out += "\n  {\"step\": " + std::to_string(i) +
           ", \"code\": \"" + render(e.code) +
           "\", \"arg\": \"" + x_render(e.arg) +
           "\", \"complexity\": \"" + ord_render(e.complexity) + "\"}";
  }
  out += "\n]\n";
  return out;
}

}  // namespace ordeval

#endif  // ORDEVAL_EVALUATOR_HPP
