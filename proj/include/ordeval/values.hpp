#ifndef ORDEVAL_VALUES_HPP
#define ORDEVAL_VALUES_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordeval {

// Elements of X augmented by bottom and the dummy box:
//   bot      - the "defined undefined" value absorbing ill-matched evaluation
//   box      - placeholder argument of a not-yet-argumented tree node
//   <n>      - number singleton
//   <a;b>    - nested pair; components are always singletons or pairs
struct XValue;
using XPtr = std::shared_ptr<const XValue>;

struct XValue {
  enum class Kind { Bot, Box, Single, Pair };
  Kind kind;
  std::uint64_t n = 0;  // Single
  XPtr a, b;            // Pair
};

inline XPtr x_bot() {
  static const XPtr v = std::make_shared<XValue>(XValue{XValue::Kind::Bot});
  return v;
}
inline XPtr x_box() {
  static const XPtr v = std::make_shared<XValue>(XValue{XValue::Kind::Box});
  return v;
}
inline XPtr x_single(std::uint64_t n) {
  return std::make_shared<XValue>(XValue{XValue::Kind::Single, n, nullptr, nullptr});
}
inline XPtr x_pair(XPtr a, XPtr b) {
  if (!a || !b) throw std::invalid_argument("x_pair: null component");
  if (a->kind == XValue::Kind::Bot || a->kind == XValue::Kind::Box ||
      b->kind == XValue::Kind::Bot || b->kind == XValue::Kind::Box)
    throw std::invalid_argument("x_pair: components must be proper X values");
  return std::make_shared<XValue>(XValue{XValue::Kind::Pair, 0, std::move(a), std::move(b)});
}

inline bool x_is_bot(const XPtr& v) { return v->kind == XValue::Kind::Bot; }
inline bool x_is_box(const XPtr& v) { return v->kind == XValue::Kind::Box; }
inline bool x_is_single(const XPtr& v) { return v->kind == XValue::Kind::Single; }
inline bool x_is_pair(const XPtr& v) { return v->kind == XValue::Kind::Pair; }

inline bool x_eq(const XPtr& x, const XPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case XValue::Kind::Bot:
    case XValue::Kind::Box: return true;
    case XValue::Kind::Single: return x->n == y->n;
    case XValue::Kind::Pair: return x_eq(x->a, y->a) && x_eq(x->b, y->b);
  }
  return false;
}

// Right-nested tuple <n1;<n2;...>>; a singleton for length 1.
inline XPtr encode_tuple(const std::vector<std::uint64_t>& ns) {
  if (ns.empty()) throw std::invalid_argument("encode_tuple: empty sequence");
  XPtr v = x_single(ns.back());
  for (std::size_t i = ns.size() - 1; i-- > 0;) v = x_pair(x_single(ns[i]), v);
  return v;
}

inline std::string x_render(const XPtr& v) {
  switch (v->kind) {
    case XValue::Kind::Bot: return "bot";
    case XValue::Kind::Box: return "box";
    case XValue::Kind::Single: return "<" + std::to_string(v->n) + ">";
    case XValue::Kind::Pair: {
      std::string l = x_render(v->a);
      std::string r = x_render(v->b);
      // drop the inner brackets: <2;3> rather than <<2>;<3>>
      auto strip = [](const std::string& s) {
        return (s.size() >= 2 && s.front() == '<' && s.back() == '>')
                   ? s.substr(1, s.size() - 2)
                   : s;
      };
      return "<" + strip(l) + ";" + strip(r) + ">";
    }
  }
  return "?";
}

namespace detail {
inline XPtr x_parse_at(const std::string& s, std::size_t& pos);

inline void x_skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

[[noreturn]] inline void x_fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("value parse error at position " + std::to_string(pos) + ": " + what);
}

// Inside <...>: element ::= nat | '<' inner '>' ; inner ::= element ';' inner | element
inline XPtr x_parse_element(const std::string& s, std::size_t& pos) {
  x_skip_ws(s, pos);
  if (pos < s.size() && s[pos] == '<') return x_parse_at(s, pos);
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    x_fail(pos, "expected number or '<'");
  std::uint64_t n = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
  return x_single(n);
}

inline XPtr x_parse_at(const std::string& s, std::size_t& pos) {
  x_skip_ws(s, pos);
  if (pos + 3 <= s.size() && s.compare(pos, 3, "bot") == 0) { pos += 3; return x_bot(); }
  if (pos + 3 <= s.size() && s.compare(pos, 3, "box") == 0) { pos += 3; return x_box(); }
  if (pos >= s.size() || s[pos] != '<') x_fail(pos, "expected '<', 'bot' or 'box'");
  ++pos;
  XPtr v = x_parse_element(s, pos);
  x_skip_ws(s, pos);
  while (pos < s.size() && s[pos] == ';') {
    ++pos;
    XPtr rest = x_parse_element(s, pos);
    x_skip_ws(s, pos);
    // right-nested: <a;b;c> reads as <a;<b;c>>; collect then fold below
    if (pos < s.size() && s[pos] == ';') {
      std::vector<XPtr> parts{v, rest};
      while (pos < s.size() && s[pos] == ';') {
        ++pos;
        parts.push_back(x_parse_element(s, pos));
        x_skip_ws(s, pos);
      }
      XPtr acc = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) acc = x_pair(parts[i], acc);
      v = acc;
    } else {
      v = x_pair(v, rest);
    }
  }
  if (pos >= s.size() || s[pos] != '>') x_fail(pos, "expected '>'");
  ++pos;
  return v;
}
}  // namespace detail

inline XPtr x_parse(const std::string& s) {
  std::size_t pos = 0;
  XPtr v = detail::x_parse_at(s, pos);
  detail::x_skip_ws(s, pos);
  if (pos != s.size()) detail::x_fail(pos, "trailing input");
  return v;
}

}  // namespace ordeval

#endif  // ORDEVAL_VALUES_HPP
