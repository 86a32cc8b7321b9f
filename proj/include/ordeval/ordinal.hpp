#ifndef ORDEVAL_ORDINAL_HPP
#define ORDEVAL_ORDINAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordeval {

// Polynomials over N in one indeterminate w, ordered degree-dominantly
// (lexicographic on coefficient strings, highest degree first).
// coeffs[i] is the coefficient of w^i; the top coefficient is nonzero,
// an empty vector is 0.
struct OrdinalPoly {
  std::vector<std::uint64_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  static OrdinalPoly normalized(std::vector<std::uint64_t> cs) {
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    return OrdinalPoly{std::move(cs)};
  }

  bool operator==(const OrdinalPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const OrdinalPoly& o) const { return coeffs != o.coeffs; }
};

enum class Ordering { Less, Equal, Greater };

inline OrdinalPoly ord_from_nat(std::uint64_t n) {
  if (n == 0) return OrdinalPoly{};
  return OrdinalPoly{{n}};
}

inline OrdinalPoly ord_omega() { return OrdinalPoly{{0, 1}}; }

inline OrdinalPoly ord_add(const OrdinalPoly& a, const OrdinalPoly& b) {
  std::vector<std::uint64_t> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) cs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) cs[i] += b.coeffs[i];
  return OrdinalPoly::normalized(std::move(cs));
}

inline OrdinalPoly ord_mul_nat(const OrdinalPoly& a, std::uint64_t n) {
  if (n == 0) return OrdinalPoly{};
  std::vector<std::uint64_t> cs = a.coeffs;
  for (auto& c : cs) c *= n;
  return OrdinalPoly::normalized(std::move(cs));
}

// Degree shift: w * a. Zero stays zero.
inline OrdinalPoly ord_mul_omega(const OrdinalPoly& a) {
  if (a.is_zero()) return a;
  std::vector<std::uint64_t> cs;
  cs.reserve(a.coeffs.size() + 1);
  cs.push_back(0);
  cs.insert(cs.end(), a.coeffs.begin(), a.coeffs.end());
  return OrdinalPoly{std::move(cs)};
}

inline Ordering ord_cmp(const OrdinalPoly& a, const OrdinalPoly& b) {
  if (a.coeffs.size() != b.coeffs.size())
    return a.coeffs.size() < b.coeffs.size() ? Ordering::Less : Ordering::Greater;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] != b.coeffs[i])
      return a.coeffs[i] < b.coeffs[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

inline bool ord_lt(const OrdinalPoly& a, const OrdinalPoly& b) {
  return ord_cmp(a, b) == Ordering::Less;
}

// "a_k*w^k + ... + a_1*w + a_0", zero terms omitted, "0" for the zero polynomial.
inline std::string ord_render(const OrdinalPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(a.coeffs[i]);
    if (i == 1) out += "*w";
    else if (i > 1) out += "*w^" + std::to_string(i);
  }
  return out;
}

// Parses the rendering above (whitespace-insensitive around '+').
inline OrdinalPoly ord_parse(const std::string& text) {
  std::vector<std::uint64_t> cs;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto parse_nat = [&]() -> std::uint64_t {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("ordinal parse error at position " + std::to_string(pos));
    std::uint64_t n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      n = n * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
    return n;
  };
  while (true) {
    std::uint64_t coeff = parse_nat();
    std::size_t deg = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'w')
        throw std::invalid_argument("ordinal parse error: expected 'w' at position " + std::to_string(pos));
      ++pos;
      deg = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        deg = static_cast<std::size_t>(parse_nat());
      }
    }
    if (cs.size() < deg + 1) cs.resize(deg + 1, 0);
    cs[deg] += coeff;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+')
      throw std::invalid_argument("ordinal parse error: expected '+' at position " + std::to_string(pos));
    ++pos;
  }
  return OrdinalPoly::normalized(std::move(cs));
}

}  // namespace ordeval

#endif  // ORDEVAL_ORDINAL_HPP
