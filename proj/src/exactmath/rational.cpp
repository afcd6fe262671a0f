#include "nodal4/rational.hpp"

#include "nodal4/error.hpp"
#include "nodal4/gaussian.hpp"

#include <cctype>

namespace nodal4 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::DegenerateSeed: return "DegenerateSeed";
    case ErrorKind::DivisionFailure: return "DivisionFailure";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::ImaginaryNodePresent: return "ImaginaryNodePresent";
    case ErrorKind::IrrationalNodes: return "IrrationalNodes";
    case ErrorKind::DegenerateNodes: return "DegenerateNodes";
    case ErrorKind::DifferentClass: return "DifferentClass";
    case ErrorKind::PathObstruction: return "PathObstruction";
    case ErrorKind::ImplicitizationFailure: return "ImplicitizationFailure";
    case ErrorKind::UnstableResolution: return "UnstableResolution";
    case ErrorKind::StillSingular: return "StillSingular";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::Parse, "not a rational: '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorKind::Parse, "bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot), frac = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part[0] == '-';
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac))
      throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Integer num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, text));
}

Rational floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Rational c = ceil(lo);
  if (c <= hi) return c;
  Rational f = floor(lo);
  Rational a = lo - f, b = hi - f;  // 0 < a <= b < 1
  Rational inner = simplest_between(1 / b, 1 / a);
  Rational r = f + 1 / inner;
  return r;
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  return {re / n, -im / n};
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
  os << to_string(g.re);
  if (sgn(g.im) != 0) os << (sgn(g.im) > 0 ? "+" : "") << to_string(g.im) << "i";
  return os;
}

}  // namespace nodal4
