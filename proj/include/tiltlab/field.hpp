#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tiltlab/error.hpp"

namespace tiltlab {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// Field traits. Every scalar type used by the library specialises this.
template <class K>
struct FieldTraits;

template <class K>
concept Field = requires(const K& a, const K& b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { FieldTraits<K>::characteristic } -> std::convertible_to<unsigned>;
  { FieldTraits<K>::name() } -> std::convertible_to<std::string>;
  { FieldTraits<K>::format(a) } -> std::convertible_to<std::string>;
};

template <class K>
inline bool is_zero(const K& x) {
  return x == K(0);
}

inline Rational parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  auto slash = t.find('/');
  auto check = [&](const std::string& part) {
    std::size_t i = (part.size() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw Error(ErrorKind::ParseError, "bad scalar '" + t + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw Error(ErrorKind::ParseError, "bad scalar '" + t + "'");
  };
  if (slash == std::string::npos) {
    check(t);
    return Rational(BigInt(t[0] == '+' ? t.substr(1) : t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  check(num);
  check(den);
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + t + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

template <>
struct FieldTraits<Rational> {
  static constexpr unsigned characteristic = 0;
  static std::string name() { return "Q"; }
  static std::string format(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }
  static Rational parse(std::string_view s) { return parse_rational(s); }
  static bool is_plain_positive(const Rational& x) { return x > 0; }
  static std::vector<Rational> fourth_roots_of_unity() { return {Rational(1), Rational(-1)}; }
};

/// Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int r) : re_(r) {}
  GaussianRational(Rational r, Rational i = 0) : re_(std::move(r)), im_(std::move(i)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(i)");
    GaussianRational c{b.re_ / n, -b.im_ / n};
    return a * c;
  }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0}, im_{0};
};

template <>
struct FieldTraits<GaussianRational> {
  static constexpr unsigned characteristic = 0;
  static std::string name() { return "Q(i)"; }
  static std::string format(const GaussianRational& x) {
    auto r = FieldTraits<Rational>::format(x.re());
    if (x.im() == 0) return r;
    std::string im;
    if (x.im() == 1) im = "i";
    else if (x.im() == -1) im = "-i";
    else im = FieldTraits<Rational>::format(x.im()) + "i";
    if (x.re() == 0) return im;
    return "(" + r + (im[0] == '-' ? "" : "+") + im + ")";
  }
  // Accepts "a", "bi", "i", "-i", "(a+bi)", "(a-bi)".
  static GaussianRational parse(std::string_view s) {
    std::string t(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
    if (t.back() != 'i') return GaussianRational(parse_rational(t));
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size() - 1; k > 0; --k)
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') {
        split = k;
        break;
      }
    std::string re = split == std::string::npos ? "0" : t.substr(0, split);
    std::string im = t.substr(split == std::string::npos ? 0 : split, t.size() - 1 - (split == std::string::npos ? 0 : split));
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return GaussianRational(parse_rational(re), parse_rational(im));
  }
  static bool is_plain_positive(const GaussianRational& x) { return x.im() == 0 && x.re() > 0; }
  static std::vector<GaussianRational> fourth_roots_of_unity() {
    return {GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1)};
  }
};

/// Prime field F_P.
template <unsigned P>
class Zp {
  static_assert(P >= 2 && P < 65536, "prime must fit comfortably in 32 bits");

 public:
  Zp() = default;
  Zp(long long v) : v_(static_cast<unsigned>(((v % (long long)P) + P) % P)) {}

  unsigned value() const { return v_; }

  friend Zp operator+(Zp a, Zp b) { return Zp::raw((a.v_ + b.v_) % P); }
  friend Zp operator-(Zp a, Zp b) { return Zp::raw((a.v_ + P - b.v_) % P); }
  friend Zp operator*(Zp a, Zp b) { return Zp::raw(static_cast<unsigned>((1ull * a.v_ * b.v_) % P)); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return Zp::raw((P - v_) % P); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const {
    if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in F_" + std::to_string(P));
    Zp r(1), b = *this;
    for (unsigned e = P - 2; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }

 private:
  static Zp raw(unsigned v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  unsigned v_ = 0;
};

template <unsigned P>
struct FieldTraits<Zp<P>> {
  static constexpr unsigned characteristic = P;
  static std::string name() { return "F" + std::to_string(P); }
  static std::string format(const Zp<P>& x) { return std::to_string(x.value()); }
  static Zp<P> parse(std::string_view s) {
    Rational q = parse_rational(s);
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    long long nm = static_cast<long long>(n % P), dm = static_cast<long long>(d % P);
    return Zp<P>(nm) / Zp<P>(dm);
  }
  static bool is_plain_positive(const Zp<P>&) { return true; }
  static std::vector<Zp<P>> fourth_roots_of_unity() {
    std::vector<Zp<P>> out{Zp<P>(1), Zp<P>(-1)};
    for (unsigned x = 2; x + 1 < P; ++x) {
      Zp<P> z(x);
      if (z * z == Zp<P>(-1)) out.push_back(z);
    }
    return out;
  }
};

template <class K>
std::string format_scalar(const K& x) {
  return FieldTraits<K>::format(x);
}

template <class K>
K parse_scalar(std::string_view s) {
  return FieldTraits<K>::parse(s);
}

template <class K>
K power(K b, unsigned long long e) {
  K r(1);
  for (; e; e >>= 1, b = b * b)
    if (e & 1) r = r * b;
  return r;
}

}  // namespace tiltlab
