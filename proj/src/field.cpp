#include "hopfalg/field.hpp"

#include <cctype>
#include <functional>

namespace hopf {

namespace {

using i128 = __int128;
constexpr int64_t kMax = INT64_MAX;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t gcd64(int64_t a, int64_t b) {
  uint64_t x = a < 0 ? -static_cast<uint64_t>(a) : a;
  uint64_t y = b < 0 ? -static_cast<uint64_t>(b) : b;
  while (y != 0) {
    uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<int64_t>(x);
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero();
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  i128 g = gcd128(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
  } else {
    r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
    r.big_->canonicalize();
  }
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n != INT64_MIN && d != INT64_MIN) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  std::string str(s);
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + str);
  if (q.get_den() == 0) throw DivisionByZero();
  return from_mpq(q);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  return std::hash<int64_t>()(num_) * 1000003u ^ std::hash<int64_t>()(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<int64_t>(s);
        return r;
      }
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) {
        Rational r;
        r.num_ = static_cast<int64_t>(p);
        return r;
      }
    }
    int64_t g1 = gcd64(a.num_, b.den_);
    int64_t g2 = gcd64(b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<int64_t>(n);
      r.den_ = static_cast<int64_t>(d);
      return r;
    }
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!a.big_ && !b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

// ---------------------------------------------------------------------------

namespace {

struct QXi {
  Rational a, b;  // a + b*xi
};

inline QXi qmul(const Rational& p0, const Rational& p1, const Rational& r0, const Rational& r1) {
  if (p1.is_zero() && r1.is_zero()) return {p0 * r0, Rational()};
  Rational p1r1 = p1 * r1;
  return {p0 * r0 - p1r1, p0 * r1 + p1 * r0 + p1r1};
}

}  // namespace

Scalar Scalar::xi_pow(long long k) {
  static const Scalar table[6] = {Scalar(1), Scalar(0, 1, 0, 0), Scalar(-1, 1, 0, 0), Scalar(-1),
                                  Scalar(0, -1, 0, 0), Scalar(1, -1, 0, 0)};
  return table[((k % 6) + 6) % 6];
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  for (int i = 0; i < 4; ++i)
    if (!b.c_[i].is_zero()) c_[i] = c_[i] + b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  for (int i = 0; i < 4; ++i)
    if (!b.c_[i].is_zero()) c_[i] = c_[i] - b.c_[i];
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  const bool xq = x.in_qxi();
  const bool yq = y.in_qxi();
  if (xq && yq) {
    QXi p = qmul(x.c_[0], x.c_[1], y.c_[0], y.c_[1]);
    return Scalar(std::move(p.a), std::move(p.b), Rational(), Rational());
  }
  // x = P + Q t, y = R + T t; xy = PR + QT(2 - xi) + (PT + QR) t
  QXi pr = qmul(x.c_[0], x.c_[1], y.c_[0], y.c_[1]);
  QXi qt = qmul(x.c_[2], x.c_[3], y.c_[2], y.c_[3]);
  QXi pt = qmul(x.c_[0], x.c_[1], y.c_[2], y.c_[3]);
  QXi qr = qmul(x.c_[2], x.c_[3], y.c_[0], y.c_[1]);
  // (2 - xi)(u0 + u1 xi) = (2 u0 + u1) + (u1 - u0) xi
  Rational s0 = qt.a + qt.a + qt.b;
  Rational s1 = qt.b - qt.a;
  return Scalar(pr.a + s0, pr.b + s1, pt.a + qr.a, pt.b + qr.b);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // x = P + Q t, x^{-1} = (P - Q t) / (P^2 - Q^2 (2 - xi))
  QXi p2 = qmul(c_[0], c_[1], c_[0], c_[1]);
  QXi q2 = qmul(c_[2], c_[3], c_[2], c_[3]);
  Rational n0 = p2.a - (q2.a + q2.a + q2.b);
  Rational n1 = p2.b - (q2.b - q2.a);
  // (n0 + n1 xi)^{-1} = (n0 + n1 - n1 xi) / (n0^2 + n0 n1 + n1^2)
  Rational norm = n0 * n0 + n0 * n1 + n1 * n1;
  Rational i0 = (n0 + n1) / norm;
  Rational i1 = -n1 / norm;
  Scalar conj(c_[0], c_[1], -c_[2], -c_[3]);
  return conj * Scalar(i0, i1, Rational(), Rational());
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] == b.c_[i]) continue;
    return a.c_[i] < b.c_[i];
  }
  return false;
}

std::size_t Scalar::hash() const {
  std::size_t h = 0;
  for (int i = 0; i < 4; ++i) h = h * 0x9e3779b97f4a7c15ULL + c_[i].hash();
  return h;
}

std::string Scalar::to_string() const {
  static const char* mono[4] = {"", "x", "t", "x*t"};
  std::string out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    const Rational& r = c_[i];
    if (r.is_zero()) continue;
    bool neg = r.sign() < 0;
    Rational a = neg ? -r : r;
    std::string body;
    if (i == 0) {
      body = a.to_string();
    } else if (a.is_one()) {
      body = mono[i];
    } else {
      body = a.to_string() + "*" + mono[i];
    }
    if (first) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return first ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long long e = std::stoll(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }
  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (eat_word("xi") || eat('x')) return Scalar::xi();
    if (eat_word("theta") || eat('t')) return Scalar::theta();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected character");
    return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view s) { return ScalarParser(s).run(); }

std::optional<int> order_of_root_of_unity(const Scalar& x, int bound) {
  if (x.is_zero()) return std::nullopt;
  Scalar p = x;
  for (int n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p = p * x;
  }
  return std::nullopt;
}

}  // namespace hopf
