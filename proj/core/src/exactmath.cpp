#include "vortex/exactmath.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace vortex {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = den < 0 ? mp::cpp_rational(BigInt(-num), BigInt(-den)) : mp::cpp_rational(num, den);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

BigInt Rational::to_integer() const {
  if (!is_integer()) throw InvalidInput("not an integer: " + to_string());
  return numerator();
}

int Rational::to_int() const {
  const BigInt n = to_integer();
  if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min()) {
    throw InvalidInput("integer out of range: " + to_string());
  }
  return static_cast<int>(n);
}

BigInt Rational::floor() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  const BigInt f = floor();
  return is_integer() ? f : f + 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  }
  BigInt v{std::string(digits)};
  return (!s.empty() && s.front() == '-') ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int power) {
  if (power < 0) throw InvalidInput("negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool IntPolynomial::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

NotDivisible::NotDivisible(IntPolynomial remainder)
    : Error("not divisible: remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}

IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return {};
  const int dq = q.degree();
  const BigInt lead = q.coefficient(dq);
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  if (p.degree() < dq) throw NotDivisible(p);
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
  for (int k = p.degree() - dq; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + dq)];
    if (top == 0) continue;
    if (top % lead != 0) throw NotDivisible(IntPolynomial(rem));
    const BigInt c = top / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= c * q.coefficient(j);
  }
  IntPolynomial r(std::move(rem));
  if (!r.is_zero()) throw NotDivisible(std::move(r));
  return IntPolynomial(std::move(quot));
}

bool is_palindromic(const IntPolynomial& p, int degree) {
  if (degree < p.degree()) {
    throw InvalidInput("palindrome degree " + std::to_string(degree) + " below polynomial degree " +
                       std::to_string(p.degree()));
  }
  for (int i = 0; i <= degree; ++i) {
    if (p.coefficient(i) != p.coefficient(degree - i)) return false;
  }
  return true;
}

}  // namespace vortex
