#include "lstrat/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace lstrat {

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "integer overflow in multiplication");
  return r;
}

Int floor_div(Int a, Int b) {
  require(b != 0, ErrorCode::kInternal, "division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(Int a, Int b) { return checked_sub(a, checked_mul(floor_div(a, b), b)); }

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  return std::gcd(a, b);
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

Int to_int(const mpz_class& z) {
  require(z.fits_slong_p(), ErrorCode::kOverflow, "integer does not fit in 64 bits");
  return z.get_si();
}

Int floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int(r);
}

Int ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int(r);
}

IntVec add(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec scale(const IntVec& a, Int k) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

IntVec negate(const IntVec& a) { return scale(a, -1); }

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

IntVec zeros(std::size_t dim) { return IntVec(dim, 0); }

IntVec unit(std::size_t dim, std::size_t i) {
  IntVec e(dim, 0);
  e[i] = 1;
  return e;
}

IntVec primitive(const IntVec& a) {
  Int g = 0;
  for (Int x : a) g = gcd(g, x);
  if (g <= 1) return a;
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

RatVec to_rational(const IntVec& a) {
  RatVec r;
  r.reserve(a.size());
  for (Int x : a) r.emplace_back(static_cast<long>(x));
  return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * Rational(static_cast<long>(b[i]));
  }
  return s;
}

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

PrimitiveScaling primitive_scaling(const RatVec& a) {
  mpz_class den = 1;
  for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> nums;
  nums.reserve(a.size());
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_class n = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    nums.push_back(n);
  }
  PrimitiveScaling out;
  if (g == 0) {
    out.vector.assign(a.size(), 0);
    out.factor = 1;
    return out;
  }
  out.vector.reserve(a.size());
  for (const auto& n : nums) out.vector.push_back(to_int(n / g));
  out.factor = Rational(g, den);
  out.factor.canonicalize();
  return out;
}

IntVec mat_vec(const IntMatrix& rows, const IntVec& x) {
  IntVec r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(dot(row, x));
  return r;
}

IntVec vec_mat(const IntVec& u, const IntMatrix& rows) {
  require(u.size() == rows.size(), ErrorCode::kDimensionMismatch, "coefficient count mismatch");
  if (rows.empty()) return {};
  IntVec r(rows.front().size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = checked_add(r[j], checked_mul(u[i], rows[i][j]));
  }
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  require(!text.empty(), ErrorCode::kParse, "empty rational");
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  require(valid_int(num, true) && valid_int(den, false), ErrorCode::kParse,
          "malformed rational '" + text + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class d(den);
  require(d != 0, ErrorCode::kParse, "zero denominator in '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int x : v) {
    h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool FunctionalOrder::operator()(const IntVec& a, const IntVec& b) const {
  Int fa = dot(functional, a);
  Int fb = dot(functional, b);
  if (fa != fb) return fa < fb;
  return a < b;
}

}  // namespace lstrat
