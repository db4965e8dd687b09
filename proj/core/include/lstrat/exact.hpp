#pragma once

// Scalar and vector types shared by every module: arbitrary-precision
// rationals for geometry, checked 64-bit integers for lattice points.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstrat {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

enum class ErrorCode {
  kDimensionMismatch,
  kPrecondition,
  kGuard,
  kOverflow,
  kParse,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);
void require(bool condition, ErrorCode code, const std::string& what);

// Overflow-checked integer arithmetic.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);
Int mod_floor(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

Int to_int(const mpz_class& z);
Int floor_of(const Rational& q);
Int ceil_of(const Rational& q);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, Int k);
IntVec negate(const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& a);
IntVec zeros(std::size_t dim);
IntVec unit(std::size_t dim, std::size_t i);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& a);

RatVec to_rational(const IntVec& a);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const IntVec& b);
bool is_zero(const RatVec& a);

// Positive multiple of `a` with coprime integer entries, together with the
// factor: a = factor * result.
struct PrimitiveScaling {
  IntVec vector;
  Rational factor;
};
PrimitiveScaling primitive_scaling(const RatVec& a);

IntVec mat_vec(const IntMatrix& rows, const IntVec& x);  // rows * x
IntVec vec_mat(const IntVec& u, const IntMatrix& rows);  // sum u_i rows_i

std::string to_string(const IntVec& v);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

// Orders by value of a functional, then lexicographically.
struct FunctionalOrder {
  IntVec functional;
  bool operator()(const IntVec& a, const IntVec& b) const;
};

}  // namespace lstrat
