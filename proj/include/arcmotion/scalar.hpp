#ifndef ARCMOTION_SCALAR_HPP
#define ARCMOTION_SCALAR_HPP

/*
 * Scalar layer.
 *
 * Every geometric routine in this library is templated on a scalar type S,
 * which is either plain `double` or `BigFloat`, a thin RAII wrapper around
 * MPFR with an explicit binary mantissa size.  Mixing precisions follows the
 * widest-operand rule: the result of a binary operation carries
 * max(precision(a), precision(b)) bits.  Fresh values (literals, conversions
 * from double/int) are created at the thread's current default precision.
 *
 * Comparison tolerances are derived from the mantissa size:
 *   double    -> 1e-12
 *   BigFloat  -> 2^-(bits-12)
 */

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>

namespace arcmotion {

enum class PrecisionKind { Hardware, Big };

struct Precision {
  PrecisionKind kind = PrecisionKind::Hardware;
  int bits = 53;

  static Precision hardware() { return {PrecisionKind::Hardware, 53}; }
  static Precision big(int bits) { return {PrecisionKind::Big, bits}; }
  bool operator==(const Precision &) const = default;
};

class BigFloat {
 public:
  /* thread-wide precision used for values created from double/int */
  static mpfr_prec_t &default_precision() {
    static thread_local mpfr_prec_t prec = 256;
    return prec;
  }

  BigFloat() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
  BigFloat(double x) { mpfr_init2(v_, default_precision()); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(int x) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(long x) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, x, MPFR_RNDN); }

  explicit BigFloat(const std::string &s, mpfr_prec_t prec = 0) {
    mpfr_init2(v_, prec > 0 ? prec : default_precision());
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: unparsable literal: " + s);
  }

  BigFloat(const BigFloat &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat &&o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat &operator=(const BigFloat &o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat &operator=(BigFloat &&o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat with_precision(mpfr_prec_t prec) {
    BigFloat r;
    mpfr_set_prec(r.v_, prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  /* decimal string with enough digits for exact binary round-trip */
  std::string str() const {
    int digits = (int)std::ceil(precision() * 0.30102999566398119521) + 2;
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend BigFloat operator+(const BigFloat &a, const BigFloat &b) { return binop(mpfr_add, a, b); }
  friend BigFloat operator-(const BigFloat &a, const BigFloat &b) { return binop(mpfr_sub, a, b); }
  friend BigFloat operator*(const BigFloat &a, const BigFloat &b) { return binop(mpfr_mul, a, b); }
  friend BigFloat operator/(const BigFloat &a, const BigFloat &b) { return binop(mpfr_div, a, b); }
  BigFloat operator-() const {
    BigFloat r = with_precision(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat &operator+=(const BigFloat &b) { *this = *this + b; return *this; }
  BigFloat &operator-=(const BigFloat &b) { *this = *this - b; return *this; }
  BigFloat &operator*=(const BigFloat &b) { *this = *this * b; return *this; }
  BigFloat &operator/=(const BigFloat &b) { *this = *this / b; return *this; }

  friend bool operator==(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigFloat sqrt(const BigFloat &a) { return unop(mpfr_sqrt, a); }
  friend BigFloat sin(const BigFloat &a) { return unop(mpfr_sin, a); }
  friend BigFloat cos(const BigFloat &a) { return unop(mpfr_cos, a); }
  friend BigFloat tan(const BigFloat &a) { return unop(mpfr_tan, a); }
  friend BigFloat asin(const BigFloat &a) { return unop(mpfr_asin, a); }
  friend BigFloat acos(const BigFloat &a) { return unop(mpfr_acos, a); }
  friend BigFloat atan(const BigFloat &a) { return unop(mpfr_atan, a); }
  friend BigFloat log(const BigFloat &a) { return unop(mpfr_log, a); }
  friend BigFloat exp(const BigFloat &a) { return unop(mpfr_exp, a); }
  friend BigFloat abs(const BigFloat &a) { return unop(mpfr_abs, a); }
  friend BigFloat floor(const BigFloat &a) {
    BigFloat r = with_precision(a.precision());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend BigFloat atan2(const BigFloat &y, const BigFloat &x) { return binop(mpfr_atan2, y, x); }
  friend BigFloat pow(const BigFloat &a, const BigFloat &b) { return binop(mpfr_pow, a, b); }
  friend BigFloat ldexp(const BigFloat &a, long e) {
    BigFloat r = with_precision(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend BigFloat fmin(const BigFloat &a, const BigFloat &b) { return b < a ? b : a; }
  friend BigFloat fmax(const BigFloat &a, const BigFloat &b) { return a < b ? b : a; }
  friend bool isfinite(const BigFloat &a) { return mpfr_number_p(a.v_) != 0; }

 private:
  typedef int (*mpfr_unary)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  typedef int (*mpfr_binary)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  static BigFloat unop(mpfr_unary f, const BigFloat &a) {
    BigFloat r = with_precision(a.precision());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat binop(mpfr_binary f, const BigFloat &a, const BigFloat &b) {
    BigFloat r = with_precision(std::max(a.precision(), b.precision()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

/* scoped default-precision switch */
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision() = bits;
  }
  ~PrecisionGuard() { BigFloat::default_precision() = saved_; }
  PrecisionGuard(const PrecisionGuard &) = delete;
  PrecisionGuard &operator=(const PrecisionGuard &) = delete;

 private:
  mpfr_prec_t saved_;
};

inline BigFloat pi_value(mpfr_prec_t prec) {
  BigFloat r = BigFloat::with_precision(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

template <typename S> struct ScalarOps;

template <> struct ScalarOps<double> {
  static double from_double(double x) { return x; }
  static double pi() { return 3.14159265358979323846264338327950288; }
  static double tolerance(const double &) { return 1e-12; }
  static double to_double(const double &x) { return x; }
  static std::string str(const double &x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  }
  static double parse(const std::string &s) { return std::strtod(s.c_str(), nullptr); }
};

template <> struct ScalarOps<BigFloat> {
  static BigFloat from_double(double x) { return BigFloat(x); }
  static BigFloat pi() { return pi_value(BigFloat::default_precision()); }
  /* tolerance follows the value's own mantissa size */
  static BigFloat tolerance(const BigFloat &x) { return ldexp(BigFloat(1.0), -(long)(x.precision() - 12)); }
  static double to_double(const BigFloat &x) { return x.to_double(); }
  static std::string str(const BigFloat &x) { return x.str(); }
  static BigFloat parse(const std::string &s) { return BigFloat(s); }
};

template <typename S> S scalar_pi() { return ScalarOps<S>::pi(); }
template <typename S> S scalar_from_double(double x) { return ScalarOps<S>::from_double(x); }
template <typename S> double scalar_to_double(const S &x) { return ScalarOps<S>::to_double(x); }
template <typename S> std::string scalar_str(const S &x) { return ScalarOps<S>::str(x); }
template <typename S> S scalar_parse(const std::string &s) { return ScalarOps<S>::parse(s); }
template <typename S> S tolerance_for(const S &x) { return ScalarOps<S>::tolerance(x); }

template <typename S> bool near(const S &a, const S &b, const S &tol) {
  using std::abs;
  return abs(a - b) <= tol;
}

template <typename S> S fmax_s(const S &a, const S &b) { return a < b ? b : a; }
template <typename S> S fmin_s(const S &a, const S &b) { return b < a ? b : a; }

}  // namespace arcmotion

#endif
