#ifndef CBNEF_RATIONAL_HPP
#define CBNEF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cbnef {

/// Exact arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator.  All
/// arithmetic is exact; there is no rounding anywhere in this library.
/// Serializes as "p/q", or just "p" when the denominator is 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int value) : v_(static_cast<long>(value)) {}
  Rat(long value) : v_(value) {}
  Rat(long num, long den) : v_(num) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ /= mpq_class(den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rat from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0 || v.get_den() == 0)
      throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    v.canonicalize();
    return Rat(v);
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  /// The integer value, when the denominator is 1 and it fits in long.
  long to_long() const {
    if (!is_integer()) throw std::domain_error("Rat: not an integer");
    if (!v_.get_num().fits_slong_p())
      throw std::domain_error("Rat: integer out of long range");
    return v_.get_num().get_si();
  }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

}  // namespace cbnef

#endif
