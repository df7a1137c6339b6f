#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppgrowth {

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix pow(unsigned long exponent) const;
  mpz_class trace() const;
  bool is_nonnegative() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> data_;
};

// Coefficients in ascending degree; trailing zeros are stripped.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  mpz_class operator()(const mpz_class& x) const;
  mpq_class operator()(const mpq_class& x) const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  IntPolynomial derivative() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Descending-degree text, e.g. "x^4 - 3x^3 + 3x".
std::string to_string(const IntPolynomial& p, const std::string& var = "x");

// det(xI - A), computed by Faddeev-LeVerrier.
IntPolynomial charpoly(const IntMatrix& a);

struct RootApproximation {
  mpq_class value;
  mpq_class radius;  // |value - root| <= radius
  mpq_class lo;      // exactly one real root lies in [lo, hi]
  mpq_class hi;

  double to_double() const { return value.get_d(); }
  // Fixed-point rendering of value with the given number of fractional digits.
  // Truncates toward minus infinity unless round is set.
  std::string decimal(int places, bool round = false) const;
  // "value ± radius" with enough digits to show the radius.
  std::string to_string() const;
};

inline constexpr int kDefaultDigits = 12;

// Largest real root isolated with Sturm sequences, refined by bisection and a
// final Newton step. radius <= 10^(1 + floor(log10|root|) - digits).
RootApproximation dominant_root(const IntPolynomial& p, int digits = kDefaultDigits);

// Number of distinct real roots in (lo, hi].
int count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

// Support-graph primitivity by boolean powers up to the Wielandt exponent.
bool is_primitive(const IntMatrix& a);

// Perron root by normalized power iteration. Throws NotPrimitive when a
// strongly connected class of the support graph is periodic, since the norm
// ratios then need not converge.
double power_iteration_estimate(const IntMatrix& a, int iterations);

}  // namespace ppgrowth
