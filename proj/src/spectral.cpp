#include "ppgrowth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::InvalidArgument, "matrix rows must have equal length");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::pow(unsigned long exponent) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v >= 0; });
}

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
    : IntPolynomial(std::vector<mpz_class>(ascending.begin(), ascending.end())) {}

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    mpz_class c = p.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial charpoly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    mpz_class t = (a * m).trace();
    // Exact by Newton's identities.
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -t;
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------- roots

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPolynomial& p) { return QPoly(p.coefficients().begin(), p.coefficients().end()); }

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Returns quotient; a becomes the remainder.
QPoly divide(QPoly& a, const QPoly& b) {
  QPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    divide(a, b);
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

QPoly squarefree_part(const QPoly& p) {
  QPoly g = gcd(p, derivative(p));
  QPoly a = p;
  QPoly q = divide(a, g);
  make_monic(q);
  return q;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QPoly r = chain[chain.size() - 2];
    divide(r, chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

mpq_class cauchy_bound(const QPoly& p) {
  mpq_class m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, mpq_class(abs(p[i] / p.back())));
  return m + 1;
}

mpq_class power_of_ten(long e) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), t) : mpq_class(t);
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree_part(to_q(p)));
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

RootApproximation dominant_root(const IntPolynomial& p, int digits) {
  if (p.degree() < 1) throw Error(ErrorKind::NoRealRoot, "constant polynomial");
  if (digits < 1) throw Error(ErrorKind::InvalidArgument, "digits must be positive");
  const QPoly q = squarefree_part(to_q(p));
  const auto chain = sturm_chain(q);
  const mpq_class bound = cauchy_bound(q);
  const int v_top = sign_variations(chain, bound);
  auto roots_above = [&](const mpq_class& x) { return sign_variations(chain, x) - v_top; };

  mpq_class lo = -bound;
  mpq_class hi = bound;
  if (roots_above(lo) == 0) throw Error(ErrorKind::NoRealRoot, "no real root");

  // Isolate: keep the largest root in (lo, hi] and nothing above hi.
  while (roots_above(lo) - roots_above(hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (roots_above(mid) - roots_above(hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  RootApproximation out;
  auto exact = [&](const mpq_class& x) {
    out.value = out.lo = out.hi = x;
    out.radius = 0;
    return out;
  };
  if (eval(q, hi) == 0) return exact(hi);

  const int s_hi = sgn(eval(q, hi));
  auto bisect_once = [&]() -> bool {
    mpq_class mid = (lo + hi) / 2;
    int s = sgn(eval(q, mid));
    if (s == 0) {
      lo = hi = mid;
      return false;
    }
    (s == s_hi ? hi : lo) = mid;
    return true;
  };
  // A few steps so the magnitude estimate below is meaningful.
  for (int i = 0; i < 8 && lo != hi; ++i) bisect_once();
  if (lo == hi) return exact(lo);

  double approx = std::max(std::fabs(lo.get_d()), std::fabs(hi.get_d()));
  long int_digits = approx < 1.0 ? 1 : static_cast<long>(std::floor(std::log10(approx))) + 1;
  const mpq_class tol = power_of_ten(int_digits - digits);  // target full width

  // Bisect to a coarse width, then let Newton jump the rest.
  const mpq_class coarse = tol * 1024;
  while (hi - lo > coarse) {
    if (!bisect_once()) return exact(lo);
  }
  const QPoly dq = derivative(q);
  for (int iter = 0; iter < 8 && hi - lo > tol; ++iter) {
    mpq_class mid = (lo + hi) / 2;
    mpq_class slope = eval(dq, mid);
    if (slope == 0) break;
    mpq_class x = mid - eval(q, mid) / slope;
    mpq_class eps = tol / 8;
    mpq_class a = x - eps, b = x + eps;
    if (a <= lo || b >= hi) break;
    int sa = sgn(eval(q, a));
    int sb = sgn(eval(q, b));
    if (sa == 0) return exact(a);
    if (sb == 0) return exact(b);
    if (sa == sb) break;
    lo = a;
    hi = b;
  }
  while (hi - lo > tol) {
    if (!bisect_once()) return exact(lo);
  }
  out.lo = lo;
  out.hi = hi;
  out.value = (lo + hi) / 2;
  out.radius = (hi - lo) / 2;
  return out;
}

std::string RootApproximation::decimal(int places, bool round) const {
  mpq_class scaled = value * power_of_ten(places);
  if (round) scaled += mpq_class(1, 2);
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool negative = z < 0;
  std::string digits = mpz_class(abs(z)).get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (negative ? "-" : "") + digits;
}

std::string RootApproximation::to_string() const {
  if (radius == 0) return value.get_str() + " ± 0";
  double r = radius.get_d();
  int places = std::max(1, static_cast<int>(std::ceil(-std::log10(r))) + 1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", r);
  return decimal(places, true) + " ± " + buf;
}

// ---------------------------------------------------------------- Perron root

namespace {

using BoolMatrix = std::vector<std::vector<char>>;

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix c(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
  return c;
}

}  // namespace

bool is_primitive(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  BoolMatrix base(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = a(i, j) > 0;
  // Wielandt: primitive iff A^((n-1)^2+1) is strictly positive.
  unsigned long e = (n - 1) * (n - 1) + 1;
  BoolMatrix result;
  bool have = false;
  while (e > 0) {
    if (e & 1UL) {
      result = have ? bool_mul(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = bool_mul(base, base);
  }
  for (const auto& row : result)
    for (char v : row)
      if (!v) return false;
  return true;
}

namespace {

// Some strongly connected class of the support graph has period > 1.
bool has_periodic_class(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) > 0) {
        succ[i].push_back(j);
        pred[j].push_back(i);
      }
  // Kosaraju.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < succ[v].size()) {
        std::size_t u = succ[v][k++];
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back({u, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<long> comp(n, -1);
  long ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : pred[v])
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  // Period of each class from BFS levels.
  std::vector<long> level(n, -1);
  std::vector<long> period(static_cast<std::size_t>(ncomp), 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (level[s] >= 0) continue;
    level[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t v = queue[q];
      for (std::size_t u : succ[v]) {
        if (comp[u] != comp[v]) continue;
        if (level[u] < 0) {
          level[u] = level[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u : succ[v])
      if (comp[u] == comp[v]) {
        auto& g = period[static_cast<std::size_t>(comp[v])];
        g = std::gcd(g, std::labs(level[v] + 1 - level[u]));
      }
  for (long g : period)
    if (g > 1) return true;
  return false;
}

}  // namespace

double power_iteration_estimate(const IntMatrix& a, int iterations) {
  if (!a.is_nonnegative() || a.size() == 0 || has_periodic_class(a)) {
    throw Error(ErrorKind::NotPrimitive, "support graph has a periodic class");
  }
  const std::size_t n = a.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_d();
  std::vector<long double> v(n, 1.0L / static_cast<long double>(n)), w(n);
  long double lambda = 0;
  for (int it = 0; it < std::max(1, iterations); ++it) {
    long double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * v[j];
      w[i] = s;
      total += s;
    }
    if (total == 0) throw Error(ErrorKind::NotPrimitive, "matrix is nilpotent");
    // v has unit 1-norm, so the new norm is the ratio.
    lambda = total;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / total;
  }
  return static_cast<double>(lambda);
}

}  // namespace ppgrowth
