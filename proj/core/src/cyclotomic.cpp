#include "ramiq/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace ramiq {

namespace {

// Quotient of two integer polynomials, divisor monic; remainder must vanish.
std::vector<Integer> exact_divide(const std::vector<Integer>& num,
                                  const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer c = rem[i + den.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) fail(ErrorKind::InternalCheck, "cyclotomic polynomial division");
  return quot;
}

struct ConductorData {
  std::vector<Integer> poly;               // Phi_N, constant term first, monic
  std::vector<std::vector<Rational>> pow;  // x^k mod Phi_N for k = 0..N-1
};

std::mutex g_cache_mutex;
std::map<std::int64_t, ConductorData> g_cache;

const std::vector<Integer>& poly_locked(std::int64_t n);

ConductorData& data_locked(std::int64_t n) {
  auto it = g_cache.find(n);
  if (it != g_cache.end() && !it->second.pow.empty()) return it->second;
  poly_locked(n);
  ConductorData& d = g_cache[n];
  std::size_t deg = d.poly.size() - 1;
  d.pow.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    d.pow.push_back(cur);
    // multiply by x modulo Phi_N
    Rational top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * Rational(d.poly[i]);
  }
  return d;
}

const std::vector<Integer>& poly_locked(std::int64_t n) {
  auto it = g_cache.find(n);
  if (it != g_cache.end() && !it->second.poly.empty()) return it->second.poly;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = exact_divide(num, poly_locked(d));
  }
  auto& slot = g_cache[n];
  slot.poly = std::move(num);
  return slot.poly;
}

std::vector<Rational> power_rep(std::int64_t n, std::int64_t k) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return data_locked(n).pow[static_cast<std::size_t>(k)];
}

std::vector<Integer> phi_poly(std::int64_t n) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return poly_locked(n);
}

// Reduces a rational polynomial (any degree) modulo Phi_N.
std::vector<Rational> reduce_mod(std::vector<Rational> p, const std::vector<Integer>& phi) {
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    Rational c = p[i];
    if (c == 0) continue;
    p[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) p[i - deg + j] -= c * Rational(phi[j]);
  }
  p.resize(deg, Rational(0));
  return p;
}

void check_conductor(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "conductor must be positive");
  if (n > Cyclotomic::kConductorCap)
    fail(ErrorKind::ConductorOverflow,
         "conductor " + std::to_string(n) + " exceeds cap " +
             std::to_string(Cyclotomic::kConductorCap));
}

std::int64_t lcm_conductor(std::int64_t a, std::int64_t b) {
  std::int64_t l = std::lcm(a, b);
  check_conductor(l);
  return l;
}

}  // namespace

std::int64_t Cyclotomic::euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& Cyclotomic::cyclotomic_polynomial(std::int64_t n) {
  check_conductor(n);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return poly_locked(n);
}

Cyclotomic::Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  coeffs_.resize(1);
  conductor_ = 1;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  check_conductor(n);
  k %= n;
  if (k < 0) k += n;
  return Cyclotomic(n, power_rep(n, k));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

Rational Cyclotomic::to_rational() const {
  if (conductor_ != 1)
    fail(ErrorKind::NotRational, "value lies outside Q: " + str());
  return coeffs_[0];
}

// Coefficients of *this in the power basis at conductor m (m a multiple of
// conductor_), without re-normalizing; operators add or multiply in this basis.
std::vector<Rational> Cyclotomic::lifted_coeffs(std::int64_t m) const {
  if (m == conductor_) return coeffs_;
  if (m % conductor_ != 0)
    fail(ErrorKind::InvalidInput, "lift target is not a multiple of the conductor");
  std::int64_t step = m / conductor_;
  std::vector<Rational> out(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto rep = power_rep(m, static_cast<std::int64_t>(i) * step % m);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * rep[j];
  }
  return out;
}

Cyclotomic Cyclotomic::lifted_to(std::int64_t m) const {
  check_conductor(m);
  if (m == conductor_) return *this;
  return Cyclotomic(m, lifted_coeffs(m));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  std::int64_t l = lcm_conductor(conductor_, o.conductor_);
  std::vector<Rational> a = lifted_coeffs(l), b = o.lifted_coeffs(l);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return Cyclotomic(l, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  std::int64_t l = lcm_conductor(conductor_, o.conductor_);
  std::vector<Rational> a = lifted_coeffs(l), b = o.lifted_coeffs(l);
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return Cyclotomic(l, reduce_mod(std::move(prod), phi_poly(l)));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto rep = power_rep(conductor_, (conductor_ - static_cast<std::int64_t>(i)) % conductor_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * rep[j];
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve (sum_j x_j zeta^j) * a = 1 in the power basis.
  std::size_t deg = coeffs_.size();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (std::size_t j = 0; j < deg; ++j) {
    Cyclotomic col = *this * Cyclotomic(conductor_, power_rep(conductor_, static_cast<std::int64_t>(j)));
    std::vector<Rational> lifted = col.lifted_coeffs(conductor_);
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = lifted[i];
  }
  m[0][deg] = 1;
  // Gaussian elimination.
  for (std::size_t col = 0, row = 0; col < deg && row < deg; ++col) {
    std::size_t piv = row;
    while (piv < deg && m[piv][col] == 0) ++piv;
    if (piv == deg) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= deg; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  std::vector<Rational> x(deg, Rational(0));
  for (std::size_t col = 0, row = 0; col < deg; ++col) {
    if (row < deg && m[row][col] == 1) x[col] = m[row++][deg];
  }
  Cyclotomic result(conductor_, std::move(x));
  if (!((*this) * result).is_one())
    fail(ErrorKind::InternalCheck, "inverse verification failed");
  return result;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Cyclotomic acc(Rational(1));
  while (n > 0) {
    if (n & 1) acc *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  std::int64_t l = lcm_conductor(conductor_, o.conductor_);
  return lifted_coeffs(l) == o.lifted_coeffs(l);
}

std::int64_t Cyclotomic::root_order() const {
  std::int64_t bound = 2 * conductor_;
  Cyclotomic acc = *this;
  for (std::int64_t t = 1; t <= bound; ++t) {
    if (acc.is_one()) return t;
    acc *= *this;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (conductor_ == 1) return to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string term;
    if (i == 0) {
      term = to_string(coeffs_[i]);
    } else {
      std::string base = "ζ" + std::to_string(conductor_) +
                         (i == 1 ? "" : "^" + std::to_string(i));
      if (coeffs_[i] == 1) term = base;
      else if (coeffs_[i] == -1) term = "-" + base;
      else term = to_string(coeffs_[i]) + "*" + base;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace ramiq
