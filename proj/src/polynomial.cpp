#include "coxkit/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace coxkit {

QPoly poly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

QPoly poly_neg(QPoly p) {
  for (auto& c : p) c = -c;
  return p;
}

QPoly poly_scale(QPoly p, const Rational& c) {
  if (c == 0) return {};
  for (auto& x : p) x *= c;
  return p;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  QPoly rem = a;
  // The remainder must come back trimmed on every path; an untrimmed input
  // would otherwise pass through verbatim and break the callers' invariant
  // that a stored coefficient vector has a nonzero leading entry.
  if (a.size() < b.size()) return {{}, poly_trim(std::move(rem))};
  QPoly quo(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / lead;
    int shift = i - (static_cast<int>(b.size()) - 1);
    quo[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  return {poly_trim(std::move(quo)), poly_trim(std::move(rem))};
}

QPoly poly_mod(const QPoly& a, const QPoly& b) { return poly_divmod(a, b).second; }

Rational poly_eval(const QPoly& p, const Rational& x) {
  Rational r(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

QPoly poly_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return r;
}

bool poly_equal(const QPoly& a, const QPoly& b) { return poly_trim(a) == poly_trim(b); }

std::string poly_to_string(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: index must be >= 1");
  static std::map<unsigned, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
  // recursion never re-enters the lock.
  for (unsigned k = 1; k <= n; ++k) {
    if (cache.count(k) || n % k != 0) continue;
    QPoly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto [q, r] = poly_divmod(num, cache.at(d));
      if (!r.empty()) throw std::logic_error("cyclotomic: non-exact division");
      num = std::move(q);
    }
    cache.emplace(k, std::move(num));
  }
  return cache.at(n);
}

QPoly dickson_two_cos(unsigned k) {
  QPoly prev = {Rational(2)};     // D_0
  if (k == 0) return prev;
  QPoly cur = {Rational(0), Rational(1)};  // D_1 = x
  for (unsigned i = 2; i <= k; ++i) {
    QPoly next = poly_sub(poly_mul(QPoly{Rational(0), Rational(1)}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QPoly two_cos_pi_minimal_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("two_cos_pi_minimal_poly: m must be >= 1");
  if (m == 1) return {Rational(2), Rational(1)};  // 2 cos(pi) = -2
  if (m == 2) return {Rational(0), Rational(1)};  // 2 cos(pi/2) = 0
  // Phi_{2m} is palindromic of even degree d; z^{-d/2} Phi_{2m}(z) rewrites as a
  // polynomial in x = z + 1/z through the D_k basis.
  QPoly phi = cyclotomic(2 * m);
  int d = poly_degree(phi);
  if (d <= 0 || d % 2 != 0) throw std::logic_error("two_cos_pi_minimal_poly: unexpected degree");
  int h = d / 2;
  QPoly psi = poly_scale(QPoly{Rational(1)}, phi[h]);
  for (int k = 1; k <= h; ++k)
    psi = poly_add(psi, poly_scale(dickson_two_cos(static_cast<unsigned>(k)), phi[h + k]));
  return psi;
}

}  // namespace coxkit
