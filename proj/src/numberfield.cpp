#include "coxkit/numberfield.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace coxkit {

namespace {

int sgn(const Rational& q) { return sgn(q.get_num()); }

// Extended Euclid over Q[x]: returns (g, u) with u*a = g (mod b), g = gcd(a, b)
// normalized monic. Only u is needed (b is irreducible in our use).
std::pair<QPoly, QPoly> half_ext_gcd(QPoly a, QPoly b) {
  // invariants: r_prev = u_prev * a (mod b), r_cur = u * a (mod b)
  QPoly u = {Rational(1)}, u_prev = {};
  QPoly r_prev = std::move(b), r_cur = std::move(a);
  while (!r_cur.empty()) {
    auto [q, rem] = poly_divmod(r_prev, r_cur);
    QPoly u_next = poly_sub(u_prev, poly_mul(q, u));
    r_prev = std::move(r_cur);
    r_cur = std::move(rem);
    u_prev = std::move(u);
    u = std::move(u_next);
  }
  // normalize gcd monic
  Rational lead = r_prev.back();
  return {poly_scale(std::move(r_prev), 1 / lead), poly_scale(std::move(u_prev), 1 / lead)};
}

struct QInterval {
  Rational lo, hi;
};

QInterval interval_mul(const QInterval& a, const QInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

QInterval interval_eval(const QPoly& p, const Rational& lo, const Rational& hi) {
  QInterval r{Rational(0), Rational(0)};
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    r = interval_mul(r, QInterval{lo, hi});
    r.lo += p[i];
    r.hi += p[i];
  }
  return r;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain = {p, poly_derivative(p)};
  while (!chain.back().empty()) {
    QPoly next = poly_neg(poly_mod(chain[chain.size() - 2], chain.back()));
    chain.push_back(std::move(next));
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(poly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

FieldElem::FieldElem(FieldContextPtr ctx, Rational value) : ctx_(std::move(ctx)) {
  value.canonicalize();
  if (value != 0) coeffs_ = {std::move(value)};
}

FieldElem FieldElem::from_coeffs(FieldContextPtr ctx, QPoly coeffs) {
  // Equality compares coefficient vectors, so every stored rational must be
  // in canonical form; two-argument mpq_class construction does not
  // canonicalize on its own.
  for (Rational& c : coeffs) c.canonicalize();
  FieldElem e;
  e.coeffs_ = poly_mod(std::move(coeffs), ctx->minimal_polynomial());
  e.ctx_ = std::move(ctx);
  return e;
}

Rational FieldElem::rational_value() const {
  if (coeffs_.empty()) return Rational(0);
  if (coeffs_.size() > 1) throw std::logic_error("FieldElem: not a rational value");
  return coeffs_[0];
}

namespace {
const FieldContextPtr& common_context(const FieldElem& a, const FieldElem& b) {
  const auto& ca = a.context();
  const auto& cb = b.context();
  if (!ca || !cb) throw std::invalid_argument("FieldElem: operation on an element without context");
  if (ca != cb && !poly_equal(ca->minimal_polynomial(), cb->minimal_polynomial()))
    throw std::invalid_argument("FieldElem: mixing distinct number fields");
  return ca;
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  auto ctx = common_context(*this, o);
  return from_coeffs(ctx, poly_add(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  auto ctx = common_context(*this, o);
  return from_coeffs(ctx, poly_sub(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  e.coeffs_ = poly_neg(std::move(e.coeffs_));
  return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  auto ctx = common_context(*this, o);
  return from_coeffs(ctx, poly_mul(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  auto ctx = common_context(*this, o);
  if (o.is_zero()) throw std::domain_error("FieldElem: division by zero");
  auto [g, inv] = half_ext_gcd(o.coeffs_, ctx->minimal_polynomial());
  if (poly_degree(g) != 0)
    throw std::logic_error("FieldElem: non-invertible element in a field");
  return from_coeffs(ctx, poly_mul(coeffs_, inv));
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (is_zero() && o.is_zero()) return true;
  common_context(*this, o);
  return coeffs_ == o.coeffs_;
}

int FieldElem::sign() const {
  if (coeffs_.empty()) return 0;
  if (coeffs_.size() == 1) return sgn(coeffs_[0]);
  return ctx_->sign_at_primitive(coeffs_);
}

std::string FieldElem::str() const {
  if (is_rational()) return rational_value().get_str();
  return poly_to_string(coeffs_, "c");
}

bool structural_less(const FieldElem& a, const FieldElem& b) {
  const QPoly& x = a.coeffs();
  const QPoly& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

FieldContextPtr FieldContext::make(const std::set<unsigned>& finite_labels) {
  for (unsigned m : finite_labels)
    if (m < 2) throw std::invalid_argument("FieldContext: labels must be >= 2");

  unsigned level = 1;
  for (unsigned m : finite_labels)
    if (m >= 4) level = std::lcm(level, m);

  // The context depends only on the level, so contexts are shared: sweeps
  // over many small systems reuse one isolating interval per field.
  static std::map<unsigned, FieldContextPtr> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;
  }

  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->level_ = level;
  if (level == 1) {
    // Rational field; keep a degree-1 minimal polynomial so element reduction
    // leaves constants only. The primitive element is the unused value 2.
    ctx->minpoly_ = {Rational(-2), Rational(1)};
    ctx->lo_ = ctx->hi_ = 2;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(level, std::move(ctx)).first->second;
  }

  ctx->minpoly_ = two_cos_pi_minimal_poly(level);
  // Isolate the largest real root: the roots are 2cos(pi k / level) over k
  // coprime to 2*level, and k = 1 gives the largest, which is c itself.
  auto chain = sturm_chain(ctx->minpoly_);
  Rational a(-3), b(3);
  auto roots_in = [&](const Rational& x, const Rational& y) {
    return sign_variations(chain, x) - sign_variations(chain, y);
  };
  while (roots_in(a, b) > 1) {
    Rational mid = (a + b) / 2;
    if (roots_in(mid, b) >= 1)
      a = mid;
    else
      b = mid;
  }
  ctx->lo_ = a;
  ctx->hi_ = b;
  ctx->refine_interval(16);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(level, std::move(ctx)).first->second;
}

FieldElem FieldContext::primitive_element() const {
  return FieldElem::from_coeffs(shared_from_this(), {Rational(0), Rational(1)});
}

FieldElem FieldContext::rational(const Rational& q) const {
  return FieldElem(shared_from_this(), q);
}

FieldElem FieldContext::two_cos_pi_over(unsigned m) const {
  if (m == 0) throw std::invalid_argument("two_cos_pi_over: m must be finite and >= 1");
  if (m == 1) return rational(-2);
  if (m == 2) return rational(0);
  if (m == 3) return rational(1);
  if (level_ % m != 0)
    throw std::domain_error("field too small: 2cos(pi/" + std::to_string(m) +
                            ") is not in a level-" + std::to_string(level_) + " field");
  return FieldElem::from_coeffs(shared_from_this(), dickson_two_cos(level_ / m));
}

FieldElem FieldContext::form_entry(unsigned label) const {
  if (label == 0) return rational(-1);  // infinite bond
  if (label == 1) return rational(1);   // diagonal
  if (label == 2) return rational(0);
  return two_cos_pi_over(label) * rational(Rational(-1, 2));
}

int FieldContext::sign_at_primitive(const QPoly& p) const {
  if (is_rational()) {
    // Reduced elements are constants here; evaluation is exact anyway.
    return sgn(poly_eval(p, lo_));
  }
  int budget = 16;
  for (int rounds = 0; rounds < 24; ++rounds) {
    Rational lo, hi;
    {
      std::lock_guard<std::mutex> lock(mu_);
      lo = lo_;
      hi = hi_;
    }
    QInterval box = interval_eval(p, lo, hi);
    if (sgn(box.lo) > 0) return 1;
    if (sgn(box.hi) < 0) return -1;
    refine_interval(budget);
    budget *= 2;
  }
  // p is nonzero of degree below the irreducible minimal polynomial, so p(c)
  // is nonzero and the loop above must separate it from 0.
  throw std::logic_error("FieldContext: sign refinement failed to converge");
}

std::pair<Rational, Rational> FieldContext::isolating_interval() const {
  std::lock_guard<std::mutex> lock(mu_);
  return {lo_, hi_};
}

void FieldContext::refine_interval(int bisections) const {
  if (is_rational()) return;
  std::lock_guard<std::mutex> lock(mu_);
  int sign_lo = sgn(poly_eval(minpoly_, lo_));
  for (int i = 0; i < bisections; ++i) {
    Rational mid = (lo_ + hi_) / 2;
    int sm = sgn(poly_eval(minpoly_, mid));
    // minpoly is irreducible of degree >= 2, so it has no rational root.
    if (sm == sign_lo)
      lo_ = mid;
    else
      hi_ = mid;
  }
}

}  // namespace coxkit
