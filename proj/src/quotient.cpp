#include "qcong/quotient.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "qcong/error.hpp"

namespace qcong {

const QPoly& phi_q(long n, int k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, int>, std::unique_ptr<QPoly>> table;
  {
    std::shared_lock lock(mutex);
    auto it = table.find({n, k});
    if (it != table.end()) return *it->second;
  }
  auto value = std::make_unique<QPoly>(cyclotomic_power(n, k));
  std::unique_lock lock(mutex);
  auto [it, inserted] = table.try_emplace({n, k}, std::move(value));
  return *it->second;
}

QuotientElem::QuotientElem(long n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "quotient ring needs n >= 1, k >= 1");
}

QuotientElem::QuotientElem(long n, int k, const QPoly& p) : QuotientElem(n, k) {
  normalize(p, 0);
}

void QuotientElem::normalize(QPoly p, int base_val) {
  val_ = kInfinite;
  unit_ = QPoly();
  if (base_val >= k_) return;
  p = mod(p, phi_q(n_, k_ - base_val));
  const QPoly& phi = phi_q(n_, 1);
  int v = base_val;
  while (v < k_) {
    if (p.is_zero()) return;
    QDivRem qr = divrem(p, phi);
    if (!qr.rem.is_zero()) break;
    p = std::move(qr.quot);
    ++v;
  }
  if (v >= k_) return;
  val_ = v;
  unit_ = v == base_val ? std::move(p) : mod(p, phi_q(n_, k_ - v));
}

void QuotientElem::require_same_ring(const QuotientElem& o) const {
  if (n_ != o.n_ || k_ != o.k_) {
    throw Error(ErrorKind::MismatchedModulus,
                "(n,k)=(" + std::to_string(n_) + "," + std::to_string(k_) + ") vs (" +
                    std::to_string(o.n_) + "," + std::to_string(o.k_) + ")");
  }
}

QuotientElem QuotientElem::one(long n, int k) {
  return QuotientElem(n, k, QPoly(std::vector<Rational>{Rational(1)}));
}

QuotientElem QuotientElem::q_power(long n, int k, long e) {
  if (e < 0 && k == 1) {
    // q^n = 1 mod Phi_n: valid only for k = 1.
    long r = e % n;
    if (r < 0) r += n;
    return q_power(n, k, r);
  }
  const QPoly& m = phi_q(n, k);
  QPoly base;
  if (e >= 0) {
    base = QPoly(LaurentPoly::monomial(1, 1));
  } else {
    // Phi^k = c0 + q P with c0 = +-1, so q^{-1} = -c0 P.
    const auto& c = m.coeffs();
    std::vector<Rational> p(c.begin() + 1, c.end());
    base = QPoly(std::move(p));
    base *= -c[0];
    e = -e;
  }
  QPoly acc(std::vector<Rational>{Rational(1)});
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) acc = mod(acc * base, m);
    e >>= 1;
    if (e > 0) base = mod(base * base, m);
  }
  return QuotientElem(n, k, acc);
}

QuotientElem& QuotientElem::operator+=(const QuotientElem& o) {
  require_same_ring(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int base = std::min(val_, o.val_);
  auto lifted = [&](const QuotientElem& x) {
    QPoly p = x.unit_;
    for (int i = base; i < x.val_; ++i) p = p * phi_q(n_, 1);
    return p;
  };
  normalize(lifted(*this) + lifted(o), base);
  return *this;
}

QuotientElem QuotientElem::operator-() const {
  QuotientElem r = *this;
  r.unit_ *= Rational(-1);
  return r;
}

QuotientElem& QuotientElem::operator-=(const QuotientElem& o) { return *this += -o; }

QuotientElem& QuotientElem::operator*=(const QuotientElem& o) {
  require_same_ring(o);
  if (is_zero() || o.is_zero() || val_ + o.val_ >= k_) {
    val_ = kInfinite;
    unit_ = QPoly();
    return *this;
  }
  // Product of two units stays a unit mod Phi_n.
  val_ += o.val_;
  unit_ = mod(unit_ * o.unit_, phi_q(n_, k_ - val_));
  return *this;
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
  a.require_same_ring(b);
  return a.val_ == b.val_ && a.unit_ == b.unit_;
}

QuotientElem QuotientElem::inverse() const {
  if (val_ != 0) {
    throw Error(ErrorKind::DenominatorNotCoprime,
                "element is divisible by Phi_" + std::to_string(n_));
  }
  QPoly w = inverse_mod(unit_, phi_q(n_, 1));
  // Newton lifting w <- w (2 - u w) doubles the Phi_n-adic precision.
  int prec = 1;
  while (prec < k_) {
    prec = std::min(2 * prec, k_);
    const QPoly& m = phi_q(n_, prec);
    QPoly uw = mod(unit_ * w, m);
    QPoly two_minus(std::vector<Rational>{Rational(2)});
    two_minus -= uw;
    w = mod(w * two_minus, m);
  }
  return QuotientElem(n_, k_, w);
}

QPoly QuotientElem::representative() const {
  if (is_zero()) return {};
  QPoly p = unit_;
  for (int i = 0; i < val_; ++i) p = p * phi_q(n_, 1);
  return mod(p, phi_q(n_, k_));
}

LaurentPoly QuotientElem::canonical_residue() const { return representative().primitive_part(); }

QuotientElem quotient_embed(const LaurentPoly& f, long n, int k) {
  if (f.is_zero()) return QuotientElem(n, k);
  LaurentPoly g = f.shifted(-f.min_exp());
  g = divrem(g, cyclotomic_power(n, k)).rem;
  QuotientElem out(n, k, QPoly(g));
  if (f.min_exp() != 0) out *= QuotientElem::q_power(n, k, f.min_exp());
  return out;
}

QuotientElem quotient_embed(const RatPoly& f, long n, int k) {
  QuotientElem den = quotient_embed(f.den, n, k);
  if (!den.is_unit()) {
    throw Error(ErrorKind::DenominatorNotCoprime,
                "Phi_" + std::to_string(n) + " divides " + f.den.to_string());
  }
  return quotient_embed(f.num, n, k) * den.inverse();
}

bool congruent(const QuotientElem& a, const QuotientElem& b) { return a == b; }

}  // namespace qcong
