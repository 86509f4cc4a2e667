/**
 * @file poly.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gradalg {

Poly::Poly(const Field& f, const Vec& coeffs) : field_(f), coeffs_(coeffs) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  normalize();
}

Poly Poly::one(const Field& f) { return Poly(f, Vec{Scalar::one(f)}); }

Poly Poly::x(const Field& f) { return Poly(f, Vec{Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), Vec{c}); }

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Scalar Poly::leading() const {
  if (is_zero()) throw Error(ErrorKind::StructureError, "leading coefficient of zero");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(field_, o.field_);
  Vec c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(field_, c);
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(field_, o.field_);
  Vec c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Poly(field_, c);
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(field_, o.field_);
  if (is_zero() || o.is_zero()) return Poly(field_);
  Vec c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(field_, c);
}

Poly Poly::operator*(const Scalar& c) const {
  Vec v = coeffs_;
  for (auto& x : v) x *= c;
  return Poly(field_, v);
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
  require_same_field(field_, divisor.field_);
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly rem = *this;
  Vec q(std::max<std::size_t>(coeffs_.size(), 1), Scalar::zero(field_));
  Scalar lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = rem.degree() - divisor.degree();
    Scalar c = rem.coeffs_.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] -= c * divisor.coeffs_[i];
    rem.normalize();
  }
  return PolyDivMod{Poly(field_, q), rem};
}

Poly Poly::operator%(const Poly& o) const { return divmod(o).rem; }
Poly Poly::operator/(const Poly& o) const { return divmod(o).quot; }

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  Vec c(coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Scalar::from_int(field_, static_cast<long>(i));
  return Poly(field_, c);
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i].to_string();
    if (i > 0) {
      if (!coeffs_[i].is_one()) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
  const Field& k = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(k), u1 = Poly::zero(k);
  Poly v0 = Poly::zero(k), v1 = Poly::one(k);
  while (!r1.is_zero()) {
    PolyDivMod dm = r0.divmod(r1);
    Poly r2 = dm.rem;
    Poly u2 = u0 - dm.quot * u1;
    Poly v2 = v0 - dm.quot * v1;
    r0 = r1;
    r1 = r2;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return PolyExtGcd{r0, u0, v0};
  Scalar c = r0.leading().inverse();
  return PolyExtGcd{r0 * c, u0 * c, v0 * c};
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly result = Poly::one(base.field());
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result % m;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

Poly characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly::one(f);
  // Berkowitz: iterate principal blocks, composing Toeplitz transforms.
  // c holds the coefficients of the current charpoly, highest degree first.
  Vec c{Scalar::one(f), -m.at(0, 0)};
  for (std::size_t r = 2; r <= n; ++r) {
    // row R = m[r-1][0..r-2], column S = m[0..r-2][r-1], corner a
    Vec entries;  // [1, -a, -R S, -R M S, -R M^2 S, ...] of length r+1
    entries.push_back(Scalar::one(f));
    entries.push_back(-m.at(r - 1, r - 1));
    Vec s(r - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < r - 1; ++i) s[i] = m.at(i, r - 1);
    for (std::size_t k = 0; k + 2 <= r; ++k) {
      // entries[k+2] = -R (M^k S); s currently holds M^k S
      Scalar dot = Scalar::zero(f);
      for (std::size_t i = 0; i < r - 1; ++i) dot += m.at(r - 1, i) * s[i];
      entries.push_back(-dot);
      if (k + 3 <= r) {
        Vec next(r - 1, Scalar::zero(f));
        for (std::size_t i = 0; i < r - 1; ++i)
          for (std::size_t j = 0; j < r - 1; ++j)
            if (!m.at(i, j).is_zero()) next[i] += m.at(i, j) * s[j];
        s = next;
      }
    }
    // multiply the Toeplitz lower-triangular matrix built from entries by c
    Vec next(r + 1, Scalar::zero(f));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        next[i] += entries[i - j] * c[j];
    c = next;
  }
  // c is highest-first; Poly wants lowest-first
  Vec coeffs(c.rbegin(), c.rend());
  return Poly(f, coeffs);
}

namespace {

// f is a p-th power iff f' == 0 over F_p; the p-th root over the prime field
// keeps coefficients as-is (Frobenius fixes F_p) at indices divisible by p.
Poly pth_root(const Poly& f) {
  const std::uint32_t p = f.field().characteristic();
  Vec c;
  for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i));
  return Poly(f.field(), c);
}

void merge_part(std::vector<SquarefreePart>& parts, const Poly& factor, std::size_t mult) {
  if (factor.degree() < 1) return;
  for (auto& p : parts) {
    if (p.multiplicity == mult) {
      p.factor = p.factor * factor;
      return;
    }
  }
  parts.push_back(SquarefreePart{factor, mult});
}

void squarefree_rec(const Poly& f, std::size_t outer_mult, std::vector<SquarefreePart>& out) {
  // Yun's algorithm, with the char-p "derivative vanishes" escape.
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    if (f.degree() <= 0) return;
    // char p and f = g(x^p) = (p-th root)^p
    squarefree_rec(pth_root(f), outer_mult * f.field().characteristic(), out);
    return;
  }
  Poly a = poly_gcd(f, fp);
  Poly w = f / a;
  std::size_t i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, a);
    Poly z = w / y;
    if (z.degree() > 0) merge_part(out, z.monic(), i * outer_mult);
    w = y;
    a = a / y;
    ++i;
  }
  if (a.degree() > 0) squarefree_rec(a, outer_mult, out);
}

// Equal-degree splitting: f squarefree, every irreducible factor of degree d.
void edf(const Poly& f, std::size_t d, SplitMix64& rng, std::vector<Poly>& out) {
  const Field& k = f.field();
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const std::uint32_t p = k.characteristic();
  while (true) {
    // random poly of degree < deg f
    Vec c;
    for (int i = 0; i < f.degree(); ++i)
      c.push_back(Scalar::from_int(k, static_cast<long>(rng.below(p))));
    Poly a(k, c);
    if (a.degree() < 1 && d > 1) continue;
    if (a.is_zero()) continue;
    Poly g = poly_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
    Poly b(k);
    if (p == 2) {
      // trace map T(a) = a + a^2 + ... + a^{2^{d-1}} mod f
      Poly t = a % f, term = a % f;
      for (std::size_t i = 1; i < d; ++i) {
        term = (term * term) % f;
        t = t + term;
      }
      b = t;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = pow_mod(a, e, f) - Poly::one(k);
    }
    Poly g2 = poly_gcd(b, f);
    if (g2.degree() > 0 && g2.degree() < f.degree()) {
      edf(g2, d, rng, out);
      edf(f / g2, d, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of squarefree monic f: (factor-product, degree).
std::vector<std::pair<Poly, std::size_t>> ddf(const Poly& f) {
  const Field& k = f.field();
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly rest = f;
  Poly h = Poly::x(k) % rest;  // will hold x^{p^i} mod rest
  mpz_class p = k.characteristic();
  std::size_t i = 0;
  while (rest.degree() > 0) {
    ++i;
    if (rest.degree() < static_cast<int>(2 * i)) {
      out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
      break;
    }
    h = pow_mod(h, p, rest);
    Poly g = poly_gcd(h - Poly::x(k), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  return out;
}

// Bounded divisor list of |n| (positive divisors), in increasing order.
std::vector<mpz_class> bounded_divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  const unsigned long kTrialBound = 1000000;
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class m = n;
  for (unsigned long d = 2; d <= kTrialBound && m > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        m /= static_cast<long>(d);
        ++e;
      }
      fac.emplace_back(d, e);
    }
    if (mpz_class(d) * d > m) break;
  }
  if (m > 1) fac.emplace_back(m, 1);  // residual (prime or unfactored large part)
  divs.push_back(1);
  for (const auto& [q, e] : fac) {
    std::vector<mpz_class> next;
    mpz_class qe = 1;
    for (unsigned i = 0; i <= e; ++i) {
      for (const auto& d : divs) next.push_back(d * qe);
      qe *= q;
    }
    divs = next;
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

}  // namespace

std::vector<SquarefreePart> squarefree_decomposition(const Poly& f) {
  std::vector<SquarefreePart> parts;
  if (f.degree() < 1) return parts;
  squarefree_rec(f.monic(), 1, parts);
  std::sort(parts.begin(), parts.end(), [](const SquarefreePart& a, const SquarefreePart& b) {
    return a.multiplicity < b.multiplicity;
  });
  return parts;
}

std::vector<PolyFactor> factor_over_prime_field(const Poly& f, std::uint64_t seed) {
  if (f.field().is_rationals())
    throw Error(ErrorKind::StructureError, "factor_over_prime_field needs F_p input");
  if (f.degree() < 1) return {};
  SplitMix64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<PolyFactor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [prod, d] : ddf(part.factor)) {
      std::vector<Poly> irr;
      edf(prod, d, rng, irr);
      std::sort(irr.begin(), irr.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
          long ra = a.coeff(i).residue(), rb = b.coeff(i).residue();
          if (ra != rb) return ra < rb;
        }
        return false;
      });
      for (const auto& g : irr) out.push_back(PolyFactor{g, part.multiplicity});
    }
  }
  return out;
}

std::vector<RationalRoot> rational_roots(const Poly& f) {
  std::vector<RationalRoot> out;
  if (f.degree() < 1) return out;
  const Field& k = f.field();
  if (!k.is_rationals()) {
    // small fields: just scan for roots directly when p is small, else use DDF
    const std::uint32_t p = k.characteristic();
    if (p <= 4096) {
      for (std::uint32_t r = 0; r < p; ++r) {
        Scalar s = Scalar::from_int(k, r);
        if (!f.eval(s).is_zero()) continue;
        std::size_t mult = 0;
        Poly g = f, lin(k, Vec{-s, Scalar::one(k)});
        while (!g.is_zero() && g.eval(s).is_zero()) {
          g = g / lin;
          ++mult;
        }
        out.push_back(RationalRoot{s, mult});
      }
    } else {
      for (const auto& fac : factor_over_prime_field(f))
        if (fac.factor.degree() == 1)
          out.push_back(RationalRoot{-fac.factor.coeff(0), fac.multiplicity});
    }
    return out;
  }
  // Over Q: clear denominators, then candidate roots u/v with u | a_0, v | a_n.
  Poly g = f;
  if (g.coeff(0).is_zero()) {
    std::size_t mult = 0;
    Poly xp = Poly::x(k);
    while (g.degree() >= 1 && g.coeff(0).is_zero()) {
      g = g / xp;
      ++mult;
    }
    out.push_back(RationalRoot{Scalar::zero(k), mult});
  }
  if (g.degree() < 1) return out;
  mpz_class den = 1;
  for (int i = 0; i <= g.degree(); ++i) den = lcm(den, g.coeff(i).rational().get_den());
  mpq_class c0 = g.coeff(0).rational() * den;
  mpq_class cn = g.coeff(g.degree()).rational() * den;
  mpz_class a0 = c0.get_num();
  mpz_class an = cn.get_num();
  for (const auto& u : bounded_divisors(a0)) {
    for (const auto& v : bounded_divisors(an)) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        mpq_class cand(u * sign, v);
        cand.canonicalize();
        Scalar s = Scalar::from_mpq(k, cand);
        if (!g.eval(s).is_zero()) continue;
        std::size_t mult = 0;
        Poly lin(k, Vec{-s, Scalar::one(k)});
        while (!g.is_zero() && g.eval(s).is_zero() && g.degree() >= 1) {
          g = g / lin;
          ++mult;
        }
        if (mult) out.push_back(RationalRoot{s, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) {
    return a.root.rational() < b.root.rational();
  });
  return out;
}

bool is_irreducible(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (!f.field().is_rationals()) {
    auto facs = factor_over_prime_field(f, seed);
    return facs.size() == 1 && facs[0].multiplicity == 1;
  }
  auto sqf = squarefree_decomposition(f);
  if (sqf.size() != 1 || sqf[0].multiplicity != 1) return false;
  if (!rational_roots(f).empty()) return false;
  if (f.degree() <= 3) return true;  // no root and squarefree => irreducible for deg 2,3
  throw Error(ErrorKind::StructureError,
              "irreducibility over Q undecided for degree " + std::to_string(f.degree()));
}

}  // namespace gradalg
