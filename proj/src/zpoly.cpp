#include "algentropy/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace algentropy::zpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Primes just above 2^62, generated on demand and shared.
u64 modular_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= index) {
    mpz_class next;
    if (primes.empty()) {
      next = 1;
      next <<= 62;
    } else {
      next = static_cast<unsigned long>(primes.back());
    }
    mpz_nextprime(next.get_mpz_t(), next.get_mpz_t());
    primes.push_back(next.get_ui());
  }
  return primes[index];
}

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim_mod(r);
  return r;
}

void make_monic(ModPoly& a, u64 p) {
  if (a.empty()) return;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

// a <- a mod b, b monic
void rem_monic(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        u64 t = mulmod(c, b[j], p);
        u64& dst = a[shift + j];
        dst = dst >= t ? dst - t : dst + (p - t);
      }
    }
    a.pop_back();
    trim_mod(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    make_monic(b, p);
    rem_monic(a, b, p);
    std::swap(a, b);
  }
  make_monic(a, p);
  return a;
}

Integer lc(const ZPoly& a) { return a.back(); }

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

namespace {

ZPoly mul_naive(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

std::size_t max_bits(const ZPoly& a) {
  std::size_t m = 0;
  for (const auto& c : a) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

// Kronecker substitution: sum a_i 2^(64 L i) as one integer.
Integer pack(const ZPoly& a, std::size_t limbs) {
  const std::size_t total = a.size() * limbs;
  std::vector<mp_limb_t> pos(total, 0), neg(total, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpz_srcptr c = a[i].get_mpz_t();
    const std::size_t n = mpz_size(c);
    auto& dst = mpz_sgn(c) < 0 ? neg : pos;
    const mp_limb_t* src = mpz_limbs_read(c);
    std::copy(src, src + n, dst.begin() + static_cast<std::ptrdiff_t>(i * limbs));
  }
  auto to_mpz = [total](const std::vector<mp_limb_t>& v) {
    Integer r;
    std::size_t n = total;
    while (n > 0 && v[n - 1] == 0) --n;
    if (n == 0) return r;
    mp_limb_t* dst = mpz_limbs_write(r.get_mpz_t(), static_cast<mp_size_t>(n));
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), dst);
    mpz_limbs_finish(r.get_mpz_t(), static_cast<mp_size_t>(n));
    return r;
  };
  return to_mpz(pos) - to_mpz(neg);
}

// Inverse of pack for signed digits |c| < 2^(64 L - 1).
ZPoly unpack(const Integer& w, std::size_t limbs, std::size_t count) {
  ZPoly out(count);
  const int sign = sgn(w);
  if (sign == 0) return {};
  const mpz_srcptr wz = w.get_mpz_t();
  const std::size_t n = mpz_size(wz);
  const mp_limb_t* src = mpz_limbs_read(wz);
  Integer full = 1, half = 1;
  full <<= 64 * limbs;
  half <<= 64 * limbs - 1;
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t begin = i * limbs;
    std::size_t len = begin >= n ? 0 : std::min(limbs, n - begin);
    while (len > 0 && src[begin + len - 1] == 0) --len;
    Integer c;
    if (len > 0) {
      mpz_t view;
      mpz_roinit_n(view, src + begin, static_cast<mp_size_t>(len));
      c = Integer(view);
    }
    c += carry;
    if (c >= half) {
      c -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = sign < 0 ? Integer(-c) : c;
  }
  trim(out);
  return out;
}

std::size_t limbs_for(std::size_t bits) { return (bits + 63) / 64; }

constexpr std::size_t kKroneckerThreshold = 12;

bool divexact_naive(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  const std::size_t db = b.size() - 1;
  ZPoly r(a);
  ZPoly q(a.size() - db);
  const mpz_srcptr lead = b.back().get_mpz_t();
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lead)) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lead);
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j < db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    r[i] = 0;
    q[shift] = std::move(c);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

}  // namespace

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t m = std::min(a.size(), b.size());
  if (m < kKroneckerThreshold) return mul_naive(a, b);
  std::size_t log_m = 0;
  while ((std::size_t{1} << log_m) < m) ++log_m;
  const std::size_t limbs = limbs_for(max_bits(a) + max_bits(b) + log_m + 2);
  const Integer w = pack(a, limbs) * pack(b, limbs);
  return unpack(w, limbs, a.size() + b.size() - 1);
}

ZPoly scale(const ZPoly& a, const Integer& s) {
  if (s == 0) return {};
  ZPoly r(a);
  for (auto& c : r) c *= s;
  return r;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& p) {
  if (p.empty()) return {};
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  const std::size_t nq = a.size() - b.size() + 1;
  if (std::min(b.size(), nq) < kKroneckerThreshold) return divexact_naive(a, b, quotient);
  // Integer division of the packed values, certified by multiplying back.
  // The slot width is a guess at the quotient's coefficient size; a miss
  // shows up in the check and the width is doubled.
  std::size_t bits = max_bits(a) + 66;
  for (int attempt = 0; attempt < 3; ++attempt, bits *= 2) {
    const std::size_t limbs = limbs_for(bits);
    const Integer pa = pack(a, limbs), pb = pack(b, limbs);
    if (!mpz_divisible_p(pa.get_mpz_t(), pb.get_mpz_t())) return false;
    Integer pq;
    mpz_divexact(pq.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    ZPoly q = unpack(pq, limbs, nq);
    if (mul(b, q) == a) {
      quotient = std::move(q);
      return true;
    }
  }
  return divexact_naive(a, b, quotient);
}

ZPoly gcd_modular(const ZPoly& a, const ZPoly& b) {
  ZPoly qa, qb;
  return gcd_cofactors(a, b, qa, qb);
}

ZPoly gcd_cofactors(const ZPoly& a0, const ZPoly& b0, ZPoly& qa0, ZPoly& qb0) {
  if (a0.empty() && b0.empty()) throw std::domain_error("gcd(0, 0) is undefined");
  if (a0.empty() || b0.empty()) {
    ZPoly g = primitive(a0.empty() ? b0 : a0);
    qa0.clear();
    qb0.clear();
    divexact(a0.empty() ? b0 : a0, g, a0.empty() ? qb0 : qa0);
    return g;
  }
  const Integer ca = content(a0), cb = content(b0);
  const ZPoly a = primitive(a0);
  const ZPoly b = primitive(b0);
  // a0 = sign * ca * a, so a0 / g = (a0 / a) * (a / g).
  auto finish = [&](ZPoly g, const ZPoly& qa, const ZPoly& qb) {
    qa0 = scale(qa, a0.back() < 0 ? Integer(-ca) : ca);
    qb0 = scale(qb, b0.back() < 0 ? Integer(-cb) : cb);
    return g;
  };
  if (a.size() == 1 || b.size() == 1) return finish(ZPoly{Integer(1)}, a, b);

  const Integer g = gcd(lc(a), lc(b));
  int current_degree = -1;
  ZPoly acc;  // CRT image of g * gcd / lc(gcd), entries in [0, modulus)
  Integer modulus;
  std::optional<ZPoly> previous;

  for (std::size_t k = 0;; ++k) {
    const u64 p = modular_prime(k);
    if (mpz_fdiv_ui(lc(a).get_mpz_t(), p) == 0 || mpz_fdiv_ui(lc(b).get_mpz_t(), p) == 0) continue;
    ModPoly gp = gcd_mod(reduce(a, p), reduce(b, p), p);
    const int d = static_cast<int>(gp.size()) - 1;
    if (d == 0) return finish(ZPoly{Integer(1)}, a, b);
    const u64 gmod = mpz_fdiv_ui(g.get_mpz_t(), p);
    for (auto& c : gp) c = mulmod(c, gmod, p);

    if (current_degree < 0 || d < current_degree) {
      // Either the first image or every earlier prime was unlucky.
      current_degree = d;
      acc.assign(gp.size(), Integer(0));
      for (std::size_t i = 0; i < gp.size(); ++i) acc[i] = static_cast<unsigned long>(gp[i]);
      modulus = static_cast<unsigned long>(p);
      previous.reset();
      continue;
    }
    if (d > current_degree) continue;

    const u64 m_inv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < gp.size(); ++i) {
      const u64 hi = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      const u64 diff = gp[i] >= hi ? gp[i] - hi : gp[i] + (p - hi);
      const u64 t = mulmod(diff, m_inv, p);
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    }
    modulus *= static_cast<unsigned long>(p);

    const Integer half = modulus / 2;
    ZPoly symmetric(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) symmetric[i] = acc[i] > half ? Integer(acc[i] - modulus) : acc[i];

    if (previous && *previous == symmetric) {
      ZPoly candidate = primitive(symmetric);
      ZPoly qa, qb;
      if (divexact(b, candidate, qb) && divexact(a, candidate, qa)) return finish(candidate, qa, qb);
    }
    previous = std::move(symmetric);
  }
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a);
  const int db = degree(b);
  const int delta = degree(a) - db;
  int steps = 0;
  const Integer& lb = b.back();
  while (!r.empty() && degree(r) >= db) {
    const Integer lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
    trim(r);
    ++steps;
  }
  Integer factor;
  mpz_pow_ui(factor.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
  return scale(r, factor);
}

}  // namespace

ZPoly gcd_subresultant(const ZPoly& a0, const ZPoly& b0) {
  if (a0.empty()) return primitive(b0);
  if (b0.empty()) return primitive(a0);
  ZPoly a = primitive(a0);
  ZPoly b = primitive(b0);
  if (degree(a) < degree(b)) std::swap(a, b);
  Integer g = 1, h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive(b);
    if (degree(r) == 0) return ZPoly{Integer(1)};
    Integer divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta - 1); unchanged when delta = 0
    if (delta > 0) {
      Integer gd, hd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
    }
  }
}

}  // namespace algentropy::zpoly
