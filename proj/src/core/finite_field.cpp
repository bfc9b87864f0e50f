#include "belyi/finite_field.hpp"

#include <algorithm>
#include <numeric>

#include "belyi/error.hpp"

namespace belyi {

namespace {

using Fp = std::uint64_t;
using PolyP = std::vector<Fp>;  // ascending, trimmed

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t deg(const PolyP& a) { return a.empty() ? 0 : a.size() - 1; }

Fp pow_mod(Fp base, Fp e, Fp p) {
  Fp r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

Fp inv_mod(Fp a, Fp p) { return pow_mod(a, p - 2, p); }

PolyP poly_mod(PolyP a, const PolyP& m, Fp p) {
  const Fp lead_inv = inv_mod(m.back(), p);
  while (!a.empty() && a.size() >= m.size()) {
    const Fp factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + p - factor * m[i] % p) % p;
    trim(a);
  }
  return a;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, Fp p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

PolyP poly_sub(PolyP a, const PolyP& b, Fp p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

PolyP make_monic(PolyP a, Fp p) {
  if (a.empty()) return a;
  const Fp inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

PolyP poly_gcd(PolyP a, PolyP b, Fp p) {
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

PolyP poly_div(PolyP a, const PolyP& m, Fp p) {
  PolyP q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  const Fp lead_inv = inv_mod(m.back(), p);
  while (!a.empty() && a.size() >= m.size()) {
    const Fp factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + p - factor * m[i] % p) % p;
    trim(a);
  }
  trim(q);
  return q;
}

// base^e mod m
PolyP poly_pow_mod(PolyP base, Fp e, const PolyP& m, Fp p) {
  PolyP r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PolyP derivative(const PolyP& a, Fp p) {
  PolyP d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
  trim(d);
  return d;
}

}  // namespace

std::size_t DegreePattern::total() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

DegreePattern factor_degrees_mod_p(const IntPoly& F, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw Error(ErrorCode::InvalidArgument, "prime too large");
  if (F.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial");
  const auto sp = static_cast<std::int64_t>(p);
  PolyP f;
  for (std::int64_t c : F) f.push_back(static_cast<Fp>(((c % sp) + sp) % sp));
  if (f.size() != F.size() || f.back() == 0)
    throw Error(ErrorCode::InvalidArgument, "p divides the leading coefficient");
  f = make_monic(std::move(f), p);

  DegreePattern out;
  out.prime = p;
  if (deg(poly_gcd(f, derivative(f, p), p)) > 0) {
    out.squarefree = false;
    return out;
  }

  PolyP rest = f;
  PolyP h{0, 1};  // x^(p^d) mod rest, starting at d = 0
  for (std::size_t d = 1; 2 * d <= deg(rest); ++d) {
    h = poly_pow_mod(h, p, rest, p);
    PolyP g = poly_gcd(rest, poly_sub(h, PolyP{0, 1}, p), p);
    if (deg(g) > 0) {
      for (std::size_t k = 0; k < deg(g) / d; ++k) out.degrees.push_back(d);
      rest = poly_div(rest, g, p);
      h = poly_mod(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.degrees.push_back(deg(rest));
  std::sort(out.degrees.begin(), out.degrees.end(), std::greater<>());
  return out;
}

const IntPoly& f_integral_coefficients() {
  static const IntPoly F = [] {
    IntPoly c(13, 0);
    std::int64_t c0 = 1;
    for (int i = 0; i < 12; ++i) c0 *= 11;
    c[0] = c0;
    c[11] = -12;
    c[12] = 1;
    return c;
  }();
  return F;
}

bool is_transposition_pattern(const std::vector<std::size_t>& degrees) noexcept {
  std::size_t twos = 0;
  for (std::size_t d : degrees) {
    if (d % 2 == 0) {
      if (d != 2) return false;
      ++twos;
    }
  }
  return twos == 1;
}

std::vector<std::string> EvidenceCertificate::missing() const {
  std::vector<std::string> out;
  if (!transitive) out.emplace_back("witness_transitive");
  if (!long_cycle) out.emplace_back("witness_11cycle");
  if (!transposition) out.emplace_back("witness_transposition");
  return out;
}

EvidenceCertificate scan_s12_evidence(std::uint64_t max_prime) {
  if (max_prime < 2) throw Error(ErrorCode::InvalidArgument, "max_prime must be >= 2");
  EvidenceCertificate cert;
  cert.max_prime = max_prime;
  const IntPoly& F = f_integral_coefficients();
  for (std::uint64_t p = 2; p <= max_prime && !cert.complete(); ++p) {
    if (!is_prime(p)) continue;
    ++cert.primes_scanned;
    DegreePattern pat = factor_degrees_mod_p(F, p);
    if (!pat.squarefree) continue;
    const auto& d = pat.degrees;
    if (!cert.transitive && d == std::vector<std::size_t>{12}) cert.transitive = Witness{p, d};
    if (!cert.long_cycle && d == std::vector<std::size_t>{11, 1}) cert.long_cycle = Witness{p, d};
    if (!cert.transposition && is_transposition_pattern(d)) cert.transposition = Witness{p, d};
  }
  return cert;
}

EvidenceCertificate s12_evidence(std::uint64_t max_prime) {
  EvidenceCertificate cert = scan_s12_evidence(max_prime);
  if (!cert.complete()) {
    std::string msg = "no witness below " + std::to_string(max_prime) + " for:";
    for (const auto& m : cert.missing()) msg += " " + m;
    throw Error(ErrorCode::EvidenceIncomplete, msg);
  }
  return cert;
}

}  // namespace belyi
