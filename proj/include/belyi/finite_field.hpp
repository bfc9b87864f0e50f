#pragma once

// Factorization degree patterns of integer polynomials modulo small primes,
// and the Dedekind-style evidence that Gal(F) is the full symmetric group.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace belyi {

// Ascending integer coefficients.
using IntPoly = std::vector<std::int64_t>;

struct DegreePattern {
  std::uint64_t prime = 0;
  std::vector<std::size_t> degrees;  // descending
  bool squarefree = true;            // false: degrees is empty and unusable

  std::size_t total() const noexcept;
};

bool is_prime(std::uint64_t n) noexcept;

// Distinct-degree factorization of F mod p. Throws NotPrime, or
// InvalidArgument when p divides the leading coefficient. A reduction that
// is not squarefree is flagged rather than factored.
DegreePattern factor_degrees_mod_p(const IntPoly& F, std::uint64_t p);

// x^12 - 12 x^11 + 11^12
const IntPoly& f_integral_coefficients();

struct Witness {
  std::uint64_t prime;
  std::vector<std::size_t> pattern;
};

struct EvidenceCertificate {
  std::optional<Witness> transitive;     // pattern {12}
  std::optional<Witness> long_cycle;     // pattern {11, 1}
  std::optional<Witness> transposition;  // exactly one part 2, the rest odd
  std::size_t primes_scanned = 0;
  std::uint64_t max_prime = 0;

  bool complete() const noexcept { return transitive && long_cycle && transposition; }
  std::vector<std::string> missing() const;
};

// Scans primes <= max_prime in increasing order, keeping the first witness of
// each class, and stops as soon as all three are found.
EvidenceCertificate scan_s12_evidence(std::uint64_t max_prime);
// As above, but throws EvidenceIncomplete naming the missing witness classes.
EvidenceCertificate s12_evidence(std::uint64_t max_prime);

bool is_transposition_pattern(const std::vector<std::size_t>& degrees) noexcept;

}  // namespace belyi
