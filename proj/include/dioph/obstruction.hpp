#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dioph::obstruction {

/// The seven-way partition of the integers driving the case analysis.
enum class CaseLabel {
  EvenHalfOdd,          // k even with k/2 odd, i.e. k = 2 (mod 4)
  EvenHalfEven,         // k even with k/2 even, i.e. k = 0 (mod 4)
  OddThreeMod4,         // k = 3 (mod 4)
  OneMod12,             // k = 1 (mod 12)
  NineMod12,            // k = 9 (mod 12)
  FiveMod12_Mod36Kill,  // k = 5 or 29 (mod 36)
  SeventeenMod36,       // k = 17 (mod 36)
};

enum class CertKind { Modulus, PrimeWitness };

/// Per-k proof object that y^2 - kyz + z^2 = k^3 - 5 has no solution:
/// either a modulus m such that k^3 - 5 is not attained by the form mod m,
/// or a prime p = 5,7 (mod 12) dividing k - 2 (so the form reduces to
/// (y - z)^2 = 3 mod p, and 3 is a non-residue).
struct Certificate {
  mpz_class k;
  CaseLabel label = CaseLabel::EvenHalfOdd;
  CertKind kind = CertKind::Modulus;
  std::optional<int> m;        // present exactly for Modulus certificates
  std::optional<mpz_class> p;  // present exactly for PrimeWitness certificates
};

const char* to_string(CaseLabel label);
std::optional<CaseLabel> label_from_string(std::string_view name);

/// Raised when the witness required by the case analysis does not exist.
/// That would disprove the classification, so it is a fatal finding,
/// never a silent skip.
class witness_not_found : public std::logic_error {
 public:
  explicit witness_not_found(const mpz_class& k)
      : std::logic_error("no qualifying prime witness for k = " + k.get_str() +
                         "; this contradicts the case analysis") {}
};

/// The unique label whose residue class contains k.
CaseLabel classify(const mpz_class& k);

/// { y^2 - kyz + z^2 mod m : y, z in [0, m) } by full enumeration, sorted
/// ascending. Requires 2 <= m <= 10^6 (the enumeration is O(m^2)).
std::vector<mpz_class> residues_attained(const mpz_class& k, const mpz_class& m);

/// Build the certificate for k according to its case. Prime-witness cases
/// pick the smallest qualifying prime factor, so output is deterministic.
Certificate certify(const mpz_class& k);

enum class CheckFailure {
  None,
  WrongKindForLabel,
  MissingOrExtraField,
  LabelDoesNotContainK,
  WrongModulusForLabel,
  TargetResidueAttained,
  WitnessNotPrime,
  WitnessWrongResidueClass,
  WitnessDoesNotDivide,
  WitnessAdmitsSquare,
};

const char* to_string(CheckFailure reason);

struct CheckResult {
  bool ok = false;
  CheckFailure reason = CheckFailure::None;
  explicit operator bool() const { return ok; }
};

/// Independent verifier. Validates the structural invariants, then confirms
/// the obstruction is real: modulus certificates by full enumeration of the
/// attained residues, prime witnesses by primality, residue-class and
/// divisibility checks plus a Legendre-symbol test (and, for p <= 10^4, the
/// same full enumeration as a second path). Uses only arithmetic primitives
/// and enumeration; none of certify's case reasoning.
CheckResult check_certificate(const Certificate& cert);

/// One-line JSON encoding with fields exactly
///   {"k": "<decimal>", "label": "<name>", "kind": "modulus", "m": <int>}
/// or
///   {"k": "<decimal>", "label": "<name>", "kind": "prime", "p": "<decimal>"}.
std::string to_jsonl(const Certificate& cert);

/// Strict parse of one JSONL line (exact field set, decimal strings only).
/// Throws std::runtime_error with a descriptive message on any deviation.
Certificate certificate_from_jsonl(const std::string& line);

namespace detail {

/// Smallest prime factor of |n| congruent to 5 or 7 (mod 12), if any.
std::optional<mpz_class> smallest_witness_prime(const mpz_class& n);

/// Enumeration probe: is `target` attained by y^2 - kyz + z^2 mod m, where
/// km = k mod m? Attained sets are memoized on (m, km).
bool residue_attained(unsigned long m, unsigned long km, unsigned long target);

}  // namespace detail

}  // namespace dioph::obstruction
