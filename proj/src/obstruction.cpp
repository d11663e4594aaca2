#include "dioph/obstruction.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include <nlohmann/json.hpp>

#include "dioph/arith.hpp"

namespace dioph::obstruction {

using arith::mod_canon;

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::EvenHalfOdd: return "EvenHalfOdd";
    case CaseLabel::EvenHalfEven: return "EvenHalfEven";
    case CaseLabel::OddThreeMod4: return "OddThreeMod4";
    case CaseLabel::OneMod12: return "OneMod12";
    case CaseLabel::NineMod12: return "NineMod12";
    case CaseLabel::FiveMod12_Mod36Kill: return "FiveMod12_Mod36Kill";
    case CaseLabel::SeventeenMod36: return "SeventeenMod36";
  }
  return "?";
}

std::optional<CaseLabel> label_from_string(std::string_view name) {
  for (CaseLabel label :
       {CaseLabel::EvenHalfOdd, CaseLabel::EvenHalfEven, CaseLabel::OddThreeMod4,
        CaseLabel::OneMod12, CaseLabel::NineMod12, CaseLabel::FiveMod12_Mod36Kill,
        CaseLabel::SeventeenMod36}) {
    if (name == to_string(label)) return label;
  }
  return std::nullopt;
}

const char* to_string(CheckFailure reason) {
  switch (reason) {
    case CheckFailure::None: return "ok";
    case CheckFailure::WrongKindForLabel: return "certificate kind does not match label";
    case CheckFailure::MissingOrExtraField: return "field set does not match certificate kind";
    case CheckFailure::LabelDoesNotContainK: return "k is not in the label's residue class";
    case CheckFailure::WrongModulusForLabel: return "modulus does not match label";
    case CheckFailure::TargetResidueAttained: return "k^3 - 5 is attained by the form";
    case CheckFailure::WitnessNotPrime: return "witness is not prime";
    case CheckFailure::WitnessWrongResidueClass: return "witness is not 5 or 7 (mod 12)";
    case CheckFailure::WitnessDoesNotDivide: return "witness does not divide k - 2";
    case CheckFailure::WitnessAdmitsSquare: return "k^3 - 5 is a square mod the witness";
  }
  return "?";
}

CaseLabel classify(const mpz_class& k) {
  switch (mpz_fdiv_ui(k.get_mpz_t(), 4)) {
    case 2: return CaseLabel::EvenHalfOdd;
    case 0: return CaseLabel::EvenHalfEven;
    case 3: return CaseLabel::OddThreeMod4;
    default: break;
  }
  switch (mpz_fdiv_ui(k.get_mpz_t(), 12)) {  // k = 1 (mod 4), so 1, 5 or 9
    case 1: return CaseLabel::OneMod12;
    case 9: return CaseLabel::NineMod12;
    default:
      return mpz_fdiv_ui(k.get_mpz_t(), 36) == 17 ? CaseLabel::SeventeenMod36
                                                  : CaseLabel::FiveMod12_Mod36Kill;
  }
}

namespace {

constexpr unsigned long kEnumerationCap = 1000000ul;
constexpr unsigned long kWitnessEnumerationBound = 10000ul;

std::vector<uint8_t> compute_attained(uint32_t m, uint32_t km) {
  std::vector<uint8_t> hit(m, 0);
  // (y, z) -> (m - y, m - z) fixes the form mod m, so y only runs to m/2.
  for (uint32_t y = 0; y <= m / 2; ++y) {
    uint32_t val = static_cast<uint32_t>(static_cast<uint64_t>(y) * y % m);
    uint32_t ky = static_cast<uint32_t>(static_cast<uint64_t>(km) * y % m);
    uint32_t delta = (1 + m - ky) % m;  // f(y,1) - f(y,0)
    for (uint32_t z = 0; z < m; ++z) {
      hit[val] = 1;
      val += delta;
      if (val >= m) val -= m;
      delta += 2;  // f(y,z+1) - f(y,z) = 2z + 1 - ky
      if (delta >= m) delta -= m;
    }
  }
  return hit;
}

// The attained set is a function of (m, k mod m) alone; range sweeps hit a
// small number of distinct keys, so memoize the bitmaps.
std::mutex g_cache_mutex;
std::map<std::pair<unsigned long, unsigned long>, std::shared_ptr<const std::vector<uint8_t>>>
    g_cache;
size_t g_cache_bytes = 0;
constexpr size_t kCacheBudget = 64u << 20;

std::shared_ptr<const std::vector<uint8_t>> attained_bitmap(unsigned long m, unsigned long km) {
  const auto key = std::make_pair(m, km);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto bitmap = std::make_shared<const std::vector<uint8_t>>(
      compute_attained(static_cast<uint32_t>(m), static_cast<uint32_t>(km)));
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache_bytes + m > kCacheBudget) {
      g_cache.clear();
      g_cache_bytes = 0;
    }
    if (g_cache.emplace(key, bitmap).second) g_cache_bytes += m;
  }
  return bitmap;
}

int expected_modulus(CaseLabel label) {
  switch (label) {
    case CaseLabel::EvenHalfOdd: return 8;
    case CaseLabel::EvenHalfEven: return 4;
    case CaseLabel::OddThreeMod4: return 4;
    case CaseLabel::OneMod12: return 3;
    case CaseLabel::FiveMod12_Mod36Kill: return 36;
    default: return 0;  // prime-witness labels
  }
}

bool label_contains(CaseLabel label, const mpz_class& k) {
  unsigned long r4 = mpz_fdiv_ui(k.get_mpz_t(), 4);
  unsigned long r12 = mpz_fdiv_ui(k.get_mpz_t(), 12);
  unsigned long r36 = mpz_fdiv_ui(k.get_mpz_t(), 36);
  switch (label) {
    case CaseLabel::EvenHalfOdd: return r4 == 2;
    case CaseLabel::EvenHalfEven: return r4 == 0;
    case CaseLabel::OddThreeMod4: return r4 == 3;
    case CaseLabel::OneMod12: return r12 == 1;
    case CaseLabel::NineMod12: return r12 == 9;
    case CaseLabel::FiveMod12_Mod36Kill: return r36 == 5 || r36 == 29;
    case CaseLabel::SeventeenMod36: return r36 == 17;
  }
  return false;
}

CheckResult fail(CheckFailure reason) { return {false, reason}; }

}  // namespace

std::vector<mpz_class> residues_attained(const mpz_class& k, const mpz_class& m) {
  if (m < 2 || m > static_cast<long>(kEnumerationCap))
    throw std::domain_error("residues_attained: modulus must be in [2, 10^6]");
  unsigned long mm = m.get_ui();
  auto bitmap = attained_bitmap(mm, mpz_fdiv_ui(k.get_mpz_t(), mm));
  std::vector<mpz_class> out;
  for (unsigned long v = 0; v < mm; ++v)
    if ((*bitmap)[v]) out.emplace_back(v);
  return out;
}

namespace detail {

std::optional<mpz_class> smallest_witness_prime(const mpz_class& n) {
  if (n == 0) return std::nullopt;
  auto factorization = arith::factorize(n);
  for (const auto& [p, e] : factorization.factors) {
    unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 12);
    if (r == 5 || r == 7) return p;
  }
  return std::nullopt;
}

bool residue_attained(unsigned long m, unsigned long km, unsigned long target) {
  return (*attained_bitmap(m, km))[target] != 0;
}

}  // namespace detail

Certificate certify(const mpz_class& k) {
  Certificate cert;
  cert.k = k;
  cert.label = classify(k);
  switch (cert.label) {
    case CaseLabel::EvenHalfOdd:
      cert.m = 8;
      break;
    case CaseLabel::EvenHalfEven:
    case CaseLabel::OddThreeMod4:
      cert.m = 4;
      break;
    case CaseLabel::OneMod12:
      cert.m = 3;
      break;
    case CaseLabel::FiveMod12_Mod36Kill:
      cert.m = 36;
      break;
    case CaseLabel::NineMod12: {
      cert.kind = CertKind::PrimeWitness;
      auto p = detail::smallest_witness_prime(k - 2);
      if (!p) throw witness_not_found(k);
      cert.p = *p;
      break;
    }
    case CaseLabel::SeventeenMod36: {
      // k - 2 = 3 * (k - 2)/3 with the second factor prime to 3
      cert.kind = CertKind::PrimeWitness;
      auto p = detail::smallest_witness_prime((k - 2) / 3);
      if (!p) throw witness_not_found(k);
      cert.p = *p;
      break;
    }
  }
  return cert;
}

CheckResult check_certificate(const Certificate& cert) {
  const bool witness_label =
      cert.label == CaseLabel::NineMod12 || cert.label == CaseLabel::SeventeenMod36;
  if (witness_label != (cert.kind == CertKind::PrimeWitness))
    return fail(CheckFailure::WrongKindForLabel);
  if (cert.kind == CertKind::Modulus && (!cert.m.has_value() || cert.p.has_value()))
    return fail(CheckFailure::MissingOrExtraField);
  if (cert.kind == CertKind::PrimeWitness && (!cert.p.has_value() || cert.m.has_value()))
    return fail(CheckFailure::MissingOrExtraField);
  if (!label_contains(cert.label, cert.k)) return fail(CheckFailure::LabelDoesNotContainK);

  const mpz_class target_value = cert.k * cert.k * cert.k - 5;

  if (cert.kind == CertKind::Modulus) {
    if (*cert.m != expected_modulus(cert.label)) return fail(CheckFailure::WrongModulusForLabel);
    unsigned long m = static_cast<unsigned long>(*cert.m);
    unsigned long km = mpz_fdiv_ui(cert.k.get_mpz_t(), m);
    unsigned long target = mpz_fdiv_ui(target_value.get_mpz_t(), m);
    if (detail::residue_attained(m, km, target)) return fail(CheckFailure::TargetResidueAttained);
    return {true, CheckFailure::None};
  }

  const mpz_class& p = *cert.p;
  if (p < 2 || !arith::is_prime(p)) return fail(CheckFailure::WitnessNotPrime);
  unsigned long p12 = mpz_fdiv_ui(p.get_mpz_t(), 12);
  if (p12 != 5 && p12 != 7) return fail(CheckFailure::WitnessWrongResidueClass);
  mpz_class shifted = cert.k - 2;
  if (!mpz_divisible_p(shifted.get_mpz_t(), p.get_mpz_t()))
    return fail(CheckFailure::WitnessDoesNotDivide);
  // k = 2 (mod p) turns the form into (y - z)^2, so solvability mod p would
  // make k^3 - 5 (= 3 mod p) a square; the Legendre test refutes that.
  if (arith::legendre(mod_canon(target_value, p), p) != -1)
    return fail(CheckFailure::WitnessAdmitsSquare);
  if (p <= static_cast<long>(kWitnessEnumerationBound)) {
    unsigned long pm = p.get_ui();
    unsigned long km = mpz_fdiv_ui(cert.k.get_mpz_t(), pm);
    unsigned long target = mpz_fdiv_ui(target_value.get_mpz_t(), pm);
    if (detail::residue_attained(pm, km, target))
      return fail(CheckFailure::TargetResidueAttained);
  }
  return {true, CheckFailure::None};
}

std::string to_jsonl(const Certificate& cert) {
  nlohmann::json j;
  j["k"] = cert.k.get_str();
  j["label"] = to_string(cert.label);
  if (cert.kind == CertKind::Modulus) {
    j["kind"] = "modulus";
    if (cert.m) j["m"] = *cert.m;
  } else {
    j["kind"] = "prime";
    if (cert.p) j["p"] = cert.p->get_str();
  }
  return j.dump();
}

namespace {

bool is_decimal_string(const std::string& s) {
  size_t start = s.size() > 0 && s[0] == '-' ? 1 : 0;
  if (start >= s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Certificate certificate_from_jsonl(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("certificate must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "k" && key != "label" && key != "kind" && key != "m" && key != "p")
      throw std::runtime_error("unknown field \"" + key + "\"");
  }
  if (!j.contains("k") || !j["k"].is_string() || !is_decimal_string(j["k"].get<std::string>()))
    throw std::runtime_error("field \"k\" must be a decimal string");
  if (!j.contains("label") || !j["label"].is_string())
    throw std::runtime_error("field \"label\" must be a string");
  auto label = label_from_string(j["label"].get<std::string>());
  if (!label) throw std::runtime_error("unknown label \"" + j["label"].get<std::string>() + "\"");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::runtime_error("field \"kind\" must be a string");
  std::string kind = j["kind"].get<std::string>();

  Certificate cert;
  cert.k = mpz_class(j["k"].get<std::string>());
  cert.label = *label;
  if (kind == "modulus") {
    cert.kind = CertKind::Modulus;
    if (j.contains("p")) throw std::runtime_error("modulus certificate must not carry \"p\"");
    if (!j.contains("m") || !j["m"].is_number_integer())
      throw std::runtime_error("field \"m\" must be an integer");
    cert.m = j["m"].get<int>();
  } else if (kind == "prime") {
    cert.kind = CertKind::PrimeWitness;
    if (j.contains("m")) throw std::runtime_error("prime certificate must not carry \"m\"");
    if (!j.contains("p") || !j["p"].is_string() ||
        !is_decimal_string(j["p"].get<std::string>()))
      throw std::runtime_error("field \"p\" must be a decimal string");
    cert.p = mpz_class(j["p"].get<std::string>());
  } else {
    throw std::runtime_error("field \"kind\" must be \"modulus\" or \"prime\"");
  }
  return cert;
}

}  // namespace dioph::obstruction
