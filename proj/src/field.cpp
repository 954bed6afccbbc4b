#include "nsg/field.hpp"

#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::MixedSemigroups: return "MixedSemigroups";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::NotInsideRing: return "NotInsideRing";
    case ErrorKind::NotMinimalMultiplicity: return "NotMinimalMultiplicity";
    case ErrorKind::PrincipalIdeal: return "PrincipalIdeal";
    case ErrorKind::DvrInput: return "DvrInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::CertificateNotFound: return "CertificateNotFound";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorKind::InvalidInput, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

}  // namespace nsg
