#include "mckay/rep_theory.hpp"

namespace mckay {

std::vector<int> corner_of_theta(const Quiver& q, const DimVector& dims, const StabilityParam& theta) {
  if (!q.framed() || !dims.at_infinity || *dims.at_infinity != 1) {
    throw Error(ErrorCode::kUnsupportedTheta, "the specialised test needs a framed module with dimension 1 at infinity");
  }
  if (theta.values.size() != dims.components.size()) throw Error(ErrorCode::kUnsupportedTheta, "parameter length");
  std::vector<int> I;
  for (std::size_t k = 0; k < theta.values.size(); ++k) {
    if (theta.values[k] == 1) {
      I.push_back(static_cast<int>(k));
    } else if (theta.values[k] != 0) {
      throw Error(ErrorCode::kUnsupportedTheta, "parameter is not of the form theta_I");
    }
  }
  if (I.empty()) throw Error(ErrorCode::kUnsupportedTheta, "parameter is not of the form theta_I");
  if (!(theta == theta_I(I, dims))) throw Error(ErrorCode::kUnsupportedTheta, "framing weight does not balance");
  return I;
}

BruteForceReport brute_force_stability(const FramedRep& m, const StabilityParam& theta, std::uint32_t prime) {
  switch (prime) {
    case 2: return brute_force_stability<2>(reduce_rep<2>(m), theta);
    case 3: return brute_force_stability<3>(reduce_rep<3>(m), theta);
    case 5: return brute_force_stability<5>(reduce_rep<5>(m), theta);
    case 7: return brute_force_stability<7>(reduce_rep<7>(m), theta);
    default: throw Error(ErrorCode::kBadPrime, "supported primes are 2, 3, 5, 7; got " + std::to_string(prime));
  }
}

namespace {

template <std::uint32_t P>
StabilityVerdict verdict_mod(const FramedRep& m, const std::vector<int>& corner) {
  const auto r = reduce_rep<P>(m);
  return {is_semistable_for(r, corner), is_stable_for(r, corner)};
}

}  // namespace

StabilityVerdict specialized_stability_mod(const FramedRep& m, const std::vector<int>& corner, std::uint32_t prime) {
  switch (prime) {
    case 2: return verdict_mod<2>(m, corner);
    case 3: return verdict_mod<3>(m, corner);
    case 5: return verdict_mod<5>(m, corner);
    case 7: return verdict_mod<7>(m, corner);
    default: throw Error(ErrorCode::kBadPrime, "supported primes are 2, 3, 5, 7; got " + std::to_string(prime));
  }
}

}  // namespace mckay
