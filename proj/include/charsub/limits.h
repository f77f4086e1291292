#ifndef CHARSUB_LIMITS_H_
#define CHARSUB_LIMITS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charsub {

// Size limits shared by every computation. All of them can be overridden
// through the environment (see from_env) so that the CLI and the test
// binaries agree on the same bounds.
struct Limits {
  // Largest group order that gets a dense element index.
  std::uint64_t carrier_cap = std::uint64_t{1} << 16;
  // Largest group order for which the full subgroup lattice is walked.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 12;
  // Default group order bound for corpus sweeps.
  std::uint64_t sweep_cap = std::uint64_t{1} << 8;
  // Most subgroups a full lattice enumeration may hold.
  std::uint64_t lattice_cap = std::uint64_t{1} << 17;
  // Largest |End(G)| for which endomorphisms are enumerated one by one.
  std::uint64_t oracle_cap = std::uint64_t{1} << 16;
  unsigned jobs = 1;

  // Reads CHARSUB_CARRIER_CAP, CHARSUB_ENUM_CAP, CHARSUB_SWEEP_CAP,
  // CHARSUB_LATTICE_CAP, CHARSUB_ORACLE_CAP and CHARSUB_JOBS. Malformed
  // values are ignored.
  static Limits from_env();
};

// Thrown when a requested computation would exceed one of the Limits.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::uint64_t requested,
              std::uint64_t cap);

  const std::string& cap_name() const { return cap_name_; }

 private:
  std::string cap_name_;
};

}  // namespace charsub

#endif  // CHARSUB_LIMITS_H_
