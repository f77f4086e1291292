#include "charsub/limits.h"

#include <cstdlib>
#include <string>

namespace charsub {
namespace {

void read_env(const char* name, std::uint64_t& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end != nullptr && *end == '\0' && value > 0) target = value;
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_env("CHARSUB_CARRIER_CAP", limits.carrier_cap);
  read_env("CHARSUB_ENUM_CAP", limits.enumeration_cap);
  read_env("CHARSUB_SWEEP_CAP", limits.sweep_cap);
  read_env("CHARSUB_LATTICE_CAP", limits.lattice_cap);
  read_env("CHARSUB_ORACLE_CAP", limits.oracle_cap);
  std::uint64_t jobs = limits.jobs;
  read_env("CHARSUB_JOBS", jobs);
  limits.jobs = static_cast<unsigned>(jobs);
  return limits;
}

CapExceeded::CapExceeded(std::string cap_name, std::uint64_t requested,
                         std::uint64_t cap)
    : std::runtime_error(cap_name + " exceeded: requested " +
                         std::to_string(requested) + ", cap is " +
                         std::to_string(cap)),
      cap_name_(std::move(cap_name)) {}

}  // namespace charsub
