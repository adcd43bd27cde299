#pragma once

#include <cstdint>
#include <stdexcept>

namespace systemt {

// Step budget for evaluation. Evaluators call burn_fuel() on every semantic
// application, recursor step and dialogue step; when a FuelGuard is active on
// the current thread and its budget runs out, FuelExhausted is thrown.
struct FuelExhausted : std::runtime_error {
  FuelExhausted() : std::runtime_error("evaluation step budget exhausted") {}
};

namespace detail {
inline thread_local std::uint64_t* active_fuel = nullptr;
}

inline void burn_fuel() {
  if (auto* f = detail::active_fuel) {
    if (*f == 0) throw FuelExhausted();
    --*f;
  }
}

class FuelGuard {
 public:
  explicit FuelGuard(std::uint64_t budget) : budget_(budget), saved_(detail::active_fuel) {
    detail::active_fuel = &budget_;
  }
  ~FuelGuard() { detail::active_fuel = saved_; }
  FuelGuard(const FuelGuard&) = delete;
  FuelGuard& operator=(const FuelGuard&) = delete;

  std::uint64_t remaining() const { return budget_; }

 private:
  std::uint64_t budget_;
  std::uint64_t* saved_;
};

}  // namespace systemt
