#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "systemt/syntax.hpp"

namespace systemt {

// A point of the Baire space with finite explicit support and a constant tail.
struct Oracle {
  std::vector<Nat> prefix;
  Nat default_value = 0;

  Nat operator()(Nat i) const { return i < prefix.size() ? prefix[i] : default_value; }

  // "n1,n2,...;default=d"
  std::string str() const;
  static Oracle parse(std::string_view spec);

  // Extensional equality (trailing prefix entries equal to the default are ignored).
  friend bool operator==(const Oracle& a, const Oracle& b);
};

// A point of the Cantor space, same representation.
struct BoolOracle {
  std::vector<bool> prefix;
  bool default_value = false;

  bool operator()(Nat i) const { return i < prefix.size() ? prefix[i] : default_value; }

  // "1,0,...;default=0"
  std::string str() const;
  static BoolOracle parse(std::string_view spec);
};

// Cantor into Baire: false -> 0, true -> 1.
inline Nat embed_bit(bool b) { return b ? 1 : 0; }
Oracle embed(const BoolOracle& a);

}  // namespace systemt
