#pragma once

// Base ring of coefficients: the integers, or the integers mod n (n >= 2).

#include <string>

#include "h2a/error.hpp"
#include "h2a/intmat.hpp"

namespace h2a {

struct Ring {
  Int n;  // 0 = ring of integers; otherwise modulus n >= 2

  static Ring integers() { return Ring{Int(0)}; }
  static Ring integers_mod(const Int& n) {
    require_input(n >= 2, "modulus must be >= 2");
    return Ring{n};
  }

  bool is_integers() const { return n == 0; }

  Int reduce_scalar(const Int& x) const { return is_integers() ? x : mod_floor(x, n); }

  IMat reduce(const IMat& a) const { return is_integers() ? a : imat_mod(a, n); }

  bool operator==(const Ring& o) const { return n == o.n; }
  bool operator!=(const Ring& o) const { return n != o.n; }

  std::string name() const { return is_integers() ? "Z" : "Z/" + n.get_str(); }
};

}  // namespace h2a
