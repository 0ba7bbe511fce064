#pragma once

#include "lvrank/rational.hpp"

namespace lvrank {

// mpq_class(p, q) does not reduce; every test literal goes through here.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace lvrank
