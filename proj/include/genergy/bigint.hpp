#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace genergy {

// Arbitrary-precision integer. All polynomial coefficients use this type from
// the start; there is no machine-word fast path.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

inline int sign_of(const Int& v) { return v.sign(); }

}  // namespace genergy
