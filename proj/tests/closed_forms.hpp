#pragma once

#include "tpsurf/syzygy_builder.hpp"

namespace examples {

inline tpsurf::BiPoly lin(const tpsurf::Scalar& a, const tpsurf::Scalar& b) {
  return tpsurf::uv_monomial(1, 0, a) + tpsurf::uv_monomial(0, 1, b);
}

// Closed forms transcribed from the displayed identities, indexed by the u exponent.
inline std::pair<tpsurf::BiPoly, tpsurf::BiPoly> closed_form(tpsurf::Subcase sc, tpsurf::Scalar d0, tpsurf::Scalar d1, int e) {
  using namespace tpsurf;
  if (sc == Subcase::I) {
    Scalar k = (d0 * d0 + d1).inverse();
    switch (e) {
      case 3: return {lin(-d0 * d1 * k, -d1 * d1 * k), lin(1, d0 * d1 * k)};
      case 2: return {lin(d1 * k, -d0 * d1 * k), lin(0, d0 * d0 * k)};
      case 1: return {lin(d0 * k, d1 * k), lin(0, -d0 * k)};
      default: return {lin(-k, d0 * k), lin(0, k)};
    }
  }
  Scalar k = (d0 * d1 - Scalar(1)).inverse();
  switch (e) {
    case 3: return {lin(-d1 * d1 * k, 0), lin(1, d1 * k)};
    case 2: return {lin(d1 * k, 0), lin(0, -k)};
    case 1: return {lin(-k, 0), lin(0, d0 * k)};
    default: return {lin(d0 * k, 1), lin(0, -d0 * d0 * k)};
  }
}

}  // namespace examples
