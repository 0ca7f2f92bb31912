/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/oracle.hpp"

#include "bpsolve/error.hpp"

namespace bpsolve {

OracleResult brute_force(const CanonicalProblem& cp, std::uint64_t cap) {
  const std::size_t n = cp.nvars();
  Integer count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= cp.user_upper[i] - cp.anchor[i] + 1;
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::CapExceeded, "box holds " + count.get_str() +
                                            " lattice points, above the cap of " +
                                            std::to_string(cap));
  }

  OracleResult out;
  IntVector z = cp.anchor;
  RationalVector x(z.begin(), z.end());
  while (true) {
    ++out.points_scanned;
    bool feasible = true;
    for (std::size_t i = 1; i < cp.q.size() && feasible; ++i) {
      feasible = cp.q[i].evaluate(x).sign() >= 0;
    }
    if (feasible) {
      const ExtendedRational value = cp.q.front().evaluate(x);
      if (value > out.theta) {
        out.theta = value;
        out.solutions.clear();
      }
      if (value == out.theta) out.solutions.insert(z);
    }
    // Odometer with the last axis fastest.
    std::size_t axis = n;
    while (axis-- > 0) {
      if (z[axis] < cp.user_upper[axis]) {
        z[axis] += 1;
        x[axis] = Rational(z[axis]);
        break;
      }
      z[axis] = cp.anchor[axis];
      x[axis] = Rational(z[axis]);
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace bpsolve
