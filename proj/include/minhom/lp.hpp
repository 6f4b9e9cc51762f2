#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// Dense two-phase simplex over exact rationals (Bland's rule, so no cycling).
// Sized for desk-scale cross-checks, not production LP work.

namespace minhom {

using Rational = boost::rational<boost::multiprecision::cpp_int>;

struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational value;            // objective at the returned vertex
    std::vector<Rational> x;   // primal solution (original variables only)
};

// minimize c.x  subject to  a_ub x <= b_ub,  a_eq x = b_eq,  x >= 0
LPResult solve_lp(const std::vector<std::vector<Rational>>& a_ub,
                  const std::vector<Rational>& b_ub,
                  const std::vector<std::vector<Rational>>& a_eq,
                  const std::vector<Rational>& b_eq, const std::vector<Rational>& c);

}  // namespace minhom
