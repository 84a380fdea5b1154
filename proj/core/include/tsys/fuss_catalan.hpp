#pragma once

#include <string>

#include "tsys/bigcount.hpp"
#include "tsys/errors.hpp"

namespace tsys {

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n. Requires
/// n >= 0. Computed by a product loop that divides exactly at every step.
BigCount binomial(long long n, long long k);

struct FussParams {
  long long n = 0;
  long long p = 1;
  long long r = 1;
};

/// The two-parameter Fuss-Catalan number A_n(p, r) = r/(np+r) * C(np+r, n),
/// with the boundary conventions A_0(p, r) = 1 and A_n(p, 0) = 0 for n >= 1.
/// Throws InvalidParams unless n >= 0, p >= 1, r >= 0. The division by
/// np + r is checked to be exact.
BigCount fuss_catalan(long long n, long long p, long long r);
BigCount fuss_catalan(const FussParams& params);

/// Catalan number: A_n(2, 1).
BigCount catalan(long long n);

struct IdentityReport {
  int which = 0;
  long long n = 0, p = 0, r = 0, s = 0;
  BigCount lhs;
  BigCount rhs;
  bool pass = false;
  std::string statement;  // human-readable form of the checked equation
};

/// Checks one of five exact Fuss-Catalan identities, returning both sides:
///   1: A_n(3,r)       == sum_{j=0..n} A_j(2,1) * A_{n-j}(3, j+r-1)
///   2: A_n(p,r)       == A_n(p, r-1) + A_{n-1}(p, p+r-1)
///   3: A_{n+1}(p,1)   == A_n(p, p)
///   4: A_n(p, s+r)    == sum_{j=0..n} A_j(p, r) * A_{n-j}(p, s)
///   5: A_n(3,2)       == sum_{j=1..n} A_{j+1}(2,1) * A_{n-j}(3, j)
/// Unused parameters are ignored. Stated domains: n >= 1 and every used
/// parameter >= 1; violations throw InvalidParams.
IdentityReport check_identity(int which, long long n, long long p = 1, long long r = 1,
                              long long s = 1);

}  // namespace tsys
