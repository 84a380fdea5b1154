#include "tsys/fuss_catalan.hpp"

namespace tsys {

BigCount binomial(long long n, long long k) {
  if (n < 0) throw InvalidParams("binomial needs n >= 0, got n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  // result stays a binomial coefficient after every step, so each division
  // is exact.
  for (long long t = 1; t <= k; ++t) {
    result *= (n - k + t);
    result /= t;
  }
  return result;
}

BigCount fuss_catalan(long long n, long long p, long long r) {
  if (n < 0 || p < 1 || r < 0)
    throw InvalidParams("fuss_catalan needs n >= 0, p >= 1, r >= 0; got n = " +
                        std::to_string(n) + ", p = " + std::to_string(p) +
                        ", r = " + std::to_string(r));
  if (n == 0) return 1;
  if (r == 0) return 0;
  BigCount numerator = r * binomial(n * p + r, n);
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(numerator, BigCount(n * p + r), quotient, remainder);
  // integrality of A_n(p, r); kept as a hard check, not an assert
  if (remainder != 0)
    throw Error("internal: r*C(np+r,n) not divisible by np+r at n = " + std::to_string(n));
  return quotient;
}

BigCount fuss_catalan(const FussParams& params) {
  return fuss_catalan(params.n, params.p, params.r);
}

BigCount catalan(long long n) { return fuss_catalan(n, 2, 1); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

std::string fc(const std::string& n, const std::string& p, const std::string& r) {
  return "A_" + n + "(" + p + "," + r + ")";
}

}  // namespace

IdentityReport check_identity(int which, long long n, long long p, long long r, long long s) {
  require(which >= 1 && which <= 5, "identity index must be 1..5, got " + std::to_string(which));
  require(n >= 1, "identities are stated for n >= 1, got n = " + std::to_string(n));

  IdentityReport rep;
  rep.which = which;
  rep.n = n;

  const std::string ns = std::to_string(n);
  switch (which) {
    case 1: {
      require(r >= 1, "identity 1 needs r >= 1");
      rep.r = r;
      rep.lhs = fuss_catalan(n, 3, r);
      rep.rhs = 0;
      for (long long j = 0; j <= n; ++j)
        rep.rhs += fuss_catalan(j, 2, 1) * fuss_catalan(n - j, 3, j + r - 1);
      rep.statement = fc(ns, "3", std::to_string(r)) + " = sum_j A_j(2,1)*A_{n-j}(3,j+r-1)";
      break;
    }
    case 2: {
      require(p >= 1 && r >= 1, "identity 2 needs p, r >= 1");
      rep.p = p;
      rep.r = r;
      rep.lhs = fuss_catalan(n, p, r);
      rep.rhs = fuss_catalan(n, p, r - 1) + fuss_catalan(n - 1, p, p + r - 1);
      rep.statement = fc(ns, std::to_string(p), std::to_string(r)) +
                      " = A_n(p,r-1) + A_{n-1}(p,p+r-1)";
      break;
    }
    case 3: {
      require(p >= 1, "identity 3 needs p >= 1");
      rep.p = p;
      rep.lhs = fuss_catalan(n + 1, p, 1);
      rep.rhs = fuss_catalan(n, p, p);
      rep.statement = fc(std::to_string(n + 1), std::to_string(p), "1") + " = A_n(p,p)";
      break;
    }
    case 4: {
      require(p >= 1 && r >= 1 && s >= 1, "identity 4 needs p, r, s >= 1");
      rep.p = p;
      rep.r = r;
      rep.s = s;
      rep.lhs = fuss_catalan(n, p, s + r);
      rep.rhs = 0;
      for (long long j = 0; j <= n; ++j)
        rep.rhs += fuss_catalan(j, p, r) * fuss_catalan(n - j, p, s);
      rep.statement = fc(ns, std::to_string(p), std::to_string(s + r)) +
                      " = sum_j A_j(p,r)*A_{n-j}(p,s)";
      break;
    }
    case 5: {
      rep.lhs = fuss_catalan(n, 3, 2);
      rep.rhs = 0;
      for (long long j = 1; j <= n; ++j)
        rep.rhs += fuss_catalan(j + 1, 2, 1) * fuss_catalan(n - j, 3, j);
      rep.statement = fc(ns, "3", "2") + " = sum_{j>=1} A_{j+1}(2,1)*A_{n-j}(3,j)";
      break;
    }
  }
  rep.pass = (rep.lhs == rep.rhs);
  return rep;
}

}  // namespace tsys
