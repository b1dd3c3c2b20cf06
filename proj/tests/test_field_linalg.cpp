#include <doctest.h>

#include "pcat/error.hpp"
#include "pcat/field.hpp"
#include "pcat/linalg.hpp"

using namespace pcat;

TEST_CASE("rationals") {
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(4, -2).str() == "-2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);

  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(inverse(Rational(-3, 4)) == Rational(-4, 3));
  CHECK(b < a);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(1, 1000000007) * Rational(1000000007) == Rational(1));
}

TEST_CASE("prime fields") {
  using F5 = Zp<5>;
  CHECK(F5(7).value() == 2);
  CHECK(F5(-1).value() == 4);
  CHECK(inverse(F5(2)) == F5(3));
  CHECK(F5(3) / F5(4) == F5(2));
  for (long v = 1; v < 5; ++v) CHECK(F5(v) * inverse(F5(v)) == F5(1));
  CHECK((Zp<2>(1) + Zp<2>(1)).is_zero());
  CHECK(inverse(Zp<13>(5)) == Zp<13>(8));

  CHECK(dispatch_prime(7, []<int P>() { return P; }) == 7);
  CHECK_THROWS_AS(dispatch_prime(17, []<int P>() { return P; }), Error);
}

TEST_CASE("rank depends on the field") {
  Mat<Rational> q(2, 2);
  q << Rational(1), Rational(1), Rational(1), Rational(-1);
  CHECK(rank(q) == 2);

  Mat<Zp<2>> f(2, 2);
  f << 1, 1, 1, -1;
  CHECK(rank(f) == 1);

  Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(rank(cast_matrix<Rational>(m)) == 2);
  // every row is (1, 2, 0) mod 3
  CHECK(rank(cast_matrix<Zp<3>>(m)) == 1);
  CHECK(rank(Mat<Rational>::Zero(3, 4).eval()) == 0);
}

TEST_CASE("solving") {
  Mat<Rational> a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(3);
  Vec<Rational> b(2);
  b << Rational(1), Rational(1);
  auto s = solve(a, b);
  CHECK(s.status == SolveStatus::Unique);
  CHECK(s.x(0) == Rational(2, 5));
  CHECK(s.x(1) == Rational(1, 5));

  Mat<Rational> singular(2, 2);
  singular << Rational(1), Rational(2), Rational(2), Rational(4);
  Vec<Rational> inconsistent(2);
  inconsistent << Rational(1), Rational(1);
  CHECK(solve(singular, inconsistent).status == SolveStatus::NoSolution);
  Vec<Rational> consistent(2);
  consistent << Rational(1), Rational(2);
  s = solve(singular, consistent);
  CHECK(s.status == SolveStatus::Multiple);
  CHECK(Vec<Rational>(singular * s.x) == consistent);
}

TEST_CASE("kernels") {
  Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> m(2, 4);
  m << 1, 1, 0, 0, 0, 1, 1, 0;
  const auto a = cast_matrix<Rational>(m);
  const auto k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK(Mat<Rational>(a * k) == Mat<Rational>::Zero(2, 2));
  CHECK(rank(k) == 2);

  const auto e = row_echelon<Rational>(a);
  CHECK(e.pivots == std::vector<int>{0, 1});
  CHECK(e.reduced(0, 2) == Rational(-1));

  const auto kf = kernel_basis(cast_matrix<Zp<2>>(m));
  CHECK(kf.cols() == 2);
  CHECK(Mat<Zp<2>>(cast_matrix<Zp<2>>(m) * kf) == Mat<Zp<2>>::Zero(2, 2));
}
