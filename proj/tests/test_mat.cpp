#include <doctest.h>

#include <random>

#include "tatekit/mat.hpp"

using namespace tatekit;

namespace {

Mat mat_of(PrimeField f, int r, int c, std::initializer_list<int> vals) {
  Mat m(f, r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = f.canon(*it++);
  return m;
}

Mat random_mat(PrimeField f, int r, int c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (u32& v : m.a) v = (u32)(rng() % f.p());
  return m;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("primality is exact") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK(is_prime_u32(5));
    CHECK(is_prime_u32(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(0));
    CHECK_FALSE(is_prime_u32(4));
    CHECK_FALSE(is_prime_u32(91));       // 7 * 13
    CHECK_FALSE(is_prime_u32(1000001));  // 101 * 9901
  }

  TEST_CASE("composite or oversized characteristic rejected") {
    CHECK_THROWS_AS(PrimeField(4), tk_error);
    CHECK_THROWS_AS(PrimeField(1), tk_error);
    CHECK_THROWS_AS(PrimeField(1u << 31), tk_error);
  }

  TEST_CASE("arithmetic is canonical") {
    PrimeField f(7);
    CHECK(f.add(5, 6) == 4);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.canon(-1) == 6);
    CHECK(f.canon(700000001) == f.canon(700000001LL % 7));
    for (u32 a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }

  TEST_CASE("large prime arithmetic has no overflow") {
    PrimeField f(2147483647);
    u32 a = 2147483646, b = 2147483645;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, b) == f.canon((long long)a + b));
  }
}

TEST_SUITE("mat") {
  TEST_CASE("rref over F_2: the all-ones 2x2") {
    PrimeField f(2);
    Mat m = mat_of(f, 2, 2, {1, 1, 1, 1});
    auto [r, piv] = rref(m);
    CHECK(r == mat_of(f, 2, 2, {1, 1, 0, 0}));
    REQUIRE(piv.size() == 1);
    CHECK(piv[0] == 0);
  }

  TEST_CASE("kernel over F_2 of [1 1]") {
    PrimeField f(2);
    Mat m = mat_of(f, 1, 2, {1, 1});
    Mat k = kernel_basis(m);
    REQUIRE(k.cols == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
    CHECK(mul(m, k).is_zero());
  }

  TEST_CASE("solve over F_5") {
    PrimeField f(5);
    Mat m = mat_of(f, 2, 2, {1, 2, 3, 4});
    Mat b = mat_of(f, 2, 1, {1, 0});
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(mul(m, *x) == b);
  }

  TEST_CASE("inconsistent system returns nothing") {
    PrimeField f(3);
    Mat m = mat_of(f, 2, 1, {1, 1});
    Mat b = mat_of(f, 2, 1, {1, 2});
    CHECK_FALSE(solve(m, b).has_value());
  }

  TEST_CASE("empty shapes behave") {
    PrimeField f(3);
    Mat a(f, 0, 4);
    CHECK(rank(a) == 0);
    Mat k = kernel_basis(a);
    CHECK(k.rows == 4);
    CHECK(k.cols == 4);  // everything is in the kernel
    Mat b(f, 4, 0);
    CHECK(kernel_basis(b).cols == 0);
    CHECK(rank(b) == 0);
    Mat c = mul(b, a);
    CHECK(c.rows == 4);
    CHECK(c.cols == 4);
    CHECK(c.is_zero());
  }

  TEST_CASE("rank plus nullity equals column count") {
    std::mt19937_64 rng(0xC0FFEE);
    for (u32 p : {2u, 3u, 5u, 97u}) {
      PrimeField f(p);
      for (int trial = 0; trial < 40; ++trial) {
        int r = (int)(rng() % 7), c = (int)(rng() % 7);
        Mat m = random_mat(f, r, c, rng);
        Mat k = kernel_basis(m);
        CHECK(rank(m) + k.cols == c);
        if (k.cols > 0) CHECK(mul(m, k).is_zero());
        CHECK(rank(k) == k.cols);  // kernel basis is independent
      }
    }
  }

  TEST_CASE("rref is idempotent and solve validates") {
    std::mt19937_64 rng(0xC0FFEE ^ 1);
    PrimeField f(5);
    for (int trial = 0; trial < 40; ++trial) {
      int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
      Mat m = random_mat(f, r, c, rng);
      auto [r1, piv1] = rref(m);
      auto [r2, piv2] = rref(r1);
      CHECK(r1 == r2);
      CHECK(piv1 == piv2);
      // a rhs in the column space always solves
      Mat x0 = random_mat(f, c, 2, rng);
      Mat b = mul(m, x0);
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(mul(m, *x) == b);
    }
  }

  TEST_CASE("inverse round trip") {
    std::mt19937_64 rng(42);
    PrimeField f(7);
    int found = 0;
    for (int trial = 0; trial < 60 && found < 10; ++trial) {
      Mat m = random_mat(f, 4, 4, rng);
      auto mi = inverse(m);
      if (!mi) continue;
      ++found;
      CHECK(mul(m, *mi) == Mat::identity(f, 4));
      CHECK(mul(*mi, m) == Mat::identity(f, 4));
    }
    CHECK(found >= 5);
  }

  TEST_CASE("row basis reduce and project") {
    PrimeField f(2);
    // subspace of F_2^3 spanned by (1,1,0) and (0,0,1)
    Mat span = from_cols(f, 3, {{1, 1, 0}, {0, 0, 1}});
    RowBasis rb = row_basis_from_columns(span);
    CHECK(rb.dim() == 2);
    REQUIRE(rb.complement.size() == 1);
    CHECK(rb.complement[0] == 1);
    CHECK(rb.contains({1, 1, 0}));
    CHECK(rb.contains({1, 1, 1}));
    CHECK_FALSE(rb.contains({1, 0, 0}));
    Vec q = rb.project({1, 0, 0});
    REQUIRE(q.size() == 1);
    CHECK(q[0] == 1);  // e_0 = e_1 modulo the subspace
    // projection of anything in the subspace is zero
    CHECK(vec_is_zero(rb.project({1, 1, 1})));
  }

  TEST_CASE("projection and embedding matrices compose to identity on the quotient") {
    std::mt19937_64 rng(7);
    PrimeField f(3);
    for (int trial = 0; trial < 20; ++trial) {
      Mat span = random_mat(f, 5, 2, rng);
      RowBasis rb = row_basis_from_columns(span);
      Mat p = projection_matrix(rb);
      Mat e = embedding_matrix(rb);
      CHECK(mul(p, e) == Mat::identity(f, (int)rb.complement.size()));
      // projection kills the subspace
      CHECK(mul(p, basis_cols(rb)).is_zero());
    }
  }
}
