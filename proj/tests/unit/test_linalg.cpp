#include "doctest.h"
#include "hopfalg/linalg.hpp"

using namespace hopf;

TEST_CASE("rank, nullspace and inverse") {
  Matrix m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = Scalar::xi();
  m(1, 0) = Scalar::xi();
  m(1, 1) = Scalar::xi_pow(2);
  m(2, 2) = Scalar::theta();
  CHECK(rank(m) == 2);
  Matrix k = nullspace(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK_FALSE(inverse(m).has_value());
  m(1, 1) = 0;
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(3));
}

TEST_CASE("sparse echelon matches dense rank") {
  std::vector<SparseVec> rows = {{{0, 1}, {2, Scalar::xi()}}, {{1, 1}}, {{0, 2}, {1, 3}, {2, Scalar::xi() * 2}}};
  CHECK(sparse_rank(rows) == 2);
  Echelon e;
  CHECK(e.add(rows[0]));
  CHECK(e.add(rows[1]));
  CHECK_FALSE(e.add(rows[2]));
  CHECK(e.contains(sv_add(rows[0], rows[1])));
}

TEST_CASE("solve") {
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = -1;
  auto x = solve(m, {Scalar(3), Scalar(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(1));
}
