#include "normlab/block_matrix.hpp"

#include <cmath>

#include "doctest.h"
#include "normlab/generators.hpp"
#include "normlab/linalg.hpp"
#include "normlab/rng.hpp"
#include "oracles.hpp"

using namespace normlab;
using namespace normlab::testing;

namespace {

OperatorFamily random_psd_family(int n, int dim, Rng& rng) {
  std::vector<ComplexMatrix> members;
  for (int k = 0; k < n; ++k) members.push_back(random_psd(dim, rng));
  return OperatorFamily(std::move(members));
}

}  // namespace

TEST_CASE("block matrix construction validates the grid") {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(2, 2);
  CHECK_THROWS_AS(BlockMatrix({2}, {3, 3}, {a, b}), DimensionError);
  CHECK_THROWS_AS(BlockMatrix({2}, {3}, {a, a}), DimensionError);
  CHECK_NOTHROW(BlockMatrix({2}, {3, 2}, {a, b}));
}

TEST_CASE("flatten/split round trip is exact") {
  Rng rng(53);
  const std::vector<int> row_dims{2, 3};
  const std::vector<int> col_dims{1, 2, 2};
  std::vector<ComplexMatrix> blocks;
  for (int i : row_dims)
    for (int j : col_dims) blocks.push_back(random_matrix(i, j, rng));
  const BlockMatrix grid(row_dims, col_dims, blocks);

  const ComplexMatrix flat = grid.flatten();
  REQUIRE(flat.rows() == 5);
  REQUIRE(flat.cols() == 5);

  const BlockMatrix back = split_blocks(flat, row_dims, col_dims);
  for (int i = 0; i < grid.block_rows(); ++i)
    for (int j = 0; j < grid.block_cols(); ++j)
      CHECK(max_abs_diff(back.block(i, j), grid.block(i, j)) == 0.0);
}

TEST_CASE("row_operator: fixed cases") {
  const OperatorFamily single({ComplexMatrix::identity(2)});
  const BlockMatrix r1 = row_operator(single);
  CHECK(r1.block_rows() == 1);
  CHECK(r1.block_cols() == 1);
  CHECK(max_abs_diff(r1.block(0, 0), ComplexMatrix::identity(2)) <= 1e-12);

  const OperatorFamily pair({ComplexMatrix::from_rows({{4.0, 0.0}, {0.0, 0.0}}),
                             ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 9.0}})});
  const BlockMatrix r2 = row_operator(pair);
  CHECK(max_abs_diff(r2.block(0, 0), ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 0.0}})) <= 1e-12);
  CHECK(max_abs_diff(r2.block(0, 1), ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 3.0}})) <= 1e-12);

  const OperatorFamily not_psd({ComplexMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}})});
  CHECK_THROWS_AS(row_operator(not_psd), NotPsdError);
}

TEST_CASE("row operator carries the norm of the family sum: ||R R*|| = ||sum A_k||") {
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const OperatorFamily family = random_psd_family(3, 3, rng);
    const ComplexMatrix r = row_operator(family).flatten();
    const double rr_star = op_norm(multiply(r, adjoint(r)));
    const double sum_norm = op_norm(family.sum());
    CHECK(std::abs(rr_star - sum_norm) <= 1e-9 * (1.0 + sum_norm));
  }
}

TEST_CASE("gram_block: structure and norm equality with the direct sum") {
  const OperatorFamily single({ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 3.0}})});
  const ComplexMatrix g1 = gram_block(single).flatten();
  CHECK(op_norm(g1 - single.member(0)) <= 1e-9 * (1.0 + op_norm(g1)));

  // mutually orthogonal projections: cross blocks vanish
  const OperatorFamily projections({ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}),
                                    ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}})});
  const BlockMatrix gram = gram_block(projections);
  CHECK(op_norm(gram.block(0, 1)) <= 1e-12);
  CHECK(op_norm(gram.block(1, 0)) <= 1e-12);

  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const OperatorFamily family = random_psd_family(4, 2, rng);
    const BlockMatrix r = row_operator(family);
    const BlockMatrix gram_rand = gram_block(family);

    // gram equals R* R blockwise
    const ComplexMatrix r_flat = r.flatten();
    CHECK(op_norm(gram_rand.flatten() - multiply(adjoint(r_flat), r_flat)) <=
          1e-9 * (1.0 + op_norm(r_flat)));

    // ||R R*|| = ||R* R||: the gram norm equals the sum norm
    const double gram_norm = op_norm(gram_rand.flatten());
    const double sum_norm = op_norm(family.sum());
    CHECK(std::abs(gram_norm - sum_norm) <= 1e-9 * (1.0 + sum_norm));
  }
}

TEST_CASE("entrywise_norm_matrix: zero blocks, singleton, compression inequality") {
  const BlockMatrix zeros({2, 2}, {2, 2},
                          {ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                           ComplexMatrix(2, 2)});
  CHECK(op_norm(entrywise_norm_matrix(zeros)) == 0.0);

  Rng rng(67);
  const ComplexMatrix t = random_matrix(3, 3, rng);
  const BlockMatrix singleton({3}, {3}, {t});
  CHECK(entrywise_norm_matrix(singleton)(0, 0).real() == doctest::Approx(op_norm(t)));

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ComplexMatrix> blocks;
    for (int b = 0; b < 4; ++b) blocks.push_back(random_matrix(2, 2, rng));
    const BlockMatrix grid({2, 2}, {2, 2}, blocks);
    const double flat_norm = op_norm(grid.flatten());
    const double entry_norm = op_norm(entrywise_norm_matrix(grid));
    CHECK(flat_norm <= entry_norm + 1e-9 * (1.0 + flat_norm));
  }
}

TEST_CASE("positive_block: zero, unitary, random positivity certificate") {
  const BlockMatrix zero_block = positive_block(ComplexMatrix(2, 2));
  CHECK(op_norm(zero_block.flatten()) == 0.0);

  Rng rng(71);
  const ComplexMatrix u = random_unitary(3, rng);
  const BlockMatrix unitary_block = positive_block(u);
  CHECK(op_norm(unitary_block.block(0, 0) - ComplexMatrix::identity(3)) <= 1e-10);
  CHECK(op_norm(unitary_block.block(1, 1) - ComplexMatrix::identity(3)) <= 1e-10);
  const auto u_eig = hermitian_eig(unitary_block.flatten());
  CHECK(u_eig.eigenvalues.front() >= -1e-10);          // factorization is rank-deficient:
  CHECK(u_eig.eigenvalues.front() <= 1e-10);           // the bottom of the spectrum is 0
  CHECK(u_eig.eigenvalues.back() == doctest::Approx(2.0).epsilon(1e-10));

  for (int trial = 0; trial < 15; ++trial) {
    const ComplexMatrix t = random_matrix(4, 4, rng);
    const auto eig = hermitian_eig(positive_block(t).flatten());
    CHECK(eig.eigenvalues.front() >= -1e-9 * (1.0 + op_norm(t)));
  }
}

TEST_CASE("assemble_P: fixed shapes and positivity") {
  Rng rng(73);
  const ComplexMatrix a = random_psd(2, rng);
  const BlockMatrix single = assemble_P(OperatorFamily({a}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(op_norm(single.block(i, j) - a) <= 1e-9 * (1.0 + op_norm(a)));

  // family of unitaries: both diagonal blocks are n I
  std::vector<ComplexMatrix> unitaries;
  for (int k = 0; k < 3; ++k) unitaries.push_back(random_unitary(2, rng));
  const BlockMatrix p = assemble_P(OperatorFamily(std::move(unitaries)));
  CHECK(op_norm(p.block(0, 0) - 3.0 * ComplexMatrix::identity(2)) <= 1e-9);
  CHECK(op_norm(p.block(1, 1) - 3.0 * ComplexMatrix::identity(2)) <= 1e-9);

  for (int trial = 0; trial < 15; ++trial) {
    std::vector<ComplexMatrix> members;
    double norm_sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      members.push_back(random_matrix(3, 3, rng));
      norm_sum += op_norm(members.back());
    }
    const auto eig = hermitian_eig(assemble_P(OperatorFamily(std::move(members))).flatten());
    CHECK(eig.eigenvalues.front() >= -1e-9 * (1.0 + norm_sum));
  }
}
