#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "hadsub/hadamard.hpp"
#include "hadsub/matrix_io.hpp"
#include "test_support.hpp"

using namespace hadsub;
using namespace hadsub::testing;

namespace {

const Complex I{0.0, 1.0};

Matrix rows(std::initializer_list<std::initializer_list<Complex>> r) {
  Matrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

void write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST(Verify, AcceptsFourierTwo) {
  const HadamardCheck c = verify_hadamard(rows({{1, 1}, {1, -1}}));
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.matrix->n(), 2u);
  EXPECT_NEAR(std::abs(c.matrix->unitary()(0, 0)), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Verify, NamesBadModulusEntry) {
  const HadamardCheck c = verify_hadamard(rows({{1, 1}, {1, -0.5}}));
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.diagnostic->kind, HadamardDiagnostic::Kind::entry_modulus);
  EXPECT_EQ(c.diagnostic->row, 2u);
  EXPECT_EQ(c.diagnostic->col, 2u);
  EXPECT_NE(c.diagnostic->message().find("entry (2,2)"), std::string::npos);
  EXPECT_THROW(c.value(), InputError);
}

TEST(Verify, NamesNonOrthogonalRows) {
  const HadamardCheck c = verify_hadamard(rows({{1, 1, 1}, {1, 1, 1}, {1, -1, 1}}));
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.diagnostic->kind, HadamardDiagnostic::Kind::row_orthogonality);
}

TEST(Verify, RejectsMalformedInput) {
  EXPECT_THROW(verify_hadamard(Matrix::Ones(2, 3)), InputError);
  EXPECT_THROW(verify_hadamard(Matrix(0, 0)), InputError);
  Matrix nan = Matrix::Ones(2, 2);
  nan(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(verify_hadamard(nan), InputError);
  EXPECT_THROW(verify_hadamard(rows({{1, 1}, {1, -1}}), 0.0), InputError);
}

TEST(Verify, ToleranceIsHonoured) {
  Matrix m = rows({{1, 1}, {1, -1}});
  m(1, 1) *= 1.0 + 1e-6;
  EXPECT_FALSE(verify_hadamard(m, 1e-9).ok());
  EXPECT_TRUE(verify_hadamard(m, 1e-5).ok());
}

TEST(Dephase, FirstRowAndColumnAreOnes) {
  const HadamardMatrix h = random_equivalence(family(Family::f4, {0.3}), 7);
  const HadamardMatrix d = dephase(h);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(d(0, i) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(d(i, 0) - 1.0), 0.0, 1e-12);
  }
}

TEST(Catalog, FourierEntriesArePowersOfOmega) {
  const Matrix f = fourier_entries(3);
  const Complex w = unit(2.0 * std::numbers::pi / 3.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(f(i, j) - std::pow(w, (i + 1) * (j + 1))), 0.0, 1e-12);
}

TEST(Catalog, F4AtOneIsTensorSquareOfF2) {
  // F_4(1) is F_2 (x) F_2 with the middle two rows swapped
  const Matrix h = family(Family::f4, {0.0}).mat();
  const Matrix f2 = rows({{1, 1}, {1, -1}});
  const Matrix t = kron(f2, f2);
  const int perm[4] = {0, 2, 1, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(h(i, j) - t(perm[i], j)), 0.0, 1e-12);
}

TEST(Catalog, EveryFamilyIsHadamardAtRandomParameters) {
  for (Family f : all_families()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      FamilySpec spec{f, f == Family::fourier ? std::vector<double>{5.0 + static_cast<double>(seed)}
                                               : generic_params(f, seed)};
      EXPECT_NO_THROW(catalog_matrix(spec)) << family_name(f) << " seed " << seed;
    }
  }
}

TEST(Catalog, ValidationRejectsBadSpecs) {
  EXPECT_THROW(validate(FamilySpec{Family::f4, {}}), InputError);
  EXPECT_THROW(validate(FamilySpec{Family::f6, {0.1}}), InputError);
  EXPECT_THROW(validate(FamilySpec{Family::bn6, {0.5}}), InputError);
  EXPECT_THROW(validate(FamilySpec{Family::fourier, {2.5}}), InputError);
  EXPECT_NO_THROW(validate(FamilySpec{Family::bn6, {bn6_min_angle()}}));
  EXPECT_EQ(parse_family("haagerup"), Family::haagerup);
  EXPECT_FALSE(parse_family("f5").has_value());
}

TEST(Catalog, BnSixIsSelfAdjointAcrossItsDomain) {
  const double lo = bn6_min_angle();
  for (int s = 0; s <= 20; ++s) {
    const double theta = lo + (std::numbers::pi - lo) * s / 20.0;
    for (double sign : {1.0, -1.0}) {
      const Matrix m = catalog_entries(FamilySpec{Family::bn6, {sign * theta}});
      EXPECT_TRUE(verify_hadamard(m).ok()) << sign * theta;
      EXPECT_LT(max_norm(m - m.adjoint()), 1e-9) << sign * theta;
    }
  }
}

TEST(Fingerprint, InvariantUnderEquivalence) {
  for (const auto& s : catalog_samples()) {
    const auto fp = equivalence_fingerprint(s.h);
    EXPECT_EQ(fp.size(), s.h.n() * s.h.n() * s.h.n() * s.h.n());
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      EXPECT_EQ(equivalence_fingerprint(random_equivalence(s.h, seed)), fp) << s.name;
  }
}

TEST(Fingerprint, SeparatesInequivalentMatrices) {
  const auto a = fingerprint_digest(equivalence_fingerprint(family(Family::f4, {0.0})));
  const auto b = fingerprint_digest(equivalence_fingerprint(family(Family::f4, {0.7})));
  EXPECT_EQ(a.size(), 64u);
  EXPECT_NE(a, b);
}

TEST(RandomEquivalence, IsDeterministicAndHadamard) {
  const HadamardMatrix h = family(Family::f6, {0.4, 1.1});
  const HadamardMatrix a = random_equivalence(h, 11), b = random_equivalence(h, 11);
  EXPECT_EQ(a.mat(), b.mat());
  EXPECT_NE(a.mat(), random_equivalence(h, 12).mat());
}

TEST(Dita, EntriesFollowBlockFormula) {
  const Matrix a = rows({{1, 1}, {1, -1}});
  const std::vector<Matrix> b = {rows({{1, 1}, {1, -1}}), rows({{1, I}, {1, -I}})};
  const Matrix h = dita_entries(a, b);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i0 = 0; i0 < 2; ++i0)
        for (int j0 = 0; j0 < 2; ++j0)
          EXPECT_EQ(h(i1 * 2 + i0, j1 * 2 + j0), a(i1, j1) * b[static_cast<std::size_t>(j1)](i0, j0));
  EXPECT_TRUE(verify_hadamard(h).ok());
}

TEST(Dita, RejectsBadDiagonals) {
  const Matrix a = rows({{1, 1}, {1, -1}});
  const std::vector<Matrix> b = {a, a};
  EXPECT_THROW(dita_entries(a, b, {Matrix::Ones(2, 2), identity(2)}), InputError);
  EXPECT_THROW(dita_entries(a, b, {2.0 * identity(2), identity(2)}), InputError);
  EXPECT_THROW(dita_entries(a, {a}), InputError);
}

TEST(MatrixIo, ParsesPlainTextTokens) {
  const Matrix m = parse_matrix_text("1 i\n1 -i\n");
  EXPECT_EQ(m(0, 1), I);
  EXPECT_EQ(m(1, 1), -I);
  const Matrix z = parse_matrix_text("0.5+0.25i -2i\n1e-3-2i +i\n");
  EXPECT_EQ(z(0, 0), Complex(0.5, 0.25));
  EXPECT_EQ(z(0, 1), Complex(0.0, -2.0));
  EXPECT_EQ(z(1, 0), Complex(1e-3, -2.0));
  EXPECT_EQ(z(1, 1), I);
}

TEST(MatrixIo, ReportsLineAndColumn) {
  try {
    parse_matrix_text("1 1\n1 x1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_matrix_text("{\"n\": 2,\n \"entries\": [[[1,0],[1,0]],\n [[1,0] [-1,0]]]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_matrix_text("{\"n\": 2, \"entries\": [[[1,0]]]}"), ParseError);
  EXPECT_THROW(parse_matrix_text("1 1\n1\n"), ParseError);
}

TEST(MatrixIo, HalfModulusFileGivesDiagnostic) {
  const std::string path = temp_path("half.txt");
  write(path, "1 1\n1 -0.5\n");
  const HadamardCheck c = parse_matrix_file(path);
  ASSERT_FALSE(c.ok());
  EXPECT_NE(c.diagnostic->message().find("(2,2)"), std::string::npos);
}

TEST(MatrixIo, ValidF4JsonParses) {
  const std::string path = temp_path("f4.json");
  write(path, matrix_to_json(family(Family::f4, {0.3}).mat()));
  const HadamardCheck c = parse_matrix_file(path);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.matrix->n(), 4u);
}

TEST(MatrixIo, CatalogRoundTripIsBitwiseStable) {
  for (const auto& s : catalog_samples()) {
    const std::string json = matrix_to_json(s.h.mat());
    const Matrix back = parse_matrix_text(json);
    EXPECT_EQ(back, s.h.mat()) << s.name;
    EXPECT_EQ(matrix_to_json(back), json) << s.name;
  }
}
