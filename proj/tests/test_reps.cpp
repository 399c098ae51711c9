#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "imprim/rep.hpp"

using namespace imprim;
using imprim::testing::dist;
using imprim::testing::eye;

namespace {

// Commutator subgroup by closure; the sign representation is +1 exactly on
// it when the abelianization has order two.
std::set<int> commutator_subgroup(const FiniteGroup& g) {
  std::set<int> s{g.identity()};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      s.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(g.mul(a, b));
    grew = next.size() != s.size();
    s = std::move(next);
  }
  return s;
}

UnitaryRep sign_rep(const GroupPtr& g) {
  const auto comm = commutator_subgroup(*g);
  UnitaryRep rep;
  rep.group = g;
  rep.dim = 1;
  for (int a = 0; a < g->order(); ++a) {
    Matrix m(1, 1);
    m(0, 0) = comm.count(a) ? 1.0 : -1.0;
    rep.mats.push_back(m);
  }
  return rep;
}

std::vector<Complex> indicator(const GroupPtr& g, int at) {
  std::vector<Complex> f(g->order(), Complex(0, 0));
  f[at] = 1.0;
  return f;
}

UnitaryRep two_dim_irrep_of_s3(const GroupPtr& s3) {
  for (const auto& rep : irreducibles(s3))
    if (rep.dim == 2) return rep;
  FAIL("S3 has a 2-dimensional irreducible");
  return {};
}

}  // namespace

TEST_CASE("validate_rep on trivial, sign and perturbed representations") {
  const GroupPtr s3 = catalog("S3");
  CHECK(validate_rep(trivial_rep(s3)).pass);

  const UnitaryRep sign = sign_rep(s3);
  // The oracle itself: the commutator subgroup of S3 has index 2.
  REQUIRE(commutator_subgroup(*s3).size() == 3);
  CHECK(validate_rep(sign).pass);

  UnitaryRep broken = left_regular(s3);
  broken.mats[1](0, 0) += 1e-3;
  const RepReport report = validate_rep(broken);
  CHECK_FALSE(report.pass);
  const double residual =
      std::max(report.unitarity_residual, report.homomorphism_residual);
  CHECK(residual >= 0.5e-3);
  CHECK(residual <= 5e-3);
}

TEST_CASE("left_regular is the permutation action") {
  CHECK(left_regular(catalog("Z1")).dim == 1);

  const UnitaryRep z2 = left_regular(catalog("Z2"));
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(dist(z2.at(1), swap) <= 1e-15);

  const GroupPtr s3 = catalog("S3");
  const UnitaryRep reg = left_regular(s3);
  CHECK(validate_rep(reg).pass);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      Vector e = Vector::Zero(6);
      e(h) = 1.0;
      const Vector moved = reg.at(g) * e;
      for (int r = 0; r < 6; ++r)
        CHECK(std::abs(moved(r) - (r == s3->mul(g, h) ? 1.0 : 0.0)) <= 1e-15);
    }
}

TEST_CASE("restrict_rep reindexes along the subgroup") {
  const GroupPtr s3 = catalog("S3");
  const UnitaryRep reg = left_regular(s3);

  const UnitaryRep to_e = restrict_rep(reg, trivial_subgroup(s3));
  CHECK(to_e.group->order() == 1);
  CHECK(to_e.dim == 6);

  int three_cycle = -1;
  for (int a = 1; a < 6; ++a)
    if (s3->mul(a, s3->mul(a, a)) == s3->identity()) three_cycle = a;
  REQUIRE(three_cycle > 0);
  const Subgroup a3 = subgroup_from_generators(s3, {three_cycle});
  const UnitaryRep restricted = restrict_rep(reg, a3);
  CHECK(restricted.group->order() == 3);
  CHECK(restricted.dim == 6);
  CHECK(validate_rep(restricted).pass);

  // The 2-dim irrep of S3 restricted to A3 splits into the two nontrivial
  // characters: the generator's eigenvalues are the primitive cube roots.
  const UnitaryRep two = two_dim_irrep_of_s3(s3);
  const UnitaryRep two_a3 = restrict_rep(two, a3);
  const int gen_sub = a3.to_sub(three_cycle);
  Eigen::ComplexEigenSolver<Matrix> solver(two_a3.at(gen_sub));
  std::vector<Complex> ev{solver.eigenvalues()(0), solver.eigenvalues()(1)};
  const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  for (const Complex& v : ev)
    CHECK(std::min(std::abs(v - omega), std::abs(v - std::conj(omega))) <= 1e-9);
  CHECK(std::abs(ev[0] * ev[1] - Complex(1, 0)) <= 1e-9);  // conjugate pair

  const GroupPtr z4 = catalog("Z4");
  CHECK_THROWS_WITH_AS(restrict_rep(reg, trivial_subgroup(z4)),
                       doctest::Contains("NotSubgroup"), Error);
}

TEST_CASE("pi_of_f examples and the translation identity") {
  const GroupPtr s3 = catalog("S3");
  const UnitaryRep reg = left_regular(s3);

  CHECK(dist(pi_of_f(reg, indicator(s3, s3->identity())), eye(6)) <= 1e-15);
  CHECK(dist(pi_of_f(reg, indicator(s3, 4)), reg.at(4)) <= 1e-15);

  const std::vector<Complex> ones(6, Complex(1, 0));
  const Matrix all = pi_of_f(reg, ones);
  CHECK(dist(all, Matrix::Ones(6, 6)) <= 1e-12);  // row-sum oracle

  // pi(g) pi(f) = pi(f^g) for random f.
  Prng rng(3);
  std::vector<Complex> f(6);
  for (auto& v : f) v = rng.complex_normal();
  for (int g = 0; g < 6; ++g)
    CHECK(dist(reg.at(g) * pi_of_f(reg, f), pi_of_f(reg, translate_f(*s3, g, f))) <=
          1e-12);
}

TEST_CASE("intertwiner spaces: Schur, fixed vectors, disjointness") {
  const GroupPtr s3 = catalog("S3");
  const UnitaryRep two = two_dim_irrep_of_s3(s3);
  CHECK(intertwiner_space(two, two).size() == 1);

  const auto fixed = intertwiner_space(trivial_rep(s3), left_regular(s3));
  REQUIRE(fixed.size() == 1);
  // The image of the basis intertwiner is the constant vector.
  const Matrix w = fixed[0];
  for (int i = 1; i < 6; ++i) CHECK(std::abs(w(i, 0) - w(0, 0)) <= 1e-10);

  CHECK(intertwiner_space(trivial_rep(s3), sign_rep(s3)).empty());
}

TEST_CASE("decompose_rep matches the DFT and regular-representation oracles") {
  const GroupPtr z3 = catalog("Z3");
  const Decomposition dz3 = decompose_rep(left_regular(z3), 1);
  REQUIRE(dz3.classes.size() == 3);
  const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  std::set<int> seen;
  for (const auto& [rep, mult] : dz3.classes) {
    CHECK(rep.dim == 1);
    CHECK(mult == 1);
    const Complex chi = rep.at(1)(0, 0);
    for (int k = 0; k < 3; ++k)
      if (std::abs(chi - std::pow(omega, k)) <= 1e-9) seen.insert(k);
  }
  CHECK(seen.size() == 3);  // exactly the three characters

  const GroupPtr s3 = catalog("S3");
  const Decomposition ds3 = decompose_rep(left_regular(s3), 1);
  REQUIRE(ds3.classes.size() == 3);
  CHECK(ds3.classes[0].first.dim == 1);
  CHECK(ds3.classes[0].second == 1);
  CHECK(ds3.classes[1].first.dim == 1);
  CHECK(ds3.classes[1].second == 1);
  CHECK(ds3.classes[2].first.dim == 2);
  CHECK(ds3.classes[2].second == 2);  // 1 + 1 + 4 = 6

  // Irreducible input decomposes to itself.
  const UnitaryRep two = two_dim_irrep_of_s3(s3);
  const Decomposition dtwo = decompose_rep(two, 9);
  CHECK(dtwo.classes.size() == 1);
  CHECK(dtwo.classes[0].second == 1);

  // Every piece embedding realizes its class representative exactly.
  for (const auto& piece : ds3.pieces) {
    const UnitaryRep& cls = ds3.classes[piece.class_index].first;
    CHECK(dist(piece.embedding.adjoint() * piece.embedding, eye(cls.dim)) <= 1e-10);
    double residual = 0.0;
    for (int g = 0; g < 6; ++g)
      residual = std::max(residual,
                          dist(piece.embedding.adjoint() *
                                   left_regular(s3).at(g) * piece.embedding,
                               cls.at(g)));
    CHECK(residual <= 1e-10);
  }
}

TEST_CASE("decompose_rep re-sum is equivalent to the input") {
  const GroupPtr d4 = catalog("D4");
  const UnitaryRep reg = left_regular(d4);
  const Decomposition dec = decompose_rep(reg, 4);

  // Assemble the block-diagonal direct sum and the unitary from the pieces.
  int total = 0;
  for (const auto& piece : dec.pieces)
    total += dec.classes[piece.class_index].first.dim;
  REQUIRE(total == reg.dim);

  Matrix q(reg.dim, reg.dim);
  int offset = 0;
  UnitaryRep direct;
  direct.group = d4;
  direct.dim = reg.dim;
  direct.mats.assign(d4->order(), Matrix::Zero(reg.dim, reg.dim));
  for (const auto& piece : dec.pieces) {
    const UnitaryRep& cls = dec.classes[piece.class_index].first;
    q.middleCols(offset, cls.dim) = piece.embedding;
    for (int g = 0; g < d4->order(); ++g)
      direct.mats[g].block(offset, offset, cls.dim, cls.dim) = cls.at(g);
    offset += cls.dim;
  }
  CHECK(dist(q.adjoint() * q, eye(reg.dim)) <= 1e-10);
  for (int g = 0; g < d4->order(); ++g)
    CHECK(dist(q.adjoint() * reg.at(g) * q, direct.at(g)) <= 1e-9);

  // And through the public API: a unitary equivalence exists.
  CHECK(equivalence_unitary(direct, reg).has_value());
}

TEST_CASE("equivalence_unitary finds and refuses correctly") {
  const GroupPtr s3 = catalog("S3");
  const UnitaryRep reg = left_regular(s3);

  const auto self = equivalence_unitary(reg, reg);
  REQUIRE(self.has_value());
  double residual = 0.0;
  for (int g = 0; g < 6; ++g)
    residual = std::max(residual, dist(*self * reg.at(g), reg.at(g) * *self));
  CHECK(residual <= 1e-10);

  Prng rng(77);
  const Matrix u = random_unitary(rng, 6);
  const UnitaryRep conj = conjugate_rep(reg, u);
  const auto found = equivalence_unitary(conj, reg);
  REQUIRE(found.has_value());
  for (int g = 0; g < 6; ++g)
    CHECK(dist(*found * conj.at(g), reg.at(g) * *found) <= 1e-10);

  CHECK_FALSE(equivalence_unitary(trivial_rep(s3), sign_rep(s3)).has_value());
}

TEST_CASE("hom dimension is conjugation symmetric") {
  const GroupPtr s3 = catalog("S3");
  const auto irreps = irreducibles(s3);
  const UnitaryRep reg = left_regular(s3);
  for (const auto& a : irreps) {
    CHECK(hom_dimension(a, reg) == hom_dimension(reg, a));
    CHECK(hom_dimension(a, reg) == a.dim);  // regular-representation count
    for (const auto& b : irreps)
      CHECK(hom_dimension(a, b) == hom_dimension(b, a));
  }
}
