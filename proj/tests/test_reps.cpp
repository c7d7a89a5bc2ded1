#include <catch2/catch_amalgamated.hpp>

#include "charvar/solve.hpp"

using namespace charvar;
using Catch::Approx;

namespace {
MatrixRep scalar_rep(const GroupPresentation& pres, std::initializer_list<cplx> values) {
  MatrixRep rep;
  rep.group = pres;
  for (cplx v : values) {
    Matrix m(1, 1);
    m(0, 0) = v;
    rep.mats.push_back(m);
  }
  return rep;
}

MatrixRep swap_diag_rep() {
  MatrixRep rep;
  rep.group = plain_alphabet(2);
  Matrix a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 1, 0, 0, -1;
  rep.mats = {a, b};
  return rep;
}
}  // namespace

TEST_CASE("evaluate") {
  auto f2 = plain_alphabet(2);
  SECTION("identity and scalars") {
    auto rep = scalar_rep(f2, {cplx(2), cplx(3)});
    CHECK(evaluate(rep, Word()).isApprox(Matrix::Identity(1, 1)));
    Word w = Word::gen(1) * Word::gen(2) * Word::gen(1, -1);
    CHECK(std::abs(evaluate(rep, w)(0, 0) - cplx(3)) < 1e-14);
  }
  SECTION("2x2 commutator evaluates to -I") {
    Matrix got = evaluate(swap_diag_rep(), commutator(Word::gen(1), Word::gen(2)));
    CHECK(fro(got + Matrix::Identity(2, 2)) < 1e-14);
  }
  SECTION("homomorphism property on random pairs") {
    Rng rng(5);
    auto rep = random_rep(plain_alphabet(3), 2, rng);
    for (int t = 0; t < 100; ++t) {
      Word w1 = random_word(3, 8, rng), w2 = random_word(3, 8, rng);
      Matrix lhs = evaluate(rep, w1 * w2);
      Matrix rhs = evaluate(rep, w1) * evaluate(rep, w2);
      CHECK(fro(lhs - rhs) <= 1e-10 * std::max(1.0, fro(rhs)));
    }
  }
}

TEST_CASE("random_rep determinism and genericity") {
  auto f2 = plain_alphabet(2);
  auto r1 = random_rep(f2, 2, 77);
  auto r2 = random_rep(f2, 2, 77);
  for (int g = 1; g <= 2; ++g) CHECK(r1.mat(g) == r2.mat(g));
  CHECK_NOTHROW(check_invertible(r1));
  CHECK(irreducible(r1));

  auto s1 = random_rep(f2, 1, 3);
  CHECK(s1.rank() == 1);
  CHECK(irreducible(s1));  // rank 1: Schur

  // a single generator of rank >= 2 always has an invariant subspace
  auto single = random_rep(plain_alphabet(1), 2, 11);
  CHECK_FALSE(irreducible(single));
}

TEST_CASE("irreducibility via commutant dimension") {
  CHECK(irreducible(swap_diag_rep()));
  CHECK(commutant_dimension(swap_diag_rep()) == 1);

  MatrixRep scalars;
  scalars.group = plain_alphabet(2);
  scalars.mats = {2.0 * Matrix::Identity(2, 2), 5.0 * Matrix::Identity(2, 2)};
  CHECK(commutant_dimension(scalars) == 4);
  CHECK_FALSE(irreducible(scalars));
}

TEST_CASE("conjugacy test") {
  Rng rng(31);
  auto rho = random_rep(plain_alphabet(2), 2, rng);
  SECTION("identity pair") {
    auto s = conjugacy_test(rho, rho);
    REQUIRE(s.has_value());
  }
  SECTION("explicit conjugate") {
    Matrix t = rng.cgauss_matrix(2, 2);
    while (invertibility_margin(t) < 1e-3) t = rng.cgauss_matrix(2, 2);
    MatrixRep rho2 = rho;
    for (auto& m : rho2.mats) m = t * m * t.inverse();
    auto s = conjugacy_test(rho, rho2);
    REQUIRE(s.has_value());
    // conjugates agree on character signatures
    std::vector<Word> words;
    for (int i = 0; i < 20; ++i) words.push_back(random_word(2, 8, rng));
    auto sig1 = character_signature(rho, words);
    auto sig2 = character_signature(rho2, words);
    for (std::size_t i = 0; i < words.size(); ++i)
      CHECK(std::abs(sig1[i] - sig2[i]) < 1e-8 * std::max(1.0, std::abs(sig1[i])));
  }
  SECTION("distinct spectra are not conjugate") {
    MatrixRep r1, r2;
    r1.group = r2.group = plain_alphabet(1);
    Matrix d1(2, 2), d2(2, 2);
    d1 << 1, 0, 0, 2;
    d2 << 3, 0, 0, 4;
    r1.mats = {d1};
    r2.mats = {d2};
    CHECK_FALSE(conjugacy_test(r1, r2).has_value());
  }
}

TEST_CASE("character signature basics") {
  auto rep = random_rep(plain_alphabet(2), 3, 13);
  auto sig = character_signature(rep, {Word()});
  CHECK(std::abs(sig[0] - cplx(3)) < 1e-14);
}

TEST_CASE("solve_relator") {
  auto torus = surface_presentation(1, 0);
  const Word relator = *torus.relator;

  SECTION("exact seed is a fixed point") {
    MatrixRep seed;
    seed.group = torus;
    Matrix d1(2, 2), d2(2, 2);
    d1 << 2, 0, 0, 0.5;
    d2 << 3, 0, 0, 1.0 / 3.0;
    seed.mats = {d1, d2};
    auto out = solve_relator(seed, {relator_constraint(relator, 2)});
    CHECK(out.mat(1) == seed.mat(1));
    CHECK(out.mat(2) == seed.mat(2));
  }

  SECTION("perturbed commuting pair converges") {
    Rng rng(401);
    MatrixRep seed;
    seed.group = torus;
    Matrix d1 = Matrix::Zero(2, 2), d2 = Matrix::Zero(2, 2);
    d1(0, 0) = cplx(1.3, 0.2);
    d1(1, 1) = cplx(0.7, -0.4);
    d2(0, 0) = cplx(-0.5, 1.1);
    d2(1, 1) = cplx(2.0, 0.3);
    seed.mats = {d1, d2};
    seed = perturb(seed, 1e-3, rng);
    auto out = solve_relator(seed, {relator_constraint(relator, 2)});
    CHECK(relator_residual(out) < 1e-10);
  }

  SECTION("conjugacy-class constraint preserves characteristic polynomial") {
    Rng rng(402);
    auto pres = surface_presentation(0, 3);
    auto seed = random_rep(pres, 2, rng);
    Matrix target(2, 2);
    target << cplx(2), 1, 0, cplx(0.5);
    auto out = solve_relator(seed, {WordConstraint{pres.punctures[0], target, true}}, 1e-10, 400);
    auto got = char_poly(evaluate(out, pres.punctures[0]));
    auto want = char_poly(target);
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-8);
  }

  SECTION("trivial leaf target drives monodromy to the identity") {
    Rng rng(403);
    auto pres = surface_presentation(1, 1);
    auto seed = random_rep(pres, 2, rng);
    // pull the seed toward the constraint set first: scale down off-identity part
    for (auto& m : seed.mats) m = Matrix::Identity(2, 2) + 0.2 * m;
    auto out = solve_relator(seed, {WordConstraint{pres.punctures[0], Matrix::Identity(2, 2), false}});
    CHECK(fro(evaluate(out, pres.punctures[0]) - Matrix::Identity(2, 2)) < 1e-10);
  }
}
