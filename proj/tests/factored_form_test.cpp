#include <doctest.h>

#include <cmath>
#include <sstream>

#include "haareig/factored_form.hpp"
#include "oracles.hpp"

using namespace haareig;

TEST_CASE("SampleSpec: validation rules") {
  SampleSpec bad_n;
  bad_n.n = 0;
  CHECK_THROWS_AS(bad_n.validate(), std::invalid_argument);

  SampleSpec bad_mod;
  bad_mod.det_phase = cplx{2.0, 0.0};
  CHECK_THROWS_AS(bad_mod.validate(), std::invalid_argument);

  SampleSpec real_phase;
  real_phase.field = Field::Real;
  real_phase.det_phase = std::polar(1.0, 0.7);
  CHECK_THROWS_AS(real_phase.validate(), std::invalid_argument);

  SampleSpec ok;
  ok.n = 4;
  ok.field = Field::Real;
  ok.det_phase = cplx{-1.0};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("sample_householder_form: n=1 is a bare uniform phase") {
  RngStream rng(1);
  SampleSpec spec;
  spec.n = 1;
  const HouseholderFactorization h = sample_householder_form(spec, rng);
  CHECK(h.pairs.empty());
  REQUIRE(h.phases.size() == 1);
  CHECK(h.phases[0] > -kPi);
  CHECK(h.phases[0] <= kPi);
}

TEST_CASE("sample_householder_form: beta_1^2 at n=2 has unit mean") {
  RngStream rng(2);
  SampleSpec spec;
  spec.n = 2;
  double mean = 0.0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const HouseholderFactorization h = sample_householder_form(spec, rng);
    mean += h.pairs[0].beta * h.pairs[0].beta;
  }
  CHECK(std::abs(mean / trials - 1.0) < 0.02);
}

TEST_CASE("sample_householder_form: implied reflectors are unitary") {
  RngStream rng(3);
  SampleSpec spec;
  spec.n = 7;
  for (int t = 0; t < 50; ++t) {
    const HouseholderFactorization h = sample_householder_form(spec, rng);
    for (const auto& p : h.pairs) {
      const Mat2 blk = householder_block(p);
      const Mat2 gram = mul2({std::conj(blk[0]), std::conj(blk[2]),
                              std::conj(blk[1]), std::conj(blk[3])},
                             blk);
      CHECK(std::abs(gram[0] - cplx{1.0}) <= 1e-13);
      CHECK(std::abs(gram[1]) <= 1e-13);
      CHECK(std::abs(gram[3] - cplx{1.0}) <= 1e-13);
    }
  }
}

TEST_CASE("refactor_to_rotations: degenerate beta = 0 keeps dense equality") {
  HouseholderFactorization h;
  h.n = 2;
  h.pairs = {{cplx{1.25, 0.0}, 0.0}};
  h.phases = {0.0, kPi / 5.0};
  const DescendingFactorization f = refactor_to_rotations(h);
  CHECK(f.rotations[0].s == 0.0);
  CHECK(oracles::max_abs_diff(to_dense(f), oracles::householder_dense(h)) <=
        1e-14);
}

TEST_CASE("refactor_to_rotations: dense agreement on random draws") {
  RngStream rng(4);
  for (Field field : {Field::Complex, Field::Real}) {
    SampleSpec spec;
    spec.n = 5;
    spec.field = field;
    for (int t = 0; t < 200; ++t) {
      const HouseholderFactorization h = sample_householder_form(spec, rng);
      const DescendingFactorization f = refactor_to_rotations(h);
      CHECK(oracles::max_abs_diff(to_dense(f), oracles::householder_dense(h)) <=
            1e-13);
    }
  }
}

TEST_CASE("refactor_to_rotations: determinant preserved (cofactor oracle)") {
  RngStream rng(5);
  for (int n : {2, 4, 8}) {
    SampleSpec spec;
    spec.n = n;
    const HouseholderFactorization h = sample_householder_form(spec, rng);
    const DescendingFactorization f = refactor_to_rotations(h);
    const cplx dense_det = oracles::cofactor_det(to_dense(f), n);
    CHECK(std::abs(determinant(f) - dense_det) <= 1e-12);
  }
}

TEST_CASE("sample_descending: n=1") {
  RngStream rng(6);
  SampleSpec spec;
  spec.n = 1;
  const DescendingFactorization f = sample_descending(spec, rng);
  CHECK(f.rotations.empty());
  REQUIRE(f.diagonal.size() == 1);
  CHECK(std::abs(std::abs(f.diagonal[0]) - 1.0) <= 1e-15);
}

TEST_CASE("sample_descending: transcript-matched equality with the pipeline") {
  RngStream base(7);
  int variant = 0;
  for (int n : {1, 2, 3, 6, 11, 16}) {
    for (int seed = 0; seed < 20; ++seed) {
      SampleSpec spec;
      spec.n = n;
      spec.field = variant % 2 == 0 ? Field::Complex : Field::Real;
      if (variant % 3 == 2)
        spec.det_phase = spec.field == Field::Real
                             ? cplx{-1.0}
                             : cplx{std::polar(1.0, 1.1)};
      ++variant;
      RngStream a = base.child(100 * n + seed);
      RngStream b = base.child(100 * n + seed);
      const DescendingFactorization direct = sample_descending(spec, a);
      const DescendingFactorization staged =
          refactor_to_rotations(sample_householder_form(spec, b));
      CHECK(oracles::max_abs_diff(to_dense(direct), to_dense(staged)) <=
            1e-13 * std::max(1, n));
    }
  }
}

TEST_CASE("sample_descending: real field gives real rotations, +-1 diagonal") {
  RngStream rng(8);
  SampleSpec spec;
  spec.n = 9;
  spec.field = Field::Real;
  spec.det_phase = cplx{-1.0};
  for (int t = 0; t < 100; ++t) {
    RngStream r = rng.child(t);
    const DescendingFactorization f = sample_descending(spec, r);
    for (const CoreRotation& g : f.rotations) CHECK(g.c.imag() == 0.0);
    for (const cplx& d : f.diagonal) {
      CHECK(d.imag() == 0.0);
      CHECK(std::abs(std::abs(d.real()) - 1.0) <= 1e-13);
    }
    CHECK(std::abs(determinant(f) - cplx{-1.0}) <= 1e-13);
  }
}

TEST_CASE("sample_descending: det constraint lands exactly") {
  RngStream rng(9);
  SampleSpec spec;
  spec.n = 10;
  spec.det_phase = cplx{1.0};
  for (int t = 0; t < 100; ++t) {
    RngStream r = rng.child(t);
    const DescendingFactorization f = sample_descending(spec, r);
    CHECK(std::abs(determinant(f) - cplx{1.0}) <= 1e-12);
  }
}

TEST_CASE("to_dense: order 1 and the hand-multiplied order 3 case") {
  DescendingFactorization one;
  one.n = 1;
  one.rotations = {};
  one.diagonal = {std::polar(1.0, 0.3)};
  const std::vector<cplx> m1 = to_dense(one);
  CHECK(m1.size() == 1);
  CHECK(std::abs(m1[0] - std::polar(1.0, 0.3)) == 0.0);

  // two quarter rotations, identity diagonal; product computed by hand
  DescendingFactorization f;
  f.n = 3;
  f.rotations = {CoreRotation{{0.0, 0.0}, 1.0}, CoreRotation{{0.0, 0.0}, 1.0}};
  f.diagonal = {cplx{1.0}, cplx{1.0}, cplx{1.0}};
  const std::vector<cplx> m = to_dense(f);
  const std::vector<cplx> expected = {
      cplx{0.0}, cplx{0.0},  cplx{1.0},  //
      cplx{-1.0}, cplx{0.0}, cplx{0.0},  //
      cplx{0.0}, cplx{-1.0}, cplx{0.0}};
  CHECK(oracles::max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("to_dense: unitary, Hessenberg with exact zeros, cap enforced") {
  RngStream rng(10);
  SampleSpec spec;
  spec.n = 50;
  const DescendingFactorization f = sample_descending(spec, rng);
  const std::vector<cplx> h = to_dense(f);
  CHECK(oracles::gram_defect_dense(h, 50) <= 1e-12);
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j + 1 < i; ++j) CHECK(h[std::size_t(i) * 50 + j] == cplx{0.0});

  DescendingFactorization big;
  big.n = 3000;
  big.rotations.assign(2999, CoreRotation{});
  big.diagonal.assign(3000, cplx{1.0});
  CHECK_THROWS_AS(to_dense(big), std::length_error);
}

TEST_CASE("entry: agrees with to_dense everywhere") {
  RngStream rng(11);
  SampleSpec spec;
  spec.n = 8;
  const DescendingFactorization f = sample_descending(spec, rng);
  const std::vector<cplx> h = to_dense(f);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(std::abs(entry(f, i, j) - h[std::size_t(i) * 8 + j]) <= 1e-13);
  CHECK(entry(f, 5, 2) == cplx{0.0});  // below the subdiagonal, exact
  // |h_{j+1,j}| = |s_j|
  for (int j = 0; j < 7; ++j)
    CHECK(std::abs(std::abs(entry(f, j + 1, j)) - std::abs(f.rotations[j].s)) <=
          1e-14);
}

TEST_CASE("determinant: diagonal case and cofactor oracle") {
  DescendingFactorization f;
  f.n = 3;
  f.rotations.assign(2, CoreRotation{});
  f.diagonal = {cplx{1.0}, cplx{1.0}, cplx{1.0}};
  CHECK(determinant(f) == cplx{1.0});

  RngStream rng(12);
  SampleSpec spec;
  spec.n = 6;
  const DescendingFactorization g = sample_descending(spec, rng);
  CHECK(std::abs(determinant(g) - oracles::cofactor_det(to_dense(g), 6)) <=
        1e-12);
  CHECK(std::abs(std::abs(determinant(g)) - 1.0) <= 1e-13);
}

TEST_CASE("serialization: exact round trip") {
  RngStream rng(13);
  for (Field field : {Field::Complex, Field::Real}) {
    SampleSpec spec;
    spec.n = 6;
    spec.field = field;
    const DescendingFactorization f = sample_descending(spec, rng);
    std::stringstream buf;
    write_factorization(buf, f, field);
    auto [g, field_in] = read_factorization(buf);
    CHECK(field_in == field);
    REQUIRE(g.n == f.n);
    for (int j = 0; j < f.n - 1; ++j) {
      CHECK(g.rotations[j].c == f.rotations[j].c);
      CHECK(g.rotations[j].s == f.rotations[j].s);
    }
    for (int i = 0; i < f.n; ++i) CHECK(g.diagonal[i] == f.diagonal[i]);
  }
  std::stringstream bad("4 quaternion\n");
  CHECK_THROWS_AS(read_factorization(bad), std::runtime_error);
}
