#include <doctest.h>

#include <cmath>

#include "haareig/core_rotation.hpp"
#include "haareig/haar_dense.hpp"
#include "haareig/rng.hpp"
#include "oracles.hpp"

using namespace haareig;

namespace {

double mat_err(const Mat2& a, const Mat2& b) {
  double w = 0.0;
  for (int i = 0; i < 4; ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

double mat3_err(const Mat3& a, const Mat3& b) {
  double w = 0.0;
  for (int i = 0; i < 9; ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

CoreRotation random_rotation(RngStream& rng) {
  return make_rotation(std_normal_complex(rng), std_normal_real(rng));
}

Mat2 random_unitary2(RngStream& rng) {
  const DenseMatrix q = sample_haar_dense(2, Field::Complex, rng);
  return {q(0, 0), q(0, 1), q(1, 0), q(1, 1)};
}

}  // namespace

TEST_CASE("rotation_from_unitary2: identity and the pi/2 rotation") {
  {
    auto [g, d] = rotation_from_unitary2(Mat2{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}});
    CHECK(g.c == cplx{1.0});
    CHECK(g.s == 0.0);
    CHECK(d.d1 == cplx{1.0});
    CHECK(d.d2 == cplx{1.0});
  }
  {
    auto [g, d] = rotation_from_unitary2(Mat2{cplx{0.0}, cplx{1.0}, cplx{-1.0}, cplx{0.0}});
    CHECK(std::abs(g.c) == 0.0);
    CHECK(g.s == doctest::Approx(-1.0));
    CHECK(std::abs(d.d1 - cplx{-1.0}) < 1e-15);
    CHECK(std::abs(d.d2 - cplx{-1.0}) < 1e-15);
  }
}

TEST_CASE("rotation_from_unitary2: reconstructs random unitaries") {
  RngStream rng(100);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Mat2 u = random_unitary2(rng);
    auto [g, d] = rotation_from_unitary2(u);
    CHECK(std::abs(std::imag(cplx{g.s})) == 0.0);
    worst = std::max(worst, mat_err(mul2(dense2(g), dense2(d)), u));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("rotation_from_unitary2: rejects non-unitary input") {
  CHECK_THROWS_AS(
      rotation_from_unitary2(Mat2{cplx{1.1}, cplx{0.0}, cplx{0.0}, cplx{1.0}}),
      std::domain_error);
}

TEST_CASE("fuse: identity cases") {
  const CoreRotation g = make_rotation(cplx{0.6, 0.0}, -0.8);
  {
    auto [r, d] = fuse(g, CoreRotation{});
    CHECK(std::abs(r.c - g.c) < 1e-15);
    CHECK(r.s == doctest::Approx(g.s));
    CHECK(std::abs(d.d1 - cplx{1.0}) < 1e-15);
    CHECK(std::abs(d.d2 - cplx{1.0}) < 1e-15);
  }
  {
    auto [r, d] = fuse(g, conj_transpose(g));
    CHECK(std::abs(r.c - cplx{1.0}) < 1e-14);
    CHECK(std::abs(r.s) < 1e-14);
    CHECK(std::abs(d.d1 - cplx{1.0}) < 1e-14);
    CHECK(std::abs(d.d2 - cplx{1.0}) < 1e-14);
  }
}

TEST_CASE("fuse: random pairs against the dense product") {
  RngStream rng(101);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const CoreRotation a = random_rotation(rng), b = random_rotation(rng);
    auto [r, d] = fuse(a, b);
    worst = std::max(worst, mat_err(mul2(dense2(r), dense2(d)),
                                    mul2(dense2(a), dense2(b))));
    CHECK(unit_defect(r) <= 1e-14);
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("passthrough_left: worked example and identity") {
  {
    auto [g, d] = passthrough_left(DiagonalPair{}, make_rotation(cplx{0.6}, 0.8));
    CHECK(g.c == cplx{0.6});
    CHECK(g.s == 0.8);
    CHECK(d.d1 == cplx{1.0});
    CHECK(d.d2 == cplx{1.0});
  }
  {
    // d = (i, -i), g = (3/5, 4/5): cosine picks up i * conj(-i) = -1
    auto [g, d] = passthrough_left(DiagonalPair{{0.0, 1.0}, {0.0, -1.0}},
                                   CoreRotation{cplx{0.6}, 0.8});
    CHECK(std::abs(g.c - cplx{-0.6}) < 1e-15);
    CHECK(g.s == 0.8);
    CHECK(std::abs(d.d1 - cplx{0.0, -1.0}) < 1e-15);
    CHECK(std::abs(d.d2 - cplx{0.0, 1.0}) < 1e-15);
  }
}

TEST_CASE("passthrough: dense equality and round trip") {
  RngStream rng(102);
  double worst_dense = 0.0, worst_round = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const CoreRotation g = random_rotation(rng);
    const DiagonalPair d{std::polar(1.0, uniform_phase(rng)),
                         std::polar(1.0, uniform_phase(rng))};
    auto [gl, dl] = passthrough_left(d, g);
    CHECK(gl.s == g.s);  // sine untouched, exactly
    worst_dense = std::max(worst_dense, mat_err(mul2(dense2(d), dense2(g)),
                                                mul2(dense2(gl), dense2(dl))));
    auto [dr, gr] = passthrough_right(g, d);
    worst_dense = std::max(worst_dense, mat_err(mul2(dense2(g), dense2(d)),
                                                mul2(dense2(dr), dense2(gr))));
    // left then right with the swapped pair round-trips
    auto [d2, g2] = passthrough_right(gl, dl);
    worst_round = std::max(worst_round, std::abs(g2.c - g.c));
    worst_round = std::max(worst_round, std::abs(d2.d1 - d.d1));
    worst_round = std::max(worst_round, std::abs(d2.d2 - d.d2));
  }
  CHECK(worst_dense <= 1e-15);
  CHECK(worst_round <= 1e-14);
}

TEST_CASE("turnover: trivial patterns") {
  const IndexedRotation id0{CoreRotation{}, 0}, id1{CoreRotation{}, 1};
  {
    const TurnoverResult r = turnover(id0, id1, id0);
    CHECK(mat3_err(dense3(r.first, r.second, r.third),
                   dense3(id0, id1, id0)) <= 1e-15);
  }
  {
    RngStream rng(103);
    const IndexedRotation b{random_rotation(rng), 1};
    const TurnoverResult r = turnover(id0, b, id0);
    CHECK(mat3_err(dense3(r.first, r.second, r.third),
                   dense3(id0, b, id0)) <= 1e-14);
  }
}

TEST_CASE("turnover: random triples match the dense oracle") {
  RngStream rng(104);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const IndexedRotation a{random_rotation(rng), 3};
    const IndexedRotation b{random_rotation(rng), 4};
    const IndexedRotation c{random_rotation(rng), 3};
    const TurnoverResult r = turnover(a, b, c);
    CHECK(r.first.plane == 4);
    CHECK(r.second.plane == 3);
    CHECK(r.third.plane == 4);
    // compare in local 3x3 coordinates
    const IndexedRotation la{a.rot, 0}, lb{b.rot, 1}, lc{c.rot, 0};
    const IndexedRotation lf{r.first.rot, 1}, ls{r.second.rot, 0},
        lt{r.third.rot, 1};
    worst = std::max(worst, mat3_err(dense3(la, lb, lc), dense3(lf, ls, lt)));
    for (const IndexedRotation* g : {&r.first, &r.second, &r.third})
      CHECK(unit_defect(g->rot) <= 1e-14);
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("turnover: diagonal product is flagged degenerate") {
  RngStream rng(105);
  for (int i = 0; i < 100; ++i) {
    const IndexedRotation a{{std::polar(1.0, uniform_phase(rng)), 0.0}, 0};
    const IndexedRotation b{{std::polar(1.0, uniform_phase(rng)), 0.0}, 1};
    const IndexedRotation c{{std::polar(1.0, uniform_phase(rng)), 0.0}, 0};
    const TurnoverResult r = turnover(a, b, c);
    CHECK(r.degenerate);
    CHECK(r.first.rot.s == 0.0);
    CHECK(r.second.rot.s == 0.0);
    CHECK(r.third.rot.s == 0.0);
    CHECK(mat3_err(dense3(a, b, c), dense3(r.first, r.second, r.third)) <=
          1e-14);
  }
}

TEST_CASE("turnover: flipped pattern inverts up to refactoring") {
  RngStream rng(106);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const IndexedRotation a{random_rotation(rng), 0};
    const IndexedRotation b{random_rotation(rng), 1};
    const IndexedRotation c{random_rotation(rng), 0};
    const TurnoverResult down = turnover(a, b, c);
    const TurnoverResult up = turnover_flipped(down.first, down.second, down.third);
    CHECK(up.first.plane == 0);
    CHECK(up.second.plane == 1);
    CHECK(up.third.plane == 0);
    worst = std::max(worst, mat3_err(dense3(a, b, c),
                                     dense3(up.first, up.second, up.third)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("turnover: rejects bad plane patterns") {
  const IndexedRotation g0{CoreRotation{}, 0}, g2{CoreRotation{}, 2};
  CHECK_THROWS_AS(turnover(g0, g2, g0), std::invalid_argument);
}

TEST_CASE("dense2/dense3: pinned values") {
  const Mat2 id = dense2(CoreRotation{});
  CHECK(id[0] == cplx{1.0});
  CHECK(id[3] == cplx{1.0});
  const Mat2 quarter = dense2(CoreRotation{{0.0, 0.0}, 1.0});
  CHECK(quarter[1] == cplx{1.0});
  CHECK(quarter[2] == cplx{-1.0});
}

TEST_CASE("make_rotation: normalization invariant") {
  RngStream rng(107);
  for (int i = 0; i < 10000; ++i) {
    const CoreRotation g = random_rotation(rng);
    CHECK(unit_defect(g) <= 1e-14);
  }
}

TEST_CASE("eliminate_second: zeroes the second component") {
  RngStream rng(108);
  for (int i = 0; i < 1000; ++i) {
    const cplx a = std_normal_complex(rng), b = std_normal_complex(rng);
    const CoreRotation g = eliminate_second(a, b);
    const cplx second = -g.s * a + std::conj(g.c) * b;
    CHECK(std::abs(second) <= 1e-14 * std::hypot(std::abs(a), std::abs(b)));
  }
  const CoreRotation id = eliminate_second(cplx{0.5}, cplx{0.0});
  CHECK(id.c == cplx{1.0});
  CHECK(id.s == 0.0);
}
