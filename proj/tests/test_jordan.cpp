#include <array>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dualpair/fp.hpp"
#include "dualpair/jordan.hpp"
#include "dualpair/octonion.hpp"

using namespace dualpair;
using OQ = Oct<Rat>;
using JQ = Jor<Rat>;

namespace {

OQ rnd_oct(std::mt19937_64& rng) {
  OQ o;
  for (int i = 0; i < 8; ++i) o.c[i] = rat(static_cast<long long>(rng() % 11) - 5);
  return o;
}

JQ rnd_jor(std::mt19937_64& rng) {
  JQ A;
  A.a = rat(static_cast<long long>(rng() % 11) - 5);
  A.b = rat(static_cast<long long>(rng() % 11) - 5);
  A.c = rat(static_cast<long long>(rng() % 11) - 5);
  A.x = rnd_oct(rng);
  A.y = rnd_oct(rng);
  A.z = rnd_oct(rng);
  return A;
}

// Independent oracle: realize the element as an octonionic Hermitian matrix
// and symmetrize the literal matrix product.
using OMat = std::array<std::array<OQ, 3>, 3>;

OMat to_mat(const JQ& A) {
  OMat m;
  m[0] = {OQ::scalar(A.a), A.z, oct_conj(A.y)};
  m[1] = {oct_conj(A.z), OQ::scalar(A.b), A.x};
  m[2] = {A.y, oct_conj(A.x), OQ::scalar(A.c)};
  return m;
}

OMat mat_mul(const OMat& M, const OMat& N) {
  OMat P;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      OQ s;
      for (int k = 0; k < 3; ++k) s = s + M[i][k] * N[k][j];
      P[i][j] = s;
    }
  return P;
}

Rat scalar_part(const OQ& o) {
  for (int i = 0; i < 8; ++i)
    if (i != S4 && i != T4) REQUIRE(o.c[i] == 0);
  REQUIRE(o.c[S4] == o.c[T4]);
  return o.c[S4];
}

JQ from_mat(const OMat& P) {
  // The symmetrized product of Hermitian matrices is Hermitian again.
  REQUIRE(P[1][0] == oct_conj(P[0][1]));
  REQUIRE(P[2][0] == oct_conj(P[0][2]));
  REQUIRE(P[2][1] == oct_conj(P[1][2]));
  JQ A;
  A.a = scalar_part(P[0][0]);
  A.b = scalar_part(P[1][1]);
  A.c = scalar_part(P[2][2]);
  A.z = P[0][1];
  A.x = P[1][2];
  A.y = P[2][0];
  return A;
}

JQ oracle_mul(const JQ& A, const JQ& B) {
  OMat M = to_mat(A), N = to_mat(B);
  OMat MN = mat_mul(M, N), NM = mat_mul(N, M);
  OMat S;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) S[i][j] = rat(1, 2) * (MN[i][j] + NM[i][j]);
  return from_mat(S);
}

}  // namespace

TEST_CASE("identity element and diagonal products") {
  JQ I = JQ::identity();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    JQ A = rnd_jor(rng);
    CHECK(jordan_mul(I, A) == A);
    CHECK(jordan_mul(A, I) == A);
  }
  CHECK(jtrace(I) == 3);
  CHECK(jdet(I) == 1);
  CHECK(jsharp(I) == I);
  JQ D = JQ::diag(rat(2), rat(-3), rat(5));
  JQ E = JQ::diag(rat(7), rat(1), rat(-2));
  CHECK(jordan_mul(D, E) == JQ::diag(rat(14), rat(-3), rat(-10)));
  CHECK(jdet(D) == -30);
}

TEST_CASE("jordan product matches the octonionic matrix oracle") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) {
    JQ A = rnd_jor(rng), B = rnd_jor(rng);
    CHECK(jordan_mul(A, B) == oracle_mul(A, B));
    CHECK(jordan_mul(A, B) == jordan_mul(B, A));
  }
}

TEST_CASE("trace pairing and cubic norm identities") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    JQ A = rnd_jor(rng), B = rnd_jor(rng);
    CHECK(jpair(A, B) == jtrace(jordan_mul(A, B)));
    CHECK(jpair(A, B) == jpair(B, A));
    // tr(A# , A) = 3 det A and the adjoint identity (A#)# = det(A) A.
    CHECK(jpair(jsharp(A), A) == 3 * jdet(A));
    CHECK(jsharp(jsharp(A)) == jdet(A) * A);
    // cross with the identity is a pure trace projection
    JQ lhs = cross(JQ::identity(), A);
    JQ rhs = rat(1, 2) * (jtrace(A) * JQ::identity() - A);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rank one elements square to their trace multiple") {
  CHECK(rank_one_check(JQ::diag(rat(1), rat(0), rat(0))));
  CHECK(rank_one_check(JQ::diag(rat(0), rat(-4), rat(0))));
  CHECK(!rank_one_check(JQ::identity()));
  CHECK(!rank_one_check(JQ::diag(rat(1), rat(1), rat(0))));
  // 2x2 block [[a, z], [conj z, b]] has rank one iff ab = N(z).
  JQ B(rat(1), rat(1), rat(0), OQ(), OQ(), OQ::unit());
  CHECK(rank_one_check(B));
  CHECK(jsharp(B).is_zero());
  CHECK(jdet(B) == 0);
}

TEST_CASE("jordan arithmetic over F101 agrees with the rational formulas") {
  std::mt19937_64 rng(24);
  const long long p = 101;
  for (int t = 0; t < 10; ++t) {
    JQ A = rnd_jor(rng), B = rnd_jor(rng);
    auto red_oct = [&](const OQ& o) {
      Oct<Fp> r;
      for (int i = 0; i < 8; ++i) r.c[i] = Fp(rat_to_ll(o.c[i]), p);
      return r;
    };
    auto red = [&](const JQ& J) {
      return Jor<Fp>(Fp(rat_to_ll(J.a), p), Fp(rat_to_ll(J.b), p), Fp(rat_to_ll(J.c), p),
                     red_oct(J.x), red_oct(J.y), red_oct(J.z));
    };
    JQ P = jordan_mul(A, B);
    // The rational product has half-integer entries; scale by 2 to reduce.
    JQ twoP = rat(2) * P;
    Jor<Fp> got = jordan_mul(red(A), red(B));
    CHECK(Fp(2, p) * got == red(twoP));
    CHECK(Fp(rat_to_ll(jdet(A)), p) == jdet(red(A)));
  }
}

TEST_CASE("wedge coordinates and the six-tuple wedge sum") {
  OQ s1 = OQ::basis(S1), t2 = OQ::basis(T2);
  auto w = wedge21(s1, t2);
  int nonzero = 0;
  for (const auto& x : w)
    if (!(x == 0)) ++nonzero;
  CHECK(nonzero == 1);

  SixTuple<Rat> t;
  t.u = {s1, OQ(), t2};
  t.v = {t2, OQ(), s1};  // slot wedges cancel: s1^t2 + t2^s1 = 0
  CHECK(wedge_condition(t));
  t.v = {t2, OQ(), OQ()};
  CHECK(!wedge_condition(t));
}

TEST_CASE("omega membership of hand-built representatives") {
  OQ s1 = OQ::basis(S1), t2 = OQ::basis(T2);
  SixTuple<Rat> line;
  line.u = {s1, OQ(), rat(2) * s1};
  line.v = {rat(-1) * s1, s1, OQ()};
  CHECK(omega0_membership(line) == OmegaClass::Omega1);

  SixTuple<Rat> plane;
  plane.u = {s1, OQ(), t2};
  plane.v = {t2, OQ(), s1};
  CHECK(omega0_membership(plane) == OmegaClass::Omega2);

  SixTuple<Rat> bad_wedge;
  bad_wedge.u = {s1, OQ(), t2};
  bad_wedge.v = {t2, OQ(), OQ()};
  CHECK(omega0_membership(bad_wedge) == OmegaClass::None);

  SixTuple<Rat> nonnull;
  nonnull.u = {s1, OQ(), OQ()};
  nonnull.v = {OQ::basis(T1), OQ(), OQ()};  // s1 t1 = s4: span is not null
  CHECK(omega0_membership(nonnull) == OmegaClass::None);

  SixTuple<Rat> zero;
  CHECK(omega0_membership(zero) == OmegaClass::None);
}

TEST_CASE("slot and basis actions preserve the wedge sum") {
  OQ s1 = OQ::basis(S1), t2 = OQ::basis(T2);
  SixTuple<Rat> t;
  t.u = {s1, t2, s1 + t2};
  t.v = {t2, s1, rat(3) * s1};
  std::array<std::array<Rat, 2>, 2> shear = {{{rat(1), rat(5)}, {rat(0), rat(1)}}};
  std::array<std::array<Rat, 2>, 2> rot = {{{rat(0), rat(1)}, {rat(-1), rat(0)}}};
  for (int slot = 0; slot < 3; ++slot) {
    CHECK(sixtuple_wedge(act_sl2_triple(t, slot, shear)) == sixtuple_wedge(t));
    CHECK(sixtuple_wedge(act_sl2_triple(t, slot, rot)) == sixtuple_wedge(t));
  }
  SixTuple<Rat> r = act_sl2_triple(t, 1, rot);
  CHECK(r.u[1] == rat(-1) * t.v[1]);
  CHECK(r.v[1] == t.u[1]);
  std::array<std::array<Rat, 2>, 2> notdet1 = {{{rat(2), rat(0)}, {rat(0), rat(1)}}};
  CHECK_THROWS_AS(act_sl2_triple(t, 0, notdet1), std::invalid_argument);

  std::array<std::array<Rat, 3>, 3> H = {{{rat(1), rat(2), rat(0)},
                                          {rat(0), rat(1), rat(0)},
                                          {rat(3), rat(0), rat(1)}}};
  CHECK(sixtuple_wedge(act_gl3(t, H)) == sixtuple_wedge(t));
  std::array<std::array<Rat, 3>, 3> sing = {{{rat(1), rat(0), rat(0)},
                                             {rat(1), rat(0), rat(0)},
                                             {rat(0), rat(0), rat(1)}}};
  CHECK_THROWS_AS(act_gl3(t, sing), std::invalid_argument);

  SixTuple<Rat> plane;
  plane.u = {s1, OQ(), t2};
  plane.v = {t2, OQ(), s1};
  CHECK(omega0_membership(act_gl3(plane, H)) == OmegaClass::Omega2);
  CHECK(omega0_membership(act_sl2_triple(plane, 2, rot)) == OmegaClass::Omega2);
}

TEST_CASE("cross product lemma anchors") {
  OQ s1 = OQ::basis(S1), t2 = OQ::basis(T2);
  // A = I: A x B = -B/2, so the slots stay in the plane with a = b = -1/2.
  auto r = lemma_crossprod_full(s1, t2, JQ::identity());
  CHECK(r.hypothesis);
  CHECK(r.conclusion);
  CHECK(r.coef_a == rat(-1, 2));
  CHECK(r.coef_b == rat(-1, 2));
  CHECK(r.coef_c == 0);

  CHECK(lemma_crossprod_check(s1, t2, JQ()));
  CHECK(lemma_crossprod_check(s1, t2, JQ::diag(rat(2), rat(-1), rat(4))));

  // Constrained off-diagonal perturbations keep the hypothesis valid.
  std::mt19937_64 rng(25);
  for (int t = 0; t < 25; ++t) {
    OQ x1 = rnd_oct(rng), y1 = rnd_oct(rng), z1 = rnd_oct(rng);
    lemma_constrain_s1_t2(x1, y1, z1);
    JQ A(rat(0), rat(0), rat(0), x1, y1, z1);
    CHECK(lemma_crossprod_check(s1, t2, A));
  }

  // Degenerate pairs are rejected.
  CHECK_THROWS_AS(lemma_crossprod_full(s1, rat(2) * s1, JQ::identity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma_crossprod_full(s1, OQ::basis(T1), JQ::identity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma_crossprod_full(s1, OQ::basis(S4), JQ::identity()),
                  std::invalid_argument);
}

TEST_CASE("scalar multiplication identities behind the lemma") {
  // Check on every trace-zero basis direction and on random trace-zero w.
  for (int i = 0; i < 7; ++i) {
    std::array<Rat, 7> v{};
    v[i] = rat(1);
    CHECK(lemma_expansions_hold(oct_from_o0<Rat>(v)));
  }
  std::mt19937_64 rng(26);
  for (int t = 0; t < 50; ++t) {
    std::array<Rat, 7> v{};
    for (auto& x : v) x = rat(static_cast<long long>(rng() % 19) - 9);
    CHECK(lemma_expansions_hold(oct_from_o0<Rat>(v)));
  }
  CHECK(!lemma_expansions_hold(OQ::basis(S4)));  // nonzero trace is rejected
}

TEST_CASE("field half works over odd characteristic and rejects two") {
  CHECK(rat(2) * field_half<Rat>(rat(1)) == 1);
  Fp h = field_half<Fp>(Fp(1, 7));
  CHECK(Fp(2, 7) * h == Fp(1, 7));
  CHECK_THROWS(field_half<Fp>(Fp(1, 2)));
}
