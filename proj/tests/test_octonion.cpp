#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dualpair/fp.hpp"
#include "dualpair/octonion.hpp"

using namespace dualpair;
using OQ = Oct<Rat>;

namespace {

OQ rnd_oct(std::mt19937_64& rng) {
  OQ o;
  for (int i = 0; i < 8; ++i) o.c[i] = rat(static_cast<long long>(rng() % 19) - 9);
  return o;
}

}  // namespace

TEST_CASE("the unit is two-sided") {
  OQ e = OQ::unit();
  for (int i = 0; i < 8; ++i) {
    OQ b = OQ::basis(i);
    CHECK(e * b == b);
    CHECK(b * e == b);
  }
  CHECK(oct_trace(e) == 2);
  CHECK(oct_norm(e) == 1);
}

TEST_CASE("multiplication table orientation anchors") {
  auto b = [](int i) { return OQ::basis(i); };
  CHECK(b(S1) * b(S2) == -b(T3));
  CHECK(b(S2) * b(S1) == b(T3));
  CHECK(b(T1) * b(T2) == b(S3));
  CHECK(b(T2) * b(T1) == -b(S3));
  CHECK(b(S1) * b(T1) == b(S4));
  CHECK(b(T1) * b(S1) == b(T4));
  CHECK((b(S1) * b(S1)).is_zero());
  CHECK((b(S1) * b(T2)).is_zero());
  CHECK(b(S4) * b(S1) == b(S1));  // s4 acts as left identity on the s part
  CHECK(b(T4) * b(T1) == b(T1));
  CHECK(b(S1) * b(T4) == b(S1));  // and t4 as right identity on it
}

TEST_CASE("classical basis diagonalizes the split norm form") {
  OQ one = oct_classical<Rat>(0);
  CHECK(one == OQ::unit());
  for (int k = 0; k < 8; ++k) {
    OQ ck = oct_classical<Rat>(k);
    // signature (4,4): 1, li, lj, lk have norm +1; i, j, k, l have norm -1
    Rat expected = (k == 0 || k >= 5) ? rat(1) : rat(-1);
    CHECK(oct_norm(ck) == expected);
    for (int j = k + 1; j < 8; ++j) CHECK(oct_norm_pairing(ck, oct_classical<Rat>(j)) == 0);
  }
  // Split feature: the imaginary units square to +1, not -1.
  OQ i = oct_classical<Rat>(1), l = oct_classical<Rat>(4);
  CHECK(i * i == OQ::unit());
  CHECK(l * l == OQ::unit());
}

TEST_CASE("conjugation reverses products and recovers trace and norm") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    OQ x = rnd_oct(rng), y = rnd_oct(rng);
    CHECK(oct_conj(x * y) == oct_conj(y) * oct_conj(x));
    CHECK(x + oct_conj(x) == OQ::scalar(oct_trace(x)));
    CHECK(x * oct_conj(x) == OQ::scalar(oct_norm(x)));
  }
}

TEST_CASE("composition law and alternativity on random elements") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    OQ x = rnd_oct(rng), y = rnd_oct(rng);
    CHECK(oct_norm(x * y) == oct_norm(x) * oct_norm(y));
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
  }
}

TEST_CASE("trace associativity on random triples") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    OQ x = rnd_oct(rng), y = rnd_oct(rng), z = rnd_oct(rng);
    CHECK(oct_trace((x * y) * z) == oct_trace(x * (y * z)));
  }
}

TEST_CASE("the nilpotent basis works the same over F7") {
  using O7 = Oct<Fp>;
  auto b7 = [](int i) {
    O7 o;
    for (int k = 0; k < 8; ++k) o.c[k] = Fp(k == i ? 1 : 0, 7);
    return o;
  };
  CHECK(b7(S1) * b7(S2) == -b7(T3));
  CHECK((b7(S1) * b7(S1)).is_zero());
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    O7 x, y;
    for (int i = 0; i < 8; ++i) {
      x.c[i] = Fp(static_cast<long long>(rng() % 7), 7);
      y.c[i] = Fp(static_cast<long long>(rng() % 7), 7);
    }
    CHECK(oct_norm(x * y) == oct_norm(x) * oct_norm(y));
  }
}

TEST_CASE("o0 coordinates round-trip and reject nonzero trace") {
  std::array<Rat, 7> v{};
  for (int i = 0; i < 7; ++i) v[i] = rat(i - 3);
  OQ o = oct_from_o0<Rat>(v);
  CHECK(oct_trace(o) == 0);
  CHECK(oct_to_o0(o) == v);
  CHECK_THROWS_AS(oct_to_o0(OQ::basis(S4)), std::invalid_argument);
}

TEST_CASE("null subspace certification") {
  auto b = [](int i) { return OQ::basis(i); };
  CHECK(is_null_subspace<Rat>({b(S1)}));
  CHECK(is_null_subspace<Rat>({b(S1), b(T2)}));
  CHECK(is_null_subspace<Rat>({b(S1), b(T2) + b(T3)}));
  CHECK(!is_null_subspace<Rat>({b(S1), b(S2)}));        // s1 s2 = -t3
  CHECK(!is_null_subspace<Rat>({b(S1), rat(2) * b(S1)}));  // dependent
  CHECK(!is_null_subspace<Rat>({b(S1), b(T1)}));        // s1 t1 = s4
}

TEST_CASE("null line counts over F2 and F3 match the quadric point counts") {
  // Lines spanned by w with w*w = 0 are exactly the zeros of the norm form on
  // trace-zero elements: q^5 + q^4 + q^3 + q^2 + q + 1 projective points.
  CHECK(enumerate_null_subspaces(2, 1).size() == 63);
  CHECK(enumerate_null_subspaces(3, 1).size() == 364);
}

TEST_CASE("null planes exist but null 3-spaces do not") {
  for (long long p : {2LL, 3LL}) {
    CHECK(!enumerate_null_subspaces(p, 2).empty());
    CHECK(enumerate_null_subspaces(p, 3).empty());
  }
  CHECK_THROWS_AS(enumerate_null_subspaces(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_null_subspaces(3, 4), std::invalid_argument);
}

TEST_CASE("the planes through s1 form the expected pencil") {
  // <s1, a t2 + b t3> is null for every (a : b): s1 kills t2, t3 on both
  // sides and t2 t3 + t3 t2 = s1 - s1 = 0.
  for (long long p : {2LL, 3LL}) {
    auto planes = enumerate_null_subspaces(p, 2);
    long long found = 0;
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        if (a == 0 && b != 1) continue;  // one representative per line
        if (a != 0 && a != 1) continue;
        Oct<Fp> s1;
        s1.c[S1] = Fp(1, p);
        for (int k = 0; k < 8; ++k)
          if (k != S1) s1.c[k] = Fp(0, p);
        Oct<Fp> w;
        for (int k = 0; k < 8; ++k) w.c[k] = Fp(0, p);
        w.c[T2] = Fp(a, p);
        w.c[T3] = Fp(b, p);
        CHECK(is_null_subspace<Fp>({s1, w}));
        auto key = detail::rref7({oct_to_o0(s1), oct_to_o0(w)});
        for (const auto& plane : planes)
          if (plane == key) ++found;
      }
    CHECK(found == p + 1);  // the full pencil appears among the enumerated planes
  }
}

TEST_CASE("annihilators of the null basis vectors") {
  CHECK(perp_check(1));
  CHECK(perp_check(2));
  CHECK(perp_check(3));
  CHECK_THROWS_AS(perp_check(4), std::invalid_argument);
}
