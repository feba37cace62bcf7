#include <doctest.h>

#include "convertbw/field.hpp"
#include "convertbw/prng.hpp"

using namespace convertbw;

TEST_SUITE("field") {

TEST_CASE("construction checks primality by trial division") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(43));
  CHECK_NOTHROW(PrimeField(1'000'003));
  CHECK_THROWS_AS(PrimeField(1), BadParams);
  CHECK_THROWS_AS(PrimeField(0), BadParams);
  CHECK_THROWS_AS(PrimeField(42), BadParams);
  CHECK_THROWS_AS(PrimeField(91), BadParams);  // 7 * 13
}

TEST_CASE("signed reduction lands in [0, p)") {
  PrimeField f(43);
  CHECK(f.element(-5).value == 38);
  CHECK(f.element(-43).value == 0);
  CHECK(f.element(44).value == 1);
  CHECK(f.element(0).value == 0);
}

TEST_CASE("inverse examples") {
  PrimeField f43(43);
  CHECK(f43.inv({2}).value == 22);
  CHECK(f43.inv({1}).value == 1);
  CHECK(f43.inv({42}).value == 42);
  CHECK_THROWS_AS(f43.inv({0}), ZeroInverse);
  PrimeField f2(2);
  CHECK(f2.inv({1}).value == 1);
}

TEST_CASE("a * inv(a) == 1 and inv is an involution") {
  for (std::uint64_t p : {2ull, 3ull, 43ull, 101ull}) {
    PrimeField f(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      FieldElement inv = f.inv({a});
      CHECK(f.mul({a}, inv).value == 1);
      CHECK(f.inv(inv).value == a);
    }
  }
}

TEST_CASE("arithmetic round trips") {
  PrimeField f(13);
  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    FieldElement a{rng.below(13)}, b{rng.below(13)};
    CHECK(f.sub(f.add(a, b), b) == a);
    CHECK(f.add(a, f.neg(a)).value == 0);
    if (b.value != 0) CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
  }
}

}  // TEST_SUITE
