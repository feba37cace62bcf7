#include <doctest.h>

#include <numeric>

#include "convertbw/code_model.hpp"
#include "helpers.hpp"

using namespace convertbw;
using convertbw::testing::random_matrix;
using convertbw::testing::random_message;

TEST_SUITE("code_model") {

TEST_CASE("validate_params") {
  CodeParams p = validate_params(2, 2, 1, 4, 4, 43);
  CHECK(p.kI() == 4);
  CHECK(p.nI() == 8);
  CHECK(p.nF() == 3);

  CodeParams q = validate_params(2, 1, 1, 2, 2, 7);
  CHECK(q.kI() == 2);
  CHECK(q.nI() == 4);
  CHECK(q.nF() == 2);

  CHECK_THROWS_AS(validate_params(1, 2, 1, 1, 1, 7), BadParams);
  CHECK_THROWS_AS(validate_params(2, 0, 1, 1, 1, 7), BadParams);
  CHECK_THROWS_AS(validate_params(2, 2, 1, 1, 0, 7), BadParams);
  CHECK_THROWS_AS(validate_params(2, 2, 1, 1, 1, 9), BadParams);  // not prime
}

TEST_CASE("stacked identity final parity is MDS") {
  PrimeField f(43);
  // C = [I4; I4]: every block of C is I4, so any 2 of 3 block columns of
  // [I | C] stay invertible.
  FFMatrix c(f, 8, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    c.set(r, r, f.one());
    c.set(4 + r, r, f.one());
  }
  CHECK(is_mds_systematic(3, 2, 4, c));
  CHECK(is_mds_by_subsets(3, 2, 4, c));
}

TEST_CASE("repeated block column breaks MDS") {
  PrimeField f(7);
  // parity = [v | v] with v nonzero: the 2x2 block submatrix on those two
  // columns is singular.
  FFMatrix parity = FFMatrix::from_signed(f, {{1, 1}, {2, 2}});
  CHECK_FALSE(is_mds_systematic(4, 2, 1, parity));
  CHECK_FALSE(is_mds_by_subsets(4, 2, 1, parity));
}

TEST_CASE("superregularity path equals the k-subset definition") {
  SplitMix64 rng(derive_seed(9, "mds-paths"));
  int mds_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::uint64_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 7;
    PrimeField f(p);
    std::size_t n = 2 + rng.below(7);        // n <= 8
    std::size_t k = 1 + rng.below(n - 1);    // 1 <= k < n
    std::size_t ell = 1 + rng.below(2);      // ell <= 2
    FFMatrix parity = random_matrix(f, k * ell, (n - k) * ell, rng);
    bool a = is_mds_systematic(n, k, ell, parity);
    bool b = is_mds_by_subsets(n, k, ell, parity);
    CHECK(a == b);
    if (a) ++mds_seen;
  }
  CHECK(mds_seen > 0);  // the sample exercises both outcomes
}

TEST_CASE("random_mds_pair is deterministic and verified") {
  CodeParams p = validate_params(2, 1, 1, 2, 1, 7);
  ConvertiblePair a = random_mds_pair(p, 1, 1000);
  ConvertiblePair b = random_mds_pair(p, 1, 1000);
  CHECK(a.B == b.B);
  CHECK(a.C == b.C);
  CHECK(is_mds_systematic(p.nI(), p.kI(), p.ell, a.B));
  CHECK(is_mds_systematic(p.nF(), p.kF, p.ell, a.C));

  ConvertiblePair other = random_mds_pair(p, 2, 1000);
  CHECK(a.B != other.B);  // different seed, different fixture
}

TEST_CASE("no 4x2 superregular matrix over F2 exists, so generation fails") {
  PrimeField f2(2);
  // Exhaustive: all 256 candidate parity matrices fail the check.
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    FFMatrix m(f2, 4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        m.set(i, j, FieldElement{(bits >> (i * 2 + j)) & 1u});
      }
    }
    CHECK_FALSE(is_mds_systematic(6, 4, 1, m));
  }
  CodeParams p = validate_params(2, 2, 2, 2, 1, 2);
  CHECK_THROWS_AS(random_mds_pair(p, 1, 50), GenerationFailed);
}

TEST_CASE("encode_initial basics") {
  CodeParams prm = validate_params(2, 1, 1, 2, 2, 7);
  ConvertiblePair pair = random_mds_pair(prm, 3, 1000);

  Message zero(prm.kI() * prm.ell, FieldElement{0});
  auto cw = encode_initial(pair, zero);
  CHECK(std::all_of(cw.begin(), cw.end(), [](FieldElement v) { return v.value == 0; }));

  // Basis message: systematic part is the basis vector, parity symbol j is
  // the first row of B's block column j.
  Message e0(prm.kI() * prm.ell, FieldElement{0});
  e0[0] = FieldElement{1};
  auto basis_cw = encode_initial(pair, e0);
  CHECK(basis_cw[0].value == 1);
  for (std::size_t i = 1; i < prm.kI() * prm.ell; ++i) CHECK(basis_cw[i].value == 0);
  for (std::size_t j = 0; j < prm.rI * prm.ell; ++j) {
    CHECK(basis_cw[prm.kI() * prm.ell + j] == pair.B.at(0, j));
  }

  Message bad(3);
  CHECK_THROWS_AS(encode_initial(pair, bad), DimensionMismatch);
}

TEST_CASE("encode_final with stacked identity parity sums the segments") {
  CodeParams prm = validate_params(2, 2, 1, 4, 4, 43);
  PrimeField f(43);
  FFMatrix b(f, prm.kI() * prm.ell, prm.rI * prm.ell);  // contents irrelevant here
  FFMatrix c(f, 8, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    c.set(r, r, f.one());
    c.set(4 + r, r, f.one());
  }
  ConvertiblePair pair(prm, b, c);

  SplitMix64 rng(17);
  Message seg(prm.kF * prm.ell);
  for (auto& v : seg) v = FieldElement{rng.below(43)};
  auto cw = encode_final(pair, seg);
  CHECK(cw.size() == prm.nF() * prm.ell);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(cw[8 + t] == f.add(seg[t], seg[4 + t]));
  }

  Message zero(prm.kF * prm.ell, FieldElement{0});
  auto zcw = encode_final(pair, zero);
  CHECK(std::all_of(zcw.begin(), zcw.end(), [](FieldElement v) { return v.value == 0; }));
}

TEST_CASE("any kI symbols of an MDS initial codeword determine the message") {
  CodeParams prm = validate_params(2, 1, 1, 2, 1, 7);
  ConvertiblePair pair = random_mds_pair(prm, 11, 1000);
  PrimeField f(prm.p);
  // generator columns, symbol-blocked
  FFMatrix gen = hconcat(FFMatrix::identity(f, prm.kI() * prm.ell), pair.B);

  SplitMix64 rng(derive_seed(5, "decode"));
  for (int trial = 0; trial < 50; ++trial) {
    Message m = random_message(prm, rng);
    auto cw = encode_initial(pair, m);
    // random kI-subset of symbols
    std::vector<std::size_t> symbols(prm.nI());
    std::iota(symbols.begin(), symbols.end(), 0);
    for (std::size_t i = symbols.size(); i > 1; --i) {
      std::swap(symbols[i - 1], symbols[rng.below(i)]);
    }
    symbols.resize(prm.kI());

    std::vector<std::size_t> cols;
    for (std::size_t s : symbols) {
      for (std::size_t t1 = 0; t1 < prm.ell; ++t1) cols.push_back(s * prm.ell + t1);
    }
    std::vector<std::size_t> all_rows(gen.rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    FFMatrix sub = submatrix(gen, all_rows, cols);

    FFMatrix received(f, cols.size(), 1);
    for (std::size_t i = 0; i < cols.size(); ++i) received.set(i, 0, cw[cols[i]]);

    // received^T = m^T sub  =>  sub^T x = received with x the message
    FFMatrix subT(f, sub.cols(), sub.rows());
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j) subT.set(j, i, sub.at(i, j));
    auto x = solve_right(subT, received);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(x->at(i, 0) == m[i]);
  }
}

TEST_CASE("any kF+1 final symbols are linearly dependent") {
  CodeParams prm = validate_params(2, 2, 1, 2, 2, 13);
  ConvertiblePair pair = random_mds_pair(prm, 21, 2000);
  PrimeField f(prm.p);
  FFMatrix gen = hconcat(FFMatrix::identity(f, prm.kF * prm.ell), pair.C);
  std::size_t want = (prm.kF + 1) * prm.ell;
  SplitMix64 rng(88);
  std::vector<std::size_t> all_rows(gen.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> cols(gen.cols());
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t i = cols.size(); i > 1; --i) std::swap(cols[i - 1], cols[rng.below(i)]);
    cols.resize(want);
    CHECK(rank(submatrix(gen, all_rows, cols)) < want);
  }
}

}  // TEST_SUITE
