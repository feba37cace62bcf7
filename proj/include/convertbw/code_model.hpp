#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convertbw/matrix.hpp"

namespace convertbw {

/// Parameters of a split conversion: one [nI, kI, ell] systematic MDS array
/// code feeding lambda [nF, kF, ell] final codes, with kI = lambda * kF.
struct CodeParams {
  std::size_t lambda = 0;
  std::size_t kF = 0;
  std::size_t rF = 0;
  std::size_t rI = 0;
  std::size_t ell = 0;
  std::uint64_t p = 0;

  std::size_t kI() const { return lambda * kF; }
  std::size_t nI() const { return kI() + rI; }
  std::size_t nF() const { return kF + rF; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

CodeParams validate_params(std::size_t lambda, std::size_t kF, std::size_t rF,
                           std::size_t rI, std::size_t ell, std::uint64_t p);

/// The generator pair in systematic form: G_initial = [I | B] with B of shape
/// (kI*ell) x (rI*ell), G_final = [I | C] with C of shape (kF*ell) x (rF*ell).
/// Block (i, j) of a parity matrix is the ell x ell submatrix at
/// rows [i*ell, (i+1)*ell), cols [j*ell, (j+1)*ell).
struct ConvertiblePair {
  CodeParams params;
  FFMatrix B;
  FFMatrix C;

  ConvertiblePair(CodeParams params, FFMatrix B, FFMatrix C);
};

/// A message is kI*ell subsymbols; segment i (for final codeword i) is the
/// slice [i*kF*ell, (i+1)*kF*ell).
using Message = std::vector<FieldElement>;

/// MDS check via block superregularity: every s x s block submatrix of the
/// parity part is invertible, for every s <= min(k, n-k).
bool is_mds_systematic(std::size_t n, std::size_t k, std::size_t ell,
                       const FFMatrix& parity);

/// MDS check straight from the definition: every k-subset of the n symbol
/// positions gives an invertible (k*ell) x (k*ell) submatrix of [I | parity].
/// Slower than is_mds_systematic; the two must agree on every input.
bool is_mds_by_subsets(std::size_t n, std::size_t k, std::size_t ell,
                       const FFMatrix& parity);

/// Seeded rejection sampling of uniform parity matrices until both pass the
/// MDS check. Deterministic for fixed (params, seed). Throws GenerationFailed
/// after max_attempts rejections.
ConvertiblePair random_mds_pair(const CodeParams& params, std::uint64_t seed,
                                std::size_t max_attempts);

/// Codeword as nI*ell subsymbols; symbol j occupies [j*ell, (j+1)*ell).
std::vector<FieldElement> encode_initial(const ConvertiblePair& pair,
                                         std::span<const FieldElement> m);

/// Final codeword for one message segment: nF*ell subsymbols.
std::vector<FieldElement> encode_final(const ConvertiblePair& pair,
                                       std::span<const FieldElement> segment);

}  // namespace convertbw
