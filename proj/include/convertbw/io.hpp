#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "convertbw/conversion.hpp"

namespace convertbw {

// Code files carry {"p","ell","lambda","kF","rF","rI","B","C"} with B and C as
// 2-D integer arrays; entries may be negative and are reduced mod p on load.
// Plan files carry {"D": [...]} with 0-based subsymbol indices. Matrix files
// carry {"p", "entries"}.

ConvertiblePair load_code_file(const std::filesystem::path& path);
void save_code_file(const std::filesystem::path& path, const ConvertiblePair& pair);

ReadPlan load_plan_file(const std::filesystem::path& path, const CodeParams& params);
void save_plan_file(const std::filesystem::path& path, const ReadPlan& plan);

FFMatrix load_matrix_file(const std::filesystem::path& path);
void save_matrix_file(const std::filesystem::path& path, const FFMatrix& m);

/// The worked example shipped under data/worked_example: the [8,4,4] initial
/// code over F_43, the [3,2,4] final code, the read plan, and the 8x8 witness
/// matrix relating the two restricted generators.
struct ExampleFixture {
  ConvertiblePair pair;
  ReadPlan plan;
  FFMatrix witness;
  std::uint64_t checksum;  // over the raw file integers, before reduction
};

ExampleFixture load_example_fixture(const std::filesystem::path& dir);

/// Checksum pinned at transcription time; load_example_fixture results must
/// match it or the files drifted.
constexpr std::uint64_t kExampleFixtureChecksum = 0x0797e240eb963a28ull;

/// Grid specs look like "lambda=2..4,kF=1..6,rF=1..6,rI=1..12,ell=1,2,4";
/// values are ranges (a..b) or comma lists. Returns key -> sorted values.
std::map<std::string, std::vector<std::size_t>> parse_grid_spec(const std::string& spec);

/// Cartesian product of the five parameter axes, in row-major order
/// (lambda, kF, rF, rI, ell). Keys other than these five are rejected.
std::vector<CodeParams> expand_grid(
    const std::map<std::string, std::vector<std::size_t>>& axes, std::uint64_t p = 2);

}  // namespace convertbw
