#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqs/pipeline.hpp"

namespace pqs::io {

/// Problem plus the run flags stored alongside it.
struct ProblemFile {
  Problem problem;
  PipelineConfig config;
};

/// Exact rational approximation of one point, coordinate by coordinate.
struct Approximation {
  int bits = 0;
  std::vector<Rat> coords;
  bool operator==(const Approximation&) const = default;
};

struct ResultFile {
  Status status = Status::Empty;
  std::string mode = "hybrid";
  std::vector<RealURep> points;
  std::vector<Approximation> approximations;  // empty, or one per point
  std::size_t pieces_processed = 0;
  std::size_t candidates_pruned = 0;
  Eps0Certificate certificate;
  bool operator==(const ResultFile& o) const;
};

/// Throws Error(Input) with the offending field path.
ProblemFile problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemFile& pf);
ProblemFile read_problem(const std::string& path);

ResultFile result_from_json(const nlohmann::json& j);
nlohmann::json result_to_json(const ResultFile& r);
ResultFile read_result(const std::string& path);

ResultFile make_result(const SampleReport& rep, Mode mode);

/// Rationals within 2^{-bits} of every point.
void add_approximations(ResultFile& r, int bits);

/// Truncated decimal expansion of x with `digits` fractional digits.
std::string decimal(const Rat& x, int digits);

nlohmann::json read_json(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace pqs::io
