#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "liechar/document.hpp"

namespace liechar {

struct ReportRecord {
  std::string name;
  std::string file;
  std::size_t dim = 0;
  std::string charpoly;
  unsigned degree = 0;
  unsigned z0_multiplicity = 0;
  std::size_t codim = 0;
  bool codim_holds = false;
  bool nilpotent_theorem = false;
  bool nilpotent_corollary = false;
  bool oracle_nilpotent = false;
  bool oracle_solvable = false;
  bool factorization_complete = false;
  std::string factorization;
  std::string incomplete_reason;  // empty when complete
  std::string solvability_outcome;
  bool solvability_consistent = true;
  std::optional<double> elapsed_ms;
  std::string error;  // input error; the remaining fields are unset

  /// A theorem-level disagreement between the polynomial tests and the oracle.
  bool inconsistent() const;
};

struct Report {
  std::vector<ReportRecord> records;
  bool any_inconsistent() const;
  bool any_error() const;
};

ReportRecord analyze(const AlgebraDocument& doc, const std::string& file, bool timing = false);

/// Every `*.alg` file in `dir` in name order. Files may be analyzed concurrently;
/// records keep the input order. Throws Error(io) if `dir` is not a directory.
Report analyze_directory(const std::filesystem::path& dir, bool timing = false);

enum class ReportFormat { text, json };

/// `width` > 0 wraps long polynomial lines in text output.
std::string render_report(const Report& report, ReportFormat format, std::size_t width = 0);

}  // namespace liechar
