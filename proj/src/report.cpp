#include "liechar/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

#include "liechar/error.hpp"

namespace liechar {

bool ReportRecord::inconsistent() const {
  if (!error.empty()) return false;
  return nilpotent_theorem != oracle_nilpotent || nilpotent_corollary != nilpotent_theorem || !codim_holds ||
         !solvability_consistent;
}

bool Report::any_inconsistent() const {
  return std::any_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.inconsistent(); });
}

bool Report::any_error() const {
  return std::any_of(records.begin(), records.end(), [](const ReportRecord& r) { return !r.error.empty(); });
}

ReportRecord analyze(const AlgebraDocument& doc, const std::string& file, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const LieAlgebra& L = doc.algebra;
  ReportRecord r;
  r.name = doc.name.empty() ? file : doc.name;
  r.file = file;
  r.dim = L.dim();

  const Representation ad = adjoint_representation(L);
  const MultiPoly p = char_poly(ad).poly;
  r.charpoly = p.to_string();
  const StructureInfo info = structure_checks(p);
  r.degree = info.homogeneous_degree.value_or(0);
  r.z0_multiplicity = info.z0_multiplicity;

  const CodimCheck codim = codim_factor_check(L, p);
  r.codim = codim.codim;
  r.codim_holds = codim.holds;

  const Classification oracle = classify_oracle(L);
  r.oracle_nilpotent = oracle.nilpotent;
  r.oracle_solvable = oracle.solvable;
  try {
    const NilpotencyVerdict nil = nilpotency_tests(L, p);
    r.nilpotent_theorem = nil.theorem;
    r.nilpotent_corollary = nil.corollary;
  } catch (const Error& e) {
    if (e.code() != Errc::inconsistent) throw;
    r.nilpotent_theorem = p == MultiPoly::variable(p.num_vars(), 0).pow(static_cast<unsigned>(L.dim()));
    r.nilpotent_corollary = p.substitute(0, 1) == MultiPoly::constant(p.num_vars(), 1);
  }

  const SolvabilityReport solv = solvability_test(L, ad, p);
  r.factorization_complete = solv.factorization.complete;
  r.factorization = solv.factorization.to_string();
  if (!solv.factorization.complete) r.incomplete_reason = reason_name(solv.factorization.reason);
  r.solvability_outcome = outcome_name(solv.outcome);
  r.solvability_consistent = solv.consistent;

  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report analyze_directory(const std::filesystem::path& dir, bool timing) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::io, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".alg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::future<ReportRecord>> jobs;
  jobs.reserve(files.size());
  for (const auto& path : files) {
    jobs.push_back(std::async(std::launch::async, [path, timing] {
      const std::string file = path.filename().string();
      try {
        return analyze(load_algebra_file(path), file, timing);
      } catch (const Error& e) {
        if (e.code() == Errc::inconsistent) throw;
        ReportRecord r;
        r.name = file;
        r.file = file;
        r.error = e.what();
        return r;
      }
    }));
  }
  Report report;
  for (auto& job : jobs) report.records.push_back(job.get());
  return report;
}

namespace {

std::string wrap(const std::string& label, const std::string& value, std::size_t width) {
  std::string out = label + value;
  if (width == 0 || out.size() <= width) return out + '\n';
  const std::string indent(label.size(), ' ');
  std::string result;
  std::string line = label;
  std::istringstream words(value);
  std::string word;
  bool fresh = true;
  while (words >> word) {
    if (!fresh && line.size() + 1 + word.size() > width) {
      result += line + '\n';
      line = indent;
      fresh = true;
    }
    line += (fresh ? "" : " ") + word;
    fresh = false;
  }
  return result + line + '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_report(const Report& report, ReportFormat format, std::size_t width) {
  std::string out;
  if (format == ReportFormat::json) {
    for (const auto& r : report.records) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["file"] = r.file;
      if (!r.error.empty()) {
        j["error"] = r.error;
      } else {
        j["dim"] = r.dim;
        j["charpoly"] = r.charpoly;
        j["degree"] = r.degree;
        j["z0_multiplicity"] = r.z0_multiplicity;
        j["codim"] = r.codim;
        j["codim_holds"] = r.codim_holds;
        j["nilpotent_theorem"] = r.nilpotent_theorem;
        j["nilpotent_corollary"] = r.nilpotent_corollary;
        j["oracle_nilpotent"] = r.oracle_nilpotent;
        j["oracle_solvable"] = r.oracle_solvable;
        j["factorization_complete"] = r.factorization_complete;
        j["factorization"] = r.factorization;
        if (!r.factorization_complete) j["incomplete_reason"] = r.incomplete_reason;
        j["solvability"] = r.solvability_outcome;
        j["consistent"] = !r.inconsistent();
        if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
      }
      out += j.dump() + '\n';
    }
    return out;
  }
  for (std::size_t n = 0; n < report.records.size(); ++n) {
    const auto& r = report.records[n];
    if (n) out += '\n';
    out += "== " + r.name + " (" + r.file + ")\n";
    if (!r.error.empty()) {
      out += "error: " + r.error + '\n';
      continue;
    }
    out += "dim: " + std::to_string(r.dim) + '\n';
    out += wrap("charpoly: ", r.charpoly, width);
    out += "degree: " + std::to_string(r.degree) + '\n';
    out += "z0 multiplicity: " + std::to_string(r.z0_multiplicity) + '\n';
    out += "codim [L,L]: " + std::to_string(r.codim) + (r.codim_holds ? " (divides)" : " (FAILS)") + '\n';
    out += std::string("nilpotent: ") + yes_no(r.nilpotent_theorem) + " (corollary " + yes_no(r.nilpotent_corollary) +
           ", oracle " + yes_no(r.oracle_nilpotent) + ")\n";
    out += std::string("solvable: ") + yes_no(r.oracle_solvable) + " (" + r.solvability_outcome + ")\n";
    std::string fact = r.factorization_complete ? "complete" : "incomplete, " + r.incomplete_reason;
    out += wrap("factorization: ", r.factorization + " [" + fact + "]", width);
    if (r.elapsed_ms) {
      std::ostringstream ms;
      ms.precision(3);
      ms << std::fixed << *r.elapsed_ms;
      out += "time: " + ms.str() + " ms\n";
    }
    if (r.inconsistent()) out += "INCONSISTENT\n";
  }
  return out;
}

}  // namespace liechar
