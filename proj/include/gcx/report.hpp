#ifndef GCX_REPORT_HPP
#define GCX_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gcx/bridges.hpp"
#include "gcx/cohomology.hpp"
#include "gcx/model.hpp"
#include "gcx/spectral.hpp"

namespace gcx {

enum class ReportFormat { text, json };

struct RunConfig {
  ReportFormat format = ReportFormat::text;
  int max_page = 1;
  bool oracle = false;
  int jobs = 1;
  bool color = false;
};

enum ExitStatus : int { exit_ok = 0, exit_parse = 2, exit_structural = 3, exit_internal = 4 };

struct CohomologyReport {
  std::string model;
  int n = 0;
  StructureKind kind = StructureKind::complex_endomorphism;
  Form canonical;
  std::vector<long> betti;
  PerK<CohomologyDims> gh;
  PerK<CohomologyDims> harmonic;
  VarouchasReport varouchas;
  PerK<bool> lemma;
  PerK<PsiData> psi;
  bool psi_minus_injective_all = false;
  DualityCheck duality;
  FrolicherVerdict verdict;
  SpectralPages pages;
  int displayed_pages = 1;
  Degeneration degeneration;
  Decomposition decomposition;
  ParityCheck parity;
  bool spectral_converse = false;  // degeneration ∧ decomposition ⟹ lemma
  std::optional<ComplexBridge> complex_bridge;
  std::optional<ConjugationCheck> conjugation;
  std::optional<SymplecticBridge> symplectic;
  std::optional<SymplecticCorollary> corollary;
};

/// Full pipeline on parsed input.  Throws ParseError, StructuralError,
/// linalg::ContainmentViolation or InternalError.
CohomologyReport analyze(const ParsedModel& parsed, const std::string& name, const RunConfig& config);

std::string render_text(const CohomologyReport& r, const RunConfig& config);
std::string render_json(const CohomologyReport& r, int indent = 2);

struct RunResult {
  std::string name;
  int status = exit_ok;
  std::optional<CohomologyReport> report;
  std::string error;  // set when status != 0
};

/// Reads, parses and analyzes one file; never throws for model problems.
RunResult run_model(const std::filesystem::path& path, const RunConfig& config);

struct CorpusSummary {
  std::vector<RunResult> results;  // sorted by file name
  int status = exit_ok;            // maximum of the per-model statuses
};

/// All *.gcx files in `dir`, processed with up to config.jobs threads.
CorpusSummary run_corpus(const std::filesystem::path& dir, const RunConfig& config);

std::string render(const RunResult& r, const RunConfig& config);
std::string render(const CorpusSummary& s, const RunConfig& config);

}  // namespace gcx

#endif  // GCX_REPORT_HPP
