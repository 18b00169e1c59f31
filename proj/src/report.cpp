#include "gcx/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "gcx/errors.hpp"
#include "gcx/gcs.hpp"

namespace gcx {

namespace {

using json = nlohmann::ordered_json;

std::size_t at(int k, int n) { return static_cast<std::size_t>(k + n); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

void check_psi(const CohomologyReport& r) {
  const int n = r.n;
  for (int k = -n; k <= n; ++k) {
    const PsiData& p = r.psi[at(k, n)];
    if (p.plus_injective && k - 1 >= -n)
      require(r.psi[at(k - 1, n)].minus_surjective,
              "psi_+ injective at k=" + std::to_string(k) + " but psi_- not surjective at k-1");
    if (p.minus_injective && k + 1 <= n)
      require(r.psi[at(k + 1, n)].plus_surjective,
              "psi_- injective at k=" + std::to_string(k) + " but psi_+ not surjective at k+1");
  }
  bool lemma_all = true;
  for (bool b : r.lemma) lemma_all = lemma_all && b;
  require(r.psi_minus_injective_all == lemma_all, "psi_- injective everywhere disagrees with the lemma");
}

void check_spectral(const CohomologyReport& r) {
  const int n = r.n;
  for (int k = -n; k <= n; ++k)
    require(r.pages.e1()[at(k, n)] == r.gh[at(k, n)].delbar, "E_1 differs from gh_delbar at k=" + std::to_string(k));
  for (int p = 1; p < r.pages.last; ++p)
    for (int k = -n; k <= n; ++k)
      require(r.pages.page(p + 1)[at(k, n)] <= r.pages.page(p)[at(k, n)],
              "E_" + std::to_string(p + 1) + " grows at k=" + std::to_string(k));
  require(r.parity.ok(), "E_inf parity sums differ from the parity-complex cohomology");
  long total = 0;
  for (long b : r.betti) total += b;
  require(r.parity.even_pages + r.parity.odd_pages == total, "sum of E_inf differs from the sum of Betti numbers");
  if (r.verdict.lemma_all)
    require(r.degeneration.degenerate && r.decomposition.holds,
            "lemma holds but the spectral sequence does not degenerate or decompose");
}

}  // namespace

CohomologyReport analyze(const ParsedModel& parsed, const std::string& name, const RunConfig& config) {
  if (!parsed.structure) throw ParseError("missing 'structure' statement", 1, 1);
  const Validation v = validate(parsed.model);
  if (!v.ok) throw StructuralError("jacobi", v.detail);

  const LieModel& model = parsed.model;
  const StructureSpec& spec = *parsed.structure;
  const GcsData g = build_gcs(model, spec);

  CohomologyReport r;
  r.model = name;
  r.n = g.n();
  r.kind = spec.kind;
  r.canonical = g.canonical;
  r.betti = de_rham_dims(model);
  r.gh = gh_dims(g);
  r.harmonic = harmonic_dims(g);
  if (r.harmonic != r.gh) throw StructuralError("harmonic", "Laplacian kernels differ from cohomology dimensions");
  r.varouchas = varouchas_dims(g, r.gh);
  for (int k = -r.n; k <= r.n; ++k) r.lemma.push_back(ddJ_lemma_check(g, k, config.oracle));
  r.verdict = frolicher_verdict(r.gh, r.lemma);
  r.psi = psi_maps(g, r.gh);
  r.psi_minus_injective_all = std::all_of(r.psi.begin(), r.psi.end(), [](const PsiData& p) { return p.minus_injective; });
  check_psi(r);
  r.duality = duality_check(r.gh);

  r.pages = spectral_pages(g, config.max_page);
  r.displayed_pages = config.max_page;
  r.degeneration = degeneration_check(r.pages);
  r.decomposition = decomposition_check(g, r.betti);
  r.parity = parity_check(g, r.pages);
  check_spectral(r);
  r.spectral_converse = !(r.degeneration.degenerate && r.decomposition.holds) || r.verdict.lemma_all;

  if (spec.kind == StructureKind::complex_endomorphism) {
    r.complex_bridge = dolbeault_bigraded(model, spec.matrix, g, r.gh);
    require(r.complex_bridge->sums_match, "bigraded sums differ from gh");
    require(r.complex_bridge->refines, "U^k is not a sum of (p,q) pieces");
    require(r.complex_bridge->lemma_all == r.verdict.lemma_all, "classical and generalized lemma disagree");
    r.conjugation = complex_conjugation_dualities(r.complex_bridge->dims);
  } else if (spec.kind == StructureKind::symplectic_form) {
    r.symplectic = symplectic_bridge(model, spec.form, g, r.gh);
    r.corollary = symplectic_corollary_check(*r.symplectic, r.verdict.lemma_all);
    require(r.corollary->matches_generalized, "dd^Lambda-lemma and generalized lemma disagree");
  }
  return r;
}

namespace {

struct Style {
  bool color;
  std::string paint(const std::string& s, const char* code) const {
    return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
  }
  std::string check(bool ok) const { return ok ? paint("PASS", "32") : paint("FAIL", "31"); }
  std::string yes(bool b) const { return b ? "yes" : "no"; }
};

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

bool all(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

}  // namespace

std::string render_text(const CohomologyReport& r, const RunConfig& config) {
  const Style st{config.color};
  const int n = r.n;
  std::ostringstream os;
  os << st.paint("model " + r.model, "1") << "  dim " << 2 * n << " (n=" << n << ")  structure " << to_string(r.kind)
     << "\n";
  os << "canonical line  " << r.canonical.to_string() << "\n";
  os << "betti  " << join(r.betti) << "\n\n";

  os << "   k   del delbar    bc     A |  a  b  c  d  e  f | lemma |";
  for (int p = 1; p <= r.displayed_pages; ++p) os << std::setw(5) << ("E" + std::to_string(p));
  os << "  Einf\n";
  for (int k = -n; k <= n; ++k) {
    const CohomologyDims& h = r.gh[at(k, n)];
    const VarouchasDims& v = r.varouchas.dims[at(k, n)];
    os << std::setw(4) << k << std::setw(6) << h.del << std::setw(7) << h.delbar << std::setw(6) << h.bc
       << std::setw(6) << h.aeppli << " |" << std::setw(3) << v.a << std::setw(3) << v.b << std::setw(3) << v.c
       << std::setw(3) << v.d << std::setw(3) << v.e << std::setw(3) << v.f << " | " << std::setw(5)
       << st.yes(r.lemma[at(k, n)]) << " |";
    for (int p = 1; p <= r.displayed_pages; ++p) os << std::setw(5) << r.pages.page(std::min(p, r.pages.last))[at(k, n)];
    os << std::setw(6) << r.pages.e_inf()[at(k, n)] << "\n";
  }

  os << "\nverdicts\n";
  auto line = [&](const std::string& label, const std::string& value) {
    os << "  " << std::left << std::setw(30) << label << std::right << value << "\n";
  };
  line("inequality BC >= delbar", st.check(all(r.verdict.inequality)));
  line("equality for all k", st.yes(r.verdict.equality));
  line("generalized lemma", st.yes(r.verdict.lemma_all));
  line("equality <=> lemma", st.check(r.verdict.equivalence));
  line("dimension dualities", st.check(r.duality.ok()) + " (" + std::to_string(r.duality.checked) + " checked)");
  line("varouchas residue", st.check(all(r.varouchas.residue_holds)));
  line("harmonic dimensions", st.check(r.harmonic == r.gh));
  line("psi_- injective all k", st.yes(r.psi_minus_injective_all));
  std::string degen = st.yes(r.degeneration.degenerate);
  if (r.degeneration.first_live_page) degen += " (first live page E" + std::to_string(*r.degeneration.first_live_page) + ")";
  line("degeneration at E1", degen);
  line("decomposition", st.yes(r.decomposition.holds));
  line("degen+decomp => lemma", st.check(r.spectral_converse));
  for (const auto& f : r.duality.failures)
    os << "    duality k=" << f.k << " " << f.name << ": " << f.lhs << " vs " << f.rhs << "\n";

  if (r.complex_bridge) {
    const ComplexBridge& b = *r.complex_bridge;
    os << "\ncomplex bridge (h^{p,q}: delbar del BC A)\n";
    for (int p = 0; p <= n; ++p) {
      os << "  p=" << p << " ";
      for (int q = 0; q <= n; ++q) {
        const CohomologyDims& h = b.dims.at(p, q);
        os << " [" << h.delbar << " " << h.del << " " << h.bc << " " << h.aeppli << "]";
      }
      os << "\n";
    }
    line("antidiagonal sums = gh", st.check(b.sums_match));
    line("bigraded inequality", st.check(all(b.inequality)));
    line("classical lemma", st.yes(b.lemma_all));
    line("conjugation dualities", st.check(r.conjugation->ok()));
    line("h_delbar(p,q)=h_delbar(q,p)", st.yes(r.conjugation->delbar_transpose_symmetric));
    for (const auto& f : r.conjugation->failures)
      os << "    (" << f.p << "," << f.q << ") " << f.detail << "\n";
  }
  if (r.symplectic) {
    const SymplecticBridge& b = *r.symplectic;
    const SymplecticCorollary& c = *r.corollary;
    std::vector<long> bc, a;
    for (const CohomologyDims& h : b.tseng_yau) {
      bc.push_back(h.bc);
      a.push_back(h.aeppli);
    }
    os << "\nsymplectic bridge\n";
    line("intertwining", st.check(true));
    line("Tseng-Yau H_BC", join(bc));
    line("Tseng-Yau H_A", join(a));
    line("H_BC >= betti", st.check(all(c.inequality)));
    line("equality for all degrees", st.yes(c.equality));
    line("dd^Lambda-lemma", st.yes(c.lemma));
    line("equality <=> lemma", st.check(c.equivalence));
    line("H_BC = H_A", st.check(c.bc_equals_aeppli));
  }
  return os.str();
}

std::string render_json(const CohomologyReport& r, int indent) {
  const int n = r.n;
  json j;
  j["model"] = r.model;
  j["n"] = n;
  j["structure"] = std::string(to_string(r.kind));
  j["canonical_line"] = r.canonical.to_string();
  j["betti"] = r.betti;
  json per_k = json::array();
  for (int k = -n; k <= n; ++k) {
    const CohomologyDims& h = r.gh[at(k, n)];
    const VarouchasDims& v = r.varouchas.dims[at(k, n)];
    const PsiData& p = r.psi[at(k, n)];
    json pages = json::array();
    for (int q = 1; q <= r.displayed_pages; ++q) pages.push_back(r.pages.page(std::min(q, r.pages.last))[at(k, n)]);
    per_k.push_back(json{{"k", k},
                         {"gh_del", h.del},
                         {"gh_delbar", h.delbar},
                         {"gh_bc", h.bc},
                         {"gh_a", h.aeppli},
                         {"lemma", static_cast<bool>(r.lemma[at(k, n)])},
                         {"varouchas", {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"e", v.e}, {"f", v.f}}},
                         {"e1", r.pages.e1()[at(k, n)]},
                         {"e_inf", r.pages.e_inf()[at(k, n)]},
                         {"pages", pages},
                         {"psi_plus_rank", p.plus_rank},
                         {"psi_minus_rank", p.minus_rank},
                         {"residue", static_cast<bool>(r.varouchas.residue_holds[at(k, n)])}});
  }
  j["per_k"] = per_k;
  json verdicts{{"inequality", all(r.verdict.inequality)},
                {"equality", r.verdict.equality},
                {"lemma", r.verdict.lemma_all},
                {"degeneration", r.degeneration.degenerate},
                {"decomposition", r.decomposition.holds},
                {"equivalence", r.verdict.equivalence},
                {"duality", r.duality.ok()},
                {"harmonic", r.harmonic == r.gh},
                {"psi_minus_injective", r.psi_minus_injective_all},
                {"spectral_converse", r.spectral_converse}};
  verdicts["first_live_page"] = r.degeneration.first_live_page ? json(*r.degeneration.first_live_page) : json(nullptr);
  j["verdicts"] = verdicts;

  json bridge = nullptr;
  if (r.complex_bridge) {
    const ComplexBridge& b = *r.complex_bridge;
    auto grid = [&](long CohomologyDims::*field) {
      json g = json::array();
      for (int p = 0; p <= n; ++p) {
        json row = json::array();
        for (int q = 0; q <= n; ++q) row.push_back(b.dims.at(p, q).*field);
        g.push_back(row);
      }
      return g;
    };
    json failures = json::array();
    for (const auto& f : r.conjugation->failures) failures.push_back(json{{"p", f.p}, {"q", f.q}, {"detail", f.detail}});
    bridge = json{{"kind", "complex"},
                  {"h_delbar", grid(&CohomologyDims::delbar)},
                  {"h_del", grid(&CohomologyDims::del)},
                  {"h_bc", grid(&CohomologyDims::bc)},
                  {"h_a", grid(&CohomologyDims::aeppli)},
                  {"antidiagonal_match", b.sums_match},
                  {"inequality", all(b.inequality)},
                  {"classical_lemma", b.lemma_all},
                  {"conjugation", r.conjugation->ok()},
                  {"conjugation_failures", failures},
                  {"delbar_transpose_symmetric", r.conjugation->delbar_transpose_symmetric}};
  } else if (r.symplectic) {
    const SymplecticBridge& b = *r.symplectic;
    const SymplecticCorollary& c = *r.corollary;
    json bc = json::array(), a = json::array();
    for (const CohomologyDims& h : b.tseng_yau) {
      bc.push_back(h.bc);
      a.push_back(h.aeppli);
    }
    bridge = json{{"kind", "symplectic"},
                  {"intertwining", true},
                  {"tseng_yau_bc", bc},
                  {"tseng_yau_a", a},
                  {"inequality", all(c.inequality)},
                  {"equality", c.equality},
                  {"dd_lambda_lemma", c.lemma},
                  {"equivalence", c.equivalence},
                  {"bc_equals_a", c.bc_equals_aeppli}};
  }
  j["bridge"] = bridge;
  return j.dump(indent);
}

RunResult run_model(const std::filesystem::path& path, const RunConfig& config) {
  RunResult out;
  out.name = path.stem().string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.status = exit_parse;
    out.error = path.string() + ": cannot read file";
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    out.report = analyze(parse_model(buf.str()), out.name, config);
  } catch (const ParseError& e) {
    out.status = exit_parse;
    out.error = path.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message();
  } catch (const StructuralError& e) {
    out.status = exit_structural;
    out.error = path.string() + ": structural check failed: " + e.what();
  } catch (const linalg::ContainmentViolation& e) {
    out.status = exit_structural;
    out.error = path.string() + ": containment violated: " + e.what();
  } catch (const InternalError& e) {
    out.status = exit_internal;
    out.error = path.string() + ": internal assertion: " + e.what();
  } catch (const std::exception& e) {
    out.status = exit_internal;
    out.error = path.string() + ": unexpected error: " + e.what();
  }
  return out;
}

CorpusSummary run_corpus(const std::filesystem::path& dir, const RunConfig& config) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".gcx") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  CorpusSummary s;
  s.results.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) s.results[i] = run_model(files[i], config);
  };
  const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const RunResult& r : s.results) s.status = std::max(s.status, r.status);
  return s;
}

std::string render(const RunResult& r, const RunConfig& config) {
  if (config.format == ReportFormat::json) {
    if (r.report) return render_json(*r.report) + "\n";
    return json{{"model", r.name}, {"status", r.status}, {"error", r.error}}.dump(2) + "\n";
  }
  if (r.report) return render_text(*r.report, config);
  return r.error + "\n";
}

std::string render(const CorpusSummary& s, const RunConfig& config) {
  if (config.format == ReportFormat::json) {
    json models = json::array();
    json summary = json::array();
    for (const RunResult& r : s.results) {
      json entry = json{{"model", r.name}, {"status", r.status}};
      if (r.report) {
        models.push_back(json::parse(render_json(*r.report, -1)));
        entry["inequality"] = all(r.report->verdict.inequality);
        entry["equivalence"] = r.report->verdict.equivalence;
      } else {
        entry["error"] = r.error;
      }
      summary.push_back(entry);
    }
    return json{{"models", models}, {"summary", summary}, {"status", s.status}}.dump(2) + "\n";
  }
  const Style st{config.color};
  std::ostringstream os;
  for (const RunResult& r : s.results) {
    os << render(r, config);
    os << "\n";
  }
  os << st.paint("summary", "1") << " (" << s.results.size() << " models)\n";
  for (const RunResult& r : s.results) {
    os << "  " << std::left << std::setw(22) << r.name << std::right;
    if (!r.report) {
      os << st.paint("error", "31") << " (exit " << r.status << ")\n";
      continue;
    }
    const FrolicherVerdict& v = r.report->verdict;
    os << "inequality " << st.check(all(v.inequality)) << "  lemma " << st.yes(v.lemma_all) << "  equality "
       << st.yes(v.equality) << "  equivalence " << st.check(v.equivalence);
    if (!v.equivalence) os << " (counterexample: equality without the lemma)";
    os << "\n";
  }
  return os.str();
}

}  // namespace gcx
