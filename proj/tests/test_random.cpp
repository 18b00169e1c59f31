#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "gcx/report.hpp"
#include "random_gcs.hpp"
#include "support.hpp"

using namespace gcx;

namespace {

using random_gcs::Rng;

void check_invariants(const CohomologyReport& r, int n2) {
  const int n = n2 / 2;
  // With d = 0 every cohomology is the whole of U^k, and dim U^k = C(2n, n+k).
  for (int k = -n; k <= n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k + n);
    const long u = support::binomial(n2, n + k);
    CAPTURE(k);
    CHECK(r.gh[i] == CohomologyDims{u, u, u, u});
    CHECK(r.harmonic[i] == r.gh[i]);
    CHECK(r.verdict.inequality[i]);
    CHECK(r.lemma[i]);
    const VarouchasDims& v = r.varouchas.dims[i];
    const VarouchasDims& w = r.varouchas.dims[static_cast<std::size_t>(n - k)];
    CHECK(r.gh[i].aeppli == r.gh[i].delbar + v.a + v.c - v.b);
    CHECK(r.gh[i].bc == r.gh[i].delbar + v.d + v.f - v.e);
    CHECK(v.d == w.b);
    CHECK(v.e == w.c);
    const PsiData& p = r.psi[i];
    CHECK(p.plus_injective);
    CHECK(p.minus_injective);
    CHECK(p.minus_surjective);
    CHECK(r.pages.e1()[i] == r.gh[i].delbar);
    CHECK(r.pages.e_inf()[i] == u);
  }
  CHECK(r.verdict.equality);
  CHECK(r.verdict.lemma_all);
  CHECK(r.verdict.equivalence);
  CHECK(r.duality.ok());
  CHECK(r.psi_minus_injective_all == r.verdict.lemma_all);
  CHECK(r.degeneration.degenerate);
  CHECK(r.decomposition.holds);
  CHECK(r.parity.ok());
  long total = 0;
  for (long b : r.betti) total += b;
  CHECK(total == (1L << n2));
}

}  // namespace

TEST_CASE("random generalized complex structures on abelian algebras") {
  Rng rng(20240601);
  RunConfig config;
  config.max_page = 3;
  int count = 0, jumps = 0;
  const std::vector<std::pair<int, int>> plan = {{2, 50}, {4, 60}, {6, 4}};
  for (const auto& [n2, reps] : plan)
    for (int rep = 0; rep < reps; ++rep) {
      const bool symplectic = rep % 2 == 0;
      const ParsedModel parsed = random_gcs::random_structure(n2, symplectic, rng);
      CAPTURE(n2);
      CAPTURE(rep);
      const CohomologyReport r = analyze(parsed, "random", config);
      check_invariants(r, n2);
      // Type of the canonical line: lowest degree present.
      int type = n2 + 1;
      for (const auto& [mask, c] : r.canonical.terms()) type = std::min(type, std::popcount(static_cast<unsigned>(mask)));
      if (symplectic != (type == 0)) ++jumps;
      ++count;
    }
  CHECK(count >= 100);
  MESSAGE("random structures: " << count << ", type changes: " << jumps);
}

TEST_CASE("random structures agree between oracle and default modes") {
  Rng rng(7);
  RunConfig plain, oracle;
  oracle.oracle = true;
  for (int rep = 0; rep < 10; ++rep) {
    const ParsedModel parsed = random_gcs::random_structure(4, rep % 2 == 0, rng);
    CHECK(render_json(analyze(parsed, "r", plain)) == render_json(analyze(parsed, "r", oracle)));
  }
}
