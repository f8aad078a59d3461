#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "combdeform/certificate.hpp"
#include "combdeform/complex.hpp"
#include "combdeform/errors.hpp"
#include "combdeform/graph.hpp"

namespace combdeform {

/// A stage failed or two stages did not meet; stage() is 1-based.
class PipelineError : public Error {
 public:
  PipelineError(std::size_t stage, const std::string& what)
      : Error("stage " + std::to_string(stage) + ": " + what), stage_(stage) {}
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

struct StageSummary {
  std::string name;
  std::size_t collapses = 0;
  std::size_t expansions = 0;
  std::vector<std::size_t> start_f;
  std::vector<std::size_t> end_f;
};

struct PipelineResult {
  DeformationCertificate certificate;
  std::vector<StageSummary> stages;
};

/// Formal deformation from Bd Hom(K_2, G) to N(G) in six glued stages:
///   1. Bd Hom(K_2,G) = Delta(bar P) collapses onto Delta(bar P_a);
///   2. expansions from Delta(bar P_a) up to Bd Gamma(P);
///   3. Bd Gamma(P) back to Gamma(P) (reversed stellar sequence);
///   4. Gamma(P) collapses onto Lo(G);
///   5. expansions from Lo(G) up to Bd N(G);
///   6. Bd N(G) back to N(G).
/// Hom cells are labelled ("hom", A, B); Gamma(P), Lo(G) and N(G) faces are
/// labelled by vertex tuples. Every junction is checked exactly.
/// Throws SizeCapError when subdivision_size_bound(Gamma(P)) exceeds
/// `face_budget`.
PipelineResult hom_to_neighborhood_deformation(const Graph& g, std::size_t face_budget = 500000);

/// Upper bound on the number of faces of Bd K: the chain counts of the
/// facets, summed.
std::size_t subdivision_size_bound(const SimplicialComplex& k);

}  // namespace combdeform
