#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/errors.hpp"

namespace combdeform {

enum class StepKind { collapse, expand };

/// One elementary move. Both faces are sorted label lists and the coface has
/// exactly one more vertex than the free face.
struct DeformationStep {
  StepKind kind;
  std::vector<Label> free_face;
  std::vector<Label> coface;

  friend bool operator==(const DeformationStep&, const DeformationStep&) = default;
};

/// Raised when two certificates are glued at complexes that differ.
class JunctionError : public Error {
 public:
  using Error::Error;
};

/// Start complex, ordered elementary moves, and the claimed end complex.
/// Construction does not replay the moves; see verify_certificate.
class DeformationCertificate {
 public:
  DeformationCertificate() = default;
  DeformationCertificate(SimplicialComplex start, std::vector<DeformationStep> steps, SimplicialComplex end);

  /// Certificate that does nothing.
  static DeformationCertificate identity(const SimplicialComplex& k);

  const SimplicialComplex& start() const noexcept { return start_; }
  const SimplicialComplex& end() const noexcept { return end_; }
  const std::vector<DeformationStep>& steps() const noexcept { return steps_; }
  std::size_t collapse_count() const noexcept;
  std::size_t expansion_count() const noexcept;

  /// Steps in reverse order with collapse and expand swapped.
  DeformationCertificate reversed() const;
  /// This followed by `next`; throws JunctionError unless end() == next.start().
  DeformationCertificate then(const DeformationCertificate& next) const;
  /// Every label renamed, in the complexes and in the steps. The renaming must
  /// be injective on the labels that occur (InputError otherwise).
  DeformationCertificate relabeled(const std::function<Label(const Label&)>& rename) const;

  friend bool operator==(const DeformationCertificate&, const DeformationCertificate&) = default;

 private:
  SimplicialComplex start_;
  std::vector<DeformationStep> steps_;
  SimplicialComplex end_;
};

struct VerifyReport {
  bool ok = true;
  /// Index of the first offending step; equals steps().size() for an end
  /// mismatch, empty when ok.
  std::optional<std::size_t> failed_step;
  std::string reason;
};

/// Replays the certificate from its start. A collapse needs both faces
/// present, the coface maximal and the free face covered by the coface only.
/// An expansion needs both faces absent and every other facet of both faces
/// present. The replayed complex must equal end() exactly.
VerifyReport verify_certificate(const DeformationCertificate& cert);

/// Replays the first `count` steps (which must be valid) and returns the
/// complex reached.
SimplicialComplex replay_prefix(const DeformationCertificate& cert, std::size_t count);

}  // namespace combdeform
