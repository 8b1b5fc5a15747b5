#pragma once

// Named checks of the inequalities relating successive minima, volume,
// polarity and lattice-point counts, evaluated on one (body, lattice)
// instance with exact or interval-certified margins.

#include "gon/body.hpp"
#include "gon/lattice.hpp"

#include <random>
#include <string>

namespace gon {

enum class CheckKind { theorem, conjecture, bound };
enum class CheckStatus { holds, equality, violated, counterexample_candidate, skipped, undecided };

std::string to_string(CheckKind k);
std::string to_string(CheckStatus s);

/// One inequality lhs <= rhs (or lhs < rhs when strict).
struct Comparison {
  std::string label;
  Value lhs;
  Value rhs;
  bool strict = false;
  CheckStatus status = CheckStatus::undecided;
};

struct CheckReport {
  std::string check_id;
  CheckKind kind = CheckKind::theorem;
  CheckStatus status = CheckStatus::skipped;
  std::string reason;  ///< skip reason, vacuity note or refinement hint
  std::vector<Comparison> parts;
  std::vector<QVec> witnesses;
  unsigned bits = 0;   ///< enclosure precision the verdict was reached at

  /// The part that decided the status (first one with that status).
  const Comparison* decisive() const;
  /// rhs - lhs of the decisive part.
  std::optional<Value> margin() const;
  bool failed() const {
    return status == CheckStatus::violated || status == CheckStatus::counterexample_candidate;
  }
};

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string statement;
  std::string applies_to;
};

/// Registry in stable order.
const std::vector<CheckInfo>& list_checks();

/// Runs the selected checks (all when empty).  K must be full-dimensional
/// and L full rank; unknown ids throw std::invalid_argument.
std::vector<CheckReport> run_checks(const Body& k, const Lattice& l, const std::vector<std::string>& selection = {});

/// vaaler_section and siegel_bv on S(A), Λ(A).
std::vector<CheckReport> run_section_checks(const QMat& a);

struct Instance {
  std::string label;
  Body body;
  Lattice lattice;
};

/// Random instance in dimension n <= 4: boxes, symmetric H-polytopes from
/// ± constraint pairs, cube and cross-polytope dilates, T_n, T_n^*, K_α;
/// lattices are random unimodular times diagonal matrices (Z^n a third of
/// the time).
Instance random_instance(std::mt19937_64& rng, std::size_t n);
/// Random symmetric instance (for the polarity checks).
Instance random_symmetric_instance(std::mt19937_64& rng, std::size_t n);
/// Integer m x n matrix of rank m with entries in [-bound, bound].
QMat random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long bound);

/// Cube, cross-polytope, T_n, T_n^* and friends with Z^n, n = 2..4.
std::vector<Instance> fixed_instances();

struct InstanceResult {
  Instance instance;
  std::vector<CheckReport> reports;
  std::string error;  ///< set when the instance itself could not be evaluated
};

struct SectionResult {
  QMat matrix;
  std::vector<CheckReport> reports;
};

struct CorpusReport {
  std::uint64_t seed = 0;
  std::vector<InstanceResult> instances;
  std::vector<SectionResult> sections;
  /// theorem/bound violations and conjecture counterexample candidates.
  std::size_t violations = 0;
  std::size_t candidates = 0;
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t random_instances = 60;
  std::size_t section_matrices = 20;
  std::size_t max_dim = 4;
  int jobs = 0;
};

/// Fixed plus seeded random instances; identical output for any jobs.
CorpusReport run_corpus(const CorpusOptions& opts);
CorpusReport run_corpus_serial(const CorpusOptions& opts);

}  // namespace gon
