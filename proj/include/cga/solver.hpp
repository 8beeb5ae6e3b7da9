#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cga/exec.hpp"
#include "cga/grading.hpp"
#include "cga/liealg.hpp"
#include "cga/linalg.hpp"
#include "cga/realization.hpp"
#include "cga/uea.hpp"

namespace cga {

/// Exact linear constraints on the coefficients of an ansatz. Row i of
/// `matrix` is the coefficient extraction named by row_tags[i].
struct LinearSystem {
  AnsatzBasis columns;
  std::vector<std::string> row_tags;
  SparseMatrix matrix;
};

std::vector<DenseVector> nullspace(const LinearSystem& sys);

UEAElement element_from_vector(const AnsatzBasis& basis, const DenseVector& v);
/// Coordinates of `a` in the ansatz; throws std::invalid_argument if `a` has a
/// monomial outside it.
DenseVector vector_from_element(const AnsatzBasis& basis, const UEAElement& a);

/// The generator subset whose commutators, together with omega-symmetry,
/// certify a Casimir: {H, P_2l} for d=1, {H, J, P_2l, Q_2l} for d=2.
std::vector<int> lemma_generators(const LieAlgebra& alg);

/// Rows: omega(K) = K on the normal-ordered image, then [K, X] = 0 for each
/// lemma generator X.
LinearSystem lemma_system(const LieAlgebra& alg, const AnsatzBasis& ansatz, Exec exec = Exec::Parallel);

/// Rows: every derivative- or variable-carrying component of rho(K) vanishes
/// identically in the parameters.
LinearSystem realization_system(const Realization& rho, const AnsatzBasis& ansatz,
                                Exec exec = Exec::Parallel);

using ParameterValues = std::map<std::string, Rational>;

/// Parameters fixed in the realization used for candidate search: r = 0 for
/// d=2 (the J weight), nothing for d=1. With r symbolic the search returns
/// only genuine Casimirs at the quartic grade; fixing it admits the
/// realization-only candidates that step (I) then has to cut down.
ParameterValues default_candidate_parameters(const AlgebraSpec& spec);

struct SolveOptions {
  Exec exec = Exec::Parallel;
  /// nullopt: default_candidate_parameters. An empty map keeps all symbolic.
  std::optional<ParameterValues> parameters;
};

/// Basis (reduced echelon form over the ansatz) of elements acting as
/// parameter-only scalars in the realization.
std::vector<UEAElement> candidates_via_realization(const LieAlgebra& alg, const GradeVector& grade,
                                                   int max_degree, const SolveOptions& opts = {});

struct VerifyFailure {
  int generator;
  UEAElement residual;
};
/// Checks [K, x] = 0 for every basis generator x, in position order.
std::optional<VerifyFailure> verify_casimir(const LieAlgebra& alg, const UEAElement& K);

enum class Method { Algebraic, Pipeline };
enum class Provenance { Pipeline, Theorem };

std::string to_string(Method m);
Method parse_method(const std::string& s);
std::string to_string(Provenance p);

struct GeneratorResidual {
  int generator;
  Rational norm;  // max l1 norm of [K, x] over the reported elements
};

struct CasimirReport {
  AlgebraSpec spec;
  GradeVector grade;
  int max_degree = 0;
  Method method = Method::Pipeline;
  Provenance provenance = Provenance::Pipeline;
  std::size_t ansatz_dim = 0;
  /// Realization-path candidates; for the algebraic path this is empty and
  /// candidate_dim equals ansatz_dim.
  std::vector<UEAElement> candidate_basis;
  std::size_t candidate_dim = 0;
  std::vector<UEAElement> casimir_basis;
  /// Products of lower-grade Casimirs (and central powers) inside the space.
  std::vector<UEAElement> known_products;
  std::vector<UEAElement> canonical;
  std::vector<GeneratorResidual> verification;
  bool verified = false;
  ParameterValues parameters;  // realization parameters fixed for candidates
};

/// Thrown when an element satisfying the reduced conditions fails the full
/// commutator check; this would falsify the reduction and is never expected.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CasimirReport solve_casimirs(const LieAlgebra& alg, const GradeVector& grade, int max_degree,
                             Method method, const SolveOptions& opts = {});

/// Products of central powers and canonical Casimirs of lower central
/// multiples whose grades add up to `grade` and degrees stay <= max_degree.
std::vector<UEAElement> lower_casimir_products(const LieAlgebra& alg, const GradeVector& grade,
                                               int max_degree, Method method,
                                               const SolveOptions& opts = {});

/// Reduces `space` modulo `known`. Pivots of `known` are chosen preferring
/// monomials with the highest central power, then display order, so the
/// representatives carry no pure central-power term. Results are primitive
/// with a positive leading coefficient.
std::vector<UEAElement> canonical_complement(const LieAlgebra& alg, const AnsatzBasis& ansatz,
                                             const std::vector<UEAElement>& space,
                                             const std::vector<UEAElement>& known);

/// True iff every element of `a` lies in span(b).
bool span_contains(const std::vector<UEAElement>& b, const std::vector<UEAElement>& a);
bool same_span(const std::vector<UEAElement>& a, const std::vector<UEAElement>& b);

/// Nonzero λ with a = λ b, if any.
std::optional<Rational> proportional(const UEAElement& a, const UEAElement& b);

}  // namespace cga
