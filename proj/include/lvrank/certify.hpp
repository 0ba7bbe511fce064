#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lvrank/graph.hpp"
#include "lvrank/matrix.hpp"
#include "lvrank/model.hpp"

namespace lvrank {

/// Positive diagonal left scaling C = diag(c) with x^T C A x <= 0 for all x.
/// In terms of the Lyapunov weights d_i of h(x) = sum (x_i - q_i log x_i)/d_i
/// this is c_i = 1/d_i.
struct Certificate {
  RatVector c;
};

struct Certified {
  Certificate certificate;
};
struct RefutedGraph {
  std::string reason;
};
/// `witness` satisfies x^T diag(candidate) A x > 0. When a weak edge has
/// entries of equal sign (or a single nonzero entry) no positive scaling can
/// satisfy the skew identity, so the failure is not specific to `candidate`.
struct RefutedAlgebra {
  RatVector candidate;
  RatVector witness;
  std::string reason;
};
struct Unknown {
  std::string reason;
};

using CertifyOutcome =
    std::variant<Certified, RefutedGraph, RefutedAlgebra, Unknown>;

const char* outcome_name(const CertifyOutcome& outcome);

RatMatrix sym_part(const RatMatrix& a);
RatMatrix skew_part(const RatMatrix& a);

/// x^T diag(c) A x, exactly.
Rational scaled_form(const InteractionMatrix& a, const RatVector& c,
                     const RatVector& x);

/// True iff sym(diag(c) A) is negative semidefinite, decided exactly by
/// pivoted LDL^T of its negation.
bool verify_certificate(const InteractionMatrix& a, const Certificate& c);

/// True iff c_i a_ij = -c_j a_ji whenever a_ii = 0 or a_jj = 0, and the
/// Black block of sym(diag(c) A) is negative definite.
bool is_almost_skew(const InteractionMatrix& a, const Certificate& c);

/// Searches for a positive diagonal certificate of dissipativity.
///
/// When the weak subgraph (strong links removed) is a forest, c is
/// propagated along each tree from its lowest vertex with c_i a_{i,i'} =
/// -c_{i'} a_{i',i}; a weak edge whose two entries do not have strictly
/// opposite signs refutes the matrix. The remaining freedom, one positive
/// scale per tree, is searched over powers of two in [2^-12, 2^12] by
/// coordinate descent on the normalized LDL^T margin of the Black block.
/// With a cyclic weak subgraph every vertex gets its own scale and the
/// whole symmetric part is searched. Every Certified result is re-verified
/// exactly and normalized to a primitive integer vector.
CertifyOutcome find_certificate(const InteractionMatrix& a);

/// RefutedGraph when some a_ii > 0 or G_A has a cycle without a strong link;
/// otherwise Certified iff find_certificate succeeds with an almost
/// skew-symmetric certificate.
CertifyOutcome is_stably_dissipative(const InteractionMatrix& a);

/// Black vertices: coordinates i with a_ii < 0, where a vanishing quadratic
/// form forces w_i = 0. Seeds the Bullet marks of the reduction.
std::vector<std::size_t> lemma1_seed(const InteractionMatrix& a,
                                     const Certificate& c);

}  // namespace lvrank
