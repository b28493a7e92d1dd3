#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primas/monomial_ideal.hpp"

namespace primas {

// A p-primary component together with its associated prime.
struct PrimaryComponent {
  MonomialIdeal component;
  MonomialIdeal prime;

  bool operator==(const PrimaryComponent& o) const {
    return component == o.component && prime == o.prime;
  }
  bool operator<(const PrimaryComponent& o) const {
    if (int c = prime.cmp(o.prime); c != 0) return c < 0;
    return component.cmp(o.component) < 0;
  }
};

// Audit trail: enough evidence to re-verify a decomposition offline.
struct DecompositionCertificates {
  // intersection of components equals the input, both inclusions checked
  bool intersection_equal = false;
  // per component: the recomputed primary-test prime (matches .prime)
  std::vector<MonomialIdeal> primary_evidence;
  // when normalized: per kept component a monomial inside the intersection
  // of the others but outside the component itself
  std::vector<Monomial> irredundancy_witness;
  bool distinct_primes = false;
};

struct DecompositionReport {
  MonomialIdeal input;
  std::vector<PrimaryComponent> components;
  bool normalized = false;
  DecompositionCertificates certs;

  // Recheck every certificate from scratch against the core operations.
  bool verify() const;
  std::string str() const;
};

// How the splitting pivot is chosen. The default is the deterministic rule
// (order-smallest mixed generator, split at its order-smallest variable);
// a seed switches to a random choice among the valid pivots, used to check
// that minimal components do not depend on the splitting order.
struct SplitStrategy {
  std::optional<std::uint64_t> shuffle_seed;
  TermOrder order = TermOrder::grevlex();
};

// Splitting algorithm: pick a minimal generator u·v with coprime non-unit
// parts, recurse on I+(u) and I+(v), intersect. Leaves satisfy the
// pure-power primary criterion. The result is normalized.
DecompositionReport primary_decompose_monomial(const MonomialIdeal& I,
                                               const SplitStrategy& strategy = {});

// Merge components with equal primes, then greedily drop any component
// containing the intersection of the others (deterministic sorted scan,
// repeated to a fixpoint). Throws if the given components do not intersect
// to `ambient`.
DecompositionReport normalize_decomposition(std::vector<PrimaryComponent> components,
                                            const MonomialIdeal& ambient);

}  // namespace primas
