#pragma once

#include <cstdint>
#include <vector>

#include "kummer/decomp.hpp"

// Brute-force verifier for the decomposition engine. Gal(S/Q) is modeled as
// the metacyclic group <theta, sigma_mu | theta^p = sigma_mu^{p-1} = 1,
// sigma_mu theta sigma_mu^{-1} = theta^w> with w = v mu^{-1}; the primes of
// S over p are indexed by F_p via pi_i = theta^i(pi_0), on which
// theta^c sigma_mu^s acts by i -> c + w^s i. Decomposition shapes of every
// subfield are then re-derived from double cosets alone.

namespace kummer {

/// theta^c sigma_mu^s with c in [0, p), s in [0, p-1).
struct GroupElement {
  std::int64_t c;
  std::int64_t s;

  bool operator==(const GroupElement&) const = default;
};

class MetacyclicGroup {
 public:
  /// Validates (p, v, n) like the decomposition engine does and fixes the
  /// structure constant w = v^{1-n} mod p.
  MetacyclicGroup(std::int64_t p, std::int64_t v, std::int64_t n);

  std::int64_t p() const { return p_; }
  std::int64_t v() const { return v_; }
  std::int64_t n() const { return n_; }
  std::int64_t mu() const { return mu_; }
  std::int64_t w() const { return w_; }
  std::int64_t order() const { return p_ * (p_ - 1); }

  GroupElement identity() const { return {0, 0}; }
  GroupElement theta() const { return {1, 0}; }
  GroupElement sigma_mu() const { return {0, 1}; }

  /// (c1, s1)(c2, s2) = (c1 + w^{s1} c2, s1 + s2).
  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;

  /// Dense index in [0, order): c*(p-1) + s.
  std::int64_t index_of(GroupElement g) const { return g.c * (p_ - 1) + g.s; }
  GroupElement element_at(std::int64_t idx) const {
    return {idx / (p_ - 1), idx % (p_ - 1)};
  }

  /// Action on the prime indices: theta^c sigma_mu^s maps i to c + w^s i.
  std::int64_t act_on_prime(GroupElement g, std::int64_t i) const;

 private:
  std::int64_t p_, v_, n_, mu_, w_;
  std::vector<std::int64_t> wpow_;  // w^s for s in [0, p-1)
};

/// A subgroup given by generators together with its full element list
/// (sorted by index). The elements must be exactly the closure of the
/// generators; double_coset_shapes re-derives the closure to verify this.
struct SubgroupData {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

SubgroupData subgroup_from_generators(const MetacyclicGroup& G,
                                      std::vector<GroupElement> generators);
SubgroupData full_group(const MetacyclicGroup& G);
SubgroupData trivial_subgroup(const MetacyclicGroup& G);

/// Orbits of F_p under i -> w*i, sorted by minimal element (so {0} comes
/// first); elements ascending within each orbit. There are (p-1)/d orbits
/// of size d = mult_order(p, w) besides the fixed point. w == 0 or 1 is
/// rejected: w = 1 would mean d = 1, excluded for valid parameters.
std::vector<std::vector<std::int64_t>> sigma_orbits_on_primes(std::int64_t p, std::int64_t w);

/// Decomposition shape of the fixed field of H over the base fixed by
/// `ambient`, from double cosets H\ambient/D. D and I are the decomposition
/// and inertia groups (inside `ambient`) of one prime of S over the base;
/// for a coset representative g the prime below g(Pi) gets
///   e = |I| / |g I g^{-1} ∩ H|,
///   f = (|D|/|I|) / (|g D g^{-1} ∩ H| / |g I g^{-1} ∩ H|).
/// total_e and total_f are cross-checked against |I| and |D|/|I| (wild
/// parts are folded into |I|). Non-subgroup inputs, I not normal in D, or
/// containment violations are rejected.
DecompShape double_coset_shapes(const MetacyclicGroup& G, const SubgroupData& ambient,
                                const SubgroupData& H, const SubgroupData& D,
                                const SubgroupData& I, std::int64_t total_e,
                                std::int64_t total_f, Extension label);

/// Re-derives the shape of the given extension from group theory alone.
/// Primary case: D = I = <sigma_mu> (the stabilizer of pi_0); non-primary:
/// D = I = the full group. H is Gal(S/top): <sigma_mu> for M, <theta> for
/// K, trivial for S; for S/K the computation runs inside ambient <theta>.
/// Extensions: M/Q, S/K, S/Q, K/Q (N/M is rejected).
DecompShape oracle_decompose(const CaseParams& params, Extension ext);

}  // namespace kummer
