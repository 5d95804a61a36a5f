#include "kummer/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "kummer/fp.hpp"

namespace kummer {

MetacyclicGroup::MetacyclicGroup(std::int64_t p, std::int64_t v, std::int64_t n)
    : p_(p), v_(v), n_(n) {
  validate_case_params(CaseParams{p, v, n, true});
  mu_ = mod_pow(v, n, p);
  w_ = mod_pow(v, ((1 - n) % (p - 1) + (p - 1)) % (p - 1), p);
  wpow_.resize(static_cast<std::size_t>(p - 1));
  wpow_[0] = 1;
  for (std::int64_t s = 1; s < p - 1; ++s) wpow_[s] = wpow_[s - 1] * w_ % p;
}

GroupElement MetacyclicGroup::mul(GroupElement a, GroupElement b) const {
  return {(a.c + wpow_[static_cast<std::size_t>(a.s)] * b.c) % p_, (a.s + b.s) % (p_ - 1)};
}

GroupElement MetacyclicGroup::inverse(GroupElement a) const {
  std::int64_t s_inv = (p_ - 1 - a.s) % (p_ - 1);
  std::int64_t c_inv = (p_ - wpow_[static_cast<std::size_t>(s_inv)] * a.c % p_) % p_;
  return {c_inv, s_inv};
}

std::int64_t MetacyclicGroup::act_on_prime(GroupElement g, std::int64_t i) const {
  return (g.c + wpow_[static_cast<std::size_t>(g.s)] * i) % p_;
}

SubgroupData subgroup_from_generators(const MetacyclicGroup& G,
                                      std::vector<GroupElement> generators) {
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<GroupElement> stack{G.identity()};
  seen[static_cast<std::size_t>(G.index_of(G.identity()))] = 1;
  std::vector<GroupElement> elems;
  while (!stack.empty()) {
    GroupElement x = stack.back();
    stack.pop_back();
    elems.push_back(x);
    for (GroupElement g : generators) {
      GroupElement y = G.mul(x, g);
      std::size_t idx = static_cast<std::size_t>(G.index_of(y));
      if (!seen[idx]) {
        seen[idx] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end(), [&](GroupElement a, GroupElement b) {
    return G.index_of(a) < G.index_of(b);
  });
  return SubgroupData{std::move(generators), std::move(elems)};
}

SubgroupData full_group(const MetacyclicGroup& G) {
  return subgroup_from_generators(G, {G.theta(), G.sigma_mu()});
}

SubgroupData trivial_subgroup(const MetacyclicGroup& G) {
  return subgroup_from_generators(G, {});
}

std::vector<std::vector<std::int64_t>> sigma_orbits_on_primes(std::int64_t p, std::int64_t w) {
  require_prime(p);
  std::int64_t wr = w % p;
  if (wr < 0) wr += p;
  if (wr == 0) throw std::invalid_argument("sigma_orbits_on_primes: w == 0 mod p");
  if (wr == 1) {
    throw std::invalid_argument(
        "sigma_orbits_on_primes: w == 1 would mean d = 1, excluded (mu != v)");
  }
  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::vector<std::vector<std::int64_t>> orbits;
  for (std::int64_t start = 0; start < p; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<std::int64_t> orbit;
    std::int64_t i = start;
    do {
      seen[static_cast<std::size_t>(i)] = 1;
      orbit.push_back(i);
      i = i * wr % p;
    } while (i != start);
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  // Scanning from ascending start points already yields orbits sorted by
  // their minimal element.
  return orbits;
}

namespace {

std::vector<char> membership_mask(const MetacyclicGroup& G, const SubgroupData& sub) {
  std::vector<char> mask(static_cast<std::size_t>(G.order()), 0);
  for (GroupElement g : sub.elements) mask[static_cast<std::size_t>(G.index_of(g))] = 1;
  return mask;
}

bool subset_of(const std::vector<char>& inner, const std::vector<char>& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] && !outer[i]) return false;
  }
  return true;
}

void require_subgroup(const MetacyclicGroup& G, const SubgroupData& sub, const char* name) {
  SubgroupData regen = subgroup_from_generators(G, sub.generators);
  if (regen.elements != sub.elements) {
    throw std::invalid_argument(std::string("double_coset_shapes: ") + name +
                                " is not the closure of its generators");
  }
}

}  // namespace

DecompShape double_coset_shapes(const MetacyclicGroup& G, const SubgroupData& ambient,
                                const SubgroupData& H, const SubgroupData& D,
                                const SubgroupData& I, std::int64_t total_e,
                                std::int64_t total_f, Extension label) {
  require_subgroup(G, ambient, "ambient");
  require_subgroup(G, H, "H");
  require_subgroup(G, D, "D");
  require_subgroup(G, I, "I");

  const std::vector<char> in_ambient = membership_mask(G, ambient);
  const std::vector<char> in_H = membership_mask(G, H);
  const std::vector<char> in_D = membership_mask(G, D);
  const std::vector<char> in_I = membership_mask(G, I);

  if (!subset_of(in_H, in_ambient) || !subset_of(in_D, in_ambient) ||
      !subset_of(in_I, in_D)) {
    throw std::invalid_argument("double_coset_shapes: need H, D <= ambient and I <= D");
  }
  // Normality of I in D makes e and f independent of the coset representative.
  for (GroupElement d : D.generators) {
    GroupElement d_inv = G.inverse(d);
    for (GroupElement x : I.elements) {
      GroupElement y = G.mul(G.mul(d, x), d_inv);
      if (!in_I[static_cast<std::size_t>(G.index_of(y))]) {
        throw std::invalid_argument("double_coset_shapes: I is not normal in D");
      }
    }
  }
  if (I.order() != total_e) {
    throw std::invalid_argument("double_coset_shapes: |I| = " + std::to_string(I.order()) +
                                " != total_e = " + std::to_string(total_e));
  }
  if (D.order() != total_e * total_f) {
    throw std::invalid_argument("double_coset_shapes: |D|/|I| != total_f");
  }

  std::vector<char> visited(static_cast<std::size_t>(G.order()), 0);
  std::vector<GroupElement> stack;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> blocks;

  for (GroupElement rep : ambient.elements) {
    if (visited[static_cast<std::size_t>(G.index_of(rep))]) continue;

    // Flood the double coset H rep D through left-H and right-D steps.
    visited[static_cast<std::size_t>(G.index_of(rep))] = 1;
    stack.assign(1, rep);
    while (!stack.empty()) {
      GroupElement x = stack.back();
      stack.pop_back();
      for (GroupElement h : H.generators) {
        GroupElement y = G.mul(h, x);
        std::size_t idx = static_cast<std::size_t>(G.index_of(y));
        if (!visited[idx]) {
          visited[idx] = 1;
          stack.push_back(y);
        }
      }
      for (GroupElement d : D.generators) {
        GroupElement y = G.mul(x, d);
        std::size_t idx = static_cast<std::size_t>(G.index_of(y));
        if (!visited[idx]) {
          visited[idx] = 1;
          stack.push_back(y);
        }
      }
    }

    GroupElement rep_inv = G.inverse(rep);
    std::int64_t i_meet = 0;
    for (GroupElement x : I.elements) {
      GroupElement y = G.mul(G.mul(rep, x), rep_inv);
      if (in_H[static_cast<std::size_t>(G.index_of(y))]) ++i_meet;
    }
    std::int64_t d_meet = 0;
    for (GroupElement x : D.elements) {
      GroupElement y = G.mul(G.mul(rep, x), rep_inv);
      if (in_H[static_cast<std::size_t>(G.index_of(y))]) ++d_meet;
    }

    if (I.order() % i_meet != 0 || d_meet % i_meet != 0 ||
        (D.order() / I.order()) % (d_meet / i_meet) != 0) {
      throw std::logic_error("double_coset_shapes: non-integral e or f");
    }
    std::int64_t e = I.order() / i_meet;
    std::int64_t f = (D.order() / I.order()) / (d_meet / i_meet);
    ++blocks[{e, f}];
  }

  std::vector<PrimeBlock> primes;
  primes.reserve(blocks.size());
  for (const auto& [ef, count] : blocks) primes.push_back({ef.first, ef.second, count});
  return make_shape(label, ambient.order() / H.order(), std::move(primes));
}

DecompShape oracle_decompose(const CaseParams& params, Extension ext) {
  validate_case_params(params);
  MetacyclicGroup G(params.p, params.v, params.n);

  SubgroupData sigma_sub = subgroup_from_generators(G, {G.sigma_mu()});
  SubgroupData theta_sub = subgroup_from_generators(G, {G.theta()});
  SubgroupData full = full_group(G);
  SubgroupData trivial_subgroup_ref = trivial_subgroup(G);

  // D(pi_0) = I(pi_0): <sigma_mu> when pi splits totally in S/K (primary,
  // sigma_mu fixes pi_0 and e = f over Q come from K alone), the whole
  // group when S/Q is fully ramified at pi (non-primary).
  const SubgroupData& dec = params.primary ? sigma_sub : full;

  switch (ext) {
    case Extension::M_over_Q:
      return double_coset_shapes(G, full, sigma_sub, dec, dec, dec.order(), 1, ext);
    case Extension::K_over_Q:
      return double_coset_shapes(G, full, theta_sub, dec, dec, dec.order(), 1, ext);
    case Extension::S_over_Q:
      return double_coset_shapes(G, full, trivial_subgroup(G), dec, dec, dec.order(), 1, ext);
    case Extension::S_over_K: {
      // Relative to K: everything happens inside Gal(S/K) = <theta>, and the
      // decomposition data of pi_0 over pi is cut down accordingly. K has a
      // single prime over p, so these double cosets see all primes of S.
      // <theta> has prime order, so D ∩ <theta> is trivial or all of it.
      bool contains_theta = std::find(dec.elements.begin(), dec.elements.end(),
                                      G.theta()) != dec.elements.end();
      const SubgroupData& dec_rel = contains_theta ? theta_sub : trivial_subgroup_ref;
      return double_coset_shapes(G, theta_sub, trivial_subgroup_ref, dec_rel, dec_rel,
                                 dec_rel.order(), 1, ext);
    }
    case Extension::N_over_M:
      throw std::invalid_argument("oracle_decompose: N/M is not an oracle extension");
  }
  throw std::logic_error("oracle_decompose: bad Extension");
}

}  // namespace kummer
