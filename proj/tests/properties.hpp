#ifndef TROPCLUSTER_TESTS_PROPERTIES_HPP
#define TROPCLUSTER_TESTS_PROPERTIES_HPP

// Randomized and exhaustive property checks shared by the unit tests and the
// acceptance binary. Each check is exact and uses a fixed RNG seed.

#include <random>
#include <string>
#include <vector>

#include "tropcluster/cluster.hpp"

namespace tropcluster::props {

struct Result {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && checked > 0; }
};

/// Three mutable directions, entries in {-1,0,1}, `m` frozen rows and the
/// matching upper-right block; redrawn until the mutable columns are
/// independent.
SeedData random_rank3_seed(std::mt19937& rng, std::size_t m);

/// Reduced word in directions 1..3 of length at most max_len.
MutationWord random_word(std::mt19937& rng, std::size_t max_len);

/// mu_k mu_k = id on random mutated rank-3 seeds.
Result mutation_involution(unsigned trials = 200);
/// Both sign choices of the matrix mutation formula agree.
Result mutation_sign_consistency(unsigned trials = 200);
/// Laurent-expansion and transport g-vectors agree on words of length <= 6.
Result gvector_oracle_agreement(unsigned trials = 200);
/// init_w(init_w(I)) = init_w(I) and init_{w + t l}(I) = init_w(I) for each
/// lineality vector l, with w interior to every Flag_3, Flag_4 and extended
/// census cone.
Result census_initial_ideals();
/// contains_monomial against enumeration of monomials of degree <= 6.
Result contains_monomial_enumeration(unsigned trials = 50);
/// is_prime_binomial against an irreducibility criterion for principal
/// binomials in three variables.
Result prime_binomial_factoring(unsigned trials = 150);

std::vector<Result> all();

}  // namespace tropcluster::props

#endif  // TROPCLUSTER_TESTS_PROPERTIES_HPP
