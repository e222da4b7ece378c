#ifndef SBFLAG_ORACLE_HPP
#define SBFLAG_ORACLE_HPP

#include <tuple>
#include <vector>

#include "sbflag/global_field.hpp"

namespace sbflag::oracle {

// Desk-scale limits for the exhaustive verifiers.
struct EnumerationBudget {
  int max_places = 3;
  int max_denominator = 12;
  int max_degree = 6;
  Int max_index = 360;
};

// Smallest N >= 1 annihilating every local invariant, by linear scan on
// raw numerator/denominator pairs. Deliberately avoids the engine's
// lcm-of-orders path.
Int oracle_index(const GlobalBrauerClass& c, const EnumerationBudget& budget);

// Exhaustive enumeration of every degree-p local pattern over the
// support (split / fresh label / L0's label / L1's label per place);
// returns the patterns meeting all three index targets of the
// constructive lemma. Must be nonempty on valid inputs, and the
// engine's choice must be a member.
std::vector<FormalExtension> oracle_lemma_search(const GlobalBrauerClass& c,
                                                 const FormalExtension& l0,
                                                 const FormalExtension& l1,
                                                 const EnumerationBudget& budget);

// gcd over all rotations of the mixed products
// (prod_{i != r} p_i^{a_i}) p_r^{b_r}; equals prod p_i^{b_i} = d.
Int oracle_torsion_combination(
    const std::vector<std::tuple<Int, unsigned, unsigned>>& components);

}  // namespace sbflag::oracle

#endif
