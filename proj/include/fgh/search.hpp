#ifndef FGH_SEARCH_HPP
#define FGH_SEARCH_HPP

#include <optional>

#include "fgh/proof.hpp"

namespace fgh {

// Goal-directed bounded proof search. Sound: every returned proof passes
// check_proof (check_oracle_proof when oracle_level >= 0). Complete only
// relative to the documented strategy order: recognized axiom, tautology,
// oracle line, conjunction / disjunction / implication introduction,
// existential introduction with definitional witnesses first and then
// ascending witness values <= 64, generalization. The budget caps the number
// of strategy nodes explored; the least proof in this order is returned.
std::optional<Proof> bounded_search(const TheorySpec& theory, const FormulaPtr& goal,
                                    uint64_t budget,
                                    const TheoryRegistry& reg = TheoryRegistry::builtin(),
                                    int oracle_level = -1, uint64_t oracle_fuel = 64);

}  // namespace fgh

#endif
