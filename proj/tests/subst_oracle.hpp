#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "mltt/term.hpp"

namespace mltt::testing {

// A normalizer by capture-avoiding de Bruijn substitution, independent of the
// environment machine. No eta, no globals. Counts beta steps and eliminator
// firings; gives up (nullopt) once `max_steps` is exceeded.
std::optional<TermPtr> substitution_normalize(const TermPtr& t, std::uint64_t max_steps,
                                              std::uint64_t* steps = nullptr);

// Random closed, well-typed terms of type Nat built from every built-in former.
TermPtr random_nat_term(std::mt19937_64& rng, int depth);

}  // namespace mltt::testing
