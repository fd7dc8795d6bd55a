#ifndef CSP_LINALG_HPP
#define CSP_LINALG_HPP

#include <optional>
#include <vector>

#include "csp/arith.hpp"

namespace csp {

// Rank over the rationals, by fraction-free-ish Gaussian elimination on
// exact mpq values. Destroys its copy of the input.
long rational_rank(std::vector<std::vector<Rat>> m);

// Solves A x = b exactly. Returns nullopt when the system is inconsistent
// or underdetermined (tests want the unique-solution case only).
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace csp

#endif
