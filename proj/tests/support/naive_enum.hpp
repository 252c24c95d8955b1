#ifndef GIRA_TESTS_NAIVE_ENUM_HPP
#define GIRA_TESTS_NAIVE_ENUM_HPP

#include <set>
#include <string>

#include "gira/profile.hpp"

namespace gira::testing {

/// Reference enumeration for the two-oracle agreement tests: enumerate
/// whole tables, filter by the table's own laws, and let check_profile be
/// the final referee. No constraint propagation, no lattice seeding, no
/// reuse of the search module. Returns the canonical keys of the models
/// of exactly size n. Practical for n <= 3 only.
std::set<std::string> naive_canonical_keys(Profile p, int n);

}  // namespace gira::testing

#endif
