#pragma once

#include <string>
#include <vector>

#include "quintic/fixtures.hpp"

namespace quintic {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string residue; // empty on pass
};

/// Every polynomial identity of the fibration, checked by exact equality.
/// Golden values are taken from `fixtures`.
std::vector<IdentityResult> run_identity_suite(const Fixtures& fixtures);

} // namespace quintic
