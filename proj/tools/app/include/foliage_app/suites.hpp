#pragma once

#include <string>
#include <vector>

#include "foliage/foliation.hpp"
#include "foliage_app/report.hpp"

namespace foliage::app {

/// identities, degrees, kupka, counts, all.
const std::vector<std::string>& suite_names();

/// Runs a built-in battery on the reference objects. Identity checks honor
/// `mode`; the rest are exact. Throws std::invalid_argument on an unknown suite.
Report run_suite(const std::string& name, const CheckMode& mode);

}  // namespace foliage::app
