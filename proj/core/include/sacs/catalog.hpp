#pragma once

// Built-in example manifolds, constructed programmatically.  These back the
// `catalog` CLI subcommands and double as fixtures for the test suites.

#include <string>
#include <vector>

#include "sacs/manifold.hpp"

namespace sacs {

// Names in catalog order.
std::vector<std::string> catalog_names();

// All built-in entries, constructed once and cached.
const std::vector<Manifold>& catalog();

// Lookup by name; throws Error for unknown names.
const Manifold& catalog_entry(const std::string& name);

}  // namespace sacs
