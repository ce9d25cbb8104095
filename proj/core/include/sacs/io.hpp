#pragma once

// Reading and writing the .m10 interchange format.

#include <filesystem>
#include <string>

#include "sacs/manifold.hpp"

namespace sacs {

// Parse a .m10 document.  Structural problems raise ParseError carrying the
// path to the offending key; semantic validation is a separate step.
Manifold parse_manifold(const std::string& text);

Manifold load_manifold_file(const std::filesystem::path& file);

// Canonical serialization: schema key order, scalar arrays inline, two-space
// indent, decimal integers, trailing newline.  Parsing the result and
// serializing again reproduces the bytes.
std::string serialize_manifold(const Manifold& m);

}  // namespace sacs
