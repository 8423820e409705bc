#pragma once

#include <string>
#include <vector>

#include "ladder/io.hpp"

namespace ladder::catalogue {

/// Fixtures shipped under tests/fixtures, in a fixed order.
std::vector<std::string> standard_names();

/// Builds a named fixture. Accepted names: the standard ones plus
/// chain<N>, normed-chain<N> and counterexample<N>. InputError otherwise.
io::PosetDocument build(const std::string& name);

}  // namespace ladder::catalogue
