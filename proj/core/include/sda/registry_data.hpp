#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sda::detail {

/// Generator rows of the vendored classified codes (c83..c85, x24, y24, z24).
/// See data/PROVENANCE.md for how these matrices were obtained and which
/// invariants pin them down.
const std::vector<std::pair<std::string, std::vector<std::string>>>&
embedded_codes();

}  // namespace sda::detail
