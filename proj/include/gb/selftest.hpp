#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gb {

struct SelftestCase {
    std::string name;
    /// Returns nullopt on pass, a failure detail otherwise.
    std::function<std::optional<std::string>()> run;
};

/// The embedded desk-example suite: every hand-computable value the library
/// is expected to reproduce exactly or to stated tolerance.
const std::vector<SelftestCase>& selftest_cases();

}  // namespace gb
