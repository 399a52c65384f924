#pragma once

namespace dcc {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Version of the documented algorithmic conventions (tie-breaks, the
// positive-strength gate, metric normalizations, RNG choice) listed in the
// README. Bumped whenever any convention changes, so result files say which
// rule set produced them.
inline constexpr const char* kConventionsVersion = "1";

}  // namespace dcc
