#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amdkit::cli {

// Exit statuses: 0 success, 2 validation error, 3 size-cap refusal,
// 4 failed mathematical assertion.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kSizeCap = 3;
inline constexpr int kAssertionFailed = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amdkit::cli
