// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace coword {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "coword";

} // namespace coword
