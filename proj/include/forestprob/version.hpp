#pragma once

namespace forestprob {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace forestprob
