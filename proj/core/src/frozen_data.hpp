#pragma once

namespace latlab::frozen::detail {

extern const char* const kMotohashi;
extern const char* const kTheorem5P2;
extern const char* const kMomentI2;

}  // namespace latlab::frozen::detail
