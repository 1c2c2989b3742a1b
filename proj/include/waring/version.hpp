#ifndef WARING_VERSION_HPP
#define WARING_VERSION_HPP

namespace waring {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
}  // namespace waring

#endif  // WARING_VERSION_HPP
