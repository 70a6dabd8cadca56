#ifndef SPINTELEPORT_VERSION_HPP
#define SPINTELEPORT_VERSION_HPP

namespace spinteleport {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinteleport

#endif  // SPINTELEPORT_VERSION_HPP
