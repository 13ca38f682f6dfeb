#ifndef DISCOURSE_VERSION_HPP
#define DISCOURSE_VERSION_HPP

namespace discourse {

inline constexpr const char* kToolName = "discourse";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace discourse

#endif
