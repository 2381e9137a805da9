#ifndef CITESWING_VERSION_HPP
#define CITESWING_VERSION_HPP

namespace citeswing {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace citeswing

#endif
