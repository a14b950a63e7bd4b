#pragma once

#include <string>

namespace tkk::log {

/// Phase messages go to stderr only when verbose logging is on.
void set_verbose(bool on);
bool verbose();
/// Prints "[tkk +<seconds>s] message" when verbose.
void info(const std::string& message);

}  // namespace tkk::log
