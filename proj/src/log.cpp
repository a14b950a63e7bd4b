#include "tkk/log.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>

namespace tkk::log {

namespace {
std::atomic<bool> g_verbose{false};
const auto g_start = std::chrono::steady_clock::now();
}  // namespace

void set_verbose(bool on) { g_verbose = on; }
bool verbose() { return g_verbose; }

void info(const std::string& message) {
  if (!g_verbose) return;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
  std::fprintf(stderr, "[tkk +%.2fs] %s\n", secs, message.c_str());
}

}  // namespace tkk::log
