#include "homrec/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace homrec {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("HOMREC_THREADS");
  if (raw == nullptr) return 0;
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0') return 0;
  return value;
}

}  // namespace homrec
