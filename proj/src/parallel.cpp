#include "cperm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cperm {

int default_jobs() {
  if (const char* env = std::getenv("CPERM_JOBS"); env != nullptr && *env != '\0') {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace cperm
