// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#include "memoroid/parallel.hpp"

#include <cstdlib>
#include <string>

namespace memo {

int default_worker_budget() {
  if (const char* env = std::getenv("MEMOROID_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
      // fall through to default
    }
  }
  return 1;
}

}  // namespace memo
