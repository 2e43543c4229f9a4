#include "ncflab/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace ncflab {

namespace {
int g_workers = 0;
}

int worker_count() { return g_workers > 0 ? g_workers : omp_get_max_threads(); }

void set_worker_count(int workers) { g_workers = workers > 0 ? workers : 0; }

int configure_workers_from_env() {
  if (const char* env = std::getenv("NCFLAB_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) set_worker_count(value);
    } catch (const std::exception&) {
      // unparsable values leave the default in place
    }
  }
  return worker_count();
}

}  // namespace ncflab
