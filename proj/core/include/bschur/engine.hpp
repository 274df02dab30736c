#ifndef BSCHUR_ENGINE_HPP
#define BSCHUR_ENGINE_HPP

#include <functional>
#include <vector>

#include "bschur/murphy.hpp"

namespace bschur {

// Process-wide cache of cellular bases, keyed by (n, ParamSpec). Built on
// first use, immutable and shared afterwards.
const MurphyBasis& murphy_engine(int n, const ParamSpec& p);

// Runs fn(i) for i in [0, count) on up to `jobs` worker threads. jobs <= 1
// runs inline. Exceptions propagate from the first failing item.
void parallel_for(long count, const std::function<void(long)>& fn, int jobs);

// Default worker count: BSCHUR_JOBS environment variable, else 1.
int default_jobs();

}  // namespace bschur

#endif
