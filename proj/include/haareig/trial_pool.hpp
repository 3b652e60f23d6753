#pragma once

#include <functional>

namespace haareig {

/// Runs fn(t) for every t in [0, trials), distributing the calls over
/// `workers` threads when workers > 1. fn must be safe to call
/// concurrently for distinct trial indices; results keyed by trial index
/// are reproducible regardless of worker count.
void run_trials(long long trials, int workers,
                const std::function<void(long long)>& fn);

}  // namespace haareig
