# # Parallel runs give identical answers
#
# The uniform variate of iteration `i` is a hash of `(seed, i)`, so it does not
# matter which worker handles which iteration.

# +
import os
import time

import numpy as np

from presto import EstimatorConfig, named_motif, run_estimate, uniform_network

network = uniform_network(200, 200_000, 50_000, seed=2)
motif = named_motif("cycle-3")
# -

# A short warm-up run loads the compiled kernels so the timings compare like with like.

run_estimate(network, motif, EstimatorConfig("E", 1.25, 40.0, s=100))

results = {}
for workers in (1, 2, 4):
    cfg = EstimatorConfig("E", 1.25, 40.0, s=20_000, seed=9, workers=workers)
    t0 = time.perf_counter()
    results[workers] = run_estimate(network, motif, cfg)
    print(workers, "workers:", f"{time.perf_counter() - t0:.2f}s", results[workers].estimate)

print(all(np.array_equal(results[1].per_iteration, r.per_iteration) for r in results.values()))

# Wall-clock gains need more than one core; this machine has:

print(len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count())
