# # Estimating counts by window sampling
#
# On large networks exact counting gets expensive.  The estimators below count
# exactly inside short random windows of length `c * delta`, reweighting every
# occurrence by the inverse chance that a window catches it.

# +
import numpy as np

from presto import EdgeSlice, EstimatorConfig, count_instances, named_motif, run_estimate
from presto import compute_stats, uniform_network

network = uniform_network(n_nodes=15, n_edges=20_000, timespan=20_000, seed=1)
motif = named_motif("feed-forward")
delta, c = 20.0, 1.25
# -

exact = count_instances(EdgeSlice.full(network), motif, delta)
print("exact:", exact)

# ## Two window-start laws
#
# Variant `"A"` draws the start uniformly on a time interval; variant `"E"`
# starts every window at a randomly chosen edge.

for variant in ("A", "E"):
    res = run_estimate(network, motif, EstimatorConfig(variant, c, delta, s=5_000, seed=3))
    print(variant, round(res.estimate, 1), f"{abs(res.estimate - exact) / exact:.2%}",
          f"{res.elapsed:.2f}s")

# ## Spread over repeated runs

estimates = [run_estimate(network, motif, EstimatorConfig("E", c, delta, 2_000, seed=s)).estimate
             for s in range(20)]
print(np.mean(estimates) / exact, np.std(estimates) / exact)

# ## The quantities that drive the error
#
# `delta_T1` is the length of the continuous start interval and `delta_T2` the
# number of admissible edge starts.

print(compute_stats(network, motif.ell, c, delta).to_dict())
