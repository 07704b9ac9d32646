# # How many samples are enough?
#
# For a relative error `epsilon` with failure probability `eta`, the sample
# size can be read off a concentration inequality.  Bennett's inequality uses
# the variance and needs far fewer samples than Hoeffding's when the start
# range is wide.

# +
from presto import ApproximationGoal, bennett_sample_size_a, bennett_sample_size_e
from presto import hoeffding_sample_size_a

goal = ApproximationGoal(epsilon=0.5, eta=0.1)
# -

# With `c = 2` and `delta = 1` the ratio `delta_T1 / ((c - 1) delta)` equals `delta_T1`.

for ratio in (5, 20, 101, 1000, 10_000):
    h = hoeffding_sample_size_a(goal, ratio, 2.0, 1.0)
    b = bennett_sample_size_a(goal, ratio, 2.0, 1.0)
    print(f"{ratio:>6} hoeffding={h:>12} bennett={b:>8} ratio={h / b:7.1f}")

# The edge-start version depends only on the number of admissible starts.

for starts in (1, 2, 101, 10_000):
    print(starts, bennett_sample_size_e(goal, starts))

# Tighter goals cost more: halving epsilon roughly quadruples the sample size.

for eps in (1.0, 0.5, 0.25, 0.1):
    print(eps, bennett_sample_size_e(ApproximationGoal(eps, 0.1), 101))
