# # Accuracy over repeated runs
#
# `evaluate` computes the exact count once, repeats the estimator with seeds
# `seed, seed + 1, ...` and reports the mean absolute percentage error.

# +
from presto import evaluate, mape_report, named_motif, uniform_network

network = uniform_network(12, 10_000, 10_000, seed=5)
motif = named_motif("path-3")
# -

for s in (100, 1_000, 10_000):
    report = evaluate(network, motif, delta=15.0, c=1.25, variant="E", s=s, runs=10, trim=True)
    print(s, report.exact, f"MAPE {report.mape:.2f}%", f"stddev {report.stddev:.2f}%")

# Trimming removes the single best and single worst run before averaging.

print(mape_report(100, [90, 110, 100]).mape)
print(mape_report(100, [90, 110, 100, 150], trim=True).mape)

# The same numbers are available from the command line:
#
#     presto evaluate --network edges.txt --motif path3.txt --delta 15 \
#         --samples 1000 --runs 10 --trim
