# # Exact counting of temporal motifs
#
# A temporal motif is a small directed multigraph whose edges carry an order.
# An occurrence in a network follows that order under a one-to-one node
# mapping, and all of its edges fit inside a time span of `delta`.

# +
import io

from presto import EdgeSlice, brute_force_count, count_instances, enumerate_instances
from presto import parse_motif, parse_network

network, report = parse_network(io.StringIO(
    "a b 1\nb c 2\nc a 3\na b 10\nb c 11\nc a 20\n"))
print(report.to_json())
triangle = parse_motif(io.StringIO("x y\ny z\nz x\n"))
# -

# ## How many triangles close within 2 time units?

full = EdgeSlice.full(network)
print(count_instances(full, triangle, delta=2))

# Widening `delta` admits the triangles that mix early and late edges.

for delta in (2, 9, 10, 19):
    print(delta, count_instances(full, triangle, delta))

# ## Looking at the occurrences
#
# `enumerate_instances` hands every occurrence to a callback, in lexicographic
# order of edge positions.

enumerate_instances(full, triangle, 19, print)

# ## Checking against brute force
#
# The brute-force counter tries every increasing tuple of edges; it is slow but
# easy to trust.

print(brute_force_count(network, triangle, 19) == count_instances(full, triangle, 19))
