"""
Variation of information
------------------------

VI compares two labellings of the same points using only cluster overlap
counts. It is a metric, and moving any single point costs the same
amount no matter where the point sits.
"""

import math

from graphvi import confusion_matrix, single_cluster, singletons, vi

a = [0, 0, 0, 1, 1, 1]
b = [0, 0, 1, 1, 1, 1]
print("confusion matrix:")
print(confusion_matrix(a, b).counts)
print(f"vi(a, b) = {vi(a, b):.6f} nats = {vi(a, b, base=2):.6f} bits")

# The largest possible distance on n points: all singletons vs one cluster.
n = 10
print(f"vi(singletons, one cluster) = {vi(singletons(n), single_cluster(n)):.6f}, log n = {math.log(n):.6f}")

# Relabelling the middle point or the last point of a row looks the same to VI.
row = [0] * 10
mid, end = row.copy(), row.copy()
mid[5] = 1
end[9] = 1
print(f"vi(row, mid) = {vi(row, mid):.6f}   vi(row, end) = {vi(row, end):.6f}")
