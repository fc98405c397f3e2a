"""
Gaussian cloud
--------------

One hundred points from a standard 2D normal. B relabels the point
farthest from the mean, C the point nearest to it. An index errs when it
does not rate B as strictly closer to the unperturbed clustering.
"""

import math

from graphvi.experiments import format_report, scenario_gaussian

print(format_report(scenario_gaussian(trials=100, n=100, seed=0)))

# VIN depends on the neighbourhood radius sqrt(-log eps).
for r2 in (0.25, 1.0, 4.0):
    s = scenario_gaussian(trials=100, n=100, eps=math.exp(-r2), seed=0)
    ab, ac = s.mean("vin")
    print(f"eps=e^-{r2}: vin errors {s.errors('vin')}/100, means {ab:.4f} vs {ac:.4f}")
