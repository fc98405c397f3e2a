"""
Two-region grid
---------------

A 60x60 grid split into an upper and a lower region. Each perturbation
moves 100 lower-region pixels into the upper region; the variants differ
in where those pixels are.
"""

from graphvi.experiments import GRID_VARIANTS, format_report, scenario_grid

for variant in GRID_VARIANTS:
    print(format_report(scenario_grid(60, 60, variant)))
