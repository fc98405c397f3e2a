"""
Points on a line
----------------

Relabel a point in the middle of a chain or at its end. VI ties; the
graph-aware indices do not, and both rate the end relabelling as closer.
"""

from graphvi.experiments import format_report, scenario_chain_block, scenario_chain_single

print(format_report(scenario_chain_single(10)))
print(format_report(scenario_chain_block(10, 2)))
print(format_report(scenario_chain_block(10, 2, decay="inverse")))
