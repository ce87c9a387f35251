"""
Running the property suite
==========================

Every identity and inequality is checked on a lattice of the unit cube.
"""

# %%
from neutrosophic import NeutrosophicTriplet
from neutrosophic.verify import GridSpec, finite_difference_signs, run_property_suite, suite_passed

reports = run_property_suite(GridSpec(0.1))
for r in reports:
    flag = "ok " if r.passed else ("-- " if not r.mandatory else "BAD")
    print(f"{flag} {r.check_name:42s} cases={r.cases_run:7d} max_violation={r.max_violation:.2e}")
print("all mandatory checks pass:", suite_passed(reports))

# %% [markdown]
# The distance is not a metric: the triangle probe finds violations.

# %%
probe = next(r for r in reports if r.check_name == "triangle_inequality_probe")
print(probe.notes, probe.failures[0])

# %% [markdown]
# Finite-difference signs of the entropy at one point.

# %%
print(finite_difference_signs(NeutrosophicTriplet(0.7, 0.2, 0.1), 1e-4).notes)
