"""
Replaying the constructions on random instances
===============================================

Each instance is seeded by "seed:suite:index", so any failure can be
re-run on its own with ``run_instance``.
"""
# %%
from dglab.verify import run_instance, run_verify

report = run_verify(seed=7, scale="small", suites=["cokernel", "spectrum", "hypothesis_gate"])
print(report.to_text())

# %%
print(run_instance(7, "riesz", 3))
