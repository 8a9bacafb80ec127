"""Stages 2-5 of the d=7 campaign: formula, per-prime minimal ODEs, exact
reconstruction, analyses."""
import sys, time
sys.path.insert(0, "/root/pkg/src")
from fcclgf.pipeline import Pipeline
from fcclgf.modular import prime_sequence

pipe = Pipeline("/root/pkg/cache", jobs=2)
t0 = time.time()
s = pipe.exact_series(7)
print(f"series loaded: {len(s)} terms [{time.time()-t0:.0f}s]", flush=True)
formula = pipe.discover_formula(7, s.reduce_mod(prime_sequence(1)[0]))
print(f"formula: m={formula.m} q={formula.q} C={formula.C} D_app={formula.D_app} "
      f"[{time.time()-t0:.0f}s]", flush=True)
L = pipe.exact_operator(7)
print(f"exact operator: order {L.order}, degree {L.max_degree} "
      f"[{time.time()-t0:.0f}s]", flush=True)
report = pipe.analyses(7, digits=12)
for k, v in report.items():
    print(f"  {k}: {v}", flush=True)
print(f"total {time.time()-t0:.0f}s", flush=True)
