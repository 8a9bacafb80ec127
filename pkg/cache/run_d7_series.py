"""Stage 1 of the d=7 campaign: exact T-table chain to 460 terms, cached."""
import time, sys
sys.path.insert(0, "/root/pkg/src")
from fcclgf.series import build_table_chain, lgf_series, save_lgf_series

t0 = time.time()
s = lgf_series(7, 460, cache_dir="/root/pkg/cache/tables")
save_lgf_series("/root/pkg/cache/lgf7_exact_460.series", s)
print(f"done in {time.time()-t0:.0f}s", flush=True)
print("c2..c5:", [str(s[i]) for i in (2,3,4,5)], flush=True)
