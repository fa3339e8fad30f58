"""Cat-state decoherence times tau/(2|alpha|^2) for |alpha|^2 = 2, 4, 6.

CdS over 200-500 A, GaAs over 600-1000 A.

    python scripts/fig2.py [outdir]
"""
import sys
from pathlib import Path

from exciton_decoherence.cli import main

out = Path(sys.argv[1] if len(sys.argv) > 1 else "out")
out.mkdir(parents=True, exist_ok=True)
cols = "tau_cat_s_nbar_2,tau_cat_s_nbar_4,tau_cat_s_nbar_6"
for m, lo, hi in (("CdS", "200", "500"), ("GaAs", "600", "1000")):
    path = out / f"fig2_{m}.csv"
    main(["sweep-cat", "--material", m, "--rmin", lo, "--rmax", hi, "--nbar", "2,4,6", "--out", str(path)])
    main(["plot", str(path), "--columns", cols, "--title", f"{m} cat tau vs R0", "--out", str(out / f"fig2_{m}.svg")])
print(f"wrote {out}/fig2_*.csv and {out}/fig2_*.svg")
