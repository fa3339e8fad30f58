"""tau(R0) for CdS and GaAs over 200-500 A, as CSV plus an SVG overlay.

    python scripts/fig1.py [outdir]
"""
import sys
from pathlib import Path

from exciton_decoherence.cli import main

out = Path(sys.argv[1] if len(sys.argv) > 1 else "out")
out.mkdir(parents=True, exist_ok=True)
csvs = []
for m in ("CdS", "GaAs"):
    path = out / f"fig1_{m}.csv"
    main(["sweep-tau", "--material", m, "--rmin", "200", "--rmax", "500", "--steps", "100", "--out", str(path)])
    csvs.append(str(path))
main(["plot", *csvs, "--columns", "tau_s", "--log-y", "--title", "tau vs R0", "--out", str(out / "fig1.svg")])
print(f"wrote {out}/fig1_*.csv and {out}/fig1.svg")
