"""Run every oracle check from the command line and summarize.

    python scripts/verify_all.py
"""
import sys

from exciton_decoherence.cli import main

RUNS = [
    ["verify", "lindblad", "--material", "CdS", "--radius", "300", "--state", "qubit"],
    ["verify", "lindblad", "--material", "CdS", "--radius", "300", "--state", "even-cat", "--nbar", "2"],
    ["verify", "lindblad", "--material", "CdS", "--radius", "300", "--state", "odd-cat", "--nbar", "4"],
    ["verify", "lindblad", "--material", "GaAs", "--radius", "800", "--state", "even-cat", "--nbar", "4"],
    ["verify", "wigner-weisskopf", "--material", "CdS", "--radius", "300"],
    ["verify", "wigner-weisskopf", "--material", "GaAs", "--radius", "800"],
]

codes = [main(argv) for argv in RUNS]
print(f"{codes.count(0)}/{len(codes)} oracle checks passed")
sys.exit(max(codes))
