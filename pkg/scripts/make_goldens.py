"""Freeze golden tau values with a 50-digit evaluation of the closed form.

Deliberately standalone: nothing here imports the package, so the frozen
numbers stay an independent check on it. Output goes to tests/data/.

    python scripts/make_goldens.py
"""
import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

HBAR = mp.mpf("6.582119569e-16")  # eV s
HBAR_C = mp.mpf("1973.269804")  # eV A
HBAR2_2M0 = mp.mpf("3.80998")  # eV A^2
C = HBAR_C / HBAR  # A / s
M0 = HBAR**2 / (2 * HBAR2_2M0)  # eV s^2 / A^2

MATERIALS = {
    "CdS": dict(E_g="2.583", E_b="0.030", a_B="30", ratio_meV="0.25", eps="8", m_e="0.25", m_h="1.6"),
    "GaAs": dict(E_g="1.52", E_b="0.005", a_B="100", ratio_meV="0.025", eps="12.53", m_e="0.0665", m_h="0.45"),
}


def tau(name, R0):
    p = {k: mp.mpf(v) for k, v in MATERIALS[name].items()}
    mu2 = p["ratio_meV"] / 1000 * p["eps"] * p["a_B"] ** 3
    M = (p["m_e"] + p["m_h"]) * M0
    num = 3 * HBAR**4 * mp.pi**2 * C**3 * p["a_B"] ** 3 * M**3 * R0**3
    den = 2 * mu2 * (2 * M * R0**2 * (p["E_g"] - p["E_b"]) + HBAR**2 * mp.pi**2) ** 3
    return num / den


def extras(name, R0):
    p = {k: mp.mpf(v) for k, v in MATERIALS[name].items()}
    M = p["m_e"] + p["m_h"]
    hw = p["E_g"] - p["E_b"] + HBAR2_2M0 * mp.pi**2 / (M * R0**2)
    omega = hw / HBAR
    mu2 = p["ratio_meV"] / 1000 * p["eps"] * p["a_B"] ** 3
    gs = 4 * mu2 * omega**3 / (3 * HBAR * (2 * mp.pi * C) ** 3)
    return {
        "hbar_omega_eV": float(hw),
        "lambda_angstrom": float(2 * mp.pi * C / omega),
        "gamma_s_per_s": float(gs),
        "tau_s": float(tau(name, R0)),
    }


def grid(lo, hi, steps):
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def main():
    out = {"note": "50-digit mpmath evaluation of the tau closed form", "points": {}, "sweeps": {}}
    for name in MATERIALS:
        out["points"][name] = {"300": extras(name, mp.mpf(300)), "800": extras(name, mp.mpf(800))}
    for key, name, lo, hi in [
        ("fig1_CdS", "CdS", 200, 500),
        ("fig1_GaAs", "GaAs", 200, 500),
        ("fig2_CdS", "CdS", 200, 500),
        ("fig2_GaAs", "GaAs", 600, 1000),
    ]:
        rs = grid(lo, hi, 100)
        out["sweeps"][key] = {
            "material": name,
            "R0_angstrom": [float(r) for r in rs],
            "tau_s": [mp.nstr(tau(name, r), 25) for r in rs],
        }
    path = Path(__file__).resolve().parents[1] / "tests" / "data" / "golden_tau.json"
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {path}")
    for name, pts in out["points"].items():
        print(name, pts["300"])


if __name__ == "__main__":
    main()
