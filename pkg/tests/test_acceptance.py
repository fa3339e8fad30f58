"""Exit criteria. Each test prints one ``[ACCEPT n] PASS/FAIL`` line.

Run on its own with ``pytest tests/test_acceptance.py -v``.
"""
import math
import time

import numpy as np
import pytest

from exciton_decoherence import CrystalliteConfig, decoherence_profile, gamma_s, get_material, wavelength
from exciton_decoherence.cli import main, verify_lindblad, verify_weisskopf
from exciton_decoherence.core import coherent_superposition_factor, tau_closed_form
from exciton_decoherence.csvio import read_csv
from exciton_decoherence.oracles import LindbladSpec, integrate_lindblad
from exciton_decoherence.states import (
    Cat,
    FockBasis,
    Qubit,
    TwoCoherent,
    cat_coherence_from_parity,
    coherence_magnitude,
    evolve,
    initial_density_matrix,
    populations,
    purity,
)


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[ACCEPT {n}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def test_1_formula_consistency(report):
    rng = np.random.default_rng(20261015)
    names = rng.choice(["CdS", "GaAs"], 1000)
    radii = rng.uniform(200.0, 1000.0, 1000)
    t0 = time.perf_counter()
    worst = 0.0
    for name, R0 in zip(names, radii):
        c = CrystalliteConfig(get_material(str(name)), float(R0))
        via_rate = 1.0 / (32 * math.pi * (R0 / c.material.a_B) ** 3 * gamma_s(c))
        worst = max(worst, abs(tau_closed_form(c) / via_rate - 1))
    elapsed = time.perf_counter() - t0
    report(1, worst <= 1e-12 and elapsed < 1.0, f"max rel err {worst:.2e} (tol 1e-12), {elapsed:.3f} s for 1000 configs")


def test_2_wavelength(report):
    radii = np.linspace(200, 500, 301)
    lc = [wavelength(CrystalliteConfig(get_material("CdS"), r)) for r in radii]
    lg = [wavelength(CrystalliteConfig(get_material("GaAs"), r)) for r in radii]
    dc = max(abs(x / 5000 - 1) for x in lc)
    dg = max(abs(x / 8000 - 1) for x in lg)
    report(2, dc <= 0.1 and dg <= 0.1, f"CdS max |lambda/5000-1| = {dc:.3f}, GaAs max |lambda/8000-1| = {dg:.3f} (tol 0.1)")


def test_3_fig1_sweep(report, golden, tmp_path):
    tables = {}
    for m in ("CdS", "GaAs"):
        out = tmp_path / f"{m}.csv"
        assert main(["sweep-tau", "--material", m, "--rmin", "200", "--rmax", "500", "--steps", "100", "--out", str(out)]) == 0
        tables[m] = read_csv(out)
    tc, tg = tables["CdS"].column("tau_s"), tables["GaAs"].column("tau_s")
    monotone = bool(np.all(np.diff(tc) < 0) and np.all(np.diff(tg) < 0))
    ordered = bool(np.all(tg > tc))
    worst = 0.0
    for m, tab in tables.items():
        ref = golden["sweeps"][f"fig1_{m}"]
        assert np.allclose(tab.column("R0_angstrom"), ref["R0_angstrom"], rtol=1e-15, atol=0)
        gold = np.array([float(x) for x in ref["tau_s"]])
        worst = max(worst, float(np.max(np.abs(tab.column("tau_s") / gold - 1))))
    ok = monotone and ordered and worst <= 1e-10
    report(3, ok, f"decreasing={monotone}, GaAs>CdS rowwise={ordered}, max rel dev from golden {worst:.2e} (tol 1e-10)")


def test_4_fig2_sweep(report, golden, tmp_path):
    ok, worst = True, 0.0
    for m, lo, hi in (("CdS", "200", "500"), ("GaAs", "600", "1000")):
        out = tmp_path / f"{m}.csv"
        assert main(["sweep-cat", "--material", m, "--rmin", lo, "--rmax", hi, "--nbar", "2,4,6", "--out", str(out)]) == 0
        t = read_csv(out)
        tau = t.column("tau_s")
        cols = [t.column(f"tau_cat_s_nbar_{n}") for n in (2, 4, 6)]
        ok &= all(np.all(np.diff(c) < 0) for c in cols)
        ok &= bool(np.all(cols[0] > cols[1]) and np.all(cols[1] > cols[2]))
        ok &= all(np.array_equal(c, tau / (2 * n)) for c, n in zip(cols, (2, 4, 6)))
        gold = np.array([float(x) for x in golden["sweeps"][f"fig2_{m}"]["tau_s"]])
        worst = max(worst, float(np.max(np.abs(tau / gold - 1))))
    ok &= worst <= 1e-10
    report(4, ok, f"three decreasing curves, tau_cat(2)>tau_cat(4)>tau_cat(6), tau_cat = tau/(2n) bitwise; tau vs golden {worst:.2e}")


LINDBLAD_CASES = [
    ("qubit", Qubit(1 / math.sqrt(2), 1 / math.sqrt(2))),
    ("even cat nbar=2", Cat(math.sqrt(2), "even")),
    ("odd cat nbar=2", Cat(math.sqrt(2), "odd")),
    ("even cat nbar=4", Cat(2.0, "even")),
    ("odd cat nbar=4", Cat(2.0, "odd")),
]


@pytest.mark.parametrize("label, state", LINDBLAD_CASES, ids=[c[0] for c in LINDBLAD_CASES])
def test_5_lindblad_equivalence(report, label, state):
    p = decoherence_profile(CrystalliteConfig(get_material("CdS"), 300.0))
    basis = FockBasis(1) if isinstance(state, Qubit) else FockBasis.for_nbar(abs(state.alpha) ** 2)
    t0 = time.perf_counter()
    times, devs, _, _ = verify_lindblad(p, state, basis, samples=50)
    elapsed = time.perf_counter() - t0
    ok = len(times) == 50 and float(devs.max()) <= 1e-6 and elapsed < 30 and basis.n_max <= 45
    report(5, ok, f"{label}: max elementwise dev {devs.max():.2e} (tol 1e-6), n_max={basis.n_max}, {elapsed:.2f} s")


@pytest.mark.parametrize("name, R0", [("CdS", 300.0), ("GaAs", 800.0)])
def test_6_wigner_weisskopf(report, name, R0):
    p = decoherence_profile(CrystalliteConfig(get_material(name), R0))
    t0 = time.perf_counter()
    _, fit = verify_weisskopf(p, n_modes=2000, bandwidth_factor=100.0)
    t1 = time.perf_counter()
    _, fit2 = verify_weisskopf(p, n_modes=4000, bandwidth_factor=100.0)
    t2 = time.perf_counter()
    dev = abs(fit.rate / p.gamma_amp - 1)
    change = abs(fit2.rate / fit.rate - 1)
    ok = dev <= 0.05 and change < 0.01 and (t1 - t0) < 60 and (t2 - t1) < 60
    report(
        6, ok,
        f"{name} R0={R0:g}: fitted/gamma_amp - 1 = {dev:.2e} (tol 0.05), doubling modes changes fit {change:.2e} (tol 0.01), "
        f"{t1 - t0:.1f} s + {t2 - t1:.1f} s",
    )


def test_7_density_invariants(report):
    herm = eig = tr = stab = 0.0
    count = 0
    for name, R0 in (("CdS", 300.0), ("GaAs", 800.0)):
        p = decoherence_profile(CrystalliteConfig(get_material(name), R0))
        states = [
            Qubit(1 / math.sqrt(2), 1 / math.sqrt(2)),
            Qubit(0.6, 0.8j),
            Cat(math.sqrt(2), "even"),
            Cat(2.0, "odd"),
            Cat(math.sqrt(6), "even"),
            TwoCoherent(0.7, 1.5, 0.3 - 0.4j, -0.5 + 1j),
            TwoCoherent(1.0, 2.0, 1.0, -2.0),
        ]
        for s in states:
            if isinstance(s, Qubit):
                b1, b2 = FockBasis(1), FockBasis(11)
            else:
                tc = s.as_two_coherent() if isinstance(s, Cat) else s
                n = FockBasis.for_nbar(max(abs(tc.alpha1), abs(tc.alpha2)) ** 2).n_max
                b1, b2 = FockBasis(n), FockBasis(n + 10)
            for x in np.linspace(0, 5, 21):
                t = x * p.tau
                r1, r2 = evolve(p, s, t, b1), evolve(p, s, t, b2)
                herm = max(herm, r1.hermiticity_error())
                eig = min(eig, r1.min_eigenvalue())
                tr = max(tr, abs(r1.trace() - 1))
                stab = max(
                    stab,
                    abs(purity(r1) - purity(r2)),
                    float(np.max(np.abs(populations(r1) - populations(r2)[: b1.dim]))),
                    abs(coherence_magnitude(r1, 0, 1) - coherence_magnitude(r2, 0, 1)),
                )
                count += 1
    ok = herm <= 1e-12 and eig >= -1e-10 and tr <= 1e-10 and stab < 1e-8
    report(
        7, ok,
        f"{count} states: hermiticity {herm:.1e} (<=1e-12), min eig {eig:.1e} (>=-1e-10), "
        f"trace err {tr:.1e} (<=1e-10), n_max+10 change {stab:.1e} (<1e-8)",
    )


def test_8_long_time_floor(report):
    p = decoherence_profile(CrystalliteConfig(get_material("CdS"), 300.0))
    floor = math.exp(-8)
    f_inf = abs(coherent_superposition_factor(p, 2.0, -2.0, 1e3 * p.tau))
    # master-equation run of the even cat with alpha1 = 2, alpha2 = -2
    basis = FockBasis.for_nbar(4)
    times = np.array([1.0, 2.0, 3.0, 4.0]) * p.tau
    traj = integrate_lindblad(LindbladSpec.from_profile(p, basis, times[-1]), initial_density_matrix(Cat(2.0), basis), times)
    weights = [cat_coherence_from_parity(r, p, 2.0, "even", t) for t, r in zip(traj.times, traj.rhos)]
    gaps = [abs(w - floor) for w in weights]
    approaching = all(a > b for a, b in zip(gaps, gaps[1:]))
    ok = abs(f_inf - floor) <= 1e-12 and approaching and gaps[-1] <= 1e-5
    report(
        8, ok,
        f"|F(inf)| - e^-8 = {abs(f_inf - floor):.1e} (tol 1e-12); oracle dyad weight gap to e^-8 at 1..4 tau: "
        + ", ".join(f"{g:.1e}" for g in gaps) + " (tol 1e-5)",
    )
