"""Command-line front end.

Exit codes: 0 success/pass, 1 verification failed, 2 input error,
3 I/O error, 4 numerical failure.
"""
import argparse
import io
import math
import sys

import numpy as np

from . import __version__
from .core import (
    cat_decoherence_factor,
    cat_exact_time_for_nbar,
    cat_time_for_nbar,
    coherent_superposition_factor,
    decoherence_profile,
    environment_overlap,
    qubit_decoherence_factor,
)
from .csvio import build_manifest, format_value, read_csv, write_csv
from .errors import ConfigurationError, IntegrationError, MaterialError, MaterialFileError, TruncationError
from .materials import CrystalliteConfig, builtin_materials, check_validity, get_material, load_material
from .states import (
    Cat,
    FockBasis,
    Qubit,
    TwoCoherent,
    evolve,
    initial_density_matrix,
    populations,
    purity,
    write_matrix_csv,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO, EXIT_NUMERIC = 0, 1, 2, 3, 4

LINDBLAD_TOL = 1e-6
WW_RATE_TOL = 0.05


class InputError(Exception):
    pass


def _resolve_material(args):
    if getattr(args, "material_file", None):
        try:
            return load_material(args.material_file)
        except OSError as exc:
            raise InputError(f"cannot read material file: {exc}") from None
    try:
        return get_material(args.material)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _config(args):
    return CrystalliteConfig(_resolve_material(args), args.radius)


def _emit_csv(args, columns, rows, materials, argv):
    manifest = build_manifest(materials, argv)
    if args.out in (None, "-"):
        buf = io.StringIO()
        _write_stream(buf, columns, rows, manifest)
        sys.stdout.write(buf.getvalue())
    else:
        write_csv(args.out, columns, rows, manifest)


def _write_stream(fh, columns, rows, manifest):
    import csv

    for k, v in manifest.items():
        fh.write(f"# {k}: {v}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([format_value(v) for v in r])


def _radii(args):
    if not args.rmin < args.rmax:
        raise InputError(f"--rmin ({args.rmin}) must be below --rmax ({args.rmax})")
    if args.steps < 2:
        raise InputError("--steps must be >= 2")
    return np.linspace(args.rmin, args.rmax, args.steps)


def _nbar_list(text):
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"--nbar: cannot parse {text!r}") from None
    if not vals or any(not v > 0 for v in vals):
        raise InputError("--nbar needs a non-empty list of positive values")
    return vals


# --- subcommands -------------------------------------------------------------------


def cmd_materials(args, argv):
    print(f"{'name':6} {'E_g/eV':>8} {'E_b/eV':>8} {'a_B/A':>7} {'ratio/meV':>10} {'eps':>7} {'m_e':>7} {'m_h':>6}")
    for m in builtin_materials():
        print(
            f"{m.name:6} {m.E_g:8.4g} {m.E_b_exc:8.4g} {m.a_B:7.4g} {m.dipole_ratio * 1e3:10.4g} "
            f"{m.epsilon:7.4g} {m.m_e:7.4g} {m.m_h:6.4g}"
        )
    return EXIT_OK


def cmd_profile(args, argv):
    cfg = _config(args)
    p = decoherence_profile(cfg)
    v = check_validity(cfg, args.min_ratio)
    print(f"material            {cfg.material.name}")
    print(f"R0                  {cfg.R0:.6g} A")
    print(f"hbar_omega          {p.hbar_omega:.8g} eV")
    print(f"lambda              {p.lambda_:.6g} A")
    print(f"gamma_s             {p.gamma_s:.6e} 1/s")
    print(f"gamma_amp           {p.gamma_amp:.6e} 1/s")
    print(f"gamma_pop           {p.gamma_pop:.6e} 1/s")
    print(f"tau                 {p.tau:.6e} s ({p.tau * 1e12:.6g} ps)")
    print(f"superradiance       {p.superradiance_factor:.6e}")
    print(f"R0/a_B              {v.ratio_R0_over_aB:.4g}")
    print(f"R0/lambda           {v.ratio_R0_over_lambda:.4g}")
    print(f"regime_ok           {str(v.regime_ok).lower()}")
    for msg in v.messages:
        print(f"warning: {msg}")
    return EXIT_OK


def sweep_tau_rows(material, radii, min_ratio=5.0):
    rows = []
    for r in radii:
        cfg = CrystalliteConfig(material, float(r))
        p = decoherence_profile(cfg)
        rows.append([float(r), p.tau, p.gamma_amp, p.hbar_omega, p.lambda_, check_validity(cfg, min_ratio).regime_ok])
    return rows


SWEEP_TAU_COLUMNS = ["R0_angstrom", "tau_s", "gamma_amp_per_s", "hbar_omega_eV", "lambda_angstrom", "regime_ok"]


def cmd_sweep_tau(args, argv):
    material = _resolve_material(args)
    rows = sweep_tau_rows(material, _radii(args), args.min_ratio)
    _emit_csv(args, SWEEP_TAU_COLUMNS, rows, [material], argv)
    return EXIT_OK


def _nbar_tag(n):
    return f"{n:g}"


def sweep_cat_table(material, radii, nbars):
    columns = ["R0_angstrom", "tau_s"] + [f"tau_cat_s_nbar_{_nbar_tag(n)}" for n in nbars]
    exact = [n for n in nbars if 2 * n > 1]
    columns += [f"tau_cat_exact_s_nbar_{_nbar_tag(n)}" for n in exact]
    rows = []
    for r in radii:
        p = decoherence_profile(CrystalliteConfig(material, float(r)))
        row = [float(r), p.tau]
        row += [cat_time_for_nbar(p, n) for n in nbars]
        row += [cat_exact_time_for_nbar(p, n) for n in exact]
        rows.append(row)
    return columns, rows


def cmd_sweep_cat(args, argv):
    material = _resolve_material(args)
    columns, rows = sweep_cat_table(material, _radii(args), _nbar_list(args.nbar))
    _emit_csv(args, columns, rows, [material], argv)
    return EXIT_OK


def _parse_complex(text, flag):
    if text is None:
        return None
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"{flag}: cannot parse complex number {text!r}") from None


def _initial_state(args):
    kind = args.state
    if kind == "qubit":
        a = _parse_complex(args.alpha, "--alpha")
        b = _parse_complex(args.beta, "--beta")
        a = 1 / math.sqrt(2) if a is None else a
        b = 1 / math.sqrt(2) if b is None else b
        return Qubit(a, b)
    if kind == "cat":
        a = _parse_complex(args.alpha, "--alpha")
        if a is None:
            if args.nbar is None:
                raise InputError("cat state needs --alpha or --nbar")
            a = complex(math.sqrt(_nbar_list(args.nbar)[0]))
        return Cat(a, args.parity)
    if kind == "two-coherent":
        vals = [_parse_complex(getattr(args, k), f"--{k}") for k in ("C", "alpha1", "D", "alpha2")]
        if any(v is None for v in vals):
            raise InputError("two-coherent state needs --C, --alpha1, --D, --alpha2")
        return TwoCoherent(*vals)
    raise InputError(f"unknown state family {kind!r}")


def _basis_for(state, n_max):
    if isinstance(state, Qubit):
        return FockBasis(n_max or 1)
    if isinstance(state, Cat):
        nbar = abs(state.alpha) ** 2
    else:
        nbar = max(abs(state.alpha1), abs(state.alpha2)) ** 2
    return FockBasis(n_max) if n_max else FockBasis.for_nbar(nbar)


def _closed_factors(p, state, t):
    if isinstance(state, Qubit):
        f = qubit_decoherence_factor(p, t)
        return complex(f), f
    if isinstance(state, Cat):
        return complex(cat_decoherence_factor(p, state.alpha, t)), abs(environment_overlap(p, state.alpha, -state.alpha, t))
    return (
        coherent_superposition_factor(p, state.alpha1, state.alpha2, t),
        abs(environment_overlap(p, state.alpha1, state.alpha2, t)),
    )


def cmd_evolve(args, argv):
    cfg = _config(args)
    p = decoherence_profile(cfg)
    state = _initial_state(args)
    basis = _basis_for(state, args.nmax)
    t_max = args.tmax if args.tmax is not None else args.tmax_tau * p.tau
    if not t_max > 0 or args.samples < 2:
        raise InputError("need --tmax > 0 and --samples >= 2")
    k = min(args.populations, basis.n_max)
    columns = ["t_s", "t_over_tau", "F_magnitude", "F_phase", "F_env_magnitude", "purity"]
    columns += [f"p{i}" for i in range(k + 1)] + ["trace_check"]
    rows = []
    rho = None
    for t in np.linspace(0.0, t_max, args.samples):
        rho = evolve(p, state, float(t), basis)
        F, F_env = _closed_factors(p, state, float(t))
        pops = populations(rho)
        rows.append(
            [float(t), float(t) / p.tau, abs(F), math.atan2(F.imag, F.real), F_env, purity(rho)]
            + list(pops[: k + 1])
            + [float(rho.trace().real)]
        )
    _emit_csv(args, columns, rows, [cfg.material], argv)
    if args.dump_matrix:
        write_matrix_csv(rho, args.dump_matrix)
    return EXIT_OK


def verify_lindblad(p, state, basis, samples=50, t_max=None):
    """Return (times, max elementwise deviation per time, oracle |rho01|, closed |rho01|)."""
    from .oracles import LindbladSpec, integrate_lindblad

    t_max = 5 * p.tau if t_max is None else t_max
    spec = LindbladSpec.from_profile(p, basis, t_max)
    traj = integrate_lindblad(spec, initial_density_matrix(state, basis), n_samples=samples)
    devs, ora, ref = [], [], []
    for t, r in zip(traj.times, traj.rhos):
        closed = evolve(p, state, float(t), basis)
        devs.append(float(np.max(np.abs(r.entries - closed.entries))))
        ora.append(abs(r.entries[0, 1]))
        ref.append(abs(closed.entries[0, 1]))
    return traj.times, np.array(devs), np.array(ora), np.array(ref)


def verify_weisskopf(p, n_modes=2000, bandwidth_factor=100.0, steps=301):
    from .oracles import build_mode_grid, fit_decay_rate, simulate_single_excitation

    window = 5.0 / p.gamma_amp
    grid = build_mode_grid(p, n_modes, bandwidth_factor, window=window)
    series = simulate_single_excitation(grid, window, steps)
    fit = fit_decay_rate(series, window=(0.5 / p.gamma_amp, 3.0 / p.gamma_amp))
    return series, fit


def cmd_verify(args, argv):
    cfg = _config(args)
    p = decoherence_profile(cfg)
    if args.which == "lindblad":
        if args.state == "qubit":
            state = Qubit(1 / math.sqrt(2), 1 / math.sqrt(2))
        elif args.state in ("even-cat", "odd-cat"):
            state = Cat(complex(math.sqrt(_nbar_list(args.nbar or "2")[0])), args.state.split("-")[0])
        else:
            raise InputError("verify lindblad supports --state qubit, even-cat, odd-cat")
        basis = _basis_for(state, args.nmax)
        times, devs, ora, ref = verify_lindblad(p, state, basis, args.samples)
        worst, tol = float(devs.max()), LINDBLAD_TOL
        report = [[float(t), a, b, d] for t, a, b, d in zip(times, ora, ref, devs)]
        print(f"lindblad oracle: {len(times)} samples on [0, 5 tau], n_max={basis.n_max}")
        print(f"max elementwise |rho_oracle - rho_closed| = {worst:.3e} (tolerance {tol:g})")
        label = f"lindblad state={args.state}"
    else:
        series, fit = verify_weisskopf(p, args.n_modes, args.bandwidth_factor)
        worst, tol = abs(fit.rate / p.gamma_amp - 1.0), WW_RATE_TOL
        ref = np.exp(-p.gamma_amp * series.times)
        mag = np.abs(series.exciton)
        report = [[float(t), a, b, abs(a - b)] for t, a, b in zip(series.times, mag, ref)]
        print(f"wigner-weisskopf oracle: {args.n_modes} modes, bandwidth {args.bandwidth_factor:g} gamma_pop")
        print(f"fitted amplitude rate {fit.rate:.6e} 1/s vs gamma_amp {p.gamma_amp:.6e} 1/s")
        print(f"relative deviation {worst:.3e} (tolerance {tol:g}), log-fit rms residual {fit.residual:.2e}")
        label = "wigner-weisskopf"
    ok = worst <= tol
    if args.out:
        write_csv(args.out, ["t", "value", "reference", "abs_err"], report, build_manifest([cfg.material], argv))
    print(f"RESULT {label} material={cfg.material.name} R0={cfg.R0:g} max_dev={worst:.6e} tol={tol:g} {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_plot(args, argv):
    from .svgplot import render

    series = []
    x_name = args.x
    for path in args.inputs:
        try:
            table = read_csv(path)
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
        if not table.rows:
            raise InputError(f"{path}: no data rows")
        x_col = x_name or table.columns[0]
        ycols = [c for c in (args.columns or "").split(",") if c] or [c for c in table.columns[1:2]]
        for name in [x_col] + ycols:
            if name not in table.columns:
                raise InputError(f"{path}: no column named {name!r}")
        material = table.manifest.get("material", "").split(" ", 1)[0]
        for c in ycols:
            label = f"{material} {c}".strip() if len(args.inputs) > 1 or material else c
            series.append((label, table.column(x_col), table.column(c)))
    svg = render(series, x_label=x_name or x_col, y_label=",".join(ycols), title=args.title or "", log_y=args.log_y)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    return EXIT_OK


# --- argument parsing ----------------------------------------------------------------


def _add_material(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--material", help="built-in material name (CdS, GaAs)")
    g.add_argument("--material-file", help="key = value material file")


def build_parser():
    ap = argparse.ArgumentParser(prog="exciton-decoherence", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("materials", help="list built-in materials")

    p = sub.add_parser("profile", help="decay rates and tau for one crystallite")
    _add_material(p)
    p.add_argument("--radius", type=float, required=True, help="R0 in angstrom")
    p.add_argument("--min-ratio", type=float, default=5.0, help="advisory R0/a_B threshold")

    for name, helptext in (("sweep-tau", "tau versus R0"), ("sweep-cat", "cat tau versus R0 for several |alpha|^2")):
        p = sub.add_parser(name, help=helptext)
        _add_material(p)
        p.add_argument("--rmin", type=float, default=200.0)
        p.add_argument("--rmax", type=float, default=500.0)
        p.add_argument("--steps", type=int, default=100)
        p.add_argument("--out")
        p.add_argument("--min-ratio", type=float, default=5.0)
        if name == "sweep-cat":
            p.add_argument("--nbar", default="2,4,6", help="comma list of |alpha|^2")

    p = sub.add_parser("evolve", help="density-matrix time series")
    _add_material(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--state", choices=("qubit", "two-coherent", "cat"), default="qubit")
    p.add_argument("--alpha", help="qubit vacuum amplitude, or cat amplitude (complex, e.g. 1+2j)")
    p.add_argument("--beta")
    p.add_argument("--C")
    p.add_argument("--alpha1")
    p.add_argument("--D")
    p.add_argument("--alpha2")
    p.add_argument("--parity", choices=("even", "odd"), default="even")
    p.add_argument("--nbar", help="cat |alpha|^2 (real alpha) when --alpha is omitted")
    p.add_argument("--tmax", type=float, help="end time in seconds (default 5 tau)")
    p.add_argument("--tmax-tau", type=float, default=5.0, help=argparse.SUPPRESS)
    p.add_argument("--samples", type=int, default=51)
    p.add_argument("--nmax", type=int)
    p.add_argument("--populations", type=int, default=4, help="report p0..pK")
    p.add_argument("--dump-matrix", help="write the final rho as row,col,re,im CSV")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run a numerical oracle against the closed forms")
    p.add_argument("which", choices=("lindblad", "wigner-weisskopf"))
    _add_material(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--state", default="qubit", help="qubit, even-cat or odd-cat (lindblad)")
    p.add_argument("--nbar", help="cat |alpha|^2 (default 2)")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--nmax", type=int)
    p.add_argument("--n-modes", type=int, default=2000)
    p.add_argument("--bandwidth-factor", type=float, default=100.0)
    p.add_argument("--out", help="per-sample report CSV")

    p = sub.add_parser("plot", help="render CSV columns as an SVG line plot")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--x", help="x column (default: first column)")
    p.add_argument("--columns", help="comma list of y columns (default: second column)")
    p.add_argument("--out", required=True)
    p.add_argument("--log-y", action="store_true")
    p.add_argument("--title")
    return ap


COMMANDS = {
    "materials": cmd_materials,
    "profile": cmd_profile,
    "sweep-tau": cmd_sweep_tau,
    "sweep-cat": cmd_sweep_cat,
    "evolve": cmd_evolve,
    "verify": cmd_verify,
    "plot": cmd_plot,
}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    full_argv = ["exciton-decoherence"] + argv
    try:
        return COMMANDS[args.command](args, full_argv)
    except (InputError, MaterialError, MaterialFileError, TruncationError, ConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IntegrationError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
