import math

import pytest
from hypothesis import given, strategies as st

from exciton_decoherence import (
    CONSTANTS,
    CrystalliteConfig,
    Material,
    MaterialError,
    MaterialFileError,
    builtin_materials,
    check_validity,
    get_material,
    load_material,
)
from exciton_decoherence.constants import ps_to_seconds, seconds_to_ps
from exciton_decoherence.materials import format_material, parse_material

CDS_FILE = """\
# CdS, bulk values
name = CdS
E_g_eV = 2.583          # band gap
E_b_exc_eV = 0.030
a_B_angstrom = 30
dipole_ratio_meV = 0.25  # |mu|^2 / (eps a_B^3)
epsilon = 8
m_e = 0.25
m_h = 1.6
"""


def test_constants_consistent():
    assert CONSTANTS.hbar_c / CONSTANTS.hbar == pytest.approx(CONSTANTS.c, rel=1e-12)
    assert min(CONSTANTS.hbar, CONSTANTS.hbar_c, CONSTANTS.hbar2_over_2m0, CONSTANTS.c) > 0
    # hbar^2/(2 m0) reconstructed from m0
    assert CONSTANTS.hbar**2 / (2 * CONSTANTS.m0) == pytest.approx(3.80998, rel=1e-14)
    assert len(CONSTANTS.digest()) == 16


def test_builtin_table_golden():
    cds, gaas = builtin_materials()
    assert [cds.name, gaas.name] == ["CdS", "GaAs"]
    assert (cds.E_g, cds.E_b_exc, cds.a_B, cds.dipole_ratio, cds.epsilon, cds.m_e, cds.m_h) == (
        2.583, 0.030, 30.0, 0.25e-3, 8.0, 0.25, 1.6,
    )
    assert (gaas.E_g, gaas.E_b_exc, gaas.a_B, gaas.dipole_ratio, gaas.epsilon, gaas.m_e, gaas.m_h) == (
        1.52, 0.005, 100.0, 0.025e-3, 12.53, 0.0665, 0.45,
    )


def test_dipole_squared():
    assert get_material("cds").mu_cv_sq == pytest.approx(54.0, rel=1e-14)
    assert get_material("GAAS").mu_cv_sq == pytest.approx(313.25, rel=1e-14)
    for m in builtin_materials():
        assert math.isfinite(m.mu_cv_sq) and m.mu_cv_sq > 0


def test_unknown_material_lists_names():
    with pytest.raises(KeyError, match="CdS, GaAs"):
        get_material("InP")


def test_load_roundtrip(tmp_path, cds):
    f = tmp_path / "cds.txt"
    f.write_text(CDS_FILE)
    assert load_material(f) == cds
    assert parse_material(format_material(get_material("GaAs"))) == get_material("GaAs")


def test_binding_above_gap_names_both_fields():
    with pytest.raises(MaterialError) as exc:
        parse_material(CDS_FILE.replace("E_b_exc_eV = 0.030", "E_b_exc_eV = 3.0"))
    assert set(exc.value.fields) == {"E_b_exc", "E_g"}
    assert "E_b_exc" in str(exc.value) and "E_g" in str(exc.value)


def test_missing_key_named():
    text = "\n".join(line for line in CDS_FILE.splitlines() if not line.startswith("m_h"))
    with pytest.raises(MaterialFileError, match="m_h"):
        parse_material(text)


@pytest.mark.parametrize(
    "bad, line",
    [("E_g_eV 2.583", 3), ("E_gap_eV = 2.583", 3), ("E_g_eV = two", 3)],
)
def test_parse_errors_carry_line(bad, line):
    with pytest.raises(MaterialFileError) as exc:
        parse_material(CDS_FILE.replace("E_g_eV = 2.583          # band gap", bad))
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_duplicate_key_rejected():
    with pytest.raises(MaterialFileError, match="duplicate"):
        parse_material(CDS_FILE + "epsilon = 9\n")


@pytest.mark.parametrize("field", ["E_g", "a_B", "epsilon", "m_e"])
def test_nonpositive_fields_rejected(cds, field):
    kwargs = {f: getattr(cds, f) for f in ("name", "E_g", "E_b_exc", "a_B", "dipole_ratio", "epsilon", "m_e", "m_h")}
    kwargs[field] = 0.0
    with pytest.raises(MaterialError) as exc:
        Material(**kwargs)
    assert field in exc.value.fields


def test_config_derived(cds):
    cfg = CrystalliteConfig(cds, 300.0)
    assert cfg.M == pytest.approx(1.85)
    assert cfg.volume == pytest.approx(4 / 3 * math.pi * 300.0**3)
    with pytest.raises(MaterialError):
        CrystalliteConfig(cds, -1.0)


def test_validity_cds_300(cds):
    r = check_validity(CrystalliteConfig(cds, 300.0))
    assert r.ratio_R0_over_aB == pytest.approx(10.0)
    assert r.regime_ok and not r.messages


def test_validity_gaas_300_warns(gaas):
    r = check_validity(CrystalliteConfig(gaas, 300.0))
    assert r.ratio_R0_over_aB == pytest.approx(3.0)
    assert not r.regime_ok
    assert any("3 a_B" in m for m in r.messages)


def test_validity_larger_than_wavelength(cds):
    r = check_validity(CrystalliteConfig(cds, 6000.0))
    assert r.ratio_R0_over_lambda > 1
    assert not r.regime_ok


def test_validity_threshold_configurable(gaas):
    assert check_validity(CrystalliteConfig(gaas, 300.0), min_ratio=2.0).regime_ok


@given(st.sampled_from(["CdS", "GaAs"]), st.floats(10.0, 20000.0))
def test_validity_pure_and_consistent(name, R0):
    cfg = CrystalliteConfig(get_material(name), R0)
    a, b = check_validity(cfg), check_validity(cfg)
    assert a == b
    assert a.regime_ok == (a.ratio_R0_over_aB >= 5 and a.ratio_R0_over_lambda <= 1)


@given(st.floats(1e-15, 1e-6))
def test_ps_roundtrip(t):
    assert ps_to_seconds(seconds_to_ps(t)) == pytest.approx(t, rel=1e-12)
