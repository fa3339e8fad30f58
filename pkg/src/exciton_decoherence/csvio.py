"""CSV output with a ``#`` manifest header, and the matching reader."""
import csv
import os
import shlex
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .constants import CONSTANTS

MANIFEST_KEYS = ("tool", "version", "constants_sha256", "material", "command", "timestamp")


def _timestamp():
    # SOURCE_DATE_EPOCH pins the stamp for reproducible builds
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = datetime.fromtimestamp(int(epoch), timezone.utc) if epoch else datetime.now(timezone.utc)
    return when.strftime("%Y-%m-%dT%H:%M:%SZ")


def describe_material(m):
    return (
        f"{m.name} E_g={m.E_g!r}eV E_b_exc={m.E_b_exc!r}eV a_B={m.a_B!r}A "
        f"dipole_ratio={m.dipole_ratio!r}eV epsilon={m.epsilon!r} m_e={m.m_e!r} m_h={m.m_h!r}"
    )


def build_manifest(materials, argv=None):
    argv = sys.argv if argv is None else argv
    return {
        "tool": "exciton_decoherence",
        "version": __version__,
        "constants_sha256": CONSTANTS.digest(),
        "material": "; ".join(describe_material(m) for m in materials),
        "command": shlex.join(str(a) for a in argv),
        "timestamp": _timestamp(),
    }


def format_value(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    return str(v)


def write_csv(path, columns, rows, manifest):
    missing = [k for k in MANIFEST_KEYS if k not in manifest]
    if missing:
        raise ValueError(f"manifest incomplete, missing {missing}")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        for k in MANIFEST_KEYS:
            fh.write(f"# {k}: {manifest[k]}\n")
        w = csv.writer(fh)
        w.writerow(columns)
        for row in rows:
            if len(row) != len(columns):
                raise ValueError(f"row has {len(row)} fields, expected {len(columns)}")
            w.writerow([format_value(v) for v in row])


def _parse(text):
    if text == "true":
        return True
    if text == "false":
        return False
    try:
        return float(text)
    except ValueError:
        return text


@dataclass
class Table:
    columns: list
    rows: list
    manifest: dict = field(default_factory=dict)

    def column(self, name):
        if name not in self.columns:
            raise KeyError(name)
        i = self.columns.index(name)
        vals = [r[i] for r in self.rows]
        if all(isinstance(v, (float, bool)) for v in vals):
            return np.array(vals, dtype=float)
        return vals

    def __len__(self):
        return len(self.rows)


def read_csv(path):
    manifest, body = {}, []
    with open(path, newline="", encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition(": ")
                manifest[key] = value
            elif line.strip():
                body.append(line)
    if not body:
        raise ValueError(f"{path}: no header row")
    reader = csv.reader(body)
    columns = next(reader)
    rows = [[_parse(x) for x in r] for r in reader]
    return Table(columns, rows, manifest)

