"""Report serialization.

JSON output is canonical: keys sorted, two-space indent, trailing
newline, floats via Python's shortest-repr.  Runs that differ only in
--jobs produce byte-identical files; wall-clock time is never written,
only printed.  Exact rationals are serialized as "a/b" strings, complex
numbers as {"re": ..., "im": ...} pairs.
"""

from __future__ import annotations

import csv
import dataclasses
import json
from fractions import Fraction

import numpy as np

from ._version import __version__
from .angles import Angle

SCHEMA = 1


def jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, Angle):
        return str(obj)
    if isinstance(obj, Fraction):
        return "%d/%d" % (obj.numerator, obj.denominator)
    if isinstance(obj, complex):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    raise TypeError("cannot serialize %r" % type(obj))


def build_report(command, params, records=(), aggregate=None, skipped=(),
                 seed=0):
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "params": jsonable(params),
        "seed": seed,
        "records": jsonable(list(records)),
        "aggregate": jsonable(aggregate if aggregate is not None else {}),
        "skipped": jsonable(list(skipped)),
    }


def write_json(path, doc):
    text = json.dumps(doc, sort_keys=True, indent=2)
    with open(path, "w") as fh:
        fh.write(text)
        fh.write("\n")


def fmt_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.12g" % float(v)
    if isinstance(v, Fraction):
        return "%d/%d" % (v.numerator, v.denominator)
    if isinstance(v, Angle):
        return str(v)
    return str(v)


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt_cell(v) for v in row])
