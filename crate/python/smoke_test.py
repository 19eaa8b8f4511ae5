#!/usr/bin/env python3
"""Smoke test for the fatpoints Python extension.

Build the module first:

    cargo build -p fatpoints-py

then run this script from anywhere inside the repository.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def locate_extension() -> Path:
    repo = Path(__file__).resolve().parent.parent
    candidates = [
        repo / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libfatpoints.so", "fatpoints.so", "libfatpoints.dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit("extension not found; run `cargo build -p fatpoints-py` first")


def import_module(ext: Path):
    # The importer requires the file to be named exactly fatpoints.so.
    stage = Path(tempfile.mkdtemp(prefix="fatpoints-py-"))
    shutil.copy2(ext, stage / "fatpoints.so")
    sys.path.insert(0, str(stage))
    import fatpoints

    return fatpoints


def main() -> None:
    fp = import_module(locate_extension())

    coord = fp.PointConfig([[1, 0, 0], [0, 1, 0], [0, 0, 1]], label="coord")
    assert coord.dim == 2 and len(coord) == 3

    table = fp.alphas(coord, 3)
    assert [e["alpha"] for e in table] == [2, 3, 5]

    verdicts = fp.chudnovsky(coord, m_max=3)
    assert [v["slack"] for v in verdicts] == ["1/2", "0", "1/6"]
    assert all(v["holds"] for v in verdicts)

    assert fp.hilbert(coord, 2) == [1, 3, 3]
    assert fp.generic_position(coord)

    w = fp.waldschmidt(coord, m_max=2)
    assert w["skoda_lower_bound"] == "1"
    assert w["chudnovsky_target"] == "3/2"
    assert w["waldschmidt_upper_bound"] == "3/2"

    s = fp.seshadri(coord)
    assert s["radicand"] == "1/2" and s["decimal"] == "0.500000000000"

    d = fp.delta(coord, s_max=4)
    assert d["delta"] == 2 and d["t0"] == 2

    star = fp.PointConfig.star([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert len(star) == 6
    assert fp.alpha(star)["alpha"] == 3
    assert fp.hh_check(star, m=1, d_max=6)["all_hold"]

    sampled = fp.PointConfig.sample(5, 2, seed=11)
    again = fp.PointConfig.sample(5, 2, seed=11)
    assert sampled.points() == again.points()

    assert fp.monomial_alpha(["x", "y"], [[2, 0], [0, 2]]) == 2
    sym = fp.monomial_symbolic_power(["x", "y", "z"], [[1, 1, 0], [0, 1, 1], [1, 0, 1]], 2)
    assert [1, 1, 1] in sym

    report = fp.counterexample()
    assert report["conclusion_holds"]
    assert report["socle_witness"] == "x^2*t^2*u^3*v"
    assert all(c["passed"] for c in report["checks"])

    try:
        fp.PointConfig([[1, 0, 0], [1, 0, 0]])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate points should be rejected")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
