"""Acceptance gate: one test per shipping criterion, one printed line each.

Criterion 8 is asserted exactly as stated and currently fails; the measured
values are printed alongside the expectation.  See the test for the analysis.
"""

import io
import itertools
from pathlib import Path

import numpy as np

import pelljeru as pj
from pelljeru import export

GOLDEN = Path(__file__).parent / "golden"


def test_criterion_01_pell_prefix():
    assert [pj.pell(i) for i in range(11)] == [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378]
    print("criterion 1 (pell prefix): PASS")


def test_criterion_02_ratio_convergence():
    errs = [pj.ratio_diagnostic(n).error_to_silver for n in range(2, 31)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert pj.ratio_diagnostic(20).error_to_silver < 1e-12
    print(f"criterion 2 (ratio convergence): PASS  err(20)={errs[18]:.3e}")


def test_criterion_03_level3_figure():
    g = pj.build2d(3)
    cells = g.to_bool_array()
    assert g.side == 5 and g.filled_count() == 20
    assert not cells[2, 2]
    removed = {(2, 2), (2, 1), (2, 3), (1, 2), (3, 2)}
    assert {(int(y), int(x)) for y, x in np.argwhere(~cells)} == removed
    for sym in (cells[::-1], cells[:, ::-1], cells.T, np.rot90(cells)):
        assert np.array_equal(cells, sym)
    print("criterion 3 (5x5 cross figure): PASS")


def test_criterion_04_builder_classifier_equivalence():
    for n in range(1, 9):
        g = pj.build2d(n)
        ref = np.array([[pj.contains2d(n, x, y) for x in range(g.side)]
                        for y in range(g.side)])
        assert np.array_equal(g.to_bool_array(), ref), n
    for n in range(1, 6):
        g = pj.build3d(n)
        s = g.side
        ref = np.array([[[pj.contains3d(n, x, y, z) for x in range(s)]
                         for y in range(s)] for z in range(s)])
        assert np.array_equal(g.to_bool_array(), ref), n
    print("criterion 4 (builder = classifier, 2D n<=8 / 3D n<=5): PASS")


def test_criterion_05_self_similarity():
    for n in range(2, 9):
        g = pj.build2d(n)
        s, low_w, mid_w = g.side, pj.pell(n - 1), pj.pell(n - 2)
        sub1 = pj.build2d(n - 1)
        for name in ("NW", "NE", "SW", "SE"):
            assert pj.corner_subgrid(g, name) == sub1, (n, name)
        if n >= 3:  # level-0 edge blocks have zero extent
            sub2 = pj.build2d(n - 2)
            for x0, y0 in ((low_w, 0), (low_w, s - mid_w), (0, low_w), (s - mid_w, low_w)):
                assert pj.subgrid(g, x0, y0, mid_w) == sub2, (n, x0, y0)
    for n in range(2, 6):
        g = pj.build3d(n)
        s, low_w, mid_w = g.side, pj.pell(n - 1), pj.pell(n - 2)
        sub1 = pj.build3d(n - 1)
        for x0, y0, z0 in itertools.product((0, s - low_w), repeat=3):
            assert pj.subgrid3(g, x0, y0, z0, low_w) == sub1, (n, x0, y0, z0)
        if n >= 3:
            sub2 = pj.build3d(n - 2)
            flush = (0, s - mid_w)
            origins = [(low_w, fy, fz) for fy in flush for fz in flush] \
                + [(fx, low_w, fz) for fx in flush for fz in flush] \
                + [(fx, fy, low_w) for fx in flush for fy in flush]
            for x0, y0, z0 in origins:
                assert pj.subgrid3(g, x0, y0, z0, mid_w) == sub2, (n, x0, y0, z0)
    print("criterion 5 (corner/edge self-similarity): PASS")


def test_criterion_06_count_recurrences():
    a = {n: pj.build2d(n).filled_count() for n in range(1, 9)}
    assert a[1] == 1 and a[2] == 4 and a[3] == 20
    for n in range(3, 9):
        assert a[n] == 4 * a[n - 1] + 4 * a[n - 2] == pj.count2d_recurrence(n)
    c = {n: pj.build3d(n).filled_count() for n in range(1, 6)}
    assert c[1] == 1 and c[2] == 8 and c[3] == 76
    for n in range(3, 6):
        assert c[n] == 8 * c[n - 1] + 12 * c[n - 2] == pj.count3d_recurrence(n)
    print("criterion 6 (count recurrences vs brute force): PASS")


def test_criterion_07_dimension_consistency():
    sq = pj.dim_analytic("square")
    cu = pj.dim_analytic("cube")
    assert abs(sq - pj.dim_analytic("square", "root")) < 1e-9
    assert abs(cu - pj.dim_analytic("cube", "root")) < 1e-9
    est2 = pj.dim_estimate([(pj.pell(m), pj.count2d_recurrence(m)) for m in range(2, 21)])
    est3 = pj.dim_estimate([(pj.pell(m), pj.count3d_recurrence(m)) for m in range(2, 21)])
    assert abs(est2.endpoint - sq) < 0.02
    assert abs(est3.endpoint - cu) < 0.05
    print(f"criterion 7 (dimensions): PASS  2D err={abs(est2.endpoint - sq):.4f}"
          f" 3D err={abs(est3.endpoint - cu):.4f}")


def test_criterion_08_approximation_trend():
    # Asserted in its intended strict form: the level-8 disagreement fraction
    # must be strictly below the level-4 one.  The measured values say no.
    # The depth-limited continuous model recurses edge blocks with one less
    # iteration although they sit two ranks deeper, so it strips their
    # substructure a generation early; that extra disagreement grows with
    # visible detail before overall sparsity wins.  The fraction does decay
    # for n >= 8 (0.1275, 0.1161, 0.1010, 0.0884, 0.0762 at n = 8..12) and
    # discrepancy(10) < discrepancy(4) holds, but the (8, 4) pair as stated
    # compares 0.1275 against the anomalously low 0.1111 and fails.  Two
    # independent implementations of both constructions agree on these
    # numbers cell for cell, so this records a real property of the metric
    # as defined, not an implementation artifact.
    d4 = pj.discrepancy(4)
    d8 = pj.discrepancy(8)
    status = "PASS" if d8 < d4 else "FAIL"
    print(f"criterion 8 (approximation trend): {status}  "
          f"discrepancy(8)={d8!r} vs discrepancy(4)={d4!r}")
    assert d8 < d4, f"discrepancy(8)={d8!r} is not below discrepancy(4)={d4!r}"


def test_criterion_09_byte_exact_exports():
    for n in range(1, 5):
        g = pj.build2d(n)
        for fmt, ext in (("pbm_ascii", "pbm"), ("csv", "csv")):
            sink = io.BytesIO()
            export.write2d(g, fmt, sink)
            assert sink.getvalue() == (GOLDEN / f"square_n{n}.{ext}").read_bytes(), (n, fmt)
    for n in range(1, 4):
        sink = io.BytesIO()
        export.write3d(pj.build3d(n), "xyz_text", sink)
        assert sink.getvalue() == (GOLDEN / f"cube_n{n}.xyz").read_bytes(), n
    for n in range(1, 4):
        verts, tris = export.surface_mesh(pj.build3d(n))
        edges = {}
        for t in tris:
            for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                edges[e] = edges.get(e, 0) + 1
        assert all(c == 1 for c in edges.values()), n
        assert all((b, a) in edges for (a, b) in edges), n
    print("criterion 9 (byte-exact exports, watertight mesh): PASS")


def test_criterion_10_boundary_faces():
    for n in range(1, 6):
        assert pj.build3d(n).layer(0) == pj.build2d(n), n
    print("criterion 10 (z=0 face equals 2D grid): PASS")
