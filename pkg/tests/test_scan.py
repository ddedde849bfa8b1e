import io
import json

import pytest

from secantzeta.scan import evaluate_item, family_items, real_nonprincipal, scan_conjecture


def test_real_nonprincipal_counts():
    labels = [c.name for c in real_nonprincipal(8, primitive_only=True)]
    # primitive real characters of modulus <= 8: -3, -4, 5, -7, 8, -8
    assert len(labels) == 6


def test_family_items_respect_parity():
    for _, k, c, p in family_items("R-both-nonprincipal", 6, 8):
        assert c.parity * p.parity == (-1) ** k


def test_bad_family():
    with pytest.raises(ValueError):
        family_items("R-x", 4, 5)


def test_r1psi_small_range_finds_35():
    _, s = scan_conjecture(7, 35, which="R-1-psi", workers=1, k_min=7, keep_records=False)
    assert "35-" in s.exceptional_characters


def test_r_both_small_range_consistent():
    recs, s = scan_conjecture(8, 8, workers=1)
    assert not s.exceptional and not s.self_inversive_failures
    assert s.total == len(recs)
    assert all(r["k"] <= 3 for r in recs if r["zero_polynomial"])


def test_sink_is_byte_identical_across_workers():
    outs = []
    for w in (1, 2):
        buf = io.StringIO()
        scan_conjecture(6, 7, which="S-diagonal", workers=w, sink=buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    for line in outs[0].splitlines():
        json.loads(line)


def test_evaluate_item_record():
    item = family_items("R-chi-1", 5, 5)[0]
    rec = evaluate_item(item)
    assert rec["family"] == "R-chi-1" and "classification_counts" in rec
