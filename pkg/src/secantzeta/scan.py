"""Root-location scans over families of generalized Ramanujan polynomials.

A work item is one (family, k, chi, psi).  Items are independent; a process
pool evaluates them and the parent process is the only writer of the
JSON-lines sink, so lines are never interleaved.  ``map`` preserves item
order, which keeps output byte-identical across worker counts.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .dirichlet import DirichletCharacter, character_spec, characters_mod, principal_character
from .period import R_gen, S_gen, parity_ok
from .roots import NONREAL_OFF, ON, REAL_OFF, unimodularity_report

FAMILIES = ("R-both-nonprincipal", "R-chi-1", "R-1-psi", "S-diagonal")


def real_nonprincipal(modulus_max: int, primitive_only: bool = False) -> list:
    out = []
    for M in range(2, modulus_max + 1):
        for c in characters_mod(M, real_only=True):
            if c.is_principal or (primitive_only and not c.is_primitive):
                continue
            out.append(c)
    return out


def family_items(which: str, k_max: int, modulus_max: int, k_min: int = 2,
                 primitive_only: bool | None = None) -> list:
    """All parity-valid (k, chi, psi) of a family.

    R-both-nonprincipal and S-diagonal use every nonprincipal real character
    (imprimitive included); R-chi-1 and R-1-psi use primitive ones by default.
    """
    if which not in FAMILIES:
        raise ValueError(f"unknown family {which!r}; expected one of {FAMILIES}")
    if k_max < k_min or modulus_max < 2:
        raise ValueError("empty scan range")
    if primitive_only is None:
        primitive_only = which in ("R-chi-1", "R-1-psi")
    chars = real_nonprincipal(modulus_max, primitive_only)
    one = principal_character(1)
    if which == "R-both-nonprincipal":
        pairs = [(c, p) for c in chars for p in chars]
    elif which == "R-chi-1":
        pairs = [(c, one) for c in chars]
    elif which == "R-1-psi":
        pairs = [(one, p) for p in chars]
    else:
        pairs = [(c, c) for c in chars]
    items = []
    for k in range(k_min, k_max + 1):
        for c, p in pairs:
            if parity_ok(k, c, p):
                items.append((which, k, c, p))
    return items


def _polynomial(which: str, k: int, chi: DirichletCharacter, psi: DirichletCharacter):
    return S_gen(k, chi, psi) if which == "S-diagonal" else R_gen(k, chi, psi)


def _exceptional(which: str, counts: dict) -> bool:
    """R-both-nonprincipal and S-diagonal: any root off the circle.
    R-chi-1 and R-1-psi: a nonreal root off the circle (real ones are expected)."""
    if which in ("R-chi-1", "R-1-psi"):
        return counts[NONREAL_OFF] > 0
    return counts[REAL_OFF] + counts[NONREAL_OFF] > 0


def evaluate_item(item, precision: int = 128, tolerance: float = 2.0 ** -32) -> dict:
    which, k, chi, psi = item
    p = _polynomial(which, k, chi, psi)
    rec = {"family": which, "k": k, "chi": character_spec(chi), "psi": character_spec(psi),
           "chi_label": _label(chi), "psi_label": _label(psi)}
    if p.is_zero():
        rec.update(degree=None, self_inversive=None, epsilon=None, roots=[],
                   classification_counts={ON: 0, REAL_OFF: 0, NONREAL_OFF: 0},
                   precision_bits=precision, tolerance=tolerance, zero_polynomial=True, exceptional=False)
        return rec
    eps = psi.parity if which != "S-diagonal" else None
    rep = unimodularity_report(p, tolerance, precision, polynomial_id=f"{which}:{k}:{rec['chi']}:{rec['psi']}",
                               k=k if eps is not None else None, epsilon=eps)
    js = rep.to_json()
    rec.update(
        degree=js["degree"],
        self_inversive=js["self_inversive"],
        epsilon=eps,
        roots=[{"re": r["re"], "im": r["im"], "abs_dev": r["abs_dev"], "class": r["class"]} for r in js["roots"]],
        classification_counts=js["classification_counts"],
        zero_roots=js["zero_roots"],
        max_circle_deviation=js["max_circle_deviation"],
        precision_bits=precision,
        tolerance=tolerance,
        zero_polynomial=False,
        exceptional=_exceptional(which, js["classification_counts"]),
    )
    return rec


def _label(c: DirichletCharacter) -> str:
    if c.is_trivial:
        return "1"
    return c.real_label if c.is_primitive else f"{c.name}"


def _run_one(args):
    item, precision, tolerance = args
    return evaluate_item(item, precision, tolerance)


@dataclass
class ScanSummary:
    family: str
    k_max: int
    modulus_max: int
    precision: int
    tolerance: float
    total: int = 0
    consistent: int = 0
    exceptional: list = field(default_factory=list)
    zero_polynomials: int = 0
    self_inversive_failures: list = field(default_factory=list)
    max_deviation_on_circle: float = 0.0

    def add(self, rec: dict) -> None:
        self.total += 1
        if rec.get("zero_polynomial"):
            self.zero_polynomials += 1
            self.consistent += 1
            return
        if rec["exceptional"]:
            self.exceptional.append({"k": rec["k"], "chi": rec["chi_label"], "psi": rec["psi_label"],
                                     "counts": rec["classification_counts"]})
        else:
            self.consistent += 1
        if rec["self_inversive"] is False:
            self.self_inversive_failures.append((rec["k"], rec["chi"], rec["psi"]))
        devs = [r["abs_dev"] for r in rec["roots"] if r["class"] == ON]
        if devs:
            self.max_deviation_on_circle = max(self.max_deviation_on_circle, max(devs))

    @property
    def exceptional_characters(self) -> list:
        """Distinct non-trivial character labels among exceptional items, in first-seen order."""
        seen = []
        for e in self.exceptional:
            for lab in (e["chi"], e["psi"]):
                if lab != "1" and lab not in seen:
                    seen.append(lab)
        return seen

    def to_json(self) -> dict:
        return {
            "summary": True,
            "family": self.family,
            "k_max": self.k_max,
            "modulus_max": self.modulus_max,
            "precision_bits": self.precision,
            "tolerance": self.tolerance,
            "total": self.total,
            "consistent": self.consistent,
            "exceptional_count": len(self.exceptional),
            "exceptional": self.exceptional,
            "exceptional_characters": self.exceptional_characters,
            "zero_polynomials": self.zero_polynomials,
            "self_inversive_failures": self.self_inversive_failures,
            "max_deviation_on_circle": self.max_deviation_on_circle,
        }


def scan_conjecture(k_max: int, modulus_max: int, tolerance: float = 2.0 ** -32, which: str = "R-both-nonprincipal",
                    precision: int = 128, workers: int | None = None, sink=None, k_min: int = 2,
                    primitive_only: bool | None = None, keep_records: bool = True):
    """Scan a family; returns (records, summary).

    ``sink`` is an optional text stream receiving one JSON line per item as
    results arrive.  ``workers=1`` runs in-process.
    """
    if tolerance <= 0 or precision < 53:
        raise ValueError("tolerance must be positive and precision >= 53")
    items = family_items(which, k_max, modulus_max, k_min, primitive_only)
    summary = ScanSummary(which, k_max, modulus_max, precision, tolerance)
    records = []
    workers = workers or os.cpu_count() or 1
    args = [(it, precision, tolerance) for it in items]
    if workers == 1 or len(items) < 2:
        results = map(_run_one, args)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run_one, args, chunksize=max(1, len(args) // (workers * 8)))
    try:
        for rec in results:
            summary.add(rec)
            if sink is not None:
                sink.write(json.dumps(rec, sort_keys=True) + "\n")
            if keep_records:
                records.append(rec)
    finally:
        if pool is not None:
            pool.shutdown()
    return records, summary


__all__ = ["FAMILIES", "family_items", "evaluate_item", "scan_conjecture", "ScanSummary", "real_nonprincipal"]
