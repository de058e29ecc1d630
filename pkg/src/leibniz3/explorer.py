"""Exhaustive enumeration of structure tensors over a small prime field.

Candidates are all ``p**(n**4)`` coefficient assignments, ordered
lexicographically with coefficient ``(i, j, k, m)`` digits most significant
first; a candidate's index is its position in that order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
import json
import os

from .algebra3 import Algebra3, validate, write_algebra
from .bounds import schur_report, tightness_gap
from .errors import BudgetExceededError, UsageError
from .exactfield import FieldSpec, field_to_json

DEFAULT_BUDGET = 1 << 24


def brute_force_validate(a: Algebra3) -> bool:
    """Independent identity check by nested evaluation on sparse vectors."""
    n = a.dim
    red = a.field.reduce
    table = {key: {m: x for m, x in enumerate(v) if x} for key, v in a.brackets.items()}

    def br(x, y, z):
        out = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, zk in z.items():
                    v = table.get((i, j, k))
                    if v:
                        s = xi * yj * zk
                        for m, c in v.items():
                            out[m] = out.get(m, 0) + s * c
        return {m: red(c) for m, c in out.items() if red(c)}

    def plus(*vs):
        out = {}
        for v in vs:
            for m, c in v.items():
                out[m] = out.get(m, 0) + c
        return {m: red(c) for m, c in out.items() if red(c)}

    def basis(i, j, k):
        return table.get((i, j, k), {})

    e = [{t: 1} for t in range(n)]
    rng = range(n)
    for x, y in product(rng, repeat=2):
        for p, q, r in product(rng, repeat=3):
            lhs = br(e[x], e[y], basis(p, q, r))
            rhs = plus(br(basis(x, y, p), e[q], e[r]),
                       br(e[p], basis(x, y, q), e[r]),
                       br(e[p], e[q], basis(x, y, r)))
            if lhs != rhs:
                return False
    return True


@dataclass
class EnumerationSummary:
    field: FieldSpec
    dim: int
    candidates: int
    valid_count: int = 0
    bound_violations: int = 0
    oracle_disagreements: int = 0
    lie3_count: int = 0
    min_gap_thm: int | None = None
    min_gap_cor1: int | None = None
    witnesses_thm: list = dc_field(default_factory=list)
    witnesses_cor1: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)
    witness_files: int = 0

    def to_dict(self) -> dict:
        return {
            "field": field_to_json(self.field),
            "dim": self.dim,
            "candidates": self.candidates,
            "valid_count": self.valid_count,
            "bound_violations": self.bound_violations,
            "oracle_disagreements": self.oracle_disagreements,
            "lie3_count": self.lie3_count,
            "min_gap_thm": self.min_gap_thm,
            "min_gap_cor1": self.min_gap_cor1,
            "witnesses_thm": self.witnesses_thm,
            "witnesses_cor1": self.witnesses_cor1,
            "violations": self.violations,
            "witness_files": self.witness_files,
        }


def _fold_min(cur, idxs, gap, new_idxs):
    if gap is None:
        return cur, idxs
    if cur is None or gap < cur:
        return gap, list(new_idxs)
    if gap == cur:
        idxs.extend(new_idxs)
    return cur, idxs


def _merge(total: EnumerationSummary, part: EnumerationSummary):
    total.valid_count += part.valid_count
    total.bound_violations += part.bound_violations
    total.oracle_disagreements += part.oracle_disagreements
    total.lie3_count += part.lie3_count
    total.violations.extend(part.violations)
    total.min_gap_thm, total.witnesses_thm = _fold_min(
        total.min_gap_thm, total.witnesses_thm, part.min_gap_thm, part.witnesses_thm)
    total.min_gap_cor1, total.witnesses_cor1 = _fold_min(
        total.min_gap_cor1, total.witnesses_cor1, part.min_gap_cor1, part.witnesses_cor1)


def candidate(field: FieldSpec, n: int, index: int) -> Algebra3:
    """Decode a candidate index back into its structure tensor."""
    p = field.p
    digits = []
    for _ in range(n ** 4):
        index, dgt = divmod(index, p)
        digits.append(dgt)
    return Algebra3.from_flat(field, n, digits[::-1])


def _scan(field: FieldSpec, n: int, prefix: tuple, suffix_len: int) -> EnumerationSummary:
    p = field.p
    total = n ** 4
    out = EnumerationSummary(field, n, p ** suffix_len)
    base = 0
    for dgt in prefix:
        base = base * p + dgt
    index = base * p ** suffix_len
    for suffix in product(range(p), repeat=suffix_len):
        coeffs = prefix + suffix
        a = Algebra3.from_flat(field, n, coeffs) if total else Algebra3(field, n)
        ok = not validate(a, max_reports=1)
        if ok != brute_force_validate(a):
            out.oracle_disagreements += 1
        if ok:
            out.valid_count += 1
            rep = schur_report(a)
            if rep.lie3:
                out.lie3_count += 1
            if not rep.all_hold:
                out.bound_violations += 1
                out.violations.append(index)
            g_thm, g_cor1, _ = tightness_gap(rep)
            out.min_gap_thm, out.witnesses_thm = _fold_min(out.min_gap_thm, out.witnesses_thm, g_thm, [index])
            out.min_gap_cor1, out.witnesses_cor1 = _fold_min(out.min_gap_cor1, out.witnesses_cor1, g_cor1, [index])
        index += 1
    return out


def _scan_chunk(args):
    return _scan(*args)


def candidate_count(field: FieldSpec, n: int) -> int:
    return field.p ** (n ** 4)


def enumerate_algebras(field: FieldSpec, n: int, budget: int = DEFAULT_BUDGET,
                       out_dir=None, workers: int = 1, min_chunk: int = 256) -> EnumerationSummary:
    """Scan every candidate tensor, checking validity and the bounds.

    Work is split into chunks by fixing leading coefficients; chunk results
    merge in chunk order, so the summary does not depend on ``workers``.
    Minimal-gap witnesses and any bound violations are written to
    ``out_dir`` as ``candidate_<index>.json``.
    """
    if not field.is_prime_field:
        raise UsageError("enumeration needs a prime field Fp:<p>")
    if n < 0:
        raise UsageError("dimension must be non-negative")
    count = candidate_count(field, n)
    if count > budget:
        raise BudgetExceededError(
            f"{count} candidates ({field.p}^{n ** 4}) exceed the budget of {budget}", count)
    total = n ** 4
    p = field.p
    prefix_len = 0
    while prefix_len < total and p ** prefix_len < 64 and count // p ** (prefix_len + 1) >= min_chunk:
        prefix_len += 1
    chunks = [(field, n, prefix, total - prefix_len) for prefix in product(range(p), repeat=prefix_len)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
    else:
        parts = [_scan_chunk(c) for c in chunks]
    summary = EnumerationSummary(field, n, count)
    for part in parts:
        _merge(summary, part)
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        emitted = sorted(set(summary.witnesses_thm) | set(summary.witnesses_cor1) | set(summary.violations))
        width = len(str(count - 1))
        for idx in emitted:
            write_algebra(candidate(field, n, idx), os.path.join(out_dir, f"candidate_{idx:0{width}d}.json"))
        summary.witness_files = len(emitted)
        with open(os.path.join(out_dir, "summary.json"), "w", encoding="utf-8") as fh:
            json.dump(summary.to_dict(), fh, indent=2)
            fh.write("\n")
    return summary
