"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chern import LambdaSign, compute_lambda, j_split, solve_ce
from .closedform import check_identities
from .realform import RealForm, catalog, parse_form, split_for, table2_catalog
from .rootsys import RootVec, bits
from .search import (
    DEFAULT_RANK_CAP,
    RankCapExceeded,
    classify,
    integrability_census,
    verify_theorem,
)
from .weyl import SignedPerm, chamber, chamber_to_z, weyl_order

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3

# R_c^+ and R_nc^+ of su(3,2) for the cycle (2 4 5 3), e_ij = e_i - e_j
SU32_COMPACT = {"e12", "e13", "e23", "e45"}
SU32_NONCOMPACT = {"e14", "e15", "e25", "e42", "e43", "e53"}

_K = {
    "su": "su({0})+su({1})+R",
    "so_odd": "so({2})+so({3})",
    "sp_real": "su({0})+R",
    "sp": "sp({0})+sp({1})",
    "so_star": "su({0})+R",
    "so_even": "so({2})+so({3})",
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    form: Optional[RealForm] = None
    rank_cap: int = DEFAULT_RANK_CAP
    shards: int = 1
    fmt: str = "table"
    verify: bool = False
    norm: Fraction = Fraction(1)
    seed: int = 0
    max_rank: int = 4

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        form = parse_form(ns.form) if getattr(ns, "form", None) else None
        norm = Fraction(getattr(ns, "norm", "1"))
        if norm <= 0:
            raise ValueError("--norm must be positive")
        shards = getattr(ns, "shards", 1)
        if shards < 1:
            raise ValueError("--shards must be >= 1")
        return cls(
            command=ns.command,
            form=form,
            rank_cap=getattr(ns, "rank_cap", DEFAULT_RANK_CAP),
            shards=shards,
            fmt=getattr(ns, "format", "table"),
            verify=getattr(ns, "verify", False),
            norm=norm,
            seed=getattr(ns, "seed", 0),
            max_rank=getattr(ns, "max_rank", 4),
        )


def rational(x: Optional[Fraction]):
    """Integers stay integers; other rationals become "num/den" strings."""
    if x is None:
        return None
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def eps_name(a: RootVec) -> str:
    i = next(k for k, c in enumerate(a) if c == 1)
    j = next(k for k, c in enumerate(a) if c == -1)
    return f"e{i + 1}{j + 1}"


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_classify(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    report = classify(cfg.form, shards=cfg.shards, rank_cap=cfg.rank_cap)
    ok, issues = verify_theorem(cfg.form, report) if cfg.verify else (True, [])
    if cfg.fmt == "json":
        d = report.to_dict()
        if cfg.verify:
            d["verified"] = ok
            d["discrepancies"] = issues
        out.write(json.dumps(d, separators=(",", ":")) + "\n")
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["form", "index", "perm", "signs", "lambda_sign", "delta"])
        for wit in report.witnesses:
            w.writerow([cfg.form.name, wit.index, wit.perm, wit.signs, wit.lambda_sign.value,
                        " ".join(map(str, wit.delta))])
    else:
        counts = " ".join(f"{s.value}={report.count(s)}" for s in LambdaSign)
        out.write(f"form        {report.form.name}\n")
        out.write(f"rank        {report.rank}\n")
        out.write(f"weyl_order  {report.chambers_total}\n")
        out.write(f"counts      {counts}\n")
        out.write(f"shards      {report.shards}\n")
        out.write(f"elapsed_ms  {report.elapsed_ms}\n")
        if report.witnesses:
            out.write("witnesses\n")
            for wit in report.witnesses:
                sg = f" {wit.signs}" if wit.signs else ""
                out.write(f"  #{wit.index:<8} [{wit.perm}]{sg}  {wit.lambda_sign.value:<4}  delta={list(wit.delta)}\n")
        if cfg.verify:
            out.write(f"verified    {'yes' if ok else 'NO'}\n")
            for msg in issues:
                out.write(f"  ! {msg}\n")
    return EXIT_OK if ok else EXIT_VERIFY


def su32_chamber(cycle: Sequence[int]) -> dict:
    form = RealForm("su", (3, 2))
    sp = split_for(form)
    w = SignedPerm.from_cycles("A", 5, tuple(cycle)) if len(cycle) > 1 else SignedPerm.identity("A", 4)
    ps = chamber(w, sp.rs)
    res = solve_ce(j_split(chamber_to_z(ps), sp))
    rc = {eps_name(sp.rs.roots[i]) for i in bits(ps.members & sp.compact)}
    rnc = {eps_name(sp.rs.roots[i]) for i in bits(ps.members & sp.noncompact)}
    return {"perm": w.perm_text, "compact": rc, "noncompact": rnc, "delta": res.delta,
            "lambda_sign": res.lambda_sign}


def cmd_example_su32(cfg: RunConfig, cycle: Sequence[int] = (2, 4, 5, 3), sweep: bool = False,
                     out=None) -> int:
    out = out or sys.stdout
    ex = su32_chamber(cycle)
    match = ex["compact"] == SU32_COMPACT and ex["noncompact"] == SU32_NONCOMPACT
    flat = all(x == 0 for x in ex["delta"])
    ok = match and flat
    payload = {
        "cycle": list(cycle),
        "perm": ex["perm"],
        "R_c_plus": sorted(ex["compact"]),
        "R_nc_plus": sorted(ex["noncompact"]),
        "delta": list(ex["delta"]),
        "lists_match": match,
        "ricci_flat": flat,
    }
    if sweep:
        form = RealForm("su", (3, 2))
        report = classify(form)
        good, issues = verify_theorem(form, report)
        payload["flat_chambers"] = [w.perm for w in report.witnesses if w.lambda_sign is LambdaSign.ZERO]
        payload["sweep_ok"] = good
        ok = ok and good
    if cfg.fmt == "json":
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        out.write(f"su(3,2), cycle {tuple(cycle)} -> one-line [{ex['perm']}]\n")
        out.write(f"R_c^+(z)  = {{{', '.join(payload['R_c_plus'])}}}\n")
        out.write(f"R_nc^+(z) = {{{', '.join(payload['R_nc_plus'])}}}\n")
        out.write(f"delta     = {payload['delta']}\n")
        out.write(f"lists match reference: {'yes' if match else 'NO'}; Ricci-flat: {'yes' if flat else 'NO'}\n")
        if sweep:
            out.write(f"Ricci-flat chambers ({len(payload['flat_chambers'])}):\n")
            for p in payload["flat_chambers"]:
                out.write(f"  [{p}]\n")
    return EXIT_OK if ok else EXIT_VERIFY


def table1_rows(max_rank: int) -> list[dict]:
    rows = []
    for f in catalog(max_rank):
        ps = f.params
        args = (ps[0], ps[-1], 2 * ps[0] + (1 if f.kind == "so_odd" else 0), 2 * ps[-1])
        rows.append({
            "type": f.family,
            "g": f.name,
            "k": _K[f.kind].format(*args),
            "rank": f.rank,
            "hermitian": f.is_hermitian,
            "weyl_order": weyl_order(f.family, f.rank),
        })
    return rows


def table2_rows(max_rank: int, norm: Fraction) -> list[dict]:
    rows = []
    for e in table2_catalog(max_rank):
        sp = split_for(e.form)
        js = j_split(e.z, sp)
        res = solve_ce(js)
        lam = compute_lambda(e.z, js, norm)
        rows.append({
            "type": e.form.family,
            "g": e.form.name,
            "l": e.isotropy,
            "z": list(e.z.z),
            "delta": list(res.delta),
            "lambda": rational(lam),
            "lambda_sign": res.lambda_sign.value,
        })
    return rows


def cmd_tables(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    t1 = table1_rows(cfg.max_rank)
    t2 = table2_rows(cfg.max_rank, cfg.norm)
    if cfg.fmt == "json":
        out.write(json.dumps({"norm": rational(cfg.norm), "table1": t1, "table2": t2}, separators=(",", ":")) + "\n")
        return EXIT_OK
    if cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["table", "type", "g", "subalgebra", "z", "lambda", "lambda_sign"])
        for r in t1:
            w.writerow([1, r["type"], r["g"], r["k"], "", "", ""])
        for r in t2:
            w.writerow([2, r["type"], r["g"], r["l"], " ".join(map(str, r["z"])), r["lambda"], r["lambda_sign"]])
        return EXIT_OK
    out.write(f"Inner symmetric pairs (g, k), rank <= {cfg.max_rank}\n")
    for r in t1:
        out.write(f"  {r['type']}  {r['g']:<10} {r['k']:<20} rank {r['rank']}  "
                  f"{'Hermitian' if r['hermitian'] else '':<9}  |W| = {r['weyl_order']}\n")
    out.write(f"\nIsotropy with one-dimensional center, lambda at c = {rational(cfg.norm)}\n")
    for r in t2:
        out.write(f"  {r['type']}  {r['g']:<10} {r['l']:<20} z={r['z']}  delta={r['delta']}  "
                  f"lambda={r['lambda']} ({r['lambda_sign']})\n")
    return EXIT_OK


def cmd_check_identities(cfg: RunConfig, sample_rank: int = 10, samples: int = 10_000, out=None) -> int:
    out = out or sys.stdout
    rep = check_identities(max_rank=cfg.max_rank, sample_rank=sample_rank, samples=samples, seed=cfg.seed)
    if cfg.fmt == "json":
        out.write(json.dumps({"ok": rep.ok, "checked": rep.checked, "failures": rep.failures},
                             separators=(",", ":")) + "\n")
    else:
        for name, n in rep.checked.items():
            out.write(f"  {name:<24} {n:>8} elements ok\n")
        if rep.ok:
            out.write("closed forms agree with direct summation\n")
        else:
            out.write(f"FAILED: {rep.failures[0]}\n")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_census(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    forms = [cfg.form] if cfg.form else catalog(cfg.max_rank)
    rows = []
    for f in forms:
        c = integrability_census(f)
        rows.append({"form": f.name, "hermitian": f.is_hermitian, **c})
    if cfg.fmt == "json":
        out.write(json.dumps(rows, separators=(",", ":")) + "\n")
    else:
        for r in rows:
            out.write(f"  {r['form']:<10} {'Hermitian' if r['hermitian'] else '':<9} "
                      f"integrable {r['integrable']:>5} / {r['total']}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chernkahler", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, form=False):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--norm", default="1", help="Killing/Euclidean constant c (rational)")
        if form:
            p.add_argument("--form", required=form == "required",
                           help="e.g. su:3,2  so:5,2  sp:2,1  spR:3  sostar:4")

    p = sub.add_parser("classify", help="sweep every Weyl chamber of a real form")
    common(p, form="required")
    p.add_argument("--rank-cap", type=int, default=DEFAULT_RANK_CAP)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--verify", action="store_true", help="compare with the theorem; exit 3 on mismatch")

    p = sub.add_parser("example-su32", help="the Ricci-flat su(3,2) chamber")
    common(p)
    p.add_argument("--cycle", default="2 4 5 3", help="1-based cycle, e.g. '2 4 5 3'")
    p.add_argument("--sweep", action="store_true", help="also list every Ricci-flat chamber")

    p = sub.add_parser("tables", help="symmetric-pair and isotropy catalogs with lambda")
    common(p)
    p.add_argument("--max-rank", type=int, default=4)

    p = sub.add_parser("check-identities", help="closed forms vs direct summation")
    common(p)
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--sample-rank", type=int, default=10)
    p.add_argument("--samples", type=int, default=10_000)

    p = sub.add_parser("census", help="count integrable chambers")
    common(p, form=True)
    p.add_argument("--max-rank", type=int, default=4)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        if ns.command == "example-su32":
            cycle = tuple(int(t) for t in ns.cycle.replace(",", " ").split())
            if any(not 1 <= c <= 5 for c in cycle) or len(set(cycle)) != len(cycle):
                raise ValueError(f"--cycle must list distinct letters from 1..5, got {ns.cycle!r}")
    except (ValueError, ZeroDivisionError) as exc:
        ap.print_usage(sys.stderr)
        print(f"{ap.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if cfg.command == "classify":
            return cmd_classify(cfg)
        if cfg.command == "example-su32":
            return cmd_example_su32(cfg, cycle, ns.sweep)
        if cfg.command == "tables":
            return cmd_tables(cfg)
        if cfg.command == "check-identities":
            return cmd_check_identities(cfg, ns.sample_rank, ns.samples)
        return cmd_census(cfg)
    except RankCapExceeded as exc:
        print(f"{ap.prog}: refused: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
