"""Command-line interface: coefficients, tableau listings, triple
classification, oracle cross-checks, and verification sweeps.

Exit codes: 2 for unparsable input, 3 when the tableau rule does not
apply and no oracle fallback was requested, 1 for verification
failures.
"""

from __future__ import annotations

import json
import sys

import click

from . import branching, diagalg, oracle, partitions, tableaux
from .partitions import NotAPartition


def _parse(text: str):
    try:
        return partitions.parse_partition(text)
    except NotAPartition as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _emit(record: dict, fmt: str, text_lines):
    """Render one result record in the requested format."""
    if fmt == "json":
        click.echo(json.dumps(record, sort_keys=True))
    elif fmt == "tsv":
        keys = sorted(record)
        click.echo("\t".join(keys))
        click.echo("\t".join(_tsv_cell(record[k]) for k in keys))
    else:
        for line in text_lines:
            click.echo(line)


def _tsv_cell(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


emit_option = click.option(
    "--emit", type=click.Choice(["text", "json", "tsv"]), default="text",
    show_default=True, help="Output format.")


@click.group()
def main():
    """Stable Kronecker coefficients via Kronecker tableaux."""


@main.command("coeff")
@click.argument("lam")
@click.argument("nu")
@click.argument("mu")
@emit_option
@click.option("--fallback-oracle", is_flag=True,
              help="Route non-co-Pieri, non-maximal-depth triples to the "
                   "character oracle.")
@click.option("--n-cap", type=int, default=None,
              help="Cap on n for the oracle fallback.")
@click.option("--verbose", is_flag=True)
def cmd_coeff(lam, nu, mu, emit, fallback_oracle, n_cap, verbose):
    """Compute the stable Kronecker coefficient of LAM, NU, MU."""
    lam, nu, mu = _parse(lam), _parse(nu), _parse(mu)
    s = partitions.size(mu)
    record = {
        "lambda": list(lam), "nu": list(nu), "mu": list(mu),
        "copieri": partitions.is_copieri(lam, nu, s),
        "maximal_depth": partitions.is_maximal_depth(lam, nu, s),
    }
    try:
        value = tableaux.stable_kronecker(lam, nu, mu)
        source = "tableaux"
    except tableaux.NotApplicable:
        if not fallback_oracle:
            click.echo("error: triple is neither co-Pieri nor of maximal "
                       "depth; pass --fallback-oracle to use the character "
                       "oracle", err=True)
            sys.exit(3)
        value = oracle.stable_kronecker_oracle(lam, nu, mu, n_cap=n_cap).value
        source = "oracle"
    record.update({"value": str(value), "source": source})
    lines = [str(value)]
    if verbose:
        lines = [f"value: {value}", f"source: {source}",
                 f"copieri: {record['copieri']}",
                 f"maximal_depth: {record['maximal_depth']}"]
    _emit(record, emit, lines)


@main.command("tableaux")
@click.argument("lam")
@click.argument("nu")
@click.argument("mu")
@emit_option
@click.option("--verbose", is_flag=True, help="Interleave shapes in text output.")
def cmd_tableaux(lam, nu, mu, emit, verbose):
    """List the weight-MU classes of standard tableaux from LAM to NU."""
    lam, nu, mu = _parse(lam), _parse(nu), _parse(mu)
    s = partitions.size(mu)
    classes = tableaux.mu_classes(lam, nu, mu)
    entries = []
    sstd = latt = 0
    for cls in classes:
        steps, frames = tableaux.reading_word(cls)
        semi = tableaux.is_semistandard(cls)
        lattice = semi and tableaux.is_lattice(frames)
        sstd += semi
        latt += lattice
        entries.append({
            "word_steps": [branching.step_str(st) for st in steps],
            "word_frames": list(frames),
            "semistandard": bool(semi),
            "lattice": bool(lattice),
            "size": len(cls),
        })
    record = {
        "lambda": list(lam), "nu": list(nu), "mu": list(mu),
        "copieri": partitions.is_copieri(lam, nu, s),
        "maximal_depth": partitions.is_maximal_depth(lam, nu, s),
        "sstd": str(sstd), "latt": str(latt), "classes": entries,
    }
    lines = [f"classes: {len(classes)}  semistandard: {sstd}  lattice: {latt}"]
    for cls, entry in zip(classes, entries):
        lines.append(" ".join(entry["word_steps"]) + " / "
                     + ",".join(str(f) for f in entry["word_frames"])
                     + f"  semistandard={entry['semistandard']}"
                     + f" lattice={entry['lattice']} size={entry['size']}")
        if verbose:
            rep = cls.members[0]
            lines.append("  rep: " + rep.serialize() + "  shapes: "
                         + " ".join(partitions.format_partition(sh)
                                    for sh in rep.shapes))
    _emit(record, emit, lines)


@main.command("classify")
@click.argument("lam")
@click.argument("nu")
@click.argument("mu")
@emit_option
def cmd_classify(lam, nu, mu, emit):
    """Report which counting regimes cover the triple LAM, NU, MU."""
    lam, nu, mu = _parse(lam), _parse(nu), _parse(mu)
    s = partitions.size(mu)
    a, b = partitions.skew_diff_sizes(lam, nu)
    record = {
        "lambda": list(lam), "nu": list(nu), "mu": list(mu),
        "copieri": partitions.is_copieri(lam, nu, s),
        "maximal_depth": partitions.is_maximal_depth(lam, nu, s),
        "bounds_ok": bool(max(a, b) <= s <= partitions.size(lam)
                          + partitions.size(nu)),
        "skew_sizes": [a, b],
    }
    lines = [f"copieri: {record['copieri']}",
             f"maximal_depth: {record['maximal_depth']}",
             f"bounds_ok: {record['bounds_ok']}",
             f"skew_sizes: {a},{b}"]
    _emit(record, emit, lines)


@main.command("oracle")
@click.argument("lam")
@click.argument("nu")
@click.argument("mu")
@emit_option
@click.option("--n-cap", type=int, default=None)
@click.option("--report-onset", is_flag=True)
def cmd_oracle(lam, nu, mu, emit, n_cap, report_onset):
    """Compute the stable coefficient by the character oracle."""
    lam, nu, mu = _parse(lam), _parse(nu), _parse(mu)
    try:
        result = oracle.stable_kronecker_oracle(lam, nu, mu, n_cap=n_cap)
        record = {"value": str(result.value), "onset_n": result.onset,
                  "capped": False}
        lines = [str(result.value)]
        if report_onset:
            lines.append(f"onset_n: {result.onset}")
    except oracle.BudgetExceeded:
        record = {"value": None, "onset_n": None, "capped": True}
        lines = ["capped: no stabilization within the n cap"]
    _emit(record, emit, lines)


@main.command("lr")
@click.argument("lam")
@click.argument("nu")
@click.argument("mu")
@emit_option
def cmd_lr(lam, nu, mu, emit):
    """Littlewood-Richardson coefficient for NU/LAM of weight MU."""
    lam, nu, mu = _parse(lam), _parse(nu), _parse(mu)
    try:
        value = tableaux.classical_lr(lam, nu, mu)
    except tableaux.ShapeMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit({"lambda": list(lam), "nu": list(nu), "mu": list(mu),
           "value": str(value)}, emit, [str(value)])


def _verify_records(max_size, max_s, thm33_r, n_cap):
    """Run the verification sweeps; yield one record per failure-checkable
    unit, each with ok: bool."""
    records = []

    # Bell counts
    def bell(m):
        row = [1]
        for _ in range(m):
            new = [row[-1]]
            for x in row:
                new.append(new[-1] + x)
            row = new
        return row[0]

    for r in range(1, min(3, max_s if max_s else 3) + 1):
        total = sum(len(branching.enumerate_std((), nu, r)) ** 2
                    for nu in partitions.partitions_up_to(r))
        records.append({"check": "bell", "r": r, "got": total,
                        "want": bell(2 * r), "ok": total == bell(2 * r)})

    # swap identity, exhaustive up to thm33_r
    for r in range(2, thm33_r + 1):
        ok = True
        count = 0
        for nu in partitions.partitions_up_to(r):
            for t in branching.enumerate_std((), nu, r):
                for k in range(1, r):
                    if branching.swap_adjacent(t, k) is None:
                        continue
                    count += 1
                    if not diagalg.verify_thm33(t, k, r):
                        ok = False
        records.append({"check": "thm33", "r": r, "cases": count, "ok": ok})

    # Oracle equivalence and the decomposition identity
    parts = partitions.partitions_up_to(max_size)
    for lam in parts:
        for nu in parts:
            for mu in parts:
                s = partitions.size(mu)
                if s > max_s:
                    continue
                applicable = (partitions.is_copieri(lam, nu, s)
                              or partitions.is_maximal_depth(lam, nu, s))
                if not applicable:
                    continue
                a, b = partitions.skew_diff_sizes(lam, nu)
                if not max(a, b) <= s <= (partitions.size(lam)
                                          + partitions.size(nu)):
                    continue
                got = tableaux.count_latticed(lam, nu, mu)
                want = oracle.stable_kronecker_oracle(lam, nu, mu,
                                                      n_cap=n_cap).value
                records.append({
                    "check": "oracle_equivalence",
                    "lambda": list(lam), "nu": list(nu), "mu": list(mu),
                    "got": got, "want": want, "ok": got == want})
    for lam in parts:
        for nu in parts:
            for s in range(1, max_s + 1):
                if not partitions.is_copieri(lam, nu, s):
                    continue
                for mu in partitions.partitions_of(s):
                    lhs = tableaux.count_sstd(lam, nu, mu)
                    rhs = sum(tableaux.ssyt_count(tau, mu)
                              * tableaux.count_latticed(lam, nu, tau)
                              for tau in partitions.partitions_of(s))
                    records.append({
                        "check": "decomposition",
                        "lambda": list(lam), "nu": list(nu), "mu": list(mu),
                        "got": lhs, "want": rhs, "ok": lhs == rhs})
    return records


@main.command("verify")
@emit_option
@click.option("--max-size", type=int, default=4, show_default=True,
              help="Bound on |lambda|, |nu| in the sweeps.")
@click.option("--max-s", type=int, default=4, show_default=True,
              help="Bound on |mu| in the sweeps.")
@click.option("--thm33-r", type=int, default=2, show_default=True,
              help="Verify the swap identity exhaustively up to this rank.")
@click.option("--n-cap", type=int, default=None)
def cmd_verify(emit, max_size, max_s, thm33_r, n_cap):
    """Run the verification sweeps; exit 1 on any failure."""
    records = _verify_records(max_size, max_s, thm33_r, n_cap)
    records.sort(key=lambda rec: json.dumps(rec, sort_keys=True))
    failures = [rec for rec in records if not rec["ok"]]
    if emit == "json":
        click.echo(json.dumps({"checks": len(records),
                               "failures": failures}, sort_keys=True))
    elif emit == "tsv":
        click.echo("check\tok\tdetail")
        for rec in records:
            detail = {k: v for k, v in rec.items() if k not in ("check", "ok")}
            click.echo(f"{rec['check']}\t{rec['ok']}\t"
                       + json.dumps(detail, sort_keys=True))
    else:
        click.echo(f"checks: {len(records)}  failures: {len(failures)}")
        for rec in failures:
            click.echo("FAIL " + json.dumps(rec, sort_keys=True))
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
