"""Command-line front end.

Subcommands: adm (admissible set), hasse (cover diagram), tables
(classification tables), census (finite-field point counts), classify
(stratum of a point), count (component counts), mass (superspecial
masses), loci (small curve loci).  Output is deterministic for a fixed
configuration; elements are always ordered by (length, text form).

Exit codes: 0 success, 2 invalid input, 3 a runtime cross-check failed.
Large integers are emitted as decimal strings in JSON.  The admissible
table for a genus is cached as adm_g{g}.json under --cache-dir or the
KR_CACHE_DIR environment variable.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .admissible import (
    admissible_set,
    matrix_rep,
    table_from_json_dict,
    table_to_json_dict,
)
from .errors import InternalInvariantError
from .local_model import (
    classification_tables,
    classify,
    point_census,
    point_from_json_dict,
)
from .strata_counts import (
    MassParams,
    ParahoricType,
    almost_ordinary_components,
    connected_component_count,
    fermat_point_count,
    frobenius_graph_count,
    lambda_counts,
)
from .weyl_group import element_to_json_dict, hasse_diagram, hasse_to_dot

_FORMATS = {
    "adm": ("text", "json", "csv"),
    "hasse": ("dot", "json", "csv", "text"),
    "tables": ("csv", "json", "text"),
    "census": ("csv", "json", "text"),
    "classify": ("text", "json"),
    "count": ("text", "json"),
    "mass": ("json", "text"),
    "loci": ("json", "text"),
}


@dataclass
class RunConfig:
    subcommand: str
    g: int | None = None
    q: int | None = None
    p: int | None = None
    N: int | None = None
    k: tuple | None = None
    f: int | None = None
    format: str | None = None
    cache_dir: str | None = None
    input_path: str | None = None
    table_path: str | None = None


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _emit_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _resolve_format(config):
    allowed = _FORMATS[config.subcommand]
    fmt = config.format or allowed[0]
    if fmt not in allowed:
        raise ValueError(
            "format {0!r} is not valid for {1}".format(fmt, config.subcommand)
        )
    return fmt


def _require(config, *fields):
    for field in fields:
        if getattr(config, field) is None:
            raise ValueError(
                "{0} requires --{1}".format(config.subcommand, field)
            )


def _load_admissible_table(g, config):
    cache_dir = config.cache_dir or os.environ.get("KR_CACHE_DIR")
    if not cache_dir:
        return admissible_set(g)
    path = os.path.join(cache_dir, "adm_g{0}.json".format(g))
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return table_from_json_dict(json.load(fh))
        except (ValueError, KeyError, json.JSONDecodeError):
            pass  # unreadable or foreign cache entry: rebuild it
    table = admissible_set(g)
    os.makedirs(cache_dir, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table_to_json_dict(table), fh, separators=(",", ":"))
        fh.write("\n")
    return table


def _table_rows(table):
    rows = []
    for x in table.sorted_elements():
        rows.append(
            (
                table.name_of(x),
                " ".join(str(a) for a in x.nu),
                " ".join(str(a + 1) for a in x.sigma),
                table.lengths[x],
                table.p_ranks[x],
            )
        )
    return rows


def _run_adm(config, fmt):
    _require(config, "g")
    table = _load_admissible_table(config.g, config)
    if fmt == "json":
        _emit_json(table_to_json_dict(table))
    elif fmt == "csv":
        _emit_csv(_table_rows(table))
    else:
        for x in table.sorted_elements():
            sys.stdout.write(table.name_of(x) + "\n")
            for line in matrix_rep(x).to_text_grid().splitlines():
                sys.stdout.write("  " + line + "\n")
    return 0


def _run_hasse(config, fmt):
    _require(config, "g")
    table = _load_admissible_table(config.g, config)
    elements = table.sorted_elements()
    edges = hasse_diagram(elements)
    names = {x: table.name_of(x) for x in elements}
    if fmt == "dot":
        sys.stdout.write(hasse_to_dot(elements, names))
    elif fmt == "json":
        _emit_json(
            {
                "nodes": [names[x] for x in elements],
                "edges": [[names[a], names[b]] for a, b in edges],
            }
        )
    elif fmt == "csv":
        _emit_csv([(names[a], names[b]) for a, b in edges])
    else:
        for a, b in edges:
            sys.stdout.write("{0} < {1}\n".format(names[a], names[b]))
    return 0


def _run_tables(fmt):
    kinds, by_pairs, by_second = classification_tables()
    if fmt == "json":
        _emit_json(
            {
                "kinds": [
                    {"sigma": s, "tau": t, "kind": kind}
                    for (s, t), kind in kinds
                ],
                "by_invariants": [
                    {"pairs": [list(p) for p in pairs], "element": name}
                    for pairs, name in by_pairs
                ],
                "by_second_invariants": [
                    {"pair": list(key), "elements": list(names)}
                    for key, names in by_second
                ],
            }
        )
        return 0
    rows = []
    for (s, t), kind in kinds:
        rows.append((1, s, t, kind))
    for pairs, name in by_pairs:
        (s0, t0), (s1, t1) = pairs
        rows.append((2, s0, t0, s1, t1, name))
    for key, names in by_second:
        rows.append((3, key[0], key[1], "|".join(names)))
    if fmt == "csv":
        _emit_csv(rows)
    else:
        for row in rows:
            sys.stdout.write(" ".join(str(a) for a in row) + "\n")
    return 0


def _run_census(config, fmt):
    _require(config, "g", "q")
    table = _load_admissible_table(config.g, config)
    table, rows = point_census(config.g, config.q, table)
    out = []
    mismatch = False
    for x, expected, observed in rows:
        out.append((table.name_of(x), table.lengths[x], expected, observed))
        if expected != observed:
            mismatch = True
    if fmt == "csv":
        _emit_csv(out)
    elif fmt == "json":
        _emit_json(
            [
                {
                    "name": name,
                    "length": ell,
                    "expected": str(exp),
                    "observed": str(obs),
                }
                for name, ell, exp, obs in out
            ]
        )
    else:
        for name, ell, exp, obs in out:
            sys.stdout.write(
                "{0} length {1} expected {2} observed {3}\n".format(
                    name, ell, exp, obs
                )
            )
    if mismatch:
        raise InternalInvariantError("census disagrees with stratum dimensions")
    return 0


def _run_classify(config, fmt):
    _require(config, "input_path")
    if config.input_path == "-":
        data = json.load(sys.stdin)
    else:
        with open(config.input_path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    point, ctx = point_from_json_dict(data)
    if config.table_path:
        with open(config.table_path, "r", encoding="utf-8") as fh:
            table = table_from_json_dict(json.load(fh))
        if table.g != ctx.n:
            raise ValueError("table genus does not match the point")
    else:
        table = _load_admissible_table(ctx.n, config)
    element = classify(point, table, ctx)
    if fmt == "json":
        row = element_to_json_dict(element)
        row["name"] = table.name_of(element)
        row["length"] = table.lengths[element]
        row["p_rank"] = table.p_ranks[element]
        _emit_json(row)
    else:
        sys.stdout.write(table.name_of(element) + "\n")
    return 0


def _run_count(config, fmt):
    _require(config, "k", "g")
    pt = ParahoricType(config.k, config.g)
    if config.f is None:
        value = almost_ordinary_components(pt)
        payload = {
            "k": list(pt.k),
            "g": pt.g,
            "almost_ordinary_components": str(value),
        }
    else:
        value = connected_component_count(pt, config.f)
        payload = {
            "k": list(pt.k),
            "g": pt.g,
            "f": config.f,
            "connected_components": str(value),
        }
    if fmt == "json":
        _emit_json(payload)
    else:
        sys.stdout.write(str(value) + "\n")
    return 0


def _run_mass(config, fmt):
    _require(config, "p", "N")
    mp = MassParams(config.p, config.N)
    lam, lam211 = lambda_counts(mp)
    singular = lam211 * (mp.p + 1)
    if fmt == "json":
        _emit_json(
            {
                "lambda": str(lam),
                "lambda_211": str(lam211),
                "singular": str(singular),
            }
        )
    else:
        sys.stdout.write("lambda {0}\n".format(lam))
        sys.stdout.write("lambda_211 {0}\n".format(lam211))
        sys.stdout.write("singular {0}\n".format(singular))
    return 0


def _run_loci(config, fmt):
    _require(config, "p")
    fermat = fermat_point_count(config.p)
    frob1 = frobenius_graph_count(config.p, 1)
    frob2 = frobenius_graph_count(config.p, 2)
    if fmt == "json":
        _emit_json(
            {
                "fermat": str(fermat),
                "frobenius_e1": str(frob1),
                "frobenius_e2": str(frob2),
            }
        )
    else:
        sys.stdout.write("fermat {0}\n".format(fermat))
        sys.stdout.write("frobenius_e1 {0}\n".format(frob1))
        sys.stdout.write("frobenius_e2 {0}\n".format(frob2))
    return 0


def run(config):
    """Execute one configuration; returns the process exit code."""
    try:
        if config.subcommand not in _FORMATS:
            raise ValueError("unknown subcommand {0!r}".format(config.subcommand))
        fmt = _resolve_format(config)
        if config.subcommand == "adm":
            return _run_adm(config, fmt)
        if config.subcommand == "hasse":
            return _run_hasse(config, fmt)
        if config.subcommand == "tables":
            return _run_tables(fmt)
        if config.subcommand == "census":
            return _run_census(config, fmt)
        if config.subcommand == "classify":
            return _run_classify(config, fmt)
        if config.subcommand == "count":
            return _run_count(config, fmt)
        if config.subcommand == "mass":
            return _run_mass(config, fmt)
        return _run_loci(config, fmt)
    except InternalInvariantError as exc:
        sys.stderr.write("internal error: {0}\n".format(exc))
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("error: {0}\n".format(exc))
        return 2


def _parse_k(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kr",
        description="Kottwitz-Rapoport strata: enumeration, censuses, counts.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text, *flags):
        sp = sub.add_parser(name, help=help_text)
        if "g" in flags:
            sp.add_argument("--g", type=int, help="genus")
        if "q" in flags:
            sp.add_argument("--q", type=int, help="field size")
        if "p" in flags:
            sp.add_argument("--p", type=int, help="prime")
        if "N" in flags:
            sp.add_argument("--N", type=int, help="level")
        if "k" in flags:
            sp.add_argument("--k", type=_parse_k, help="block sizes, e.g. 1,1")
        if "f" in flags:
            sp.add_argument("--f", type=int, help="p-rank")
        if "in" in flags:
            sp.add_argument(
                "--in", dest="input_path", help="point JSON file, - for stdin"
            )
        if "table" in flags:
            sp.add_argument(
                "--table", dest="table_path", help="admissible table JSON file"
            )
        sp.add_argument("--format", choices=["json", "csv", "dot", "text"])
        sp.add_argument("--cache-dir", dest="cache_dir")
        return sp

    add("adm", "admissible set of a genus", "g")
    add("hasse", "closure order cover diagram", "g")
    add("tables", "invariant classification tables")
    add("census", "finite-field point census", "g", "q")
    add("classify", "stratum of a point", "in", "table")
    add("count", "stratum component counts", "k", "g", "f")
    add("mass", "superspecial mass formulas", "p", "N")
    add("loci", "small curve loci point counts", "p")
    return parser


def config_from_args(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    return RunConfig(
        subcommand=ns.subcommand,
        g=getattr(ns, "g", None),
        q=getattr(ns, "q", None),
        p=getattr(ns, "p", None),
        N=getattr(ns, "N", None),
        k=getattr(ns, "k", None),
        f=getattr(ns, "f", None),
        format=ns.format,
        cache_dir=ns.cache_dir,
        input_path=getattr(ns, "input_path", None),
        table_path=getattr(ns, "table_path", None),
    )


def main(argv=None):
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
