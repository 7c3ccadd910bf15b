"""Command-line front door: build groups, compute formation-theoretic
subgroups, run verification suites, and scan for witnesses.

Exit codes: 0 all-pass, 1 mathematical failure, 2 configuration error,
3 budget exhaustion without failures.  Identical invocation and
configuration produce byte-identical output; structured mode emits one
JSON record per line with the same facts as the text mode.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .config import (DEFAULT_BUDGETS, DEFAULT_SAMPLE, DEFAULT_SEED,
                     ENV_PREFIX, Budgets, budgets_from_env)
from .constructions import (direct_product, load_bundled_catalog,
                            load_catalog, standard, wreath_regular)
from .errors import CatalogError, ResourceLimitError
from .formations import (Formation, formation_from_spec, genz_star, int_f,
                         psi_e, radical, residual, z_f)
from .lattice import chief_series
from .permcore import PermGroup, Subgroup
from .theorems import run_suite, search_int_vs_z

__all__ = ["main", "RunConfig", "parse_group_spec"]

COMPUTE_OBJECTS = ("int", "zf", "residual", "genz", "radical", "psi-e",
                   "chief-series")
VERIFY_SUITES = ("baer", "theorem-a", "theorem-b", "theorem-c", "t51", "t54",
                 "t59", "t510", "example-513")
SCANS = ("boundary", "int-vs-z")

_NEEDS_FORMATION = {"int", "zf", "residual", "theorem-a", "theorem-c",
                    "boundary", "int-vs-z"}


# ---------------------------------------------------------------------------
# configuration resolution: flag > environment > default


def _env(name: str) -> str | None:
    raw = os.environ.get(ENV_PREFIX + name)
    return raw if raw not in (None, "") else None


def _env_int(name: str) -> int | None:
    raw = _env(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {ENV_PREFIX}{name} must be "
                         f"an integer, got {raw!r}")


def _pick(flag, env_name, default, parse=lambda v: v):
    if flag is not None:
        return flag
    raw = _env(env_name)
    if raw is not None:
        return parse(raw)
    return default


class RunConfig:
    """Resolved settings for one invocation."""

    __slots__ = ("catalog_path", "max_order", "formation", "group", "budgets",
                 "seed", "sample", "jobs", "output", "_catalog")

    def __init__(self, args: argparse.Namespace):
        self.catalog_path = _pick(args.catalog, "CATALOG", None)
        self.max_order = _pick(args.max_order, "MAX_ORDER", None, int)
        self.group = _pick(args.group, "GROUP", None)
        self.seed = _pick(args.seed, "SEED", DEFAULT_SEED, int)
        self.sample = _pick(args.sample, "SAMPLE", DEFAULT_SAMPLE, int)
        self.jobs = _pick(args.jobs, "JOBS", 1, int)
        self.output = _pick(args.output, "OUTPUT", "text")
        if self.output not in ("text", "structured"):
            raise ValueError(f"unknown output mode {self.output!r}")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        if self.sample < 1:
            raise ValueError("--sample must be positive")
        if self.max_order is not None and self.max_order < 1:
            raise ValueError("--max-order must be positive")
        self.budgets = budgets_from_env(DEFAULT_BUDGETS).replace(
            elements=args.budget_elements, lattice=args.budget_lattice)
        if min(self.budgets.elements, self.budgets.lattice,
               self.budgets.isomorphism) < 1:
            raise ValueError("budgets must be positive")
        text = _pick(args.formation, "FORMATION", None)
        self.formation: Formation | None = \
            formation_from_spec(text) if text is not None else None
        self._catalog = None

    def catalog(self):
        if self._catalog is None:
            if self.catalog_path is not None:
                self._catalog = load_catalog(self.catalog_path)
            else:
                self._catalog = load_bundled_catalog()
        return self._catalog

    def need_formation(self, target: str) -> Formation:
        if self.formation is None:
            raise ValueError(f"{target} needs --formation")
        return self.formation


# ---------------------------------------------------------------------------
# group-spec mini-language: C<n> D<n> S<n> A<n> Q8 cat:<name> wr:A,B x:A,B


_ATOM_RE = re.compile(r"Q8|([CDSA])(\d+)")


def parse_group_spec(text: str, *, catalog_loader=None,
                     budgets: Budgets = DEFAULT_BUDGETS) -> PermGroup:
    """Build a group from the group-spec mini-language, recursively."""
    s = text.strip()
    G, pos = _parse_expr(s, 0, catalog_loader, budgets)
    if pos != len(s):
        raise ValueError(f"trailing input in group spec at position {pos}: "
                         f"{s[pos:]!r}")
    return G


def _parse_expr(s: str, pos: int, loader, budgets) -> tuple[PermGroup, int]:
    for prefix in ("wr:", "x:"):
        if s.startswith(prefix, pos):
            a, pos = _parse_expr(s, pos + len(prefix), loader, budgets)
            if pos >= len(s) or s[pos] != ",":
                raise ValueError(f"group spec needs ',' after the first "
                                 f"{prefix[:-1]} operand")
            b, pos = _parse_expr(s, pos + 1, loader, budgets)
            if prefix == "wr:":
                return wreath_regular(a, b, budgets=budgets).group, pos
            return direct_product(a, b, budgets=budgets), pos
    if s.startswith("cat:", pos):
        end = s.find(",", pos)
        if end < 0:
            end = len(s)
        name = s[pos + 4:end]
        if loader is None:
            raise ValueError("cat: group specs need a catalog")
        for entry in loader():
            if entry.name == name:
                return entry.group(), end
        raise ValueError(f"catalog has no group named {name!r}")
    m = _ATOM_RE.match(s, pos)
    if m is None:
        raise ValueError(f"unreadable group spec at position {pos}: "
                         f"{s[pos:]!r}")
    if m.group(0) == "Q8":
        return standard("Q8", budgets=budgets), m.end()
    return standard(m.group(1), int(m.group(2)), budgets=budgets), m.end()


# ---------------------------------------------------------------------------
# rendering


def _perm_text(G: PermGroup, i: int) -> str:
    cyc = G.perm(i).cycles()
    if not cyc:
        return "id"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _emit(lines: list[str], records: list[dict], output: str) -> None:
    if output == "text":
        for line in lines:
            print(line)
    else:
        for rec in records:
            print(json.dumps(rec, sort_keys=True))


def _subgroup_facts(sub: Subgroup) -> tuple[list[str], dict]:
    gens = [_perm_text(sub.parent, g) for g in sub.gens]
    lines = ["order: %d" % sub.order,
             "members: %d" % sub.order,
             "generators: %s" % (" ".join(gens) if gens else "none")]
    rec = {"order": sub.order, "members": sub.order, "generators": gens}
    return lines, rec


# ---------------------------------------------------------------------------
# commands


def cmd_compute(target: str, cfg: RunConfig) -> int:
    if cfg.group is None:
        raise ValueError("compute needs --group")
    G = parse_group_spec(cfg.group, catalog_loader=cfg.catalog,
                         budgets=cfg.budgets)
    head = f"object={target}"
    rec: dict = {"object": target, "group": cfg.group.strip()}
    if target in _NEEDS_FORMATION:
        F = cfg.need_formation(f"compute {target}")
        head += f" formation={F.key}"
        rec["formation"] = F.key
    head += f" group={cfg.group.strip()}"

    if target == "chief-series":
        series = chief_series(G)
        orders = [t.order for t in series]
        factors = [orders[k + 1] // orders[k] for k in range(len(orders) - 1)]
        lines = [head,
                 "order: %d" % G.order,
                 "series orders: %s" % " ".join(map(str, orders)),
                 "factor orders: %s" % " ".join(map(str, factors))]
        rec.update(order=G.order, series_orders=orders, factor_orders=factors)
        _emit(lines, [rec], cfg.output)
        return 0

    if target == "int":
        sub = int_f(cfg.formation, G, budgets=cfg.budgets)
    elif target == "zf":
        sub = z_f(cfg.formation, G, budgets=cfg.budgets)
    elif target == "residual":
        sub = residual(cfg.formation, G)
    elif target == "genz":
        sub = genz_star(G)
    elif target == "radical":
        sub = radical(G, budgets=cfg.budgets)
    else:  # psi-e
        sub = psi_e(G, G.full_subgroup())
    body_lines, body_rec = _subgroup_facts(sub)
    rec.update(body_rec)
    _emit([head] + body_lines, [rec], cfg.output)
    return 0


def _report_exit(report) -> int:
    if report.failures:
        return 1
    if any(reason.startswith("budget") for _, _, reason in report.skips):
        return 3
    return 0


def cmd_verify(suite: str, cfg: RunConfig) -> int:
    formation = cfg.formation
    if suite in _NEEDS_FORMATION and formation is None:
        raise ValueError(f"verify {suite} needs --formation")
    catalog = None if suite == "example-513" else cfg.catalog()
    report = run_suite(suite, formation=formation, catalog=catalog,
                       max_order=cfg.max_order, seed=cfg.seed,
                       sample=cfg.sample, budgets=cfg.budgets, jobs=cfg.jobs)
    _emit(report.text_lines(), report.records(), cfg.output)
    return _report_exit(report)


def cmd_scan(target: str, cfg: RunConfig) -> int:
    F = cfg.need_formation(f"scan {target}")
    if target == "boundary":
        report = run_suite("boundary", formation=F, catalog=cfg.catalog(),
                           max_order=cfg.max_order, budgets=cfg.budgets)
    else:
        report = search_int_vs_z(F, cfg.catalog(),
                                 cfg.max_order if cfg.max_order is not None
                                 else 48,
                                 budgets=cfg.budgets, jobs=cfg.jobs)
    _emit(report.text_lines(), report.records(), cfg.output)
    return 0  # scans report, they do not judge


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formlab",
        description="Finite-group formation computations and catalog-wide "
                    "verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)
    specs = (
        ("compute", COMPUTE_OBJECTS,
         "Compute one subgroup-valued object for one group."),
        ("verify", VERIFY_SUITES,
         "Run a verification suite; exit 1 on any mathematical failure."),
        ("scan", SCANS,
         "Search the catalog for witnesses; always exits 0."),
    )
    for name, choices, blurb in specs:
        sp = sub.add_parser(name, help=blurb, description=blurb)
        sp.add_argument("target", choices=choices)
        sp.add_argument("--formation", help="formation key, e.g. N, U, "
                        "NA, S, Nr(2), PDecomp(3), TwoPrimeSuper")
        sp.add_argument("--group", help="group spec: C<n> D<n> S<n> A<n> Q8 "
                        "cat:<name> wr:<A>,<B> x:<A>,<B>")
        sp.add_argument("--catalog", help="path to a catalog file "
                        "(default: bundled groups of order <= 63)")
        sp.add_argument("--max-order", type=int, dest="max_order")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--jobs", type=int)
        sp.add_argument("--output", choices=("text", "structured"))
        sp.add_argument("--budget-elements", type=int, dest="budget_elements")
        sp.add_argument("--budget-lattice", type=int, dest="budget_lattice")
        sp.add_argument("--sample", type=int)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args)
        if args.command == "compute":
            return cmd_compute(args.target, cfg)
        if args.command == "verify":
            return cmd_verify(args.target, cfg)
        return cmd_scan(args.target, cfg)
    except ResourceLimitError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, CatalogError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
