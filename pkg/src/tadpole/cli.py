"""Command line: ``tadpole list | check | cross-check``.

Exit status is 0 when every check passes, 1 when any fails and 2 for
configuration errors (bad base, missing assignment, unknown family...).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog import FAMILIES, builtin, list_families, load_scenario
from .errors import TadpoleError
from .verify import check_identity_formal, check_tadpole_numeric, cross_check_modes, max_dimension, projective_base

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


def _parse_base(text: str) -> int | None:
    """``formal`` -> None, ``P3``/``p3`` -> 3."""
    if text == "formal":
        return None
    m = re.fullmatch(r"[Pp](\d+)", text)
    if not m:
        raise ConfigError(f"base must be 'formal' or P<n>, got {text!r}")
    return int(m.group(1))


def _families(args) -> list:
    if args.scenario:
        try:
            return [load_scenario(args.scenario)]
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot read scenario {args.scenario}: {exc}") from None
    if args.family == "all":
        return list(FAMILIES)
    if args.family not in FAMILIES:
        raise ConfigError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)} or all")
    return [args.family]


def _name(family) -> str:
    return family if isinstance(family, str) else family.get("name", "custom")


def _needs_s(family) -> bool:
    data = builtin(family) if isinstance(family, str) else family
    return "S" in data.get("line_symbols", ["L"])


def _jobs(args) -> list[tuple]:
    """Expand arguments into ``(kind, family, params)`` work items."""
    n = _parse_base(args.base)
    families = _families(args)
    if n is None:
        if args.L is not None or args.S is not None:
            raise ConfigError("--L/--S apply to projective bases only")
        if args.command == "cross-check":
            raise ConfigError("cross-check needs a projective base such as P2")
        if args.dim is None:
            raise ConfigError("--dim is required with --base formal")
        if not 1 <= args.dim <= args.max_dim:
            raise ConfigError(f"--dim {args.dim} outside 1..{args.max_dim} (see --max-dim)")
        return [("formal", f, {"d": args.dim, "cap": args.max_dim}) for f in families]
    if args.dim is not None and args.dim != n:
        raise ConfigError(f"--dim {args.dim} contradicts --base P{n}")
    if args.L is None:
        raise ConfigError("--L is required with a projective base")
    L = args.L
    items = []
    for f in families:
        S = args.S
        if S is None and _needs_s(f):
            if args.family != "all":
                raise ConfigError(f"family {_name(f)} needs --S on a projective base")
            S = 0
        kind = "cross" if args.command == "cross-check" else "numeric"
        items.append((kind, f, {"n": n, "L": L, "S": S if _needs_s(f) else None, "row": args.row}))
    return items


def _run(item) -> dict:
    kind, family, p = item
    if kind == "formal":
        return check_identity_formal(family, p["d"], max_dim=p["cap"]).to_dict()
    if kind == "numeric":
        return check_tadpole_numeric(family, projective_base(p["n"], p["L"], p["S"]), row=p["row"]).to_dict()
    return cross_check_modes(family, projective_base(p["n"], p["L"], p["S"])).to_dict()


def _markdown(result: dict) -> str:
    if result.get("mode") == "cross-check":
        head = f"## {result['family']} over {result['base']} (cross-check): **{result['verdict'].upper()}**\n"
        t = result["totals"]
        body = (f"- formal: {result['formal']['verdict']}\n- numeric: {result['numeric']['verdict']}\n"
                f"- lhs: formal {t['lhs'][0]}, numeric {t['lhs'][1]}\n- rhs: formal {t['rhs'][0]}, numeric {t['rhs'][1]}\n"
                f"- lhs specializes correctly: {result['lhs_agrees']}\n"
                f"- rhs specializes correctly: {result['rhs_agrees']}\n")
        return head + "\n" + body
    lines = [f"### {result['family']} over {result['base']} ({result['mode']}): **{result['verdict'].upper()}**", ""]
    if "ledger" in result:
        lines += [f"`{result['ledger']['formula']}`", ""]
    lines += ["| k | lhs | rhs | diff |", "|---|---|---|---|"]
    lines += [f"| {r['k']} | {r['lhs']} | {r['rhs']} | {r['diff']} |" for r in result["degrees"]]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tadpole", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the built-in families")
    p_list.add_argument("--format", choices=("json", "markdown"), default="markdown")

    for name, help_text in (("check", "verify the specialization identity"),
                            ("cross-check", "compare formal and numeric modes over P^n")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--family", default="all", help="family name or 'all'")
        p.add_argument("--scenario", help="JSON scenario file (overrides --family)")
        p.add_argument("--base", default="formal" if name == "check" else "P2", help="'formal' or P<n>")
        p.add_argument("--dim", type=int, help="formal base dimension (required with --base formal)")
        p.add_argument("--L", type=int, help="degree l of L = O(l) (required with --base Pn)")
        p.add_argument("--S", type=int, help="degree s of S = O(s) (two-parameter families)")
        p.add_argument("--row", choices=("expected", "published"), default="expected",
                       help="pushforward row used in numeric mode")
        p.add_argument("--format", choices=("json", "markdown"), default="markdown")
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--max-dim", type=int, default=None, help="formal dimension cap (env TADPOLE_MAX_DIM)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        fams = list_families()
        if args.format == "json":
            text = json.dumps(fams, indent=2) + "\n"
        else:
            text = "".join(f"- `{f['name']}` ({', '.join(f['line_symbols'])}): {f['title']}\n" for f in fams)
        sys.stdout.write(text)
        return EXIT_OK
    try:
        if args.max_dim is None:
            args.max_dim = max_dimension()
        items = _jobs(args)
        if args.jobs > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_run, items))
        else:
            results = [_run(item) for item in items]
    except (ConfigError, TadpoleError) as exc:
        print(f"tadpole: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.format == "json":
        text = json.dumps(results if len(results) != 1 else results[0], indent=2) + "\n"
    else:
        text = "\n".join(_markdown(r) for r in results)
    _emit(text, args.out)
    return EXIT_OK if all(r["verdict"] == "pass" for r in results) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
