"""Command-line interface: ``fincat <command> ...`` or ``python3 -m fincat``.

Exit codes: 0 success or consistent, 1 negative result (not-applicable
counts as negative only with ``--strict``), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import FinCatError, validate_category
from .corpus import GENERATORS, CorpusSpec, GeneratorBoundsError, default_corpus
from .harness import THEOREMS, run_full_suite, verify
from .limits import LimitAbsent, build_limit_cache, delta_functors, is_distributive, is_semi_additive, plus_times_functors
from .reports import Verdict
from .search import search_natural_transformations
from .serialize import DocumentError, dumps_category, load_category, save_category

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, ensure_ascii=False, indent=2, default=str))
    else:
        print(text)


def _load(path: str, validate: bool = True):
    try:
        return load_category(path, validate)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_validate(args) -> int:
    try:
        C = _load(args.file, validate=False)
    except DocumentError as exc:
        if exc.line is not None:
            raise
        _emit(args, {"ok": False, "failures": [str(exc)]}, f"invalid: {exc}")
        return EXIT_NEGATIVE
    rep = validate_category(C)
    text = "valid" if rep.ok else "invalid\n" + "\n".join(f"  {law} at {list(w)}" for law, w in rep.failures)
    if rep.ok:
        text += f" ({C.object_count} objects, {C.n_morphisms} morphisms)"
    _emit(args, rep.to_dict(), text)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_limits(args) -> int:
    C = _load(args.file)
    cache = build_limit_cache(C)
    lab = C.object_label
    objs = list(C.objects)

    def table(get):
        return [[get(x, y) for y in objs] for x in objs]

    prod = table(lambda x, y: cache.products[x, y].apex if cache.has_product(x, y) else None)
    coprod = table(lambda x, y: cache.coproducts[x, y].apex if cache.has_coproduct(x, y) else None)
    data = {"terminal": cache.terminal, "initial": cache.initial, "products": prod, "coproducts": coprod}

    def render(name, rows):
        width = max([len(lab(x)) for x in objs] + [1])
        cell = lambda v: ("-" if v is None else lab(v)).rjust(width)  # noqa: E731
        lines = [f"{name}:", " " * (width + 1) + " ".join(lab(y).rjust(width) for y in objs)]
        lines += [lab(x).rjust(width) + " " + " ".join(cell(v) for v in row) for x, row in zip(objs, rows)]
        return lines

    lines = [
        f"terminal: {'-' if cache.terminal is None else lab(cache.terminal)}",
        f"initial: {'-' if cache.initial is None else lab(cache.initial)}",
    ]
    lines += render("products", prod) + render("coproducts", coprod)
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _decision(args, decide) -> int:
    C = _load(args.file)
    rep = decide(C, args.scope)
    lines = [f"{rep.property} ({rep.scope}): {'holds' if rep.holds else 'fails'}"]
    if rep.witness is not None:
        lines.append("witness: " + ", ".join(C.object_label(x) for x in rep.witness))
    if rep.reason:
        lines.append(f"reason: {rep.reason}")
    lines.append(f"checked: {rep.checked}")
    if rep.skipped:
        lines.append("skipped: " + " ".join("(" + ",".join(map(str, t)) + ")" for t in rep.skipped))
    _emit(args, rep.to_dict(), "\n".join(lines))
    return EXIT_OK if rep.holds else EXIT_NEGATIVE


def cmd_check_distributive(args) -> int:
    return _decision(args, is_distributive)


def cmd_check_semiadditive(args) -> int:
    return _decision(args, is_semi_additive)


def cmd_search_natiso(args) -> int:
    C = _load(args.file)
    cache = build_limit_cache(C)
    try:
        F, G = (delta_functors if args.lhs == "delta" else plus_times_functors)(C, cache)
    except LimitAbsent as exc:
        _emit(args, {"found": None, "error": str(exc)}, f"not applicable: {exc}")
        return EXIT_NEGATIVE
    res = search_natural_transformations(F, G, iso_only=True, limit=args.limit, max_results=1)
    found = res.transformations[0] if res.transformations else None
    data = {
        "found": list(found.components) if found else None,
        "truncated": res.truncated,
        "nodes": res.nodes,
    }
    if found is not None:
        P = F.source
        lines = ["natural isomorphism found:"]
        for u in P.objects:
            lines.append(f"  {P.object_label(u)}: {C.morphism_label(found.components[u])}")
    elif res.truncated:
        lines = [f"undecided: search truncated after {res.nodes} nodes"]
    else:
        lines = [f"absent: no natural isomorphism ({res.nodes} nodes)"]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if found is not None else EXIT_NEGATIVE


def _verdict_exit(verdict: Verdict, strict: bool) -> int:
    if verdict is Verdict.INCONSISTENT:
        return EXIT_NEGATIVE
    if verdict is Verdict.NOT_APPLICABLE and strict:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    C = _load(args.file)
    report = verify(C, args.theorem, args.limit)
    _emit(args, report.to_dict(), report.render())
    return _verdict_exit(report.verdict, args.strict)


def _parse_gen_params(family: str, raw: Sequence[str]) -> dict:
    if family not in GENERATORS:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(sorted(GENERATORS))}")
    argnames = GENERATORS[family][1]
    params: dict = {}
    positional = [p for p in raw if "=" not in p]
    keyed = dict(p.split("=", 1) for p in raw if "=" in p)
    if len(positional) > len(argnames):
        raise UsageError(f"{family} takes parameters {argnames}, got {raw}")
    params.update(zip(argnames, positional))
    params.update(keyed)
    unknown = set(params) - set(argnames)
    if unknown:
        raise UsageError(f"unknown parameter(s) {sorted(unknown)} for {family}")
    missing = [a for a in argnames if a not in params]
    if missing:
        raise UsageError(f"{family} needs parameter(s) {missing}")
    out: dict = {}
    for k, v in params.items():
        if k == "covers":
            try:
                out[k] = [tuple(int(t) for t in c.split("<")) for c in v.split(",") if c]
            except ValueError:
                raise UsageError("covers look like 0<1,1<2") from None
        else:
            try:
                out[k] = int(v)
            except ValueError:
                raise UsageError(f"parameter {k} must be an integer, got {v!r}") from None
    return out


def cmd_gen(args) -> int:
    spec = CorpusSpec(args.family, {})
    spec.params = _parse_gen_params(spec.family, args.params)
    try:
        C = spec.build()
    except GeneratorBoundsError as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        save_category(C, args.output)
        if not args.json:
            print(f"wrote {spec.name} to {args.output} ({C.object_count} objects, {C.n_morphisms} morphisms)")
    else:
        sys.stdout.write(dumps_category(C))
    return EXIT_OK


def load_manifest(path: str) -> list[CorpusSpec]:
    """A manifest is a JSON list of ``{"family": ..., "params": {...}}`` entries.

    ``file`` entries take a ``path`` relative to the manifest.
    """
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read manifest {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"manifest parse error: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, list):
        raise DocumentError("manifest must be a JSON list")
    base = Path(path).parent
    specs = []
    for entry in doc:
        if not isinstance(entry, dict) or "family" not in entry:
            raise DocumentError(f"manifest entry {entry!r} needs a family")
        params = dict(entry.get("params", {}))
        if entry["family"] == "file":
            params["path"] = str(base / params["path"])
        specs.append(CorpusSpec(entry["family"], params))
    return specs


def cmd_suite(args) -> int:
    corpus = default_corpus() if args.corpus == "default" else load_manifest(args.corpus)
    report = run_full_suite(corpus, limit=args.limit)
    _emit(args, report.to_dict(), report.render())
    if not report.ok:
        return EXIT_NEGATIVE
    if args.strict and report.verdict_counts()[Verdict.NOT_APPLICABLE.value]:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print structured JSON instead of text")
    common.add_argument("--strict", action="store_true", help="treat not-applicable verdicts as failures")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="fincat", description="Finite category checks and theorem verification.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("validate", parents=[common], help="check the category laws of a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("limits", parents=[common], help="print terminal/initial objects and (co)product tables")
    p.add_argument("file")
    p.set_defaults(func=cmd_limits)

    for name, func, help_ in (
        ("check-distributive", cmd_check_distributive, "decide whether every canonical δ is invertible"),
        ("check-semiadditive", cmd_check_semiadditive, "decide whether every canonical α is invertible"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.add_argument("--scope", choices=["all", "existing"], default="all")
        p.set_defaults(func=func)

    p = sub.add_parser("search-natiso", parents=[common], help="search for a natural isomorphism")
    p.add_argument("file")
    p.add_argument("--lhs", choices=["delta", "plus-times"], required=True)
    p.add_argument("--limit", type=int, default=None, help="node budget")
    p.set_defaults(func=cmd_search_natiso)

    p = sub.add_parser("verify", parents=[common], help="run one theorem verifier")
    p.add_argument("file")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--limit", type=int, default=None, help="node budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate a corpus category")
    p.add_argument("family")
    p.add_argument("params", nargs="*", help="parameters, positional or key=value")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("suite", parents=[common], help="run every verifier over a corpus")
    p.add_argument("--corpus", default="default", help="'default' or a manifest file")
    p.add_argument("--limit", type=int, default=None, help="node budget")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FinCatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
