"""Command-line front end.

Every subcommand accepts ``--catalog KEY`` (with ``--param NAME=VALUE``) or
``--file PATH`` for the braiding matrix, and ``--json`` for machine output.
Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

from . import __version__
from .catalog import default_suite, dump_matrix, load_matrix_file, resolve
from .characters import (
    ch_kernel_phi,
    ch_negative_part,
    ch_simple_1atypical,
    ch_simple_typical,
    ch_twisted_verma,
    ch_verma,
)
from .dotaction import coroot_pairing, match_down_to_dot, super_linkage_report
from .errors import EngineError, NoSuchM, ParseError
from .groupoid import hom_into, longest_element, morphism_from_word, orbit
from .lattice import Weight, format_weight, parse_weight
from .linkage import (
    TorusCharacter,
    atypicality,
    default_window,
    down,
    linkage_classes,
    n_beta,
    strongly_linked_chains,
    t_beta,
)
from .rootsystem import is_standard_type, root_system
from .verify import run_suite

SCHEMA = "qlinkage/1"

__all__ = ["JobSpec", "run", "main", "parse_matrix", "build_parser"]


class UsageError(Exception):
    """Bad command-line input; mapped to exit code 2."""


@dataclass
class JobSpec:
    command: str
    catalog: Optional[str] = None
    file: Optional[str] = None
    params: Dict[str, str] = field(default_factory=dict)
    pi: Optional[List[str]] = None
    mu: Optional[str] = None
    window: Optional[str] = None
    seed: int = 0
    json: bool = False
    options: Dict[str, object] = field(default_factory=dict)

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("json")
        return {k: v for k, v in d.items() if v not in (None, {}, [])}


def parse_matrix(source: str, params: Optional[Dict[str, str]] = None, is_file: bool = False):
    """Resolve a catalog key (or a TOML/JSON file path) to a braiding matrix."""
    if is_file:
        return load_matrix_file(source)
    return resolve(source, params)


def _w(v: Weight) -> List[int]:
    return list(v)


def _window(spec: JobSpec, rs, mu: Weight):
    if not spec.window:
        return default_window(rs, mu)
    lo, sep, hi = spec.window.partition(":")
    if not sep:
        raise UsageError(f"--window must look like LOW:HIGH with comma-separated weights, got {spec.window!r}")
    try:
        return parse_weight(lo, rs.theta), parse_weight(hi, rs.theta)
    except ParseError as e:
        raise UsageError(f"--window: {e}") from None


def _pi(spec: JobSpec, theta: int) -> TorusCharacter:
    if not spec.pi:
        return TorusCharacter.trivial(theta)
    try:
        return TorusCharacter.parse(spec.pi, theta)
    except ParseError as e:
        raise UsageError(f"--pi: {e}") from None


def _mu(spec: JobSpec, theta: int, text: Optional[str] = None) -> Weight:
    text = spec.mu if text is None else text
    if text is None:
        return (0,) * theta
    try:
        return parse_weight(text, theta)
    except ParseError as e:
        raise UsageError(f"--mu: {e}") from None


def _root(text, rs) -> Weight:
    try:
        beta = parse_weight(text, rs.theta)
    except ParseError as e:
        raise UsageError(f"--beta: {e}") from None
    if beta not in rs.b:
        raise UsageError(f"--beta {text} is not a positive root; roots are {[format_weight(r) for r in rs.positive_roots]}")
    return beta


def _load(spec: JobSpec):
    if spec.file and spec.catalog:
        raise UsageError("give either --catalog or --file, not both")
    if spec.file:
        return parse_matrix(spec.file, is_file=True)
    if not spec.catalog:
        raise UsageError("a matrix is required: use --catalog KEY or --file PATH")
    return parse_matrix(spec.catalog, spec.params)


def _cmd_orbit(spec, q):
    g = orbit(q)
    objs = []
    for k, p in enumerate(g.objects):
        w0 = longest_element(g, k)
        objs.append(
            {
                "index": k,
                "entries": p.to_strings(),
                "hom_into_size": len(hom_into(g, k)),
                "longest_word": [i + 1 for i in w0.word],
            }
        )
    return {
        "word_convention": "target-anchored; generators 1-based; BFS shortest word with lexicographic tie-break",
        "objects": objs,
        "edges": [{"from": a, "generator": i + 1, "to": b} for a, i, b in g.edges],
    }


def _cmd_roots(spec, q):
    g = orbit(q)
    k = int(spec.options.get("object") or 0)
    if not 0 <= k < len(g):
        raise UsageError(f"--object must lie in 0..{len(g) - 1}")
    rs = root_system(g, k)
    return {
        "object": k,
        "entries": g.objects[k].to_strings(),
        "positive_roots": [_w(r) for r in rs.positive_roots],
        "b": [rs.b[r] for r in rs.positive_roots],
        "beta_top": _w(rs.beta_top),
        "two_varrho": _w(rs.beta_top),
        "cartan_roots": [_w(r) for r in rs.cartan_roots],
        "odd_roots": [_w(r) for r in rs.odd_roots],
        "standard_type": is_standard_type(g),
        "w0_word": [i + 1 for i in rs.w0.word],
        "dim_negative_part": rs.dimension(),
    }


def _chain_json(chain):
    return [{"beta": _w(b), "to": _w(lam)} for b, lam in chain]


def _cmd_linkage(spec, q):
    g = orbit(q)
    rs = root_system(g)
    pi = _pi(spec, q.theta)
    mu = _mu(spec, q.theta)
    degree, zeros = atypicality(q, rs, pi, mu)
    chains = strongly_linked_chains(q, rs, pi, mu)
    members = sorted(chains, reverse=True)
    return {
        "mu": _w(mu),
        "pi": pi.to_strings(),
        "roots": [
            {
                "beta": _w(r),
                "b": rs.b[r],
                "n_beta": n_beta(q, rs, pi, mu, r),
                "t_beta": t_beta(q, rs, pi, mu, r),
                "down": _w(down(q, rs, pi, r, mu)),
            }
            for r in rs.positive_roots
        ],
        "atypicality_degree": degree,
        "zero_roots": [_w(r) for r in zeros],
        "typical": degree == 0,
        "verma_is_simple": degree == 0,
        "strongly_linked_set": [_w(x) for x in members],
        "chains": [{"weight": _w(x), "chain": _chain_json(chains[x])} for x in members],
        "window": {"low": _w(tuple(m - b for m, b in zip(mu, rs.beta_top))), "high": _w(mu)},
        "note": "members are necessary candidates for composition factors of Z(mu); no multiplicity is claimed",
    }


def _cmd_blocks(spec, q):
    g = orbit(q)
    rs = root_system(g)
    pi = _pi(spec, q.theta)
    mu = _mu(spec, q.theta)
    low, high = _window(spec, rs, mu)
    points = 1
    for a, b in zip(low, high):
        points *= max(0, b - a + 1)
    if points > 2_000_000:
        raise UsageError(f"window has {points} points; the limit is 2000000")
    classes = linkage_classes(q, rs, pi, (low, high))
    return {
        "window": {"low": _w(low), "high": _w(high)},
        "pi": pi.to_strings(),
        "class_count": len(classes),
        "classes": [[_w(x) for x in c] for c in classes],
    }


def _word(text: Optional[str], theta: int):
    if not text:
        return ()
    try:
        word = tuple(int(x) - 1 for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--word must be comma-separated generator numbers, got {text!r}") from None
    if any(not 0 <= i < theta for i in word):
        raise UsageError(f"--word generators must lie in 1..{theta}")
    return word


def _cmd_character(spec, q):
    g = orbit(q)
    rs = root_system(g)
    kind = spec.options.get("kind") or "verma"
    mu = _mu(spec, q.theta)
    pi = _pi(spec, q.theta)
    extra = {}
    if kind == "negative":
        ch = ch_negative_part(q, rs)
    elif kind == "verma":
        ch = ch_verma(q, rs, mu)
    elif kind == "twisted":
        w = morphism_from_word(g, 0, _word(spec.options.get("word"), q.theta))
        ch = ch_twisted_verma(q, rs, w, mu)
        extra["morphism_source"] = w.source
    elif kind == "simple":
        degree, _ = atypicality(q, rs, pi, mu)
        ch = ch_simple_typical(q, rs, pi, mu) if degree == 0 else ch_simple_1atypical(q, rs, pi, mu)
        extra["atypicality_degree"] = degree
    elif kind == "kernel":
        w = morphism_from_word(g, 0, _word(spec.options.get("word"), q.theta))
        if spec.options.get("beta") is None or spec.options.get("t") is None:
            raise UsageError("--kind kernel needs --beta and --t")
        ch = ch_kernel_phi(q, rs, w, _root(spec.options["beta"], rs), int(spec.options["t"]), mu)
    else:
        raise UsageError(f"unknown --kind {kind!r}")
    return {"kind": kind, "mu": _w(mu), **extra, "dimension": ch.dimension(), "lines": ch.lines(), "terms": ch.to_json()}


def _sample_weights(rng: random.Random, theta: int, count: int, radius: int = 10):
    return [tuple(rng.randint(-radius, radius) for _ in range(theta)) for _ in range(count)]


def _cmd_dot_check(spec, q):
    g = orbit(q)
    rs = root_system(g)
    pi = TorusCharacter.trivial(q.theta)
    rng = random.Random(spec.seed)
    samples = int(spec.options.get("samples") or 50)
    mus = [_mu(spec, q.theta)] if spec.mu else _sample_weights(rng, q.theta, samples)
    report = {"standard_type": is_standard_type(g), "cartan_roots": [], "failures": []}
    for beta in rs.cartan_roots:
        passed = 0
        for mu in mus:
            try:
                match_down_to_dot(q, g, rs, pi, beta, mu)
                passed += 1
            except NoSuchM as e:
                report["failures"].append({"check": "down_equals_dot", "beta": _w(beta), "mu": _w(mu), "error": str(e)})
        report["cartan_roots"].append({"beta": _w(beta), "passed": passed, "total": len(mus)})
    odd = []
    for beta in rs.odd_roots:
        fails = 0
        for mu in mus:
            try:
                match_down_to_dot(q, g, rs, pi, beta, mu, presented=True)
            except NoSuchM:
                fails += 1
        odd.append({"beta": _w(beta), "no_m_found": fails, "total": len(mus)})
    report["odd_roots"] = odd
    supers = []
    for mu in [mus[0]] + [tuple(1 if k == i else 0 for k in range(q.theta)) for i in range(q.theta)]:
        r = super_linkage_report(q, g, rs, pi, mu, _window(spec, rs, mu))
        supers.append({"mu": _w(mu), "ok": r.ok, "class_size": len(r.linkage_class), "counterexamples": [_w(x) for x in r.counterexamples]})
        if not r.ok:
            report["failures"].append({"check": "super_linkage", "mu": _w(mu)})
    report["super_linkage"] = supers
    report["passed"] = not report["failures"]
    return report


def _cmd_verify(spec, q_or_none):
    if q_or_none is None:
        suite = default_suite()
    else:
        suite = {spec.catalog or spec.file: q_or_none}
    return run_suite(suite, seed=spec.seed, samples=int(spec.options.get("samples") or 20))


COMMANDS = {
    "orbit": _cmd_orbit,
    "roots": _cmd_roots,
    "linkage": _cmd_linkage,
    "blocks": _cmd_blocks,
    "character": _cmd_character,
    "dot-check": _cmd_dot_check,
    "verify": _cmd_verify,
}


def _render_text(command: str, result: dict) -> str:
    if command == "character":
        head = f"{result['kind']} character at mu = ({format_weight(result['mu'])}), dimension {result['dimension']}"
        return "\n".join([head] + result["lines"])
    if command == "verify":
        width = max((len(c["name"]) for c in result["checks"]), default=0)
        rows = [f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']:<{width}}  {c.get('detail', '')}".rstrip() for c in result["checks"]]
        rows.append(f"{result['passed_count']}/{len(result['checks'])} checks passed")
        return "\n".join(rows)
    lines = []
    width = max(len(k) for k in result) if result else 0
    for k, v in result.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(x)}" for x in v)
        else:
            lines.append(f"{k:<{width}}  {json.dumps(v) if not isinstance(v, str) else v}")
    return "\n".join(lines)


def run(spec: JobSpec):
    """Execute a job; returns ``(exit_code, stdout_text, stderr_text)``."""
    try:
        if spec.command == "verify" and (spec.catalog == "all" or (not spec.catalog and not spec.file)):
            q = None
        else:
            q = _load(spec)
        result = COMMANDS[spec.command](spec, q)
    except UsageError as e:
        return 2, "", f"usage error: {e}\n"
    except ParseError as e:
        return 2, "", f"ParseError: {e}\n"
    except EngineError as e:
        return 1, "", f"{type(e).__name__}: {e}\n"
    code = 0
    if spec.command in ("verify", "dot-check") and not result.get("passed", True):
        code = 1
    if spec.json:
        out = {"schema": SCHEMA, "version": __version__, "job": spec.echo(), "result": result}
        text = json.dumps(out, indent=2) + "\n"
    else:
        text = _render_text(spec.command, result) + "\n"
    return code, text, ""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--catalog", help="catalog key, e.g. super-A11, cartan-A2, cartan, or 'all' for verify")
    src.add_argument("--file", help="TOML or JSON matrix file with 'theta' and 'entries'")
    common.add_argument("--param", action="append", default=[], metavar="NAME=VALUE", help="catalog parameter, e.g. N=4")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    common.add_argument("--window", help="box LOW:HIGH, e.g. -8,-8:4,4")
    common.add_argument("--pi", help="2*theta exponents pi(K_1..K_theta),pi(L_1..L_theta), comma separated")
    common.add_argument("--mu", help="weight, comma separated")

    parser = argparse.ArgumentParser(prog="qlinkage", description="Weyl groupoids, characters and linkage for diagonal braidings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("orbit", parents=[common], help="orbit objects, edges, hom-set sizes, longest words")
    p = sub.add_parser("roots", parents=[common], help="positive roots, bounds, beta_top, Cartan/odd split")
    p.add_argument("--object", type=int, default=0, help="orbit object index (BFS order)")
    sub.add_parser("linkage", parents=[common], help="n_beta, down-steps, strongly linked set, atypicality")
    sub.add_parser("blocks", parents=[common], help="linkage classes inside a window")
    p = sub.add_parser("character", parents=[common], help="expanded characters")
    p.add_argument("--kind", choices=["negative", "verma", "twisted", "simple", "kernel"], default="verma")
    p.add_argument("--word", help="target-anchored word for twisted/kernel, 1-based generators")
    p.add_argument("--beta", help="positive root for --kind kernel")
    p.add_argument("--t", type=int, help="t for --kind kernel")
    p = sub.add_parser("dot-check", parents=[common], help="compare down-steps with the dot action")
    p.add_argument("--samples", type=int, default=50)
    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("--samples", type=int, default=20)
    return parser


def _params(items: Sequence[str]) -> Dict[str, str]:
    out = {}
    for it in items:
        k, sep, v = it.partition("=")
        if not sep or not k:
            raise UsageError(f"--param expects NAME=VALUE, got {it!r}")
        out[k.strip()] = v.strip()
    return out


def spec_from_args(ns: argparse.Namespace) -> JobSpec:
    options = {k: getattr(ns, k) for k in ("object", "kind", "word", "beta", "t", "samples") if getattr(ns, k, None) is not None}
    return JobSpec(
        command=ns.command,
        catalog=ns.catalog,
        file=ns.file,
        params=_params(ns.param),
        pi=[x.strip() for x in ns.pi.split(",")] if ns.pi else None,
        mu=ns.mu,
        window=ns.window,
        seed=ns.seed,
        json=ns.json,
        options=options,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        spec = spec_from_args(ns)
    except UsageError as e:
        parser.error(str(e))
    code, out, err = run(spec)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
