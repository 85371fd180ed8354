"""Command-line front end.

Exit codes: 0 success, 1 a verification or reproduction failed, 2 bad usage.
Everything on stdout is deterministic - rerunning a command, at any
FLAGMN_THREADS setting, emits identical bytes.  Timings go to stderr.
"""

from __future__ import annotations

import argparse
import difflib
import json
import sys
from typing import Sequence

from . import verification
from .kbruhat import chains, interval
from .operators import act, classify, parse_word, word_diagram, word_to_dot
from .perm import identity, parse_permutation
from .qbruhat import QElement, parse_qelement, q_chains, q_interval
from .qschubert import (
    QLRQuery,
    fgp_product,
    q_hook_multiply,
    q_monk_multiply,
    q_powersum_multiply,
    q_schur_multiply,
    quantum_lr,
)
from .schubert import (
    Expansion,
    hook_multiply_chains,
    hook_multiply_minimal,
    monk_multiply,
    powersum_multiply,
    schur_multiply,
)

__all__ = ["main"]


class UsageError(ValueError):
    pass


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}") from None
    if not parts:
        raise UsageError(f"empty {what} {text!r}")
    return parts


def _parse_shape(text: str) -> tuple[int, ...]:
    shape = _parse_ints(text, "partition")
    if any(p < 1 for p in shape) or any(
        a < b for a, b in zip(shape, shape[1:])
    ):
        raise UsageError(f"{text!r} is not a partition")
    return shape


def _expansion_json(exp: Expansion) -> str:
    return json.dumps(
        {
            "terms": [
                {"coeff": c, "q": list(x.alpha), "w": str(x.w)}
                for x, c in exp.items()
            ]
        },
        indent=2,
    )


def _emit_expansion(exp: Expansion, fmt: str) -> None:
    if fmt == "json":
        print(_expansion_json(exp))
    else:
        print(exp.text())


# -- product ---------------------------------------------------------------------


def _product_shape(args) -> tuple[str, object]:
    given = [
        name
        for name, value in (
            ("--class", args.monk_class),
            ("--hook", args.hook),
            ("--powersum", args.powersum),
            ("--lambda", args.shape),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise UsageError(
            "give exactly one of --class, --hook, --powersum, --lambda"
        )
    if args.monk_class is not None:
        text = args.monk_class
        if not text.startswith("s") or not text[1:].isdigit():
            raise UsageError(f"--class wants s<m>, got {text!r}")
        m = int(text[1:])
        if m < 1:
            raise UsageError(f"--class wants s<m> with m >= 1, got {text!r}")
        return "class", m
    if args.hook is not None:
        hook = _parse_ints(args.hook, "--hook")
        if len(hook) != 2 or min(hook) < 1:
            raise UsageError(f"--hook wants a,b with a,b >= 1, got {args.hook!r}")
        return "hook", hook
    if args.powersum is not None:
        if args.powersum < 1:
            raise UsageError("--powersum wants r >= 1")
        return "powersum", args.powersum
    return "lambda", _parse_shape(args.shape)


def _product_ambient(args, kind: str, data) -> int:
    if args.n is not None:
        return args.n
    if args.u != "e":
        return len(args.u)
    k = args.k
    if kind == "class":
        return k + data
    if kind == "hook":
        return k + data[1]
    if kind == "powersum":
        return k + data
    return k + data[0]


def cmd_product(args) -> int:
    kind, data = _product_shape(args)
    n = _product_ambient(args, kind, data)
    if n < 2:
        raise UsageError(f"ambient S_{n} is too small")
    u = identity(n) if args.u == "e" else parse_permutation(args.u).extend(n)
    k = args.k
    if not 1 <= k <= n - 1:
        raise UsageError(f"k must be in 1..{n - 1}, got {k}")
    basis = args.basis
    if kind == "class":
        kind, data = "hook", (1, data)
    if kind == "hook":
        a, b = data
        if args.quantum:
            if basis in (None, "hook-theorem"):
                exp = (
                    q_monk_multiply(u, k)
                    if (a, b) == (1, 1)
                    else q_hook_multiply(u, a, b, k)
                )
            elif basis == "fgp-oracle":
                exp = fgp_product(u, (b,) + (1,) * (a - 1), k)
            elif basis == "ll-reduce":
                lam = (b,) + (1,) * (a - 1)
                support = q_hook_multiply(u, a, b, k)
                exp = Expansion(
                    n,
                    {
                        z: quantum_lr(QLRQuery(u, z.w, z.alpha, lam, k))
                        for z, _c in support.items()
                    },
                )
            else:
                raise UsageError(f"--basis {basis} is a classical route")
        else:
            if basis in (None, "chains"):
                exp = (
                    monk_multiply(u, k)
                    if (a, b) == (1, 1)
                    else hook_multiply_chains(u, a, b, k)
                )
            elif basis == "minimal":
                exp = hook_multiply_minimal(u, a, b, k)
            else:
                raise UsageError(f"--basis {basis} needs --quantum")
    elif kind == "powersum":
        if basis is not None:
            raise UsageError("--powersum has a single route; drop --basis")
        exp = (
            q_powersum_multiply(u, data, k)
            if args.quantum
            else powersum_multiply(u, data, k)
        )
    else:
        if args.quantum:
            if basis in (None, "hook-theorem"):
                exp = q_schur_multiply(u, data, k)
            elif basis == "fgp-oracle":
                exp = fgp_product(u, data, k)
            else:
                raise UsageError(f"--basis {basis} does not apply to --lambda")
        else:
            if basis is not None:
                raise UsageError("classical --lambda has a single route")
            exp = schur_multiply(u, data, k)
    _emit_expansion(exp, args.format)
    return 0


# -- intervals and chains ----------------------------------------------------------


def _endpoints(args):
    u = parse_permutation(args.u)
    n = u.n
    target = parse_qelement(args.target, n)
    if not 1 <= args.k <= n - 1:
        raise UsageError(f"k must be in 1..{n - 1}, got {args.k}")
    return u, target, args.k


def cmd_interval(args) -> int:
    u, target, k = _endpoints(args)
    if target.is_classical() and not args.quantum:
        poset = interval(u, target.w, k)
    else:
        poset = q_interval(u, target, k)
    if args.format == "dot":
        print(poset.to_dot())
    elif args.format == "json":
        print(poset.to_json())
    else:
        print(f"{len(poset)} nodes, {len(poset.edges)} edges")
        levels = poset.levels()
        for r in sorted(levels):
            row = " ".join(sorted(str(x) for x in levels[r]))
            print(f"rank {r}: {row}")
        for x, lab, y in sorted(
            poset.edges, key=lambda e: (str(e[0]), e[1], str(e[2]))
        ):
            print(f"{x} -[{lab}]-> {y}")
    return 0


def cmd_chains(args) -> int:
    u, target, k = _endpoints(args)
    if target.is_classical() and not args.quantum:
        found = list(chains(u, target.w, k))
    else:
        found = list(q_chains(u, target, k))
    found.sort(key=lambda ch: ch.labels)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "chains": [
                        {
                            "labels": list(ch.labels),
                            "elements": [str(x) for x in ch.elements],
                        }
                        for ch in found
                    ]
                },
                indent=2,
            )
        )
    else:
        for ch in found:
            labels = ",".join(str(lab) for lab in ch.labels)
            walk = " -> ".join(str(x) for x in ch.elements)
            print(f"{labels}: {walk}")
        print(f"{len(found)} chains")
    return 0


# -- operator words -----------------------------------------------------------------


def cmd_operators(args) -> int:
    word = parse_word(args.word, args.n)
    if args.format == "dot":
        print(word_to_dot(word))
        return 0
    action = None
    if args.u is not None:
        if args.k is None:
            raise UsageError("--u needs --k")
        u = parse_permutation(args.u).extend(args.n)
        result = act(word, u, args.k)
        action = "0" if result is None else str(result)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": str(word),
                    "letters": [list(l) for l in word.letters],
                    "n": word.n,
                    "class": classify(word),
                    "action": action,
                },
                indent=2,
            )
        )
    else:
        print(word_diagram(word))
        print(f"class: {classify(word)}")
        if action is not None:
            print(f"action at k={args.k} on {args.u}: {action}")
    return 0


# -- verify and reproduce -------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        names = verification.resolve_names(args.checks or ["all"])
    except ValueError as e:
        raise UsageError(str(e)) from None
    failed = 0
    for name in names:
        result = verification.CHECKS[name](n=args.n)
        status = "ok" if result.ok else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
        print(f"  {result.name}: {result.seconds:.2f}s", file=sys.stderr)
        failed += 0 if result.ok else 1
    if failed:
        print(f"{failed} of {len(names)} checks FAILED")
        return 1
    print(f"all {len(names)} checks passed")
    return 0


def cmd_reproduce(args) -> int:
    try:
        text = verification.reproduce_text(args.example)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(text, end="")
    expected = verification.fixture_text(args.example)
    if text == expected:
        print("matches the bundled expectation", file=sys.stderr)
        return 0
    diff = difflib.unified_diff(
        expected.splitlines(keepends=True),
        text.splitlines(keepends=True),
        fromfile=f"bundled/{args.example}",
        tofile="recomputed",
    )
    sys.stderr.writelines(diff)
    return 1


# -- parser ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagmn",
        description="Schubert calculus on the quantum Bruhat order",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="expand a product of Schubert classes")
    p.add_argument("--u", required=True, help="one-line permutation, or e")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="ambient size (inferred by default)")
    p.add_argument("--quantum", action="store_true")
    p.add_argument("--class", dest="monk_class", help="s<m>: a one-row shape")
    p.add_argument("--hook", help="a,b: hook with a rows, arm b")
    p.add_argument("--powersum", type=int, help="power sum degree")
    p.add_argument("--lambda", dest="shape", help="partition p1,p2,...")
    p.add_argument(
        "--basis",
        choices=["hook-theorem", "ll-reduce", "fgp-oracle", "chains", "minimal"],
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_product)

    for name, fn, helptext in (
        ("interval", cmd_interval, "print a k-Bruhat interval"),
        ("chains", cmd_chains, "list the saturated chains of an interval"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--u", required=True)
        p.add_argument("--target", required=True, help="permutation or q^alpha w")
        p.add_argument("--k", type=int, required=True)
        p.add_argument(
            "--quantum",
            action="store_true",
            help="stay in S_n[q] even for a classical target",
        )
        if name == "interval":
            p.add_argument(
                "--format", choices=["text", "json", "dot"], default="text"
            )
        else:
            p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(fn=fn)

    p = sub.add_parser("operators", help="inspect a word in the v(a,b) operators")
    p.add_argument("--word", required=True, help='e.g. "v(4,1) v(1,2)"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", help="act on this permutation")
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(fn=cmd_operators)

    p = sub.add_parser("verify", help="rerun the acceptance sweeps")
    p.add_argument(
        "checks",
        nargs="*",
        help=f"names from {sorted(verification.CHECKS)} or groups"
        f" {sorted(verification.GROUPS)} (default: all)",
    )
    p.add_argument("--n", type=int, default=5, help="ambient for the S_n sweeps")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser(
        "reproduce", help="recompute a worked example and diff it"
    )
    p.add_argument("example", choices=sorted(verification.REPRODUCIBLES))
    p.set_defaults(fn=cmd_reproduce)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
