"""Command line front end.

Every subcommand wraps one library operation and emits an output document
``{"command", "inputs", "result", "data"}``: ``result`` is the human-readable
rendering (a string, a list of strings, or a flat map of them) and ``data``
holds the exact values in the tagged JSON encoding of ``serialize``.  Text
mode prints ``result`` only.

Exit status: 0 on success, 1 when a valid request violates a mathematical
precondition, 2 when the input cannot be parsed.

Syntax notes:
  words        E, F with optional ^a (power) or (a) (divided power): EF, E^2F, E(2)F(3), 1
  partitions   comma separated, weakly decreasing: 2,1   (empty partition: 0)
  c-polynomial c1^4 - 3c1^2*c2 + c2^2
  nh-expr      x1..xa (dots) and d1..d(a-1) (divided differences): x1*d1 - d1*x2
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bubbles, cyclo, grasscoh, nilhecke, qscalar, symfunc, udot
from .parsing import ParseError, parse_cpoly, parse_nh, parse_partition
from .serialize import dumps, encode


class UsageError(Exception):
    """Raised for unparsable input; maps to exit status 2."""


def max_strands():
    raw = os.environ.get("CATSL2_MAX_STRANDS", str(nilhecke.DEFAULT_MAX_STRANDS))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CATSL2_MAX_STRANDS must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("CATSL2_MAX_STRANDS must be positive")
    return value


def _word(text, n):
    try:
        return udot.word(text, n)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse(fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        raise UsageError(str(exc))


# --------------------------------------------------------------------------
# handlers return (inputs, result, data)

def cmd_qint(args):
    v = qscalar.quantum_integer(args.n)
    return {"n": args.n}, str(v), v


def cmd_qbinom(args):
    if args.t == "balanced":
        if not 0 <= args.k <= args.N:
            raise ValueError(f"need 0 <= k <= N, got N={args.N}, k={args.k}")
        v = qscalar.quantum_binomial(args.N, args.k)
    else:
        v = qscalar.gauss_binomial(args.N, args.k, args.t)
    return {"N": args.N, "k": args.k, "t": args.t}, str(v), v


def cmd_semilinear(args):
    x = _word(args.left, args.weight)
    y = _word(args.right, args.weight)
    v = udot.semilinear(x, y)
    return {"left": args.left, "right": args.right, "weight": args.weight}, str(v), v


def cmd_tau(args):
    x = _word(args.word, args.weight)
    v = udot.tau_inv(x) if args.inverse else udot.tau(x)
    return {"word": args.word, "weight": args.weight, "inverse": args.inverse}, str(v), v


def cmd_schur(args):
    lam = _parse(parse_partition, args.partition)
    v = symfunc.schur_jacobi_trudi(lam, args.basis)
    return {"partition": list(lam), "basis": args.basis}, str(v), v


def cmd_h_in_e(args):
    if args.r < 0:
        raise ValueError("r must be nonnegative")
    v = symfunc.h_in_e(args.r)
    return {"r": args.r}, str(v), v


def cmd_grass_ideal(args):
    gens = grasscoh.ideal_generators(args.k, args.N).generators
    return {"k": args.k, "N": args.N}, [str(g) for g in gens], gens


def cmd_grass_reduce(args):
    grasscoh._check_range(args.k, args.N)
    f = _parse(parse_cpoly, args.poly, args.k)
    v = grasscoh.reduce_to_schur(f, args.k, args.N)
    return {"poly": args.poly, "k": args.k, "N": args.N}, str(v), v


def cmd_grass_gdim(args):
    v = grasscoh.graded_dimension_gr(args.k, args.N)
    return {"k": args.k, "N": args.N}, str(v), v


def cmd_flag_gdim(args):
    v = grasscoh.flag_graded_dimension(args.k, args.N)
    return {"k": args.k, "N": args.N}, str(v), v


def cmd_ef_check(args):
    if args.N < 0:
        raise ValueError("N must be nonnegative")
    lines = []
    data = []
    for k, n, comm in grasscoh.ef_check(args.N):
        expected = qscalar.quantum_integer(n)
        ok = comm == expected
        lines.append(f"k={k} n={n}: {comm} ({'=' if ok else '!='} [{n}])")
        data.append({"k": k, "n": n, "commutator": comm, "qint_n": expected, "equal": ok})
    return {"N": args.N}, lines, data


def cmd_theta(args):
    a = args.strands
    if a < 1:
        raise ValueError("need at least one strand")
    nilhecke.check_size(a, max_strands())
    x = _parse(parse_nh, args.elt, a)
    m = nilhecke.theta_matrix(x, max_strands())
    lines = ["[" + ", ".join(str(e) for e in row) + "]" for row in m.rows]
    return {"elt": args.elt, "strands": a}, lines, m


def cmd_nh_idempotent(args):
    nilhecke.check_size(args.a, max_strands())
    e = nilhecke.nh_e_idempotent(args.a)
    idem = e * e == e
    result = {"element": str(e), "idempotent": "true" if idem else "false"}
    return {"a": args.a}, result, {"element": e, "idempotent": idem}


def cmd_cyclo_check(args):
    a, N = args.a, args.N
    bound = max_strands()
    rep = cyclo.cyclotomic_ideal_image(a, N, bound)
    total, graded = cyclo.cyclotomic_dimension(a, N, bound)
    result = {
        "block": "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in rep.block.rows),
        "rotated_column": ", ".join(str(p) for p in rep.column_polys),
        "ideal_match": "true" if rep.ideal_match else "false",
        "other_columns_in_ideal": "true" if rep.other_columns_in_ideal else "false",
        "dimension": str(total),
        "graded_dim_matrix_ring": str(graded),
    }
    data = {
        "block": rep.block,
        "rotated_column": rep.rotated_column,
        "ideal_match": rep.ideal_match,
        "other_columns_in_ideal": rep.other_columns_in_ideal,
        "dimension": total,
        "graded_dim_matrix_ring": graded,
    }
    if args.oracle:
        oracle = cyclo.cyclotomic_oracle_dimension(a, N)
        result["graded_dim_quotient"] = str(oracle)
        result["oracle_agrees"] = "true" if oracle == graded else "false"
        data["graded_dim_quotient"] = oracle
        data["oracle_agrees"] = oracle == graded
    return {"a": a, "N": N, "oracle": args.oracle}, result, data


def cmd_fake_bubble(args):
    v = bubbles.fake_bubble_expansion(args.n, args.j)
    return {"n": args.n, "j": args.j}, str(v), v


def cmd_curl(args):
    terms = bubbles.curl_expand(args.n, args.j)
    lines = [f"{'-' if t.sign < 0 else '+'}({t.dots} dots) {t.bubble.orientation}({t.bubble.dots})" for t in terms]
    evaluated = bubbles.curl_evaluate(terms)
    ev_lines = [f"({v}) * ({d} dots)" for d, v in sorted(evaluated.items(), reverse=True)]
    result = {"terms": " ".join(lines) if lines else "0", "evaluated": " + ".join(ev_lines) if ev_lines else "0"}
    data = {
        "terms": [{"dots": t.dots, "orientation": t.bubble.orientation, "label": t.bubble.dots, "sign": t.sign} for t in terms],
        "evaluated": [{"dots": d, "coefficient": v} for d, v in sorted(evaluated.items())],
    }
    return {"n": args.n, "j": args.j}, result, data


def cmd_inf_grass(args):
    if args.max < 0:
        raise ValueError("--max must be nonnegative")
    ok = bubbles.infinite_grassmannian_check(args.n, args.max)
    return {"n": args.n, "max": args.max}, "true" if ok else "false", ok


def cmd_chi_validate(args):
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    try:
        chi = bubbles.ChiParams.from_json(text)
    except ValueError as exc:
        # malformed JSON or numbers are parse errors; zero scalars are domain errors
        if "invertible" in str(exc) or "indexed by" in str(exc):
            raise
        raise UsageError(f"bad parameter file: {exc}")
    rng = None
    if args.range:
        try:
            lo, hi = (int(s) for s in args.range.split(":"))
        except ValueError:
            raise UsageError(f"bad --range {args.range!r}; use lo:hi")
        rng = (lo, hi)
    bad = bubbles.chi_validate(chi, rng)
    lo, hi = rng if rng else chi.span()
    result = ["valid"] if not bad else [f"{v['constraint']} at n={v['weight']}: {v['detail']}" for v in bad]
    return {"file": args.file, "range": f"{lo}:{hi}"}, result, {"valid": not bad, "violations": bad}


COMMANDS = {
    "qint": cmd_qint,
    "qbinom": cmd_qbinom,
    "semilinear": cmd_semilinear,
    "tau": cmd_tau,
    "schur": cmd_schur,
    "h-in-e": cmd_h_in_e,
    "grass-ideal": cmd_grass_ideal,
    "grass-reduce": cmd_grass_reduce,
    "grass-gdim": cmd_grass_gdim,
    "flag-gdim": cmd_flag_gdim,
    "ef-check": cmd_ef_check,
    "theta": cmd_theta,
    "nh-idempotent": cmd_nh_idempotent,
    "cyclo-check": cmd_cyclo_check,
    "fake-bubble": cmd_fake_bubble,
    "curl": cmd_curl,
    "inf-grass": cmd_inf_grass,
    "chi-validate": cmd_chi_validate,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="output format (default text)")
    p = _Parser(
        prog="catsl2",
        description="Exact computations for categorified quantum sl2.",
        epilog=__doc__.split("Syntax notes:")[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format (default text)")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    s = add("qint", "quantum integer [n]")
    s.add_argument("n", type=int)
    s = add("qbinom", "Gaussian binomial")
    s.add_argument("N", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--t", choices=("q", "q2", "balanced"), default="q", help="variable: q, q2 (= q^2) or the balanced [N]!/[k]![N-k]!")
    s = add("semilinear", "semilinear form of two words acting on 1_n")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--weight", type=int, required=True)
    s = add("tau", "antilinear antiautomorphism tau (or its inverse) of a word on 1_n")
    s.add_argument("word")
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    s = add("schur", "Schur function via Jacobi-Trudi, in the e-basis")
    s.add_argument("partition")
    s.add_argument("--basis", choices=("e", "h"), default="e")
    s = add("h-in-e", "complete symmetric function h_r in the e-basis")
    s.add_argument("r", type=int)
    s = add("grass-ideal", "relations of H*(Gr(k,N)) in c_1..c_k")
    s.add_argument("k", type=int)
    s.add_argument("N", type=int)
    s = add("grass-reduce", "reduce a c-polynomial to Schur classes in the k x (N-k) box")
    s.add_argument("poly")
    s.add_argument("k", type=int)
    s.add_argument("N", type=int)
    s = add("grass-gdim", "graded dimension of H*(Gr(k,N))")
    s.add_argument("k", type=int)
    s.add_argument("N", type=int)
    s = add("flag-gdim", "graded dimension of H*(Fl(k,k+1,N)) by linear algebra")
    s.add_argument("k", type=int)
    s.add_argument("N", type=int)
    s = add("ef-check", "EF - FE on the cohomology of Grassmannians of C^N")
    s.add_argument("N", type=int)
    s = add("theta", "matrix of a nilHecke element on the staircase basis")
    s.add_argument("--elt", required=True)
    s.add_argument("--strands", type=int, required=True)
    s = add("nh-idempotent", "the idempotent e_a and its idempotency check")
    s.add_argument("a", type=int)
    s = add("cyclo-check", "cyclotomic quotient report")
    s.add_argument("a", type=int)
    s.add_argument("N", type=int)
    s.add_argument("--oracle", action="store_true", help="also run the brute-force quotient dimension")
    s = add("fake-bubble", "fake bubble of degree 2j at weight n")
    s.add_argument("n", type=int)
    s.add_argument("j", type=int)
    s = add("curl", "curl with j dots at weight n")
    s.add_argument("n", type=int)
    s.add_argument("j", type=int)
    s = add("inf-grass", "infinite Grassmannian relation up to a degree")
    s.add_argument("n", type=int)
    s.add_argument("--max", type=int, required=True)
    s = add("chi-validate", "check parameter consistency constraints")
    s.add_argument("--file", required=True)
    s.add_argument("--range", help="weights lo:hi to check (default: span of the file's keys)")
    return p


def render(result):
    if isinstance(result, str):
        return result
    if isinstance(result, list):
        return "\n".join(render(x) for x in result)
    if isinstance(result, dict):
        return "\n".join(f"{k}: {render(v)}" for k, v in sorted(result.items()))
    return str(result)


def document(command, inputs, result, data):
    return {"command": command, "inputs": encode(inputs), "result": result, "data": encode(data)}


def _glue_range(argv):
    # "--range -1:1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def parse_args(argv=None):
    return build_parser().parse_args(_glue_range(sys.argv[1:] if argv is None else list(argv)))


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = parse_args(argv)
        fmt = args.format
        inputs, result, data = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (ValueError, ZeroDivisionError, RuntimeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if fmt == "json":
        print(dumps(document(args.command, inputs, result, data)), file=stdout)
    else:
        print(render(result), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
