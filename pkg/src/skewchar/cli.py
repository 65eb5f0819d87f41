"""Command line front end: compute characters, count tableaux, render path
families and run verification sweeps.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 internal invariant failure.
"""

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .core import LaurentPoly, NonExactDivisionError, Partition, SkewShape
from .formulas import Method, character, check_preconditions
from .paths import (
    Layout,
    MalformedFamilyError,
    PathModel,
    enumerate_lgv_families,
    find_trapped_positions,
    involution_step,
    model_and_endpoints,
    path_gf,
    path_gf_by_diag_count,
    reflect_initial_segment,
    reflection_weight_exps,
    tableau_to_paths,
)
from .render import ascii_render, svg_render
from .symfunc import (
    CharacterFamily,
    DegeneratePointError,
    build_E_matrix,
    build_H_matrix,
    complete_pm,
    elementary_pm,
    weyl_eval,
)
from .tableaux import character_by_tableaux, count_tableaux, enumerate_tableaux

FAMILIES = {f.value: f for f in CharacterFamily}
METHODS = {m.value: m for m in Method}


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class ContainmentError(ValueError):
    pass


def _parse_parts(text, offset):
    if text in ("", "0"):
        return Partition()
    parts = []
    pos = offset
    for tok in text.split(","):
        if not tok or not tok.isdigit():
            raise ParseError("expected a positive integer, got %r" % tok, pos)
        v = int(tok)
        if v <= 0:
            raise ParseError("parts must be positive, got %d" % v, pos)
        if parts and parts[-1] < v:
            raise ParseError("not weakly decreasing: %d < %d" % (parts[-1], v), pos)
        parts.append(v)
        pos += len(tok) + 1
    return Partition(parts)


def parse_shape(text):
    """Parse OUTER[/INNER]; each side a comma list, empty as '' or '0'."""
    if text.count("/") > 1:
        raise ParseError("at most one '/' allowed", text.index("/", text.index("/") + 1))
    if "/" in text:
        outer_text, inner_text = text.split("/")
    else:
        outer_text, inner_text = text, ""
    outer = _parse_parts(outer_text, 0)
    inner = _parse_parts(inner_text, len(outer_text) + 1)
    if not outer.contains(inner):
        raise ContainmentError(
            "inner %r not contained in outer %r" % (inner.parts, outer.parts)
        )
    return SkewShape(outer, inner)


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _poly_json(family, shape, n, m, method, poly):
    return {
        "family": family.value,
        "lambda": list(shape.outer.parts),
        "mu": list(shape.inner.parts),
        "n": n,
        "m": m,
        "method": method.value,
        "terms": poly.to_json_terms(),
    }


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# verification suites


def _partitions_upto(size, max_len=None):
    out = [Partition()]

    def rec(rest, mx, acc):
        for p in range(min(rest, mx), 0, -1):
            if max_len is None or len(acc) < max_len:
                out.append(Partition(acc + [p]))
                rec(rest - p, p, acc + [p])

    for s in range(1, size + 1):
        rec(s, s, [])
    return out


def _four_way_cases(max_cells, n_range, m_range):
    cases = []
    for lam in _partitions_upto(max_cells):
        for mu in _partitions_upto(lam.size()):
            if not lam.contains(mu):
                continue
            if mu.length() > m_range[1]:
                continue
            for fam in (
                CharacterFamily.GL,
                CharacterFamily.SP,
                CharacterFamily.SO_ODD,
                CharacterFamily.O_EVEN,
            ):
                for n in range(n_range[0], n_range[1] + 1):
                    if fam is CharacterFamily.GL:
                        if lam.length() > n:
                            continue
                        cases.append((fam.value, lam.parts, mu.parts, n, 0))
                        continue
                    for m in range(max(m_range[0], mu.length()), m_range[1] + 1):
                        if lam.length() > n + m:
                            continue
                        cases.append((fam.value, lam.parts, mu.parts, n, m))
    return sorted(set(cases))


def _run_four_way(case):
    fam_tag, lam_parts, mu_parts, n, m = case
    fam = FAMILIES[fam_tag]
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    name = "four-way %s %s/%s n=%d m=%d" % (fam_tag, list(lam_parts), list(mu_parts), n, m)
    oracle = character(fam, lam, mu, n, m, Method.TABLEAUX)
    for meth in (Method.DUAL_JT, Method.JT, Method.GIAMBELLI):
        got = character(fam, lam, mu, n, m, meth)
        if got != oracle:
            return (name, False, "%s != tableaux" % meth.value)
    return (name, True, "")


def _run_lgv(case):
    fam_tag, lam_parts, mu_parts, n, m = case
    fam = FAMILIES[fam_tag]
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    name = "lgv %s %s/%s n=%d m=%d" % (fam_tag, list(lam_parts), list(mu_parts), n, m)
    oracle = character(fam, lam, mu, n, m, Method.TABLEAUX)
    got = character(fam, lam, mu, n, m, Method.LGV_PATHS)
    return (name, got == oracle, "" if got == oracle else "signed path sum mismatch")


def _weyl_cases(max_cells, seed):
    cases = []
    for lam in _partitions_upto(min(max_cells, 6)):
        for n in (1, 2, 3):
            if lam.length() > n:
                continue
            for fam in FAMILIES:
                cases.append((fam, lam.parts, n, seed))
    return sorted(set(cases))


def _run_weyl(case):
    fam_tag, lam_parts, n, seed = case
    fam = FAMILIES[fam_tag]
    lam = Partition(lam_parts)
    name = "weyl %s %s n=%d" % (fam_tag, list(lam_parts), n)
    ch = character(fam, lam, Partition(), n, 0, Method.DUAL_JT)
    rng = random.Random((seed, fam_tag, lam_parts, n).__repr__())
    done = 0
    while done < 20:
        pt = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) + rng.randint(0, 2) for _ in range(n)]
        try:
            w = weyl_eval(fam, lam, pt)
        except DegeneratePointError:
            continue
        v = ch.eval_at([x * x for x in pt]) if fam is CharacterFamily.SO_ODD else ch.eval_at(pt)
        if v != w:
            return (name, False, "mismatch at %r" % (pt,))
        done += 1
    return (name, True, "")


def _run_path_lemmas(bound, n_max):
    results = []
    for n in range(1, n_max + 1):
        ok = True
        detail = ""
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if (a + b) % 2 or b < a:
                    continue
                for c in range(-bound, bound + 1):
                    f = 2 * n + a + b - c
                    if f < c:
                        continue
                    e = lambda r: elementary_pm(r, n)
                    sp = PathModel(CharacterFamily.SP, Layout.COLUMNWISE, n, 0, base=a + b)
                    so = PathModel(CharacterFamily.SO_ODD, Layout.COLUMNWISE, n, 0, base=a + b)
                    oe = PathModel(CharacterFamily.O_EVEN, Layout.COLUMNWISE, n, 0, base=a + b)
                    if path_gf(sp, (a, b), (c, f)) != e(c - a) - e(c - b - 2):
                        ok, detail = False, "sp closed form at %r" % ((n, a, b, c),)
                    if path_gf(so, (a, b), (c, f)) != e(c - a) + e(c - b - 1):
                        ok, detail = False, "so closed form at %r" % ((n, a, b, c),)
                    want = e(c - a) if b == a else e(c - a) + e(c - b)
                    if path_gf(oe, (a, b), (c, f)) != want:
                        ok, detail = False, "o closed form at %r" % ((n, a, b, c),)
                    for k in (1, 2, 3):
                        got = path_gf_by_diag_count(so, (a, b), (c, f), k)
                        if got != e(c - b - k) - e(c - b - k - 2):
                            ok, detail = False, "so k=%d at %r" % (k, (n, a, b, c))
                    for k in (1, 2):
                        got = path_gf_by_diag_count(oe, (a, b), (c, f), k)
                        if b - a >= 2:
                            want = e(c - b - 2 * k + 2) - e(c - b - 2 * k - 2)
                        else:
                            want = e(c - a - 2 * k) - e(c - b - 2 * k - 2)
                        if got != want:
                            ok, detail = False, "o k=%d at %r" % (k, (n, a, b, c))
        results.append(("path-lemmas n=%d bound=%d" % (n, bound), ok, detail))
    return results


def _run_reflection(limit):
    import itertools

    results = []
    for c in range(0, limit + 1):
        for f in range(-3, limit + 1):
            if c + f > limit or f <= c - 2:
                continue
            name = "reflection (0,2)->(%d,%d)" % (c, f)
            dx, dy = c - 0, f - 2
            if dx < 0:
                continue
            touched, images = [], []
            from .paths import Path, StepKind

            for pos in itertools.combinations(range(dx + dy), dx) if dy >= 0 else ():
                steps = [StepKind.UP] * (dx + dy)
                for p in pos:
                    steps[p] = StepKind.RIGHT
                path = Path((0, 2), steps)
                if any(y == x - 2 for x, y in path.points()):
                    touched.append(path)
                    images.append(reflect_initial_segment(path, -2))
            nvars = max(1, (limit + 6) // 2 + 1)
            ok = True
            detail = ""
            for p, q in zip(touched, images):
                if reflection_weight_exps(p, nvars) != reflection_weight_exps(q, nvars):
                    ok, detail = False, "weight changed"
                if reflect_initial_segment(q, -2) != p:
                    ok, detail = False, "not an involution"
            target = set()
            if f - (-2) >= 0 and c - 4 >= 0:
                for pos in itertools.combinations(range((c - 4) + (f + 2)), c - 4):
                    steps = [StepKind.UP] * ((c - 4) + (f + 2))
                    for p in pos:
                        steps[p] = StepKind.RIGHT
                    target.add(Path((4, -2), steps))
            if set(images) != target:
                ok, detail = False, "image set mismatch"
            results.append((name, ok, detail))
    return results


def _run_eh():
    results = []
    for n in (1, 2):
        for N in (1, 2, 3, 4, 5, 6):
            for m in (0, 1, 2, 3):
                for k in (0, 1, 2):
                    for t in (-1, 0, 1, 2):
                        E = build_E_matrix(N, m, k, t, n)
                        H = build_H_matrix(N, m, k, t, n)
                        ok = True
                        for i in range(N):
                            for j in range(N):
                                prod = LaurentPoly.zero(n)
                                for l in range(N):
                                    prod = prod + E.rows[i][l] * H.rows[l][j]
                                want = LaurentPoly.one(n) if i == j else LaurentPoly.zero(n)
                                if prod != want:
                                    ok = False
                        results.append(
                            (
                                "eh N=%d m=%d k=%d t=%d n=%d" % (N, m, k, t, n),
                                ok,
                                "" if ok else "E*H != I",
                            )
                        )
    for n in (1, 2):
        ok = True
        for r in range(0, 2 * n + 3):
            acc = LaurentPoly.zero(n)
            for k in range(0, r + 1):
                term = elementary_pm(r - k, n) * complete_pm(k, n)
                acc = acc + (term if k % 2 == 0 else -term)
            want = LaurentPoly.one(n) if r == 0 else LaurentPoly.zero(n)
            if acc != want:
                ok = False
        results.append(("eh convolution n=%d" % n, ok, ""))
    return results


def _run_involution(max_cells, n_max):
    results = []
    for lam in _partitions_upto(max_cells):
        if not lam:
            continue
        for mu in _partitions_upto(lam.size()):
            if not lam.contains(mu) or mu.length() > 2:
                continue
            for n in range(1, n_max + 1):
                for m in range(mu.length(), 3):
                    if lam.length() > n + m:
                        continue
                    name = "involution %s/%s n=%d m=%d" % (
                        list(lam.parts),
                        list(mu.parts),
                        n,
                        m,
                    )
                    sh = SkewShape(lam, mu)
                    model, starts, ends = model_and_endpoints(
                        CharacterFamily.O_EVEN, sh, n, m
                    )
                    clean = {}
                    ok, detail = True, ""
                    for fam in enumerate_lgv_families(model, starts, ends):
                        if fam.is_strongly_nonintersecting() and not find_trapped_positions(fam):
                            for e, c in fam.signed_weight().terms.items():
                                clean[e] = clean.get(e, 0) + c
                        else:
                            img = involution_step(fam)
                            if involution_step(img) != fam:
                                ok, detail = False, "involution not involutive"
                            if img.signed_weight() != -fam.signed_weight():
                                ok, detail = False, "weight not negated"
                    oracle = character_by_tableaux(CharacterFamily.O_EVEN, sh, n, m)
                    if LaurentPoly(n, {e: c for e, c in clean.items() if c}) != oracle:
                        ok, detail = False, "clean families != oracle"
                    results.append((name, ok, detail))
    return results


SUITES = ("four-way", "lgv", "weyl", "path-lemmas", "reflection", "eh", "involution")


def run_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = []
    for suite in suites:
        if suite == "four-way":
            cases = _four_way_cases(args.max_cells, args.n, args.m)
            results.extend(_map_cases(_run_four_way, cases, args.jobs))
        elif suite == "lgv":
            cases = [
                c
                for c in _four_way_cases(min(args.max_cells, 6), (1, min(args.n[1], 2)), args.m)
                if sum(c[1]) <= 6
            ]
            results.extend(_map_cases(_run_lgv, cases, args.jobs))
        elif suite == "weyl":
            results.extend(_map_cases(_run_weyl, _weyl_cases(args.max_cells, args.seed), args.jobs))
        elif suite == "path-lemmas":
            results.extend(_run_path_lemmas(4, 2))
        elif suite == "reflection":
            results.extend(_run_reflection(10))
        elif suite == "eh":
            results.extend(_run_eh())
        elif suite == "involution":
            results.extend(_run_involution(min(args.max_cells, 4), 2))
        else:
            raise ValueError("unknown suite %r" % suite)
    results.sort(key=lambda r: r[0])
    lines = []
    failed = 0
    for name, ok, detail in results:
        if ok:
            lines.append("PASS %s" % name)
        else:
            failed += 1
            lines.append("FAIL %s: %s" % (name, detail))
    lines.append("checked=%d passed=%d failed=%d" % (len(results), len(results) - failed, failed))
    _emit("\n".join(lines), args.out)
    return 1 if failed else 0


def _map_cases(fn, cases, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cases, chunksize=8))
    return [fn(c) for c in cases]


# ---------------------------------------------------------------------------
# commands


def run_compute(args):
    shape = parse_shape(args.shape)
    family = FAMILIES[args.family]
    method = METHODS[args.method]
    poly = character(family, shape.outer, shape.inner, args.n, args.m, method, args.N)
    if args.format == "json":
        _emit(json.dumps(_poly_json(family, shape, args.n, args.m, method, poly)), args.out)
    else:
        _emit(poly.to_text(), args.out)
    return 0


def run_count(args):
    shape = parse_shape(args.shape)
    family = FAMILIES[args.family]
    check_preconditions(family, shape.outer, shape.inner, args.n, args.m)
    _emit(str(count_tableaux(family, shape, args.n, args.m)), args.out)
    return 0


def run_paths(args):
    shape = parse_shape(args.shape)
    family = FAMILIES[args.family]
    layout = Layout(args.layout)
    check_preconditions(family, shape.outer, shape.inner, args.n, args.m)
    written = []
    for idx, t in enumerate(enumerate_tableaux(family, shape, args.n, args.m)):
        if args.limit and idx >= args.limit:
            break
        pf = tableau_to_paths(family, t, args.n, args.m, N=args.N, layout=layout)
        if args.render == "svg":
            content = svg_render(pf)
            path = "%s.%d.svg" % (args.out, idx)
        else:
            content = ascii_render(pf)
            path = "%s.%d.txt" % (args.out, idx)
        with open(path, "w") as fh:
            fh.write(content + "\n")
        written.append(path)
    sys.stdout.write("\n".join(written) + ("\n" if written else ""))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewchar",
        description="Skew symplectic and orthogonal characters by tableaux, "
        "lattice paths and determinant formulas, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape_args(p):
        p.add_argument("--family", required=True, choices=sorted(FAMILIES))
        p.add_argument("--shape", required=True, help="OUTER[/INNER], e.g. 4,4,2/1")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, default=0)

    p = sub.add_parser("compute", help="compute a character polynomial")
    add_shape_args(p)
    p.add_argument("--method", default="dual-jt", choices=sorted(METHODS))
    p.add_argument("--N", type=int, default=None, help="determinant size override")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_compute)

    p = sub.add_parser("count", help="count the valid tableaux of a shape")
    add_shape_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_count)

    p = sub.add_parser("paths", help="render the path family of each tableau")
    add_shape_args(p)
    p.add_argument("--layout", default="columnwise", choices=("columnwise", "hookwise"))
    p.add_argument("--render", default="ascii", choices=("ascii", "svg"))
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--limit", type=int, default=0, help="0 renders every tableau")
    p.add_argument("--out", required=True, help="output file prefix")
    p.set_defaults(func=run_paths)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--suite", default="four-way", choices=SUITES + ("all",))
    p.add_argument("--max-cells", type=int, default=8, dest="max_cells")
    p.add_argument("--n", type=_parse_range, default=(1, 2))
    p.add_argument("--m", type=_parse_range, default=(0, 2))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NonExactDivisionError, MalformedFamilyError) as exc:
        sys.stderr.write("internal invariant failure: %s\n" % exc)
        return 3
    except (ParseError, ContainmentError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
