"""
Command line
============

    fordspheres generate --family eisenstein --mode ring --bound 10 --out s.json
    fordspheres verify --suite algorithms
    fordspheres convert --from ring --to barycentric --d 3 0 1
    fordspheres gsea 12 12 3 -8

Ring elements are given by their two coordinates in the sigma basis, so a pair
(alpha, beta) takes four integers. Two integers are read as rational integers
alpha, beta.
"""

import argparse
import logging
import random
import sys
from fractions import Fraction
from typing import NamedTuple, Optional

from . import circles, eisenstein, gaussian, general
from .helper import Parameters, SvgCanvas, dump_json, setup_logging
from .quadint import Discriminant, QuadInt, QuadRat, qi_coprime, qi_sea
from .spheres import (
    FordSphere,
    Region,
    contact_graph,
    ford_det,
    overlaps,
    q_form,
    sphere_tangent,
)

logger = logging.getLogger(__name__)

FAMILIES = ("circles", "eisenstein", "gaussian", "sigma")
MODES = ("ring", "geometric", "barycentric")
SUITES = ("equality", "tangency", "corollaries", "algorithms")


class SphereRecord(NamedTuple):
    """
    Plain form of a Ford sphere (or circle, with D None and one coordinate per
    number). The plane has tangent_den 0 and curvature 0.
    """

    D: Optional[int]
    alpha: tuple
    beta: tuple
    tangent_num: tuple
    tangent_den: int
    curvature: int
    bary: Optional[tuple] = None

    @classmethod
    def from_sphere(cls, s: FordSphere, bary=None):
        alpha, beta = (s.alpha.x, s.alpha.y), (s.beta.x, s.beta.y)
        if s.is_plane:
            return cls(s.D, alpha, beta, alpha, 0, 0, bary)
        z = s.tangent
        return cls(s.D, alpha, beta, (z.num.x, z.num.y), z.den, s.curvature, bary)

    @classmethod
    def from_circle(cls, c: circles.FordCircle, bary=None):
        return cls(None, (c.a,), (c.b,), (c.a,), c.b, 2 * c.b * c.b, bary)

    @classmethod
    def from_dict(cls, data: dict):
        bary = data.get("bary")
        return cls(
            data["D"],
            tuple(data["alpha"]),
            tuple(data["beta"]),
            tuple(data["tangent_num"]),
            data["tangent_den"],
            data["curvature"],
            None if bary is None else tuple(bary),
        )

    def to_dict(self) -> dict:
        data = {
            "D": self.D,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "tangent_num": list(self.tangent_num),
            "tangent_den": self.tangent_den,
            "curvature": self.curvature,
        }
        if self.bary is not None:
            data["bary"] = list(self.bary)
        return data

    def to_sphere(self):
        if self.D is None:
            return circles.FordCircle(self.alpha[0], self.beta[0])
        return FordSphere(QuadInt(*self.alpha, self.D), QuadInt(*self.beta, self.D))


class Check(NamedTuple):
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


"""
Parsing
-------
"""


def parse_window(text, family: str):
    """
    "lo,hi" for circles; "cell", "square", "triangle" or "x0,x1,y0,y1" in
    sigma coordinates for spheres.
    """
    if family == "circles":
        if text is None:
            return (Fraction(0), Fraction(1))
        values = [Fraction(v) for v in text.split(",")]
        if len(values) != 2:
            raise ValueError(f"A circle window is 'lo,hi', got {text!r}.")
        return tuple(values)
    if text is None:
        return {"eisenstein": Region.fundamental_triangle(), "gaussian": Region.square()}.get(family, Region.cell())
    named = {"cell": Region.cell, "square": Region.square, "triangle": Region.fundamental_triangle}
    if text in named:
        return named[text]()
    values = [Fraction(v) for v in text.split(",")]
    if len(values) != 4:
        raise ValueError(f"A sphere window is a name or 'x0,x1,y0,y1', got {text!r}.")
    return Region(values[:2], values[2:])


def family_discriminant(family: str, d) -> Optional[Discriminant]:
    fixed = {"eisenstein": 3, "gaussian": 1}
    if family == "circles":
        if d is not None:
            raise ValueError("The circles family takes no --d.")
        return None
    if family in fixed:
        if d is not None and d != fixed[family]:
            raise ValueError(f"The {family} family lives over D={fixed[family]}, not D={d}.")
        return Discriminant(fixed[family])
    if d is None:
        raise ValueError("The sigma family needs --d.")
    return Discriminant(d)


def parse_pair(values, d: Discriminant):
    if len(values) == 2:
        return QuadInt(values[0], 0, d), QuadInt(values[1], 0, d)
    if len(values) == 4:
        return QuadInt(values[0], values[1], d), QuadInt(values[2], values[3], d)
    raise ValueError(f"A ring pair takes 2 or 4 integers, got {len(values)}.")


"""
generate
--------
"""


def generate(family, mode, d, bound, depth, window):
    """
    Returns the records of the requested set, sorted.
    """
    if family == "circles":
        if mode == "ring":
            items = [(c, None) for c in circles.gen_P_circles(bound, window)]
        elif mode == "geometric":
            items = [(c, None) for c in circles.gen_circles(depth, window, max_den=bound)]
        else:
            triples = circles.gen_bary_triples(bound * bound, window)
            items = [(circles.bary_to_circle(t), tuple(t)) for t in triples]
        items.sort(key=lambda item: item[0].sort_key())
        return [SphereRecord.from_circle(c, bary) for c, bary in items]

    if family == "eisenstein":
        if mode == "ring":
            items = [(s, eisenstein.sphere_to_quad(s)) for s in eisenstein.gen_P_omega(bound, window)]
        elif mode == "geometric":
            items = [(s, eisenstein.sphere_to_quad(s)) for s in eisenstein.gen_G_omega(depth, bound, window)]
        else:
            items = [(eisenstein.quad_to_sphere(q), q) for q in eisenstein.gen_B_omega(bound, window)]
    elif family == "gaussian":
        if mode == "ring":
            items = [(s, gaussian.gauss_to_bary(s.alpha, s.beta)) for s in gaussian.gen_P_i(bound, window)]
        elif mode == "geometric":
            items = [(s, gaussian.gauss_to_bary(s.alpha, s.beta)) for s in gaussian.gen_G_i(depth, bound, window)]
        else:
            items = [(FordSphere(*gaussian.bary_to_gauss(*q)), q) for q in gaussian.gen_M_B_i(bound, window)]
    else:
        if mode == "geometric":
            raise ValueError("The sigma family has no geometric recursion, use --mode ring or barycentric.")
        if mode == "ring":
            items = [(s, general.mu_apply(s).coords()) for s in general.gen_P_sigma(d, bound, window)]
        else:
            items = []
            for b in general.secant_enumerate(d, depth):
                s = general.mu_inverse(b)
                if not s.is_plane and s.beta.norm() <= bound and window.contains(s.tangent):
                    items.append((s, b.coords()))

    items.sort(key=lambda item: item[0].sort_key())
    return [SphereRecord.from_sphere(s, tuple(bary)) for s, bary in items]


def render_svg(records, family, window, d, prm) -> str:
    if family == "circles":
        top = max((Fraction(1, r.curvature) for r in records), default=Fraction(1, 2))
        canvas = SvgCanvas(window, (0, 2 * top), prm)
        canvas.line(window[0], 0, window[1], 0)
        for r in records:
            radius = 1 / r.curvature
            canvas.circle(r.tangent_num[0] / r.tangent_den, radius, radius)
        return canvas.svg()

    corners = [complex(QuadRat.from_coords(x, y, d)) for x, y in window.corners()]
    xs, ys = [z.real for z in corners], [z.imag for z in corners]
    canvas = SvgCanvas((min(xs), max(xs)), (min(ys), max(ys)), prm)
    for r in records:
        if r.tangent_den == 0:
            continue
        z = complex(QuadRat(QuadInt(*r.tangent_num, d), r.tangent_den))
        canvas.circle(z.real, z.imag, 1 / r.curvature)
    return canvas.svg()


def cmd_generate(args, prm: Parameters) -> int:
    d = family_discriminant(args.family, args.d)
    window = parse_window(args.window, args.family)
    if args.family == "circles":
        bound = prm.circle_den_bound if args.bound is None else args.bound
        depth = prm.circle_depth if args.depth is None else args.depth
    else:
        bound = prm.norm_bound if args.bound is None else args.bound
        depth = args.depth
        if args.family == "sigma" and args.mode == "barycentric" and depth is None:
            depth = prm.secant_height_bound
    records = generate(args.family, args.mode, d, bound, depth, window)
    logger.info(f"{args.family}/{args.mode}: {len(records)} records")

    out = sys.stdout if args.out in (None, "-") else open(args.out, "w")
    try:
        if args.format == "json":
            document = {
                "D": None if d is None else d.D,
                "family": args.family,
                "spheres": [r.to_dict() for r in records],
            }
            dump_json(document, out)
        else:
            out.write(render_svg(records, args.family, window, d, prm))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


"""
verify
------

Each check returns how many of its items passed.
"""


def _set_check(name, *sets) -> Check:
    union = set().union(*sets)
    common = set(sets[0]).intersection(*sets[1:])
    return Check(name, len(common), len(union))


def equality_checks(prm: Parameters, d=None, bound=None):
    if d is None:
        den = prm.circle_den_bound if bound is None else bound
        P = set(circles.gen_P_circles(den))
        G = set(circles.gen_circles(depth=den, max_den=den))
        B = {circles.bary_to_circle(t) for t in circles.gen_bary_triples(den * den)}
        yield _set_check(f"circles P = G = B, b <= {den}", P, G, B)

    if d in (None, 3):
        n = prm.eisenstein_norm_bound if bound is None else bound
        P = set(eisenstein.gen_P_omega(n))
        G = set(eisenstein.gen_G_omega(norm_bound=n))
        B = {eisenstein.quad_to_sphere(q) for q in eisenstein.gen_B_omega(n)}
        yield _set_check(f"Eisenstein P = G = B, |beta|^2 <= {n}", P, G, B)

    if d in (None, 1):
        n = prm.gaussian_norm_bound if bound is None else bound
        P = set(gaussian.gen_P_i(n))
        G = set(gaussian.gen_G_i(norm_bound=n))
        B = {FordSphere(*gaussian.bary_to_gauss(*q)) for q in gaussian.gen_M_B_i(n)}
        yield _set_check(f"Gaussian P = G = M(B), |beta|^2 <= {n}", P, G, B)

    for D in prm.sigma_discriminants if d is None else (d,):
        n = prm.sigma_norm_bound if bound is None else bound
        yield sigma_equality_check(D, n, prm.secant_height_bound)


def sigma_equality_check(D: int, n: int, H: int) -> Check:
    """
    Every image mu(S) with |beta|^2 <= n is a secant solution, and every
    secant solution of height <= H inverts to a Ford sphere, which lies in
    P whenever its |beta|^2 and tangent point are in range.
    """
    window = Region.cell()
    images = {general.mu_apply(s) for s in general.gen_P_sigma(D, n, window)}
    generated = sum(map(general.secant_generated, images))
    passed = total = 0
    for b in general.secant_enumerate(D, H):
        total += 1
        try:
            s = general.mu_inverse(b)
        except (ValueError, RuntimeError) as e:
            logger.warning(f"{b.coords()} does not invert: {e}")
            continue
        if s.is_plane or s.beta.norm() > n or not window.contains(s.tangent):
            passed += 1
        else:
            passed += b in images
    return Check(
        f"D={D} mu(P) equals the secant solutions, |beta|^2 <= {n}, height <= {H}",
        generated + passed,
        len(images) + total,
    )


def tangency_checks(prm: Parameters, d=None, bound=None):
    if d in (None, 3):
        e = prm.quadric_entry_bound if bound is None else bound
        quads = eisenstein.quadric_quadruples(e)
        total = len(quads) * (len(quads) - 1) // 2
        bad = eisenstein.tangency_disagreements(quads)
        for u, v in bad[:5]:
            logger.warning(f"Q({u}, {v}) = {q_form(u, v)} disagrees with the geometry")
        yield Check(f"Q(u, v) = 1 iff tangent, |entries| <= {e}", total - len(bad), total)

    if d in (None, 1):
        n = prm.gaussian_norm_bound if bound is None else bound
        octahedra = list(gaussian.iter_octahedra(norm_bound=n))
        good = sum(contact_graph(o).is_octahedron() for o in octahedra)
        yield Check(f"Gaussian octahedra are 4-regular with 12 edges, |beta|^2 <= {n}", good, len(octahedra))

    for D in prm.sigma_discriminants if d is None else (d,):
        n = prm.sigma_pair_norm_bound if bound is None else bound
        spheres = general.gen_P_sigma(D, n)
        images = [general.mu_apply(s) for s in spheres]
        agree = total = 0
        for i, s in enumerate(spheres):
            for j in range(i + 1, len(spheres)):
                t = spheres[j]
                total += 1
                norm = general.pair_norm_general(images[i], images[j])
                agree += (
                    norm == ford_det(s, t).norm()
                    and (norm == 1) == sphere_tangent(s, t)
                    and not overlaps(s, t)
                )
        yield Check(f"D={D} pair norm is |det|^2, 1 iff tangent, |beta|^2 <= {n}", agree, total)


def corollary_checks(prm: Parameters, d=None, bound=None):
    e = prm.corollary_entry_bound if bound is None else bound
    if d is None:
        triples = circles.cone_triples(e)
        yield Check(f"|s+t| is a square, |entries| <= {e}", sum(map(circles.check_square, triples)), len(triples))
    if d in (None, 3):
        quads = eisenstein.quadric_quadruples(e)
        yield Check(f"a+b+c is an Eisenstein norm, |entries| <= {e}", sum(map(eisenstein.cor46_check, quads)), len(quads))
    if d in (None, 1):
        quads = gaussian.signed_quads(e)
        yield Check(f"a+b and a+b+c split into norms, |entries| <= {e}", sum(map(gaussian.cor510_check, quads)), len(quads))

    rng = random.Random(prm.seed)
    for D in (1, 2, 3, 7, 11) if d is None else (d,):
        if not Discriminant(D).euclidean:
            continue
        agree = 0
        for _ in range(prm.random_pairs):
            a = QuadInt(rng.randint(-20, 20), rng.randint(-20, 20), D)
            b = QuadInt(rng.randint(-20, 20), rng.randint(1, 20), D)
            agree += qi_coprime(a, b) == (qi_sea(a, b).gcd.norm() == 1)
        yield Check(f"D={D} gcd vector test agrees with the Euclidean gcd", agree, prm.random_pairs)


def algorithm_checks(prm: Parameters, d=None, bound=None):
    trace = eisenstein.gsea((12, 12, 3, -8))
    parents = set(eisenstein.quad_parents((12, 12, 3, -8)))
    expected = {(2, 2, 0, -1), (5, 6, 2, -4), (6, 5, 2, -4)}
    ok = [
        trace.codes == (4, 3, 1, 2, 1, 4),
        trace.terminal == (0, 0, 0, 1),
        parents == expected,
    ]
    yield Check("generalized Euclidean trace of (12,12,3,-8)", sum(ok), len(ok))

    word, terminal = circles.sea_pair(14, 5)
    ok = [word.letters == "LLRLLL", terminal == (1, 1)]
    yield Check("slow Euclidean trace of [14,5]", sum(ok), len(ok))

    surds = [
        eisenstein.QuadSurd(0, 1, 1, 2),
        eisenstein.QuadSurd(1, 1, 2, 5),
        eisenstein.QuadSurd(0, 1, 1, 7),
    ]
    periodic = sum(eisenstein.f_map_orbit(x).verdict == "periodic" for x in surds)
    yield Check("f-map orbits of quadratic surds are periodic", periodic, len(surds))
    rng = random.Random(prm.seed)
    rationals = [Fraction(rng.randint(1, 200), rng.randint(1, 200)) for _ in range(10)]
    rationals = [x if x != 1 else Fraction(3, 2) for x in rationals]
    ends = sum(eisenstein.f_map_orbit(x).verdict == "terminates" for x in rationals)
    yield Check("f-map orbits of rationals terminate", ends, len(rationals))

    o = gaussian.mobius_octahedron(
        QuadRat(QuadInt(0, 0, 1)), QuadRat(QuadInt(1, 0, 1)), QuadRat(QuadInt(2, 1, 1))
    )
    verdict = gaussian.resolve_eq9_denominator(o)
    yield Check("distance identity holds with (BC)(DF)", int(verdict in ("DF", "both")), 1)

    holds = tried = 0
    while tried < 100:
        points = [QuadRat(QuadInt(rng.randint(-9, 9), rng.randint(-9, 9), 1), rng.randint(1, 5)) for _ in range(3)]
        if len(set(points)) < 3:
            continue
        o = gaussian.mobius_octahedron(*points, branch=rng.choice((1, -1)))
        if not o.is_finite():
            continue
        tried += 1
        holds += gaussian.eq9_check(o)
    yield Check("distance identity on random Moebius octahedra", holds, tried)


SUITE_CHECKS = {
    "equality": equality_checks,
    "tangency": tangency_checks,
    "corollaries": corollary_checks,
    "algorithms": algorithm_checks,
}


def cmd_verify(args, prm: Parameters) -> int:
    if args.d is not None:
        Discriminant(args.d)
    suites = SUITES if args.suite == "all" else (args.suite,)
    failed = 0
    for suite in suites:
        for check in SUITE_CHECKS[suite](prm, args.d, args.bound):
            status = "PASS" if check.ok else "FAIL"
            print(f"[{suite}] {check.name}: {check.passed}/{check.total} {status}")
            logger.info(f"{check.name}: {check.passed}/{check.total}")
            failed += not check.ok
    return 1 if failed else 0


"""
convert and gsea
----------------
"""


def convert(source: str, target: str, d: Discriminant, values, frame: str = "native") -> str:
    if source == target:
        raise ValueError(f"Nothing to convert from {source} to {target}.")
    native = frame == "native" and d.D in (1, 3)
    if source == "ring":
        alpha, beta = parse_pair(values, d)
        if native and d.D == 3:
            return eisenstein.format_quad(eisenstein.eis_to_bary(alpha, beta))
        if native:
            return eisenstein.format_quad(gaussian.gauss_to_bary(alpha, beta))
        return eisenstein.format_quad(general.mu_apply((alpha, beta)).coords())

    if len(values) != 4:
        raise ValueError(f"Barycentric coordinates are four integers, got {len(values)}.")
    if native and d.D == 3:
        alpha, beta = eisenstein.bary_to_eis(values)
    elif native:
        alpha, beta = gaussian.bary_to_gauss(*values)
    else:
        s = general.mu_inverse(general.SigmaBary(*values, d.D))
        alpha, beta = s.alpha, s.beta
    return f"({alpha}, {beta})"


def cmd_convert(args, prm: Parameters) -> int:
    d = Discriminant(args.d)
    print(convert(args.source, args.target, d, args.values, args.frame))
    return 0


def cmd_gsea(args, prm: Parameters) -> int:
    if len(args.values) == 2:
        lines = circles.sea_trace(*args.values)
    elif len(args.values) == 4:
        if args.d != 3:
            raise ValueError(f"The generalized Euclidean algorithm runs on D=3 quadruples, not D={args.d}.")
        lines = eisenstein.gsea_trace(eisenstein.check_quad(args.values))
    else:
        raise ValueError(f"gsea takes a pair or a quadruple, got {len(args.values)} numbers.")
    for line in lines:
        print(line)
    logger.info(f"rank {len(lines)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    argp = argparse.ArgumentParser(prog="fordspheres", description="Ford circles and Ford spheres.")
    argp.add_argument("-v", "--verbose", action="store_true")
    argp.add_argument("-q", "--quiet", action="store_true")
    sub = argp.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a set of circles or spheres")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--d", type=int, help="Heegner number, sigma family only")
    gen.add_argument("--mode", choices=MODES, default="ring")
    gen.add_argument("--bound", type=int, help="denominator or |beta|^2 bound")
    gen.add_argument("--depth", type=int, help="recursion depth, or secant height")
    gen.add_argument("--window", help="'lo,hi', 'cell', 'square', 'triangle' or 'x0,x1,y0,y1'")
    gen.add_argument("--out", help="output file, default stdout")
    gen.add_argument("--format", choices=("json", "svg"), default="json")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="run an identity suite")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--d", type=int)
    ver.add_argument("--bound", type=int)
    ver.set_defaults(func=cmd_verify)

    con = sub.add_parser("convert", help="ring pair <-> barycentric coordinates")
    con.add_argument("--from", dest="source", choices=("ring", "barycentric"), required=True)
    con.add_argument("--to", dest="target", choices=("ring", "barycentric"), required=True)
    con.add_argument("--d", type=int, required=True)
    con.add_argument("--frame", choices=("native", "mu"), default="native",
                     help="D=1 and D=3 have their own frames, 'mu' uses the general one")
    con.add_argument("values", type=int, nargs="+")
    con.set_defaults(func=cmd_convert)

    gs = sub.add_parser("gsea", help="print a Euclidean trace")
    gs.add_argument("--d", type=int, default=3)
    gs.add_argument("values", type=int, nargs="+")
    gs.set_defaults(func=cmd_gsea)
    return argp


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    prm = Parameters()
    try:
        return args.func(args, prm)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
