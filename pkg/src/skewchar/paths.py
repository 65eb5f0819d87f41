"""Lattice path models for the characters: columnwise families read off
tableau columns, hookwise families read off principal hooks, weighted by the
e-labelling (and the combined e/h-labelling in the hookwise layout).

Lattice points are plain (x, y) tuples.  Levels measure progress along
antidiagonals: a horizontal unit step at level 2i-2 weighs x_i^-1 and at
level 2i-1 weighs x_i (for Schur paths level k weighs x_{k+1}).  A step
starting at (x, y) has level x+y-base, except in the hookwise region x < 0
where the level is y-base: there one horizontal step per entry height.
"""

from enum import Enum

from .core import FrobeniusCoordinates, LaurentPoly, Partition, SkewShape
from .symfunc import CharacterFamily
from . import tableaux as tb


class StepKind(Enum):
    RIGHT = (1, 0)
    UP = (0, 1)
    DOWN = (0, -1)
    DIAG = (1, 1)
    OHORIZ = (2, 0)

    @property
    def dx(self):
        return self.value[0]

    @property
    def dy(self):
        return self.value[1]


RIGHT, UP, DOWN, DIAG, OHORIZ = (
    StepKind.RIGHT,
    StepKind.UP,
    StepKind.DOWN,
    StepKind.DIAG,
    StepKind.OHORIZ,
)

_DELTA_KIND = {k.value: k for k in StepKind}

UP_KINDS = (UP, DIAG, OHORIZ)


class Layout(Enum):
    COLUMNWISE = "columnwise"
    HOOKWISE = "hookwise"


class InvalidFamilyError(ValueError):
    """A path family violates the model it claims to follow."""


class MalformedFamilyError(ValueError):
    """A family breaks a uniqueness/structure guarantee of the involution."""


class NoSiteError(ValueError):
    """involution_step on a family with no crossing and no trapped position."""


class PathModel:
    """Step legality, boundary rules and step weights for one family/layout."""

    __slots__ = ("family", "layout", "n", "m", "base")

    def __init__(self, family, layout, n, m, base=None):
        if layout is Layout.HOOKWISE and family is CharacterFamily.GL:
            raise ValueError("no hookwise model for the general linear family")
        self.family = family
        self.layout = layout
        self.n = n
        self.m = m
        self.base = 2 * m if base is None else base

    def __repr__(self):
        return "PathModel(%s, %s, n=%d, m=%d, base=%d)" % (
            self.family.name,
            self.layout.value,
            self.n,
            self.m,
            self.base,
        )

    def kinds(self):
        ks = [RIGHT, UP]
        if self.layout is Layout.HOOKWISE:
            ks.append(DOWN)
        if self.family is CharacterFamily.SO_ODD:
            ks.append(DIAG)
        elif self.family is CharacterFamily.O_EVEN:
            ks.append(OHORIZ)
        return ks

    def vertex_ok(self, x, y):
        if self.family is CharacterFamily.GL:
            return True
        if self.layout is Layout.COLUMNWISE:
            return y >= x - 1
        if x <= 0:
            return y >= self.base
        return y >= self.base - x and y >= x - 1

    def level(self, x, y):
        if self.layout is Layout.HOOKWISE and x < 0:
            return y - self.base
        return x + y - self.base

    def right_exp(self, x, y):
        """(variable index 0-based, exponent) of a horizontal step at (x, y),
        or None when the level falls outside the alphabet."""
        lev = self.level(x, y)
        if self.family is CharacterFamily.GL:
            return (lev, 1) if 0 <= lev < self.n else None
        if 0 <= lev < 2 * self.n:
            return (lev // 2, -1) if lev % 2 == 0 else (lev // 2, 1)
        return None

    def step_ok(self, x, y, kind):
        """Geometric legality of a step from (x, y); the no-descent-after-
        ascent discipline is enforced by callers."""
        nx, ny = x + kind.dx, y + kind.dy
        if not (self.vertex_ok(x, y) and self.vertex_ok(nx, ny)):
            return False
        if kind is RIGHT:
            return self.right_exp(x, y) is not None
        if kind is UP:
            # hookwise ascents live strictly right of the seam; a unit up
            # step at x <= 0 never encodes a tableau entry
            return self.layout is Layout.COLUMNWISE or x >= 1
        if kind is DOWN:
            return self.layout is Layout.HOOKWISE and x <= 0
        if kind is DIAG:
            return (
                self.family is CharacterFamily.SO_ODD
                and y == x
                and (self.layout is Layout.COLUMNWISE or x >= 0)
            )
        if kind is OHORIZ:
            return (
                self.family is CharacterFamily.O_EVEN
                and y == x + 2
                and (self.layout is Layout.COLUMNWISE or x >= 0)
            )
        return False


class Path:
    """A start point plus a step sequence."""

    __slots__ = ("start", "steps")

    def __init__(self, start, steps=()):
        self.start = (int(start[0]), int(start[1]))
        self.steps = tuple(steps)

    @classmethod
    def from_points(cls, pts):
        pts = [tuple(p) for p in pts]
        steps = []
        for a, b in zip(pts, pts[1:]):
            delta = (b[0] - a[0], b[1] - a[1])
            if delta not in _DELTA_KIND:
                raise ValueError("illegal step %r -> %r" % (a, b))
            steps.append(_DELTA_KIND[delta])
        return cls(pts[0], steps)

    def points(self):
        pts = [self.start]
        x, y = self.start
        for s in self.steps:
            x, y = x + s.dx, y + s.dy
            pts.append((x, y))
        return pts

    @property
    def end(self):
        x, y = self.start
        for s in self.steps:
            x, y = x + s.dx, y + s.dy
        return (x, y)

    def arc_midpoints(self):
        mids = []
        x, y = self.start
        for s in self.steps:
            if s is OHORIZ:
                mids.append((x + 1, y))
            x, y = x + s.dx, y + s.dy
        return mids

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.start == other.start
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash((self.start, self.steps))

    def __repr__(self):
        return "Path(%r, %s)" % (self.start, "".join(s.name[0] for s in self.steps))

    def weight_exps(self, model):
        exps = [0] * model.n
        x, y = self.start
        for s in self.steps:
            if s is RIGHT:
                ve = model.right_exp(x, y)
                if ve is None:
                    raise InvalidFamilyError(
                        "horizontal step at %r has no weight" % ((x, y),)
                    )
                exps[ve[0]] += ve[1]
            x, y = x + s.dx, y + s.dy
        return tuple(exps)

    def validate(self, model):
        x, y = self.start
        seen_up = False
        prev = None
        for s in self.steps:
            if not model.step_ok(x, y, s):
                raise InvalidFamilyError("illegal step %s at %r" % (s.name, (x, y)))
            if s is DOWN and seen_up:
                raise InvalidFamilyError("descending step after an ascending one")
            if s is UP and prev is DOWN:
                raise InvalidFamilyError("ascending step backtracks a descending one")
            if s in UP_KINDS:
                seen_up = True
            prev = s
            x, y = x + s.dx, y + s.dy


class PathFamily:
    """Paths plus the permutation connecting start slots to end slots."""

    __slots__ = ("model", "paths", "connection")

    def __init__(self, model, paths, connection=None):
        self.model = model
        self.paths = tuple(paths)
        if connection is None:
            connection = tuple(range(len(self.paths)))
        self.connection = tuple(connection)
        if sorted(self.connection) != list(range(len(self.paths))):
            raise ValueError("connection must be a permutation")

    def __eq__(self, other):
        return (
            isinstance(other, PathFamily)
            and self.paths == other.paths
            and self.connection == other.connection
        )

    def __repr__(self):
        return "PathFamily(%d paths, connection=%r)" % (
            len(self.paths),
            self.connection,
        )

    def sign(self):
        inv = 0
        c = self.connection
        for i in range(len(c)):
            for j in range(i + 1, len(c)):
                if c[i] > c[j]:
                    inv += 1
        return -1 if inv & 1 else 1

    def signed_weight(self):
        exps = [0] * self.model.n
        for p in self.paths:
            for v, e in enumerate(p.weight_exps(self.model)):
                exps[v] += e
        return LaurentPoly.monomial(exps, self.sign())

    def vertex_map(self):
        """point -> (path index, position index); raises if vertices collide."""
        vm = {}
        for i, p in enumerate(self.paths):
            for k, pt in enumerate(p.points()):
                if pt in vm:
                    raise InvalidFamilyError("paths share the lattice point %r" % (pt,))
                vm[pt] = (i, k)
        return vm

    def midpoint_set(self):
        mids = set()
        for p in self.paths:
            mids.update(p.arc_midpoints())
        return mids

    def is_strongly_nonintersecting(self):
        try:
            vm = self.vertex_map()
        except InvalidFamilyError:
            return False
        mids = []
        for p in self.paths:
            mids.extend(p.arc_midpoints())
        if len(set(mids)) != len(mids):
            return False
        return not (set(mids) & set(vm))


def _roles(pf):
    """vertex -> (path index, in step kind or None, out step kind or None)."""
    roles = {}
    for i, p in enumerate(pf.paths):
        pts = p.points()
        for k, pt in enumerate(pts):
            inc = p.steps[k - 1] if k > 0 else None
            out = p.steps[k] if k < len(p.steps) else None
            roles[pt] = (i, inc, out)
    return roles


# ---------------------------------------------------------------------------
# endpoint configurations


def columnwise_endpoints(family, shape, n, m, N):
    """Start and end points S_1..S_N, E_1..E_N for the columnwise models."""
    lam_c = shape.outer.conjugate()
    mu_c = shape.inner.conjugate()
    if family is CharacterFamily.GL:
        off = 2 * shape.inner.length()
        span = n
    else:
        off = 2 * m
        span = 2 * n
    starts = [
        (mu_c.part(i) - i + 1, off - mu_c.part(i) + i - 1) for i in range(1, N + 1)
    ]
    ends = [
        (lam_c.part(j) - j + 1, off + span - lam_c.part(j) + j - 1)
        for j in range(1, N + 1)
    ]
    return starts, ends


def hookwise_endpoints(shape, n, m):
    """Starts A_1..A_p, D_1..D_q and ends B_1..B_p, C_1..C_q."""
    fl = shape.outer.to_frobenius()
    fm = shape.inner.to_frobenius()
    top = 2 * n + 2 * m - 1
    a_pts = [(-a, top) for a in fl.arms]
    b_pts = [(b + 1, top - b) for b in fl.legs]
    c_pts = [(-g, 2 * m) for g in fm.arms]
    d_pts = [(d + 1, 2 * m - d - 1) for d in fm.legs]
    return a_pts + d_pts, b_pts + c_pts


def hook_connection(p, q):
    """A_i->C_i and D_i->B_i for i <= q, A_i->B_i beyond; its sign is (-1)^q."""
    sigma = list(range(p + q))
    for i in range(q):
        sigma[i] = p + i
        sigma[p + i] = i
    return tuple(sigma)


def model_and_endpoints(family, shape, n, m, N=None, layout=Layout.COLUMNWISE):
    if layout is Layout.COLUMNWISE:
        if N is None:
            N = shape.outer.first()
        if N < shape.outer.first():
            raise ValueError(
                "N >= lambda_1 fails: %d < %d" % (N, shape.outer.first())
            )
        base = 2 * shape.inner.length() if family is CharacterFamily.GL else 2 * m
        model = PathModel(family, layout, n, m, base)
        starts, ends = columnwise_endpoints(family, shape, n, m, N)
        return model, starts, ends
    model = PathModel(family, Layout.HOOKWISE, n, m)
    starts, ends = hookwise_endpoints(shape, n, m)
    return model, starts, ends


# ---------------------------------------------------------------------------
# tableau <-> path bijections


def _entry_level(family, entry):
    """Level of the horizontal step encoding an entry.

    bar_i sits at level 2i-2 and plain_i at 2i-1; hats are read as bars in
    the odd orthogonal family but as plain values in the even one, where the
    bar slot belongs to the circ of the pair.
    """
    if entry.deco == tb.BAR or entry.deco == tb.CIRC:
        return 2 * entry.value - 2
    if entry.deco == tb.PLAIN:
        return 2 * entry.value - 1
    if entry.deco == tb.HAT:
        if family is CharacterFamily.SO_ODD:
            return 2 * entry.value - 2
        return 2 * entry.value - 1
    raise ValueError("unexpected entry %r" % (entry,))


def tableau_to_paths(family, t, n, m=0, N=None, layout=Layout.COLUMNWISE):
    """Weight-preserving encoding of a valid tableau as a path family."""
    if layout is Layout.HOOKWISE:
        return _tableau_to_hook_paths(family, t, n, m)
    shape = t.shape
    if N is None:
        N = shape.outer.first()
    model, starts, ends = model_and_endpoints(family, shape, n, m, N, layout)
    total = n if family is CharacterFamily.GL else 2 * n
    paths = []
    for i in range(1, N + 1):
        col = t.column(i)
        hstep = set()
        hats = set()
        circs = set()
        for e in col:
            if family is CharacterFamily.GL:
                hstep.add(e.value)
                continue
            if e.deco == tb.HAT:
                hats.add(e.value)
            elif e.deco == tb.CIRC:
                circs.add(e.value)
            hstep.add(_entry_level(family, e) + 1)  # step numbers are 1-based
        steps = [RIGHT if j in hstep else UP for j in range(1, total + 1)]
        if family is CharacterFamily.SO_ODD:
            for v in sorted(hats, reverse=True):
                j = 2 * v - 1
                if steps[j - 1] is not RIGHT or steps[j] is not UP:
                    raise InvalidFamilyError(
                        "hat %d not followed by a vertical step" % v
                    )
                steps[j - 1 : j + 1] = [DIAG]
        elif family is CharacterFamily.O_EVEN:
            for v in sorted(circs, reverse=True):
                j = 2 * v - 1
                if steps[j - 1] is not RIGHT or steps[j] is not RIGHT:
                    raise InvalidFamilyError("circ/hat pair of %d is broken" % v)
                steps[j - 1 : j + 1] = [OHORIZ]
        path = Path(starts[i - 1], steps)
        if path.end != ends[i - 1]:
            raise InvalidFamilyError(
                "column %d ends at %r, expected %r" % (i, path.end, ends[i - 1])
            )
        paths.append(path)
    return PathFamily(model, paths)


def _tableau_to_hook_paths(family, t, n, m):
    shape = t.shape
    model, starts, ends = model_and_endpoints(
        family, shape, n, m, layout=Layout.HOOKWISE
    )
    lam, mu = shape.outer, shape.inner
    lam_c = lam.conjugate()
    mu_c = mu.conjugate()
    p = lam.durfee()
    q = mu.durfee()
    base = 2 * m

    def descend(start, entries, stop_y=None):
        """Right/down path with one horizontal step per entry at its height."""
        pts = [start]
        x, y = start
        for e in entries:
            h = base + _entry_level(family, e)
            while y > h:
                y -= 1
                pts.append((x, y))
            x += 1
            pts.append((x, y))
        if stop_y is not None:
            while y > stop_y:
                y -= 1
                pts.append((x, y))
        return pts

    def ascend(pts, entries):
        """Continue with right/up steps, one horizontal per entry level."""
        pts = list(pts)
        x, y = pts[-1]
        for e in entries:
            s = base + _entry_level(family, e)
            while x + y < s:
                y += 1
                pts.append((x, y))
            x += 1
            pts.append((x, y))
        return pts

    def finish_up(pts, end):
        x, y = pts[-1]
        if x != end[0]:
            raise InvalidFamilyError(
                "hook path ends in column %d, expected %d" % (x, end[0])
            )
        while y < end[1]:
            y += 1
            pts.append((x, y))
        return pts

    def apply_special(pts):
        """Hat steps become diagonals; circ/hat pairs become o-horizontal arcs."""
        path = Path.from_points(pts)
        if family is CharacterFamily.SP or family is CharacterFamily.GL:
            return path
        steps = list(path.steps)
        out = []
        x, y = path.start
        k = 0
        while k < len(steps):
            s = steps[k]
            if (
                family is CharacterFamily.SO_ODD
                and s is RIGHT
                and k + 1 < len(steps)
                and steps[k + 1] is UP
                and y == x
                and x >= 0
                and (x, y) in hat_starts
            ):
                out.append(DIAG)
                x, y = x + 1, y + 1
                k += 2
                continue
            if (
                family is CharacterFamily.O_EVEN
                and s is RIGHT
                and k + 1 < len(steps)
                and steps[k + 1] is RIGHT
                and y == x + 2
                and x >= 0
                and (x, y) in circ_starts
            ):
                out.append(OHORIZ)
                x, y = x + 2, y
                k += 2
                continue
            out.append(s)
            x, y = x + s.dx, y + s.dy
            k += 1
        return Path(path.start, out)

    hat_starts = set()
    circ_starts = set()
    for (r, c), e in t.cells.items():
        if e.deco == tb.HAT and family is CharacterFamily.SO_ODD:
            hat_starts.add((m + e.value - 1, m + e.value - 1))
        if e.deco == tb.CIRC:
            circ_starts.add((m + e.value - 2, m + e.value))

    paths = []
    for i in range(1, p + 1):
        arm = [t.cells[(i, c)] for c in range(lam.part(i), max(i, mu.part(i)), -1)]
        if i <= q:
            pts = descend(starts[i - 1], arm, stop_y=base)
            if pts[-1] != ends[p + i - 1]:
                raise InvalidFamilyError("arm path %d misses C_%d" % (i, i))
            paths.append(Path.from_points(pts))
        else:
            corner = t.cells[(i, i)]
            pts = descend(starts[i - 1], arm + [corner])
            leg = [t.cells[(r, i)] for r in range(i + 1, lam_c.part(i) + 1)]
            pts = finish_up(ascend(pts, leg), ends[i - 1])
            paths.append(apply_special(pts))
    for i in range(1, q + 1):
        leg = [t.cells[(r, i)] for r in range(mu_c.part(i) + 1, lam_c.part(i) + 1)]
        pts = finish_up(ascend([starts[p + i - 1]], leg), ends[i - 1])
        paths.append(apply_special(pts))
    return PathFamily(model, paths, hook_connection(p, q))


def _decode_ascending(model, path, skip_to_positive=False):
    """Entries read from the horizontal/diagonal/arc steps of an ascending
    run, using the antidiagonal level rule."""
    entries = []
    x, y = path.start
    for s in path.steps:
        lev = x + y - model.base
        if s is RIGHT:
            entries.append(tb.Entry(lev // 2 + 1, tb.BAR if lev % 2 == 0 else tb.PLAIN))
        elif s is DIAG:
            entries.append(tb.Entry(lev // 2 + 1, tb.HAT))
        elif s is OHORIZ:
            v = lev // 2 + 1
            entries.append(tb.Entry(v, tb.CIRC))
            entries.append(tb.Entry(v, tb.HAT))
        x, y = x + s.dx, y + s.dy
    return entries


def paths_to_tableau(pf):
    """Inverse of tableau_to_paths; raises InvalidFamily on rule violations."""
    model = pf.model
    if model.layout is Layout.HOOKWISE:
        return _hook_paths_to_tableau(pf)
    family = model.family
    n, m = model.n, model.m
    total = n if family is CharacterFamily.GL else 2 * n
    for p in pf.paths:
        p.validate(model)
    if not pf.is_strongly_nonintersecting():
        raise InvalidFamilyError("family is not strongly non-intersecting")
    if list(pf.connection) != list(range(len(pf.paths))):
        raise InvalidFamilyError("connection permutation is not the identity")
    if family is CharacterFamily.O_EVEN and find_trapped_positions(pf):
        raise InvalidFamilyError("family has a trapped position")
    mu_cols = []
    cols = []
    for i, p in enumerate(pf.paths, start=1):
        sx, sy = p.start
        if sx + sy != model.base:
            raise InvalidFamilyError("start %r off the base antidiagonal" % ((sx, sy),))
        ex, ey = p.end
        if ex + ey != model.base + total:
            raise InvalidFamilyError("end %r off the top antidiagonal" % ((ex, ey),))
        mu_col = sx + i - 1
        if mu_col < 0:
            raise InvalidFamilyError("start %r left of slot %d" % ((sx, sy), i))
        entries = []
        j = 1
        for s in p.steps:
            if s is RIGHT:
                if family is CharacterFamily.GL:
                    entries.append(tb.Entry(j, tb.PLAIN))
                else:
                    v = (j + 1) // 2
                    entries.append(tb.Entry(v, tb.BAR if j % 2 else tb.PLAIN))
                j += 1
            elif s is UP:
                j += 1
            elif s is DIAG:
                if j % 2 == 0:
                    raise InvalidFamilyError("diagonal step at an even step index")
                entries.append(tb.Entry((j + 1) // 2, tb.HAT))
                j += 2
            elif s is OHORIZ:
                if j % 2 == 0:
                    raise InvalidFamilyError("o-horizontal step at an even step index")
                v = (j + 1) // 2
                entries.append(tb.Entry(v, tb.CIRC))
                entries.append(tb.Entry(v, tb.HAT))
                j += 2
            else:
                raise InvalidFamilyError("unexpected step kind %s" % s.name)
        if ex + i - 1 != mu_col + len(entries):
            raise InvalidFamilyError("path %d is not a column path" % i)
        mu_cols.append(mu_col)
        cols.append(entries)
    lam_cols = [m0 + len(es) for m0, es in zip(mu_cols, cols)]
    for seq, name in ((mu_cols, "start"), (lam_cols, "end")):
        if seq != sorted(seq, reverse=True):
            raise InvalidFamilyError("%s points do not give a partition" % name)
    outer = Partition(
        sum(1 for c in lam_cols if c >= r)
        for r in range(1, max(lam_cols, default=0) + 1)
    )
    inner = Partition(
        sum(1 for c in mu_cols if c >= r) for r in range(1, max(mu_cols, default=0) + 1)
    )
    shape = SkewShape(outer, inner)
    cells = {}
    for i, (skip, es) in enumerate(zip(mu_cols, cols), start=1):
        for k, e in enumerate(es):
            cells[(skip + k + 1, i)] = e
    t = tb.Tableau(shape, cells)
    if not tb.is_valid_tableau(family, t, n, m):
        raise InvalidFamilyError("decoded filling is not a valid tableau")
    return t


def _hook_paths_to_tableau(pf):
    model = pf.model
    family = model.family
    base = model.base
    for p in pf.paths:
        p.validate(model)
    if not pf.is_strongly_nonintersecting():
        raise InvalidFamilyError("family is not strongly non-intersecting")
    if family is CharacterFamily.O_EVEN and find_trapped_positions(pf):
        raise InvalidFamilyError("family has a trapped position")
    top = 2 * model.n + 2 * model.m - 1
    p_count = sum(1 for path in pf.paths if path.start[1] == top)
    q_count = len(pf.paths) - p_count
    if any(path.start[1] != top for path in pf.paths[:p_count]):
        raise InvalidFamilyError("hook paths must list A starts before D starts")
    if pf.connection != hook_connection(p_count, q_count):
        raise InvalidFamilyError("connection permutation is not the hook pairing")

    arm_entries = {}
    leg_entries = {}
    for i in range(1, p_count + 1):
        path = pf.paths[i - 1]
        pts = path.points()
        last0 = max((k for k, pt in enumerate(pts) if pt[0] <= 0), default=0)
        arm = []
        x, y = pts[0]
        for k in range(last0):
            nxt = pts[k + 1]
            if nxt[0] == x + 1 and nxt[1] == y:
                lev = y - base
                arm.append(tb.Entry(lev // 2 + 1, tb.BAR if lev % 2 == 0 else tb.PLAIN))
            x, y = nxt
        arm_entries[i] = arm
        if last0 < len(pts) - 1:
            leg_entries[i] = _decode_ascending(
                model, Path.from_points(pts[last0:])
            )
        else:
            leg_entries[i] = []
    for i in range(1, q_count + 1):
        leg_entries[-i] = _decode_ascending(model, pf.paths[p_count + i - 1])

    arms = [-pf.paths[i - 1].start[0] for i in range(1, p_count + 1)]
    legs = []
    for i in range(1, p_count + 1):
        endpoint = (
            pf.paths[p_count + i - 1].end if i <= q_count else pf.paths[i - 1].end
        )
        legs.append(endpoint[0] - 1)
    gammas = [-pf.paths[i - 1].end[0] for i in range(1, q_count + 1)]
    deltas = [pf.paths[p_count + i - 1].start[0] - 1 for i in range(1, q_count + 1)]
    lam = FrobeniusCoordinates(arms, legs).to_partition() if p_count else Partition()
    mu = FrobeniusCoordinates(gammas, deltas).to_partition() if q_count else Partition()
    shape = SkewShape(lam, mu)
    lam_c = lam.conjugate()
    mu_c = mu.conjugate()
    cells = {}
    for i in range(1, p_count + 1):
        cols = list(range(lam.part(i), max(i, mu.part(i)), -1))
        if i <= q_count:
            arm = arm_entries[i]
            if len(arm) != len(cols):
                raise InvalidFamilyError("arm of hook %d has wrong length" % i)
            for c, e in zip(cols, arm):
                cells[(i, c)] = e
            leg = leg_entries[-i]
            rows = list(range(mu_c.part(i) + 1, lam_c.part(i) + 1))
            if len(leg) != len(rows):
                raise InvalidFamilyError("leg of hook %d has wrong length" % i)
            for r, e in zip(rows, leg):
                cells[(r, i)] = e
        else:
            both = arm_entries[i] + leg_entries[i]
            cols_corner = cols + [i]
            rows = list(range(i + 1, lam_c.part(i) + 1))
            if len(both) != len(cols_corner) + len(rows):
                raise InvalidFamilyError("hook %d has wrong length" % i)
            for c, e in zip(cols_corner, both[: len(cols_corner)]):
                cells[(i, c)] = e
            for r, e in zip(rows, both[len(cols_corner) :]):
                cells[(r, i)] = e
    t = tb.Tableau(shape, cells)
    if not tb.is_valid_tableau(family, t, model.n, model.m):
        raise InvalidFamilyError("decoded filling is not a valid tableau")
    return t


# ---------------------------------------------------------------------------
# generating functions and enumeration


def path_gf(model, frm, to):
    """Exact weighted sum over all model-legal paths from frm to to."""
    frm, to = tuple(frm), tuple(to)
    n = model.n
    zero = LaurentPoly.zero(n)
    one = LaurentPoly.one(n)
    if not (model.vertex_ok(*frm) and model.vertex_ok(*to)):
        return zero
    kinds = model.kinds()
    memo = {}

    def gf(x, y, up_phase, after_down):
        if (x, y) == to:
            return one
        if up_phase and y > to[1]:
            return zero
        key = (x, y, up_phase, after_down)
        got = memo.get(key)
        if got is not None:
            return got
        acc = zero
        for kind in kinds:
            if kind is DOWN and up_phase:
                continue
            if kind is UP and after_down:
                continue  # would revisit the point above
            nx, ny = x + kind.dx, y + kind.dy
            if nx > to[0]:
                continue
            if kind in UP_KINDS and ny > to[1]:
                continue
            if not model.step_ok(x, y, kind):
                continue
            nxt = gf(nx, ny, up_phase or kind in UP_KINDS, kind is DOWN)
            if nxt.is_zero():
                continue
            if kind is RIGHT:
                v, e = model.right_exp(x, y)
                exps = [0] * n
                exps[v] = e
                acc = acc + nxt.mul_monomial(exps)
            else:
                acc = acc + nxt
        memo[key] = acc
        return acc

    return gf(frm[0], frm[1], model.layout is Layout.COLUMNWISE, False)


def path_gf_by_diag_count(model, frm, to, k):
    """Generating function restricted to exactly k special steps (diagonal
    steps for the odd family, o-horizontal steps for the even one)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    special = DIAG if model.family is CharacterFamily.SO_ODD else OHORIZ
    frm, to = tuple(frm), tuple(to)
    n = model.n
    zero = LaurentPoly.zero(n)
    one = LaurentPoly.one(n)
    if not (model.vertex_ok(*frm) and model.vertex_ok(*to)):
        return zero
    kinds = model.kinds()
    memo = {}

    def gf(x, y, up_phase, after_down, rem):
        if (x, y) == to:
            return one if rem == 0 else zero
        if up_phase and y > to[1]:
            return zero
        key = (x, y, up_phase, after_down, rem)
        got = memo.get(key)
        if got is not None:
            return got
        acc = zero
        for kind in kinds:
            if kind is DOWN and up_phase:
                continue
            if kind is UP and after_down:
                continue
            if kind is special and rem == 0:
                continue
            nx, ny = x + kind.dx, y + kind.dy
            if nx > to[0]:
                continue
            if kind in UP_KINDS and ny > to[1]:
                continue
            if not model.step_ok(x, y, kind):
                continue
            nxt = gf(
                nx,
                ny,
                up_phase or kind in UP_KINDS,
                kind is DOWN,
                rem - 1 if kind is special else rem,
            )
            if nxt.is_zero():
                continue
            if kind is RIGHT:
                v, e = model.right_exp(x, y)
                exps = [0] * n
                exps[v] = e
                acc = acc + nxt.mul_monomial(exps)
            else:
                acc = acc + nxt
        memo[key] = acc
        return acc

    return gf(frm[0], frm[1], model.layout is Layout.COLUMNWISE, False, k)


def enumerate_paths(model, frm, to, blocked=frozenset()):
    """All model-legal paths from frm to to whose vertices avoid blocked
    (arc midpoints may pass over blocked points: that is the weak notion)."""
    frm, to = tuple(frm), tuple(to)
    if frm in blocked or to in blocked:
        return
    if not (model.vertex_ok(*frm) and model.vertex_ok(*to)):
        return
    kinds = model.kinds()
    steps = []

    def rec(x, y, up_phase, after_down):
        if (x, y) == to:
            yield Path(frm, list(steps))
            return
        if up_phase and y > to[1]:
            return
        for kind in kinds:
            if kind is DOWN and up_phase:
                continue
            if kind is UP and after_down:
                continue
            nx, ny = x + kind.dx, y + kind.dy
            if nx > to[0]:
                continue
            if kind in UP_KINDS and ny > to[1]:
                continue
            if (nx, ny) in blocked:
                continue
            if not model.step_ok(x, y, kind):
                continue
            steps.append(kind)
            yield from rec(nx, ny, up_phase or kind in UP_KINDS, kind is DOWN)
            steps.pop()

    yield from rec(frm[0], frm[1], model.layout is Layout.COLUMNWISE, False)


def enumerate_lgv_families(model, starts, ends):
    """All weakly non-intersecting families connecting the given points."""
    N = len(starts)
    if len(ends) != N:
        raise ValueError("start and end lists must have equal length")
    occupied = set()
    used = [False] * N
    chosen = []
    sigma = []

    def rec(i):
        if i == N:
            yield PathFamily(model, list(chosen), list(sigma))
            return
        for j in range(N):
            if used[j]:
                continue
            options = list(enumerate_paths(model, starts[i], ends[j], blocked=occupied))
            for path in options:
                pts = path.points()
                occupied.update(pts)
                chosen.append(path)
                sigma.append(j)
                used[j] = True
                yield from rec(i + 1)
                used[j] = False
                sigma.pop()
                chosen.pop()
                occupied.difference_update(pts)

    yield from rec(0)


def lgv_signed_sum(model, starts, ends):
    """Brute-force signed sum over weakly non-intersecting families."""
    n = model.n
    terms = {}
    for fam in enumerate_lgv_families(model, starts, ends):
        exps = [0] * n
        for p in fam.paths:
            for v, e in enumerate(p.weight_exps(model)):
                exps[v] += e
        e = tuple(exps)
        c = terms.get(e, 0) + fam.sign()
        if c:
            terms[e] = c
        elif e in terms:
            del terms[e]
    return LaurentPoly(n, terms)


# ---------------------------------------------------------------------------
# modified reflection


def reflect_initial_segment(path, d):
    """Reflect the initial segment up to the first touch of y = x + d.

    The start must be an even point off the line and d even.  Even points
    and straight odd points reflect across the line; odd left turns map to
    (y-d+1, x+d-1) and odd right turns to (y-d-1, x+d+1), which keeps the
    level labelling of every horizontal step and hence the weight.  The same
    map applied to the image recovers the original path.
    """
    if d % 2:
        raise ValueError("d must be even")
    a, b = path.start
    if (a + b) % 2:
        raise ValueError("start must be an even point")
    if b == a + d:
        raise ValueError("start lies on the line y = x + d")
    if any(s not in (RIGHT, UP) for s in path.steps):
        raise ValueError("reflection applies to unit right/up paths only")
    pts = path.points()
    touch = next((k for k, (x, y) in enumerate(pts) if y == x + d), None)
    if touch is None:
        raise ValueError("path does not touch y = x + %d" % d)
    reflected = []
    for k in range(touch + 1):
        x, y = pts[k]
        if (x + y) % 2 == 0 or k == touch:
            reflected.append((y - d, x + d))
            continue
        inc, out = path.steps[k - 1], path.steps[k]
        if inc is RIGHT and out is UP:
            reflected.append((y - d + 1, x + d - 1))
        elif inc is UP and out is RIGHT:
            reflected.append((y - d - 1, x + d + 1))
        else:
            reflected.append((y - d, x + d))
    return Path.from_points(reflected + pts[touch + 1 :])


def reflection_weight_exps(path, n):
    """Weight exponents of a right/up path under the level labelling anchored
    at the path's own start: level 2i-2 gives x_i^-1, level 2i-1 gives x_i."""
    base = path.start[0] + path.start[1]
    exps = [0] * n
    x, y = path.start
    for s in path.steps:
        if s is RIGHT:
            lev = x + y - base
            if not 0 <= lev < 2 * n:
                raise ValueError("horizontal step outside the alphabet")
            exps[lev // 2] += -1 if lev % 2 == 0 else 1
        x, y = x + s.dx, y + s.dy
    return tuple(exps)


# ---------------------------------------------------------------------------
# trapped positions and the sign-reversing involution


def _family_bbox(pf):
    xs, ys = [], []
    for p in pf.paths:
        for x, y in p.points():
            xs.append(x)
            ys.append(y)
    return min(xs), max(xs), min(ys), max(ys)


def _trace_run(roles, D):
    """Follow the height D-1 horizontal run left from (1, D-1) into the
    h-region; returns the x of its first point, which must be entered by a
    descent left of the seam, or None."""
    x = 1
    while True:
        r = roles.get((x - 1, D - 1))
        if r is not None and r[2] is RIGHT:
            x -= 1
            continue
        break
    start = roles.get((x, D - 1))
    if start is not None and start[1] is DOWN and x <= -1:
        return x
    return None


def _walk_chain(pf, D, roles, full, for_flip):
    """Walk the odd antidiagonal x+y=D up from the boundary through left
    turns and classify the first break.

    Returns ("a", j0) for a vacancy at (j0, D-j0), ("b", None) for the seam
    dip/gap, ("c", xs) for a height D-1 run starting at (xs, D-1), or None.
    When for_flip is true the walk searches a freshly resolved crossing for
    its flip site, otherwise it detects a trapped position.
    """
    layout = pf.model.layout
    boundary_j = (D + 1) // 2
    j = boundary_j
    while True:
        pt = (j, D - j)
        if pt not in full:
            if j == boundary_j:
                return None  # a vacancy on the boundary itself is not a site
            if for_flip:
                return ("a", j)
            above = (j - 1, D - j + 1)
            role = roles.get(above)
            if role is not None and role[1] is UP and role[2] is RIGHT:
                return ("a", j)
            if (
                layout is Layout.HOOKWISE
                and j == 1
                and role is not None
                and role[2] is RIGHT
                and role[1] is not UP
                and (0, D - 1) not in full
            ):
                return ("b", None)
            return None
        role = roles.get(pt)
        if role is None:
            return None  # an arc midpoint blocks the chain
        _, inc, out = role
        if inc is RIGHT and out is UP:
            j -= 1
            if layout is Layout.HOOKWISE and j == 0:
                seam = roles.get((0, D))
                if seam is not None and seam[2] is DOWN:
                    # the left turn at (1, D-1) bottoms a dip through the seam
                    return ("b", None) if for_flip else None
                if seam is None and (0, D) not in full:
                    # the left turn at (1, D-1) ends a height D-1 run from
                    # the h-region; the flip happens at the run's descent
                    xs = _trace_run(roles, D)
                    if xs is None:
                        return None
                    if for_flip:
                        return ("c", xs)
                    if (xs - 1, D - 1) not in full:
                        return ("c", xs)
                    return None
                return None
            continue
        if (
            layout is Layout.HOOKWISE
            and j == 1
            and inc is RIGHT
            and out is RIGHT
        ):
            xs = _trace_run(roles, D)
            if xs is None:
                return None
            if for_flip:
                return ("c", xs)
            if (xs - 1, D - 1) not in full and xs - 1 <= 0:
                return ("c", xs)
            return None
        return None


def _collect_crossings(pf, roles):
    """o-horizontal steps whose midpoint carries another path's verticals."""
    sites = []
    for i, p in enumerate(pf.paths):
        x, y = p.start
        for k, s in enumerate(p.steps):
            if s is OHORIZ:
                mid = (x + 1, y)
                role = roles.get(mid)
                if role is not None:
                    if role[1] is not UP or role[2] is not UP:
                        raise MalformedFamilyError(
                            "crossing at %r is not a double vertical" % (mid,)
                        )
                    sites.append((mid[0] + mid[1], "cross", (i, k, role[0])))
            x, y = x + s.dx, y + s.dy
    return sites


def find_trapped_positions(pf):
    """All trapped positions of an even-orthogonal family, nearest first."""
    if pf.model.family is not CharacterFamily.O_EVEN:
        raise ValueError("trapped positions are defined for the even orthogonal family")
    if not pf.paths:
        return []
    roles = _roles(pf)
    full = set(roles)
    full.update(pf.midpoint_set())
    _, maxx, _, maxy = _family_bbox(pf)
    out = []
    for D in range(2 * pf.model.m + 1, maxx + maxy + 1, 2):
        hit = _walk_chain(pf, D, roles, full, for_flip=False)
        if hit is None:
            continue
        kind, arg = hit
        if kind == "a":
            out.append((arg, D - arg))
        elif kind == "b":
            out.append((1, D - 1))
        else:
            out.append((arg - 1, D - 1))
    return out


def _replace_segment(path, old_pts, new_pts):
    pts = path.points()
    for k in range(len(pts) - len(old_pts) + 1):
        if pts[k : k + len(old_pts)] == old_pts:
            return Path.from_points(pts[:k] + new_pts + pts[k + len(old_pts) :])
    raise MalformedFamilyError("segment %r not found" % (old_pts,))


def _apply_flip(pf, hit, D):
    """Turn the resolved crossing's antidiagonal into a trapped position."""
    paths = list(pf.paths)
    roles = _roles(pf)
    kind, arg = hit
    if kind == "a":
        j0 = arg
        lt = (j0 + 1, D - j0 - 1)
        i = roles[lt][0]
        paths[i] = _replace_segment(
            paths[i],
            [(j0, D - j0 - 1), (j0 + 1, D - j0 - 1), (j0 + 1, D - j0)],
            [(j0, D - j0 - 1), (j0, D - j0), (j0 + 1, D - j0)],
        )
    elif kind == "b":
        i = roles[(0, D)][0]
        paths[i] = _replace_segment(
            paths[i],
            [(0, D), (0, D - 1), (1, D - 1), (1, D)],
            [(0, D), (1, D)],
        )
    else:
        xs = arg
        if xs + 1 > 0:
            raise MalformedFamilyError("run flip would descend at x=%d" % (xs + 1))
        i = roles[(xs, D - 1)][0]
        paths[i] = _replace_segment(
            paths[i],
            [(xs, D), (xs, D - 1), (xs + 1, D - 1)],
            [(xs, D), (xs + 1, D), (xs + 1, D - 1)],
        )
    return PathFamily(pf.model, paths, pf.connection)


def _apply_unflip(pf, hit, D):
    """Re-occupy the trapped position: the inverse of _apply_flip."""
    paths = list(pf.paths)
    roles = _roles(pf)
    kind, arg = hit
    if kind == "a":
        j0 = arg
        rt = (j0 - 1, D - j0 + 1)
        i = roles[rt][0]
        paths[i] = _replace_segment(
            paths[i],
            [(j0 - 1, D - j0), (j0 - 1, D - j0 + 1), (j0, D - j0 + 1)],
            [(j0 - 1, D - j0), (j0, D - j0), (j0, D - j0 + 1)],
        )
    elif kind == "b":
        i = roles[(0, D)][0]
        paths[i] = _replace_segment(
            paths[i],
            [(0, D), (1, D)],
            [(0, D), (0, D - 1), (1, D - 1), (1, D)],
        )
    else:
        xs = arg
        i = roles[(xs, D - 1)][0]
        paths[i] = _replace_segment(
            paths[i],
            [(xs - 1, D), (xs, D), (xs, D - 1)],
            [(xs - 1, D), (xs - 1, D - 1), (xs, D - 1)],
        )
    return PathFamily(pf.model, paths, pf.connection)


def _resolve_crossing(pf, site):
    """Open the arc-over-verticals crossing into two left turns, swapping tails."""
    i, k, other = site
    paths = list(pf.paths)
    pts_a = paths[i].points()
    x, y = paths[i].start
    d = None
    for idx, s in enumerate(paths[i].steps):
        if idx == k:
            d = x + 1
            break
        x, y = x + s.dx, y + s.dy
    ka = next(kk for kk, pt in enumerate(pts_a) if pt == (d - 1, d + 1))
    pts_b = paths[other].points()
    kb = next(kk for kk, pt in enumerate(pts_b) if pt == (d, d + 1))
    new_a = pts_a[: ka + 1] + [(d, d + 1), (d, d + 2)] + pts_b[kb + 2 :]
    new_b = pts_b[:kb] + [(d + 1, d), (d + 1, d + 1)] + pts_a[ka + 2 :]
    paths[i] = Path.from_points(new_a)
    paths[other] = Path.from_points(new_b)
    conn = list(pf.connection)
    conn[i], conn[other] = conn[other], conn[i]
    return PathFamily(pf.model, paths, conn), 2 * d + 1


def _form_crossing(pf, D):
    """Close the two boundary-most left turns back into an arc over verticals."""
    d = (D - 1) // 2
    roles = _roles(pf)
    low = roles.get((d + 1, d))
    high = roles.get((d, d + 1))
    for role in (low, high):
        if role is None or role[1] is not RIGHT or role[2] is not UP:
            raise MalformedFamilyError(
                "cannot re-form the crossing at %r" % ((d, d + 1),)
            )
    paths = list(pf.paths)
    ia, ib = high[0], low[0]  # ia receives the arc, ib the verticals
    pts_a = paths[ia].points()
    pts_b = paths[ib].points()
    ka = next(k for k, pt in enumerate(pts_a) if pt == (d, d + 1))
    kb = next(k for k, pt in enumerate(pts_b) if pt == (d + 1, d))
    new_a = pts_a[:ka] + [(d + 1, d + 1)] + pts_b[kb + 2 :]
    new_b = pts_b[:kb] + [(d, d + 1), (d, d + 2)] + pts_a[ka + 2 :]
    paths[ia] = Path.from_points(new_a)
    paths[ib] = Path.from_points(new_b)
    conn = list(pf.connection)
    conn[ia], conn[ib] = conn[ib], conn[ia]
    return PathFamily(pf.model, paths, conn)


def involution_step(pf):
    """Apply the sign-reversing local change at the unique nearest site."""
    if pf.model.family is not CharacterFamily.O_EVEN:
        raise ValueError("the involution is defined for the even orthogonal family")
    roles = _roles(pf)
    full = set(roles)
    full.update(pf.midpoint_set())
    sites = _collect_crossings(pf, roles)
    if pf.paths:
        _, maxx, _, maxy = _family_bbox(pf)
        for D in range(2 * pf.model.m + 1, maxx + maxy + 1, 2):
            hit = _walk_chain(pf, D, roles, full, for_flip=False)
            if hit is not None:
                sites.append((D, "trap", hit))
    if not sites:
        raise NoSiteError("family has no crossing and no trapped position")
    dmin = min(s[0] for s in sites)
    at_min = [s for s in sites if s[0] == dmin]
    if len(at_min) != 1:
        raise MalformedFamilyError("multiple sites at distance %d" % dmin)
    D, kind, info = at_min[0]
    if kind == "cross":
        resolved, D = _resolve_crossing(pf, info)
        roles2 = _roles(resolved)
        full2 = set(roles2)
        full2.update(resolved.midpoint_set())
        hit = _walk_chain(resolved, D, roles2, full2, for_flip=True)
        if hit is None:
            raise MalformedFamilyError("no flip site on antidiagonal %d" % D)
        return _apply_flip(resolved, hit, D)
    unflipped = _apply_unflip(pf, info, D)
    return _form_crossing(unflipped, D)
