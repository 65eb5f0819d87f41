"""ASCII and SVG renderers for path families.  Presentation only."""

from .paths import DIAG, DOWN, OHORIZ, RIGHT, UP
from .symfunc import CharacterFamily


def _bbox(pf, pad=1):
    xs, ys = [], []
    for p in pf.paths:
        for x, y in p.points():
            xs.append(x)
            ys.append(y)
    if not xs:
        xs = ys = [0]
    return min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad


def ascii_render(pf):
    """Plain-text picture: o path vertices, -- | / steps, ~ arcs, * the
    boundary line y = x-1."""
    minx, maxx, miny, maxy = _bbox(pf)
    width = (maxx - minx) * 3 + 1
    rows = [[" "] * width for _ in range((maxy - miny) * 2 + 1)]

    def put(x, y, ch, dx=0):
        col = (x - minx) * 3 + dx
        row = (maxy - y) * 2
        if 0 <= row < len(rows) and 0 <= col < width:
            rows[row][col] = ch

    def put_between(x, y, ch, dx=0):
        col = (x - minx) * 3 + dx
        row = (maxy - y) * 2 + 1
        if 0 <= row < len(rows) and 0 <= col < width:
            rows[row][col] = ch

    on_boundary = pf.model.family is not CharacterFamily.GL
    for x in range(minx, maxx + 1):
        for y in range(miny, maxy + 1):
            if on_boundary and y == x - 1:
                put(x, y, "*")
            else:
                put(x, y, ".")
    for p in pf.paths:
        x, y = p.start
        for s in p.steps:
            if s is RIGHT:
                put(x, y, "-", 1)
                put(x, y, "-", 2)
            elif s is UP:
                put_between(x, y + 1, "|")
            elif s is DOWN:
                put_between(x, y, "|")
            elif s is DIAG:
                put_between(x + 1, y + 1, "/", -1)
            elif s is OHORIZ:
                for dx in range(1, 6):
                    put(x, y, "~", dx)
            x, y = x + s.dx, y + s.dy
        for pt in p.points():
            put(pt[0], pt[1], "o")
    return "\n".join("".join(r).rstrip() for r in rows if "".join(r).strip())


def svg_render(pf, scale=24):
    """Standalone SVG with unit steps as lines, arcs for o-horizontal steps
    and the red boundary line y = x-1."""
    minx, maxx, miny, maxy = _bbox(pf)

    def sx(x):
        return (x - minx) * scale + scale

    def sy(y):
        return (maxy - y) * scale + scale

    w = sx(maxx) + scale
    h = sy(miny) + scale
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (w, h, w, h)
    ]
    out.append('<rect width="100%" height="100%" fill="white"/>')
    for x in range(minx, maxx + 1):
        for y in range(miny, maxy + 1):
            out.append(
                '<circle cx="%d" cy="%d" r="1.5" fill="#cccccc"/>' % (sx(x), sy(y))
            )
    if pf.model.family is not CharacterFamily.GL:
        # boundary y = x-1 clipped to the box
        x0, x1 = minx, maxx + 1
        out.append(
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="red" stroke-width="1.5"/>'
            % (sx(x0), sy(x0 - 1), sx(x1), sy(x1 - 1))
        )
    for p in pf.paths:
        x, y = p.start
        for s in p.steps:
            nx, ny = x + s.dx, y + s.dy
            if s is OHORIZ:
                out.append(
                    '<path d="M %d %d Q %d %d %d %d" fill="none" stroke="black" '
                    'stroke-width="2"/>'
                    % (sx(x), sy(y), sx(x + 1), sy(y) - scale, sx(nx), sy(ny))
                )
            else:
                out.append(
                    '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black" '
                    'stroke-width="2"/>' % (sx(x), sy(y), sx(nx), sy(ny))
                )
            x, y = nx, ny
        out.append(
            '<circle cx="%d" cy="%d" r="3" fill="black"/>'
            % (sx(p.start[0]), sy(p.start[1]))
        )
        out.append(
            '<circle cx="%d" cy="%d" r="3" fill="black"/>' % (sx(p.end[0]), sy(p.end[1]))
        )
    out.append("</svg>")
    return "\n".join(out)
