"""Independent reference computations used to freeze expected values.

Nothing here imports the package's algorithms; inputs and outputs are plain
strings so the two routes share no code.
"""

from itertools import product


def brute_force_dyck(n):
    """All Dyck words of semilength n by filtering every binary string (lex order)."""
    out = []
    for chars in product("01", repeat=2 * n):
        h = 0
        for c in chars:
            h += 1 if c == "1" else -1
            if h < 0:
                break
        else:
            if h == 0:
                out.append("".join(chars))
    return out


def fold_levels(word):
    out = []
    for c in word:
        out.append((out[-1] if out else 0) + (1 if c == "1" else -1))
    return out


def cell_grid(word):
    """Cells strictly between path and diagonal, rasterized column by column.

    An east step from (x, y) shades every cell (x, y') with x + 1 <= y' < y.
    """
    x = y = 0
    cells = set()
    for c in word:
        if c == "1":
            y += 1
        else:
            cells.update((x, yy) for yy in range(x + 1, y))
            x += 1
    return cells


def row_counts(word):
    n = len(word) // 2
    cells = cell_grid(word)
    return [sum(1 for (_, yy) in cells if yy == row) for row in range(n)]


def rc(word):
    return "".join("1" if c == "0" else "0" for c in reversed(word))


def sweep_by_hand(word):
    """Sweep exactly as described: reverse, level, collect 0, -1, -2, ... left to right."""
    r = word[::-1]
    lv = fold_levels(r)
    out = []
    level = 0
    while len(out) < len(r):
        out.extend(r[i] for i in range(len(r)) if lv[i] == level)
        level -= 1
    return "".join(out)


def bounce_walk(word):
    """Walk the bounce path cell by cell and sum n - j over interior touch points."""
    n = len(word) // 2
    east_starts = set()
    x = y = 0
    for c in word:
        if c == "1":
            y += 1
        else:
            east_starts.add((x, y))
            x += 1
    px = py = 0
    touches = []
    while (px, py) != (n, n):
        while (px, py) not in east_starts:
            py += 1
        while px < py:
            px += 1
        touches.append(px)
    return sum(n - j for j in touches[:-1])


def dinv_pairs(rows):
    return sum(
        1 for i in range(len(rows)) for j in range(i + 1, len(rows)) if rows[i] - rows[j] in (0, 1)
    )
