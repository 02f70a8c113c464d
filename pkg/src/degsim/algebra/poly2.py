"""Dense bivariate polynomials in (t, mu) with rational coefficients."""
from __future__ import annotations

from fractions import Fraction

from .poly import Poly


class Poly2:
    """``sum c[i][j] t^i mu^j``; rows index powers of t, columns powers of mu.

    Trailing zero rows and columns are trimmed, so equal polynomials have
    identical grids.
    """

    __slots__ = ("grid",)

    def __init__(self, grid):
        rows = [[Fraction(x) for x in r] for r in grid]
        while rows and not any(rows[-1]):
            rows.pop()
        width = 0
        for r in rows:
            for j in range(len(r) - 1, -1, -1):
                if r[j]:
                    width = max(width, j + 1)
                    break
        self.grid = tuple(tuple(r[:width]) + (Fraction(0),) * (width - len(r)) for r in rows)

    @classmethod
    def from_nested(cls, p: Poly) -> "Poly2":
        """From a Poly in t whose coefficients are Polys in mu (or scalars)."""
        grid = []
        for c in p.coeffs:
            if isinstance(c, Poly):
                grid.append(list(c.coeffs))
            else:
                grid.append([c])
        return cls(grid)

    @property
    def tdeg(self) -> int:
        return len(self.grid) - 1

    @property
    def mudeg(self) -> int:
        return (len(self.grid[0]) - 1) if self.grid else -1

    def is_zero(self) -> bool:
        return not self.grid

    def coeff(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return Fraction(0)

    def t_coeff(self, i: int) -> Poly:
        """Coefficient of t^i as a polynomial in mu."""
        row = self.grid[i] if 0 <= i < len(self.grid) else ()
        return Poly(row, "mu")

    def at_mu(self, mu) -> Poly:
        """Specialize mu, giving a polynomial in t."""
        return Poly([Poly(r, "mu")(mu) for r in self.grid], "t")

    def at_t(self, t) -> Poly:
        out = []
        for j in range(self.mudeg + 1):
            out.append(Poly([r[j] for r in self.grid], "t")(t))
        return Poly(out, "mu")

    def __call__(self, t, mu):
        return self.at_mu(mu)(t)

    def to_nested(self) -> Poly:
        return Poly([Poly(r, "mu") for r in self.grid], "t")

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __repr__(self):
        return f"Poly2({[list(map(str, r)) for r in self.grid]})"

    def __str__(self):
        terms = []
        for i in range(self.tdeg, -1, -1):
            for j in range(len(self.grid[i]) - 1, -1, -1):
                c = self.grid[i][j]
                if not c:
                    continue
                mono = "*".join(
                    m
                    for m in (
                        "" if i == 0 else ("t" if i == 1 else f"t^{i}"),
                        "" if j == 0 else ("mu" if j == 1 else f"mu^{j}"),
                    )
                    if m
                )
                mag = abs(c)
                body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
                terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out
