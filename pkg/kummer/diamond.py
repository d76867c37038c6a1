from dataclasses import dataclass

from .errors import HodgeInvariantError, NonIntegerExponentError



@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    entries: tuple    #entries[p][q] = h^{p,q}


    @classmethod
    def from_poincare(cls, poly, n):
        """Read h^{p,q} off the integer-exponent slots of a Poincare polynomial."""
        lowest = poly.min_exponent()
        if lowest < 0:
            raise NonIntegerExponentError(f"Poincare polynomial has a negative exponent {lowest}")

        return cls(n, tuple(
            tuple(poly.coefficient(p, q) for q in range(n + 1))
            for p in range(n + 1)
        ))


    @classmethod
    def from_matrix(cls, rows):
        n = len(rows) - 1
        if any(len(row) != n + 1 for row in rows):
            raise ValueError("a Hodge diamond is a square grid")
        return cls(n, tuple(tuple(int(h) for h in row) for row in rows))


    def __getitem__(self, index):
        p, q = index
        if not (0 <= p <= self.n and 0 <= q <= self.n):
            return 0
        return self.entries[p][q]


    def violations(self):
        """All failed diamond constraints as (p, q, reason), in (p, q) order."""
        n, found = self.n, []

        for p in range(n + 1):
            for q in range(n + 1):
                h = self[p, q]
                if h < 0:
                    found.append((p, q, f"negative value {h}"))
                if h != self[q, p]:
                    found.append((p, q, f"Hodge symmetry: {h} != h^{{{q},{p}}} = {self[q, p]}"))
                if h != self[n - p, n - q]:
                    found.append((p, q, f"duality: {h} != h^{{{n - p},{n - q}}} = {self[n - p, n - q]}"))

        for p, q in sorted({(0, 0), (n, n), (n, 0), (0, n)}):
            if self[p, q] != 1:
                found.append((p, q, f"Calabi-Yau shape needs 1, found {self[p, q]}"))
        for j in range(1, n):
            if self[j, 0]:
                found.append((j, 0, f"Calabi-Yau shape needs 0, found {self[j, 0]}"))
        return found


    def validate(self):
        found = self.violations()
        if found:
            raise HodgeInvariantError(*found[0])
        return self


    def betti(self):
        n = self.n
        return [
            sum(self[j, i - j] for j in range(max(0, i - n), min(i, n) + 1))
            for i in range(2 * n + 1)
        ]


    def euler(self):
        return sum((-1) ** i * b for i, b in enumerate(self.betti()))


    def diff(self, other):
        size = max(self.n, other.n)
        return [
            (p, q, self[p, q], other[p, q])
            for p in range(size + 1)
            for q in range(size + 1)
            if self[p, q] != other[p, q]
        ]


    def to_dict(self, d, method):
        return {
            'd': d,
            'n': self.n,
            'method': method,
            'entries': [[str(h) for h in row] for row in self.entries],
            'euler': str(self.euler()),
        }


    def pprint(self):
        """Conventional diamond layout, h^{0,0} on top."""
        n = self.n
        rows = []
        for i in range(2 * n + 1):
            row = [""] * abs(n - i)
            for j in range(max(0, i - n), min(i, n) + 1):
                row.extend([str(self[j, i - j]), ""])
            row.extend([""] * (2 * n + 1 - len(row)))
            rows.append(row[:2 * n + 1])

        width = max(len(cell) for row in rows for cell in row) + 2
        return "\n".join(
            "".join(cell.center(width) for cell in row).rstrip()
            for row in rows
        )
