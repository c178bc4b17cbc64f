"""Exact ball algebra on the p-adic integers and its Haar measure.

A ball is a congruence class c + p**level Z_p; a clopen set is a finite
disjoint union of balls in canonical form (no ball contains another, and
no full family of p siblings survives unmerged; balls sort by (level,
center)).  Canonical form is unique, so equal sets serialize identically.

The measure assigns a level-j ball the exact rational (1/N)**j where N is
the number of level-1 sub-balls of the unit ball (N = p here).  This is
the Hausdorff measure of exponent alpha with rho_1**alpha = 1/N kept
symbolically: only the rational (1/N)**j is ever materialised, never a
real power, so a residue field of some other size q reuses the same
arithmetic with branching = q.  Boolean operations refine both operands
to a common level, act on residue sets, and re-canonicalise.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, EnumerationGuardError, PrimeMismatchError
from .intmath import check_prime

_REFINE_GUARD = 10**6
_COUNT_GUARD = 10**7


@dataclass(frozen=True, order=True)
class Ball:
    """The congruence class center + p**level Z_p inside Z_p."""

    p: int
    level: int
    center: int

    def __post_init__(self):
        check_prime(self.p)
        if self.level < 0:
            raise DomainError("ball level must be nonnegative")
        object.__setattr__(self, "center", self.center % self.p**self.level)

    def split(self):
        """The p disjoint sub-balls one level down, partitioning this ball."""
        step = self.p**self.level
        return tuple(
            Ball(self.p, self.level + 1, self.center + i * step)
            for i in range(self.p)
        )

    def contains(self, other):
        """Ball containment; in an ultrametric this is the only overlap."""
        if other.p != self.p:
            raise PrimeMismatchError("balls from different primes")
        return (
            other.level >= self.level
            and other.center % self.p**self.level == self.center
        )

    def parent(self):
        if self.level == 0:
            raise DomainError("the unit ball has no parent")
        return Ball(self.p, self.level - 1, self.center % self.p ** (self.level - 1))

    def measure(self, branching=None):
        """Exact measure (1/branching)**level; branching defaults to p."""
        b = self.p if branching is None else branching
        return Fraction(1, b**self.level)

    def to_json_dict(self):
        return {"level": self.level, "center": self.center}


def _canonicalise(p, balls):
    """Drop contained balls, then merge complete sibling families.

    Works on per-level center sets, so the cost is linear in the number
    of balls times the number of distinct levels.
    """
    by_level = {}
    for b in balls:
        by_level.setdefault(b.level, set()).add(b.center)
    # drop any center covered by a coarser kept ball
    kept = {}
    for lvl in sorted(by_level):
        centers = {
            c
            for c in by_level[lvl]
            if not any(c % p**q in kept[q] for q in kept)
        }
        if centers:
            kept[lvl] = centers
    # merge complete p-sibling families, deepest level first so that a
    # merge can complete a family one level up
    for lvl in range(max(kept, default=0), 0, -1):
        centers = kept.get(lvl)
        if not centers:
            continue
        parents = {}
        for c in centers:
            parents.setdefault(c % p ** (lvl - 1), []).append(c)
        for parent, children in parents.items():
            if len(children) == p:
                centers.difference_update(children)
                kept.setdefault(lvl - 1, set()).add(parent)
        if not centers:
            del kept[lvl]
    return tuple(
        sorted(Ball(p, lvl, c) for lvl, cs in kept.items() for c in cs)
    )


class ClopenSet:
    """A finite disjoint union of balls in Z_p, kept canonical."""

    __slots__ = ("p", "balls")

    def __init__(self, p, balls=()):
        check_prime(p)
        balls = tuple(balls)
        for b in balls:
            if b.p != p:
                raise PrimeMismatchError("ball from a different prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "balls", _canonicalise(p, balls))

    def __setattr__(self, name, value):
        raise AttributeError("ClopenSet is immutable")

    @classmethod
    def full(cls, p):
        return cls(p, [Ball(p, 0, 0)])

    @classmethod
    def empty(cls, p):
        return cls(p, [])

    @property
    def is_empty(self):
        return not self.balls

    def max_level(self):
        return max((b.level for b in self.balls), default=0)

    def _residues(self, level):
        """All residues mod p**level covered by this set."""
        out = set()
        for b in self.balls:
            step = self.p**b.level
            count = self.p ** (level - b.level)
            out.update(b.center + k * step for k in range(count))
        return out

    def _check(self, other):
        if not isinstance(other, ClopenSet):
            raise DomainError("expected a ClopenSet")
        if other.p != self.p:
            raise PrimeMismatchError("clopen sets from different primes")

    def _common_level(self, other=None):
        level = self.max_level()
        if other is not None:
            level = max(level, other.max_level())
        if self.p**level > _REFINE_GUARD:
            raise EnumerationGuardError(
                f"refinement to level {level} exceeds the guard {_REFINE_GUARD}"
            )
        return level

    @classmethod
    def _from_residues(cls, p, level, residues):
        return cls(p, [Ball(p, level, c) for c in residues])

    def union(self, other):
        self._check(other)
        return ClopenSet(self.p, self.balls + other.balls)

    def intersect(self, other):
        self._check(other)
        level = self._common_level(other)
        return ClopenSet._from_residues(
            self.p, level, self._residues(level) & other._residues(level)
        )

    def difference(self, other):
        self._check(other)
        level = self._common_level(other)
        return ClopenSet._from_residues(
            self.p, level, self._residues(level) - other._residues(level)
        )

    def complement(self):
        """Complement inside Z_p."""
        level = self._common_level()
        everything = set(range(self.p**level))
        return ClopenSet._from_residues(
            self.p, level, everything - self._residues(level)
        )

    def translate(self, c):
        """The set shifted by the p-adic integer c (given mod enough levels)."""
        return ClopenSet(
            self.p,
            [Ball(self.p, b.level, b.center + c) for b in self.balls],
        )

    def measure(self, branching=None):
        """Exact Haar measure: the sum of (1/branching)**level over balls."""
        total = Fraction(0)
        for b in self.balls:
            total += b.measure(branching)
        return total

    def __eq__(self, other):
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self.p == other.p and self.balls == other.balls

    def __hash__(self):
        return hash((self.p, self.balls))

    def __repr__(self):
        inner = ", ".join(f"{b.center}+{b.p}^{b.level}Zp" for b in self.balls)
        return f"ClopenSet(p={self.p}, {{{inner}}})"

    def to_json_dict(self):
        return {"p": self.p, "balls": [b.to_json_dict() for b in self.balls]}

    @classmethod
    def from_json_dict(cls, data):
        p = data["p"]
        return cls(p, [Ball(p, b["level"], b["center"]) for b in data["balls"]])


def residue_count(p, level):
    """The number p**level of residues mod p**level.

    Cross-checked by walking the split tree to the requested depth and
    counting its leaves; guarded against oversized enumerations.
    """
    check_prime(p)
    if level < 0:
        raise DomainError("level must be nonnegative")
    expected = p**level
    if expected > _COUNT_GUARD:
        raise EnumerationGuardError(
            f"{p}^{level} exceeds the enumeration guard {_COUNT_GUARD}"
        )
    # leaf count of the split tree, without materialising Ball objects
    leaves = 0
    stack = [0]
    while stack:
        depth = stack.pop()
        if depth == level:
            leaves += 1
        else:
            stack.extend([depth + 1] * p)
    if leaves != expected:
        raise AssertionError("split tree disagrees with the power count")
    return expected
