"""Closed-form domination and bondage values for the graph families the
toolkit verifies, as pure integer functions with explicit domain guards.

Everything here is exact integer arithmetic; the residue of a length mod 3
is always derived on the spot, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import StarlikeSpec


def _ceil3(n: int) -> int:
    return (n + 2) // 3


def residue_class(n: int) -> int:
    """n mod 3, the case discriminator used by all the product formulas."""
    return n % 3


def gamma_path(n: int) -> int:
    """Domination number of the n-vertex path: ceil(n/3)."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return _ceil3(n)


def gamma_km_pn(m: int, n: int) -> int:
    """Domination number of (complete graph of order m) x (path of order n)
    under the strong product: ceil(n/3), independent of m."""
    if m < 1 or n < 1:
        raise ValueError("both factors need at least one vertex")
    return _ceil3(n)


def bondage_complete(m: int) -> int:
    """Bondage number of the complete graph: ceil(m/2), for m >= 2."""
    if m < 2:
        raise ValueError("a complete graph needs m >= 2 to have a bondage set")
    return (m + 1) // 2


def bondage_path(n: int) -> int:
    """Bondage number of the n-vertex path: 2 when n = 1 (mod 3), else 1."""
    if n < 2:
        raise ValueError("a path needs n >= 2 to have a bondage set")
    return 2 if n % 3 == 1 else 1


def bondage_km_pn(m: int, n: int) -> int:
    """Bondage number of the strong product of a complete graph with a path.

    ceil(m/2), m, or ceil(3m/2) as n is 0, 2, or 1 (mod 3).  For m = 1 the
    arithmetic collapses to the plain path values.
    """
    if m < 1:
        raise ValueError("the complete factor needs at least one vertex")
    if n < 2:
        raise ValueError("the path factor needs n >= 2 to have a bondage set")
    r = n % 3
    if r == 0:
        return (m + 1) // 2
    if r == 2:
        return m
    return (3 * m + 1) // 2


@dataclass(frozen=True)
class StarlikeResidueProfile:
    """How many branch lengths fall in each residue class mod 3."""

    ones: int
    twos: int
    zeros: int

    @property
    def branch_count(self) -> int:
        return self.ones + self.twos + self.zeros


def residue_profile(spec: StarlikeSpec) -> StarlikeResidueProfile:
    ones = sum(1 for b in spec.branches if b % 3 == 1)
    twos = sum(1 for b in spec.branches if b % 3 == 2)
    zeros = sum(1 for b in spec.branches if b % 3 == 0)
    return StarlikeResidueProfile(ones, twos, zeros)


def gamma_starlike(spec: StarlikeSpec) -> int:
    """Domination number of the starlike tree.

    Sum of ceil(n_i/3) over the branches, minus (ones - 1) when some branch
    length is 1 (mod 3), plus 1 when every branch length is 0 (mod 3).
    """
    profile = residue_profile(spec)
    total = sum(_ceil3(b) for b in spec.branches)
    if profile.ones >= 1:
        return total - (profile.ones - 1)
    if profile.twos >= 1:
        return total
    return total + 1


def starlike_canonical_dominating_set(spec: StarlikeSpec) -> tuple[int, ...]:
    """A closed-form minimum dominating set matching ``gamma_starlike``.

    Every third vertex along each branch, with the starting phase set by the
    branch residue (positions 3, 1, 2 for residues 1, 2, 0), plus the centre
    unless some residue-2 branch already covers it.
    """
    profile = residue_profile(spec)
    chosen: list[int] = []
    if profile.ones >= 1 or profile.twos == 0:
        chosen.append(spec.center)
    for i in range(1, spec.branch_count + 1):
        length = spec.branches[i - 1]
        start = {1: 3, 2: 1, 0: 2}[length % 3]
        chosen.extend(spec.branch_vertex(i, k) for k in range(start, length, 3))
    return tuple(sorted(chosen))


class MixedResidueError(ValueError):
    """The starlike bondage formula only covers uniform branch residues."""


def bondage_km_starlike(m: int, spec: StarlikeSpec) -> int:
    """Bondage number of the strong product of a complete graph with a
    starlike tree whose branch lengths all share one residue mod 3.

    ceil(m/2), m, or ceil(3m/2) as the common residue is 1, 2, or 0.
    """
    if m < 1:
        raise ValueError("the complete factor needs at least one vertex")
    if spec.branch_count < 2:
        raise ValueError(
            "need at least two branches; a single branch degenerates to a path"
        )
    residues = {b % 3 for b in spec.branches}
    if len(residues) != 1:
        raise MixedResidueError(
            f"branch residues {sorted(residues)} are not uniform; no formula applies"
        )
    r = residues.pop()
    if r == 1:
        return (m + 1) // 2
    if r == 2:
        return m
    return (3 * m + 1) // 2


@dataclass(frozen=True)
class RegionBound:
    """A region of the tree and the minimum overlap every dominating set has with it."""

    region: str
    vertices: tuple[int, ...]
    minimum: int


def starlike_branch_lower_bounds(spec: StarlikeSpec, i: int) -> tuple[RegionBound, ...]:
    """Lower bounds satisfied by every dominating set of the tree on branch ``i``.

    The bounded region depends on the branch residue: the whole branch (and
    additionally the branch with the centre) for residue 1, the whole branch
    for residue 2, and the branch minus its first vertex for residue 0.
    """
    if not 1 <= i <= spec.branch_count:
        raise ValueError(f"branch index {i} out of range 1..{spec.branch_count}")
    length = spec.branches[i - 1]
    verts = spec.branch_vertices(i)
    need = _ceil3(length)
    r = length % 3
    if r == 1:
        return (
            RegionBound("branch", verts, need - 1),
            RegionBound(
                "augmented-branch", tuple(sorted((spec.center,) + verts)), need
            ),
        )
    if r == 2:
        return (RegionBound("branch", verts, need),)
    return (RegionBound("branch-tail", verts[1:], need),)
