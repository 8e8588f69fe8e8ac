"""Weight multisets of modules: characters, graded powers, twisted products.

Multiplicities are plain Python integers, so they never overflow.  Character
construction uses the Freudenthal recursion over dominant weights and then
spreads multiplicities along Weyl orbits; the result is checked against the
Weyl dimension formula before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Union

from .errors import InputError, OracleError, ResourceLimitError
from .rootsys import Coords, RootSystem, Weight, build_root_system

DEFAULT_ENTRY_CAP = 10**7

WeightLike = Union[Weight, Iterable[int]]


def _as_coords(rs: RootSystem, w: WeightLike) -> Coords:
    coords = w.coords if isinstance(w, Weight) else tuple(w)
    if len(coords) != rs.rank:
        raise InputError(
            f"weight has {len(coords)} coordinates, {rs.name} needs {rs.rank}"
        )
    return coords


@dataclass(frozen=True)
class WeightMultiset:
    """A finite multiset of weights with positive integer multiplicities."""

    items: tuple[tuple[Coords, int], ...]

    @staticmethod
    def from_dict(table: Mapping[Coords, int]) -> "WeightMultiset":
        cleaned = {}
        for coords, mult in table.items():
            key = coords.coords if isinstance(coords, Weight) else tuple(coords)
            if mult < 0:
                raise InputError(f"negative multiplicity for {key}")
            if mult:
                cleaned[key] = cleaned.get(key, 0) + mult
        return WeightMultiset(tuple(sorted(cleaned.items())))

    @staticmethod
    def single(rs: RootSystem, w: WeightLike, mult: int = 1) -> "WeightMultiset":
        return WeightMultiset.from_dict({_as_coords(rs, w): mult})

    @staticmethod
    def trivial(rs: RootSystem) -> "WeightMultiset":
        return WeightMultiset.from_dict({(0,) * rs.rank: 1})

    def coords_items(self) -> Iterator[tuple[Coords, int]]:
        return iter(self.items)

    def as_dict(self) -> dict[Coords, int]:
        return dict(self.items)

    def multiplicity(self, w: WeightLike) -> int:
        key = w.coords if isinstance(w, Weight) else tuple(w)
        return dict(self.items).get(key, 0)

    @property
    def total_dimension(self) -> int:
        return sum(m for _, m in self.items)

    @property
    def support_size(self) -> int:
        return len(self.items)

    def is_empty(self) -> bool:
        return not self.items

    def weights(self) -> Iterator[Weight]:
        for coords, _ in self.items:
            yield Weight(coords)


def nilradical_dual_weights(rs: RootSystem) -> WeightMultiset:
    """Weights of the dual of the nilradical: every positive root, once."""
    return WeightMultiset.from_dict(
        {root.omega_coords: 1 for root in rs.positive_roots}
    )


def weyl_dimension(rs: RootSystem, lam: WeightLike) -> int:
    """Dimension of the highest-weight module, by the Weyl product formula."""
    coords = _as_coords(rs, lam)
    if any(c < 0 for c in coords):
        raise InputError("weyl_dimension needs a dominant weight")
    shifted = tuple(c + 1 for c in coords)
    num = 1
    den = 1
    for root in rs.positive_roots:
        vec = root.coroot_pairing
        num *= sum(v * c for v, c in zip(vec, shifted))
        den *= sum(vec)
    if num % den:
        raise OracleError("Weyl dimension formula did not give an integer")
    return num // den


def _support(rs: RootSystem, lam: Coords) -> set[Coords]:
    """All weights of the highest-weight module with highest weight lam.

    Level-by-level search downward from lam.  A candidate that is dominant is
    always a weight; a non-dominant candidate is a weight exactly when its
    reflection through any strictly negative coordinate (which lands on an
    earlier level) is one.
    """
    alpha_rows = [w.coords for w in rs.simple_roots]
    n = rs.rank
    support = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for row in alpha_rows:
                cand = tuple(a - b for a, b in zip(w, row))
                if cand in support:
                    continue
                for i, c in enumerate(cand):
                    if c < 0:
                        mirrored = tuple(
                            x - c * r for x, r in zip(cand, alpha_rows[i])
                        )
                        accept = mirrored in support
                        break
                else:
                    accept = True
                if accept:
                    support.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return support


def _freudenthal_multiplicities(
    rs: RootSystem, lam: Coords, support: set[Coords]
) -> dict[Coords, int]:
    """Multiplicity of every dominant weight in the support."""
    n = rs.rank
    det = rs.cartan_det

    def scaled_norm(coords: Coords) -> int:
        # det * <v, v> where v = coords + rho, as an integer.
        v = tuple(c + 1 for c in coords)
        scaled = rs.root_basis_scaled(v)
        d = rs.d_symmetrizer
        return sum(scaled[j] * d[j] * v[j] for j in range(n))

    # Integer vectors giving det-free inner products <v, alpha>.
    root_data = [
        (
            root.omega_coords,
            tuple(root.root_coords[j] * rs.d_symmetrizer[j] for j in range(n)),
        )
        for root in rs.positive_roots
    ]

    level_of = {}
    for coords in support:
        diff = tuple(a - b for a, b in zip(lam, coords))
        scaled = rs.root_basis_scaled(diff)
        level_of[coords] = sum(scaled) // det
    dominants = sorted(
        (c for c in support if all(x >= 0 for x in c)),
        key=lambda c: level_of[c],
    )

    top_norm = scaled_norm(lam)
    mult: dict[Coords, int] = {lam: 1}
    for mu in dominants:
        if mu == lam:
            continue
        total = 0
        for omega, ip_vec in root_data:
            nu = tuple(a + b for a, b in zip(mu, omega))
            while nu in support:
                m_nu = mult[rs.dominant_representative(nu)]
                total += m_nu * sum(v * c for v, c in zip(ip_vec, nu))
                nu = tuple(a + b for a, b in zip(nu, omega))
        denom = top_norm - scaled_norm(mu)
        value = Q(2 * det * total, denom)
        if value.denominator != 1 or value <= 0:
            raise OracleError(f"bad multiplicity {value} at {mu}")
        mult[mu] = int(value)
    return mult


def _orbit(rs: RootSystem, start: Coords) -> set[Coords]:
    n = rs.rank
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                if w[i] == 0:
                    continue
                img = rs.reflect(w, i)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def _character_cached(family: str, rank: int, lam: Coords, cap: int) -> WeightMultiset:
    rs = build_root_system(family, rank)
    dim = weyl_dimension(rs, lam)
    if dim > cap:
        raise ResourceLimitError(
            f"character of {lam} has dimension {dim}, above the cap {cap}"
        )
    support = _support(rs, lam)
    mult = _freudenthal_multiplicities(rs, lam, support)
    table: dict[Coords, int] = {}
    covered = 0
    for mu, m in mult.items():
        orbit = _orbit(rs, mu)
        covered += m * len(orbit)
        for coords in orbit:
            table[coords] = m
    if covered != dim or len(table) != len(support):
        raise OracleError(
            f"character of {lam}: built dimension {covered}, "
            f"Weyl formula says {dim}"
        )
    return WeightMultiset.from_dict(table)


def weyl_character(
    rs: RootSystem, lam: WeightLike, cap: int = DEFAULT_ENTRY_CAP
) -> WeightMultiset:
    """Weight multiset of the highest-weight module with highest weight lam."""
    coords = _as_coords(rs, lam)
    if any(c < 0 for c in coords):
        raise InputError("weyl_character needs a dominant weight")
    return _character_cached(rs.family, rs.rank, coords, cap)


def _scale_coords(coords: Coords, k: int) -> Coords:
    return tuple(k * c for c in coords)


def graded_power(
    kind: str,
    ws: WeightMultiset,
    n: int,
    cap: int = DEFAULT_ENTRY_CAP,
) -> WeightMultiset:
    """Weights of the n-th symmetric or exterior power of a weight multiset."""
    if kind not in ("sym", "ext"):
        raise InputError(f"kind must be 'sym' or 'ext', got {kind!r}")
    if n < 0:
        raise InputError(f"power degree must be non-negative, got {n}")
    if n == 0:
        if not ws.items:
            raise InputError("graded_power of an empty multiset needs n > 0")
        rank = len(ws.items[0][0])
        return WeightMultiset.from_dict({(0,) * rank: 1})
    if kind == "ext" and n > ws.total_dimension:
        return WeightMultiset(())

    # One dict per degree 0..n; fold in one weight (with multiplicity) at a time.
    rank = len(ws.items[0][0])
    zero = (0,) * rank
    levels: list[dict[Coords, int]] = [{zero: 1}] + [dict() for _ in range(n)]
    touched = 1
    for coords, mult in ws.items:
        top = mult if kind == "ext" else n
        factor = []
        for k in range(0, min(top, n) + 1):
            count = comb(mult, k) if kind == "ext" else comb(mult + k - 1, k)
            if count:
                factor.append((k, _scale_coords(coords, k), count))
        new_levels: list[dict[Coords, int]] = [dict() for _ in range(n + 1)]
        for deg in range(n + 1):
            src = levels[deg]
            if not src:
                continue
            for k, shift, count in factor:
                if deg + k > n:
                    break
                dst = new_levels[deg + k]
                for w, m in src.items():
                    key = tuple(a + b for a, b in zip(w, shift))
                    dst[key] = dst.get(key, 0) + m * count
        levels = new_levels
        touched = sum(len(d) for d in levels)
        if touched > cap:
            raise ResourceLimitError(
                f"graded_power working set hit {touched} entries, cap {cap}"
            )
    return WeightMultiset.from_dict(levels[n])


def combine(
    ws1: WeightMultiset,
    ws2: WeightMultiset,
    twist2: int,
    p: int,
    cap: int = DEFAULT_ENTRY_CAP,
) -> WeightMultiset:
    """Product multiset {sigma + p**twist2 * tau} with multiplied counts."""
    if p < 2:
        raise InputError(f"p must be at least 2, got {p}")
    if twist2 < 0:
        raise InputError(f"twist must be non-negative, got {twist2}")
    scale = p**twist2
    out: dict[Coords, int] = {}
    for w1, m1 in ws1.items:
        for w2, m2 in ws2.items:
            key = tuple(a + scale * b for a, b in zip(w1, w2))
            out[key] = out.get(key, 0) + m1 * m2
            if len(out) > cap:
                raise ResourceLimitError(
                    f"combine result exceeded {cap} distinct weights"
                )
    return WeightMultiset.from_dict(out)
