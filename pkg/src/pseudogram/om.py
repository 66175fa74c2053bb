"""Oriented-matroid data of an arrangement: covectors, chirotope, axioms.

Sign vectors are tuples over {-1, 0, +1}; the string form uses '+', '0', '-'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .arrangement import Arrangement, aim_eval, pair_relation
from .cells import build_complex
from .sphere import DegeneracyError

_CHARS = {1: "+", 0: "0", -1: "-"}
_SIGNS = {"+": 1, "0": 0, "-": -1}


def sign_to_str(sign) -> str:
    return "".join(_CHARS[int(s)] for s in sign)


def str_to_sign(s: str) -> tuple:
    return tuple(_SIGNS[c] for c in s)


@dataclass
class CovectorSet:
    n: int
    vectors: frozenset

    def __contains__(self, sign) -> bool:
        return tuple(sign) in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def to_strings(self) -> list[str]:
        return sorted(sign_to_str(v) for v in self.vectors)

    @staticmethod
    def from_strings(n: int, strings) -> "CovectorSet":
        return CovectorSet(n=n, vectors=frozenset(str_to_sign(s) for s in strings))


@dataclass
class Chirotope:
    n: int
    values: dict = field(default_factory=dict)  # sorted triple -> sign for i<j<k

    def __call__(self, i: int, j: int, k: int) -> int:
        if len({i, j, k}) < 3:
            return 0
        order = (i, j, k)
        srt = tuple(sorted(order))
        base = self.values.get(srt, 0)
        if base == 0:
            return 0
        return base * _parity(order)

    def negate(self) -> "Chirotope":
        return Chirotope(self.n, {t: -s for t, s in self.values.items()})

    def triples(self) -> list[tuple]:
        return [
            (i, j, k, self.values.get((i, j, k), 0))
            for i, j, k in itertools.combinations(range(self.n), 3)
        ]

    @staticmethod
    def from_triples(n: int, triples) -> "Chirotope":
        vals = {}
        for i, j, k, s in triples:
            if not (i < j < k):
                raise ValueError("triples must be listed with i < j < k")
            if s:
                vals[(i, j, k)] = int(s)
        return Chirotope(n, vals)


def _parity(order) -> int:
    inv = sum(
        1
        for a in range(3)
        for b in range(a + 1, 3)
        if order[a] > order[b]
    )
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------


def covectors(arr: Arrangement) -> CovectorSet:
    """Sign vectors of all cells of the sphere subdivision, plus zero."""
    cx = build_complex(arr)
    vecs = {tuple([0] * arr.n)}
    for v in cx.vertices:
        vecs.add(v.sign)
    for e in cx.edges:
        vecs.add(e.sign)
    for f in cx.faces:
        vecs.add(f.sign)
    return CovectorSet(n=arr.n, vectors=frozenset(vecs))


def _minus_to_plus_crossing(arr: Arrangement, j: int, k: int):
    """Crossing point of S_j and S_k where travel along S_k goes - to + of S_j."""
    rel = pair_relation(arr, k, j)  # crossings with params along curve k
    if rel.kind != "crossing" or not rel.crossings:
        return None
    hits = [c for c in rel.crossings if c.sign_after_on_i > 0]
    if len(hits) != 1:
        if len(hits) == 2 and np.linalg.norm(hits[0].point + hits[1].point) < 1e-6:
            raise DegeneracyError("both crossings claim the same transition")
        return None
    return hits[0].point


def chirotope(arr: Arrangement) -> Chirotope:
    """Order type by the crossing-point rule.

    chi(i,j,k) is the sign of curve i at the point where S_k, traveling
    positively, crosses S_j from its - side to its + side; 0 when the triple
    is not a basis.  For straight circles this is sign det(a_i, a_j, a_k).
    """
    n = arr.n
    vals = {}
    nz = set(arr.nonzero_indices())
    cross_cache: dict = {}
    for i, j, k in itertools.combinations(range(n), 3):
        if not {i, j, k} <= nz:
            continue
        if (j, k) not in cross_cache:
            rel = pair_relation(arr, j, k)
            cross_cache[(j, k)] = None if rel.kind == "coincident" else True
        if cross_cache[(j, k)] is None:
            continue
        p = _minus_to_plus_crossing(arr, j, k)
        if p is None:
            continue
        s = aim_eval(arr.elements[i], p)
        if s != 0:
            vals[(i, j, k)] = s
    return Chirotope(n, vals)


# ---------------------------------------------------------------------------
# Rank and bases
# ---------------------------------------------------------------------------


def rank_bases(cov: CovectorSet):
    """(rank, bases, independent sets) by the restriction test."""
    n = cov.n
    mat = np.array(sorted(cov.vectors), dtype=np.int8)
    independent = []
    max_size = 0
    for size in range(1, n + 1):
        found = False
        for combo in itertools.combinations(range(n), size):
            patterns = {tuple(row) for row in mat[:, combo]}
            if len(patterns) == 3**size:
                independent.append(frozenset(combo))
                found = True
        if not found:
            break
        max_size = size
    rank = max_size
    bases = {s for s in independent if len(s) == rank}
    return rank, bases, set(independent)


# ---------------------------------------------------------------------------
# Axiom checkers
# ---------------------------------------------------------------------------


@dataclass
class AxiomReport:
    ok: bool
    failures: list

    def __bool__(self) -> bool:
        return self.ok


def check_covector_axioms(cov: CovectorSet, max_failures: int = 1) -> AxiomReport:
    """Standard covector axioms V0-V3.

    V0: zero vector present.  V1: closed under negation.  V2: closed under
    composition.  V3: sign elimination between any two covectors with a
    nonempty separator.
    """
    failures = []
    n = cov.n
    vecs = sorted(cov.vectors)
    mat = np.array(vecs, dtype=np.int8)
    codes = _codes(mat)

    if tuple([0] * n) not in cov.vectors:
        failures.append(("V0", "zero vector missing"))
    neg_codes = _codes(-mat)
    missing = np.setdiff1d(neg_codes, codes)
    if missing.size:
        idx = int(np.where(neg_codes == missing[0])[0][0])
        failures.append(("V1", f"negation of {sign_to_str(vecs[idx])} missing"))
    if failures[:max_failures]:
        return AxiomReport(ok=False, failures=failures[:max_failures])

    m = len(vecs)
    comp = np.where(mat[:, None, :] != 0, mat[:, None, :], mat[None, :, :])
    comp_codes = _codes(comp.reshape(-1, n)).reshape(m, m)
    bad = ~np.isin(comp_codes, codes)
    if bad.any():
        a, b = np.argwhere(bad)[0]
        failures.append(
            ("V2", f"composition of {sign_to_str(vecs[a])} and {sign_to_str(vecs[b])} missing")
        )
        return AxiomReport(ok=False, failures=failures[:max_failures])

    sep = (mat[:, None, :] == -mat[None, :, :]) & (mat[:, None, :] != 0)
    for e in range(n):
        pairs = np.argwhere(sep[:, :, e])
        pairs = pairs[pairs[:, 0] < pairs[:, 1]]
        if not len(pairs):
            continue
        pat = comp[pairs[:, 0], pairs[:, 1], :]  # (p, n)
        wild = sep[pairs[:, 0], pairs[:, 1], :]  # (p, n)
        ok_col = (mat[None, :, :] == pat[:, None, :]) | wild[:, None, :]
        ok_col[:, :, e] = mat[None, :, e] == 0
        exists = ok_col.all(axis=2).any(axis=1)
        if not exists.all():
            a, b = pairs[int(np.argmin(exists))]
            failures.append(
                (
                    "V3",
                    f"no elimination of {sign_to_str(vecs[a])}, {sign_to_str(vecs[b])} at {e}",
                )
            )
            if len(failures) >= max_failures:
                return AxiomReport(ok=False, failures=failures)
    return AxiomReport(ok=not failures, failures=failures)


def _codes(mat: np.ndarray) -> np.ndarray:
    n = mat.shape[-1]
    w = 3 ** np.arange(n, dtype=np.int64)
    return (mat.astype(np.int64) + 1) @ w


def check_chirotope_axioms(chi: Chirotope, max_failures: int = 1) -> AxiomReport:
    """Alternating, not identically zero, 3-term Grassmann-Pluecker exchange."""
    failures = []
    n = chi.n
    if not chi.values or all(v == 0 for v in chi.values.values()):
        return AxiomReport(ok=False, failures=[("GP", "chirotope is identically zero")])
    # alternating holds structurally; verify repeated indices and a sample of
    # permutation identities anyway, since external chirotopes may be loaded
    for i, j, k in itertools.combinations(range(n), 3):
        v = chi(i, j, k)
        if chi(j, i, k) != -v or chi(k, i, j) != v or chi(i, i, k) != 0:
            failures.append(("ALT", f"alternating violated at ({i},{j},{k})"))
            return AxiomReport(ok=False, failures=failures)
    for a, b in itertools.permutations(range(n), 2):
        for c, d, e in itertools.combinations(range(n), 3):
            if len({a, b, c, d, e}) < 5:
                continue
            t1 = chi(a, b, c) * chi(a, d, e)
            t2 = -chi(a, b, d) * chi(a, c, e)
            t3 = chi(a, b, e) * chi(a, c, d)
            terms = (t1, t2, t3)
            if any(terms) and not (min(terms) < 0 < max(terms)):
                failures.append(
                    ("GP", f"3-term exchange fails on a={a}, b={b}, (c,d,e)=({c},{d},{e})")
                )
                if len(failures) >= max_failures:
                    return AxiomReport(ok=False, failures=failures)
    return AxiomReport(ok=not failures, failures=failures)


def cocircuits(cov: CovectorSet) -> set:
    """Nonzero covectors of minimal support."""
    vecs = [v for v in cov.vectors if any(v)]
    supports = [sum(1 << i for i, s in enumerate(v) if s) for v in vecs]
    out = set()
    for a, va in enumerate(vecs):
        sa = supports[a]
        minimal = True
        for b, vb in enumerate(vecs):
            sb = supports[b]
            if sb != sa and (sb & sa) == sb:
                minimal = False
                break
        if minimal:
            out.add(va)
    return out


def om_consistency(cov: CovectorSet, chi: Chirotope) -> bool:
    """Covectors and chirotope describe the same oriented matroid.

    For every pair {j, k} inside a basis of the covector set, the vector of
    chirotope values l -> chi(l, j, k) must be one of the two cocircuits
    vanishing on {j, k}.  The covector set is closed under negation, so chi
    and -chi are both consistent (one global sign).
    """
    if cov.n != chi.n:
        return False
    n = cov.n
    rank, bases, _ = rank_bases(cov)
    if rank != 3 or not bases:
        return False
    coc = cocircuits(cov)
    pairs = set()
    for basis in bases:
        i, j, k = sorted(basis)
        pairs.update({(j, k), (i, k), (i, j)})
    for j, k in sorted(pairs):
        vec = tuple(chi(l, j, k) for l in range(n))
        if not any(vec):
            return False
        if vec not in coc:
            return False
    return True
