"""Simplicial chain complexes and exact reduced-homology ranks.

Boundary matrices use the reduced convention: the empty face is a genuine
(-1)-dimensional face, so d = 0 carries the augmentation.  Ranks are computed
exactly, either over GF(p) or fraction-free over the rationals; the default
entry point runs GF(32003) and confirms small instances against the rational
answer.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import gcd

import scipy.sparse as sp

from .fields import DEFAULT_PRIME, FieldSpec

#: Confirm GF(p) ranks against characteristic 0 below this column count.
CHAR0_CONFIRM_COLUMNS = 5000


@dataclass(frozen=True)
class SimplicialComplexData:
    """Faces of an abstract simplicial complex, grouped by dimension.

    ``faces_by_dim[d]`` lists the d-faces as sorted tuples of vertex indices
    local to ``vertices``; dimension -1 always holds the empty face.
    """

    vertices: tuple
    faces_by_dim: dict = field(default_factory=dict)

    def __post_init__(self):
        if -1 not in self.faces_by_dim:
            self.faces_by_dim[-1] = [()]

    @property
    def dim(self) -> int:
        return max(self.faces_by_dim)

    def n_faces(self, d: int) -> int:
        return len(self.faces_by_dim.get(d, ()))

    def validate(self):
        """Check the closure-under-subsets and sortedness invariants."""
        for d, faces in self.faces_by_dim.items():
            assert faces == sorted(set(faces)), f"faces in dim {d} unsorted"
            for f in faces:
                assert len(f) == d + 1
                assert list(f) == sorted(f)
                if d >= 0:
                    lower = self.faces_by_dim.get(d - 1, ())
                    for k in range(len(f)):
                        assert f[:k] + f[k + 1 :] in lower, "not subset-closed"

    def to_json(self) -> dict:
        """Debug serialization: vertices plus face lists keyed by dimension."""
        return {
            "vertices": list(self.vertices),
            "faces": {
                str(d): [list(f) for f in faces]
                for d, faces in sorted(self.faces_by_dim.items())
            },
        }


def full_simplex_complex(vertices) -> SimplicialComplexData:
    """The full simplex on the given vertices (used in tests)."""
    import itertools

    verts = tuple(vertices)
    k = len(verts)
    faces = {-1: [()]}
    for d in range(k):
        faces[d] = sorted(itertools.combinations(range(k), d + 1))
    return SimplicialComplexData(vertices=verts, faces_by_dim=faces)


def complex_from_facets(vertices, facets) -> SimplicialComplexData:
    """Subset-closure of the given facets (used in tests and debugging)."""
    verts = tuple(vertices)
    seen = {()}
    for f in facets:
        f = tuple(sorted(f))
        stack = [f]
        while stack:
            g = stack.pop()
            if g in seen:
                continue
            seen.add(g)
            for k in range(len(g)):
                stack.append(g[:k] + g[k + 1 :])
    faces = {}
    for f in seen:
        faces.setdefault(len(f) - 1, []).append(f)
    return SimplicialComplexData(
        vertices=verts, faces_by_dim={d: sorted(fs) for d, fs in faces.items()}
    )


def boundary_matrix(K: SimplicialComplexData, d: int) -> sp.csc_matrix:
    """Signed boundary map from d-faces to (d-1)-faces; d = 0 gives the
    augmentation onto the empty face."""
    if d < 0:
        raise ValueError("boundary matrices start at dimension 0")
    cols = K.faces_by_dim.get(d, [])
    rows = K.faces_by_dim.get(d - 1, [])
    row_index = {f: i for i, f in enumerate(rows)}
    data, ri, ci = [], [], []
    for j, f in enumerate(cols):
        for k in range(len(f)):
            sub = f[:k] + f[k + 1 :]
            data.append(1 if k % 2 == 0 else -1)
            ri.append(row_index[sub])
            ci.append(j)
    return sp.csc_matrix((data, (ri, ci)), shape=(len(rows), len(cols)), dtype=int)


# -- exact sparse rank ---------------------------------------------------------


def _sparse_rows(mat: sp.spmatrix):
    mat = mat.tocsr()
    rows = []
    for i in range(mat.shape[0]):
        lo, hi = mat.indptr[i], mat.indptr[i + 1]
        row = {int(c): int(v) for c, v in zip(mat.indices[lo:hi], mat.data[lo:hi]) if v}
        if row:
            rows.append(row)
    return rows


def sparse_rank(mat: sp.spmatrix, field: FieldSpec) -> int:
    """Exact rank by sparse Gaussian elimination with a Markowitz-style
    pivot rule; integer arithmetic with content reduction when the field is
    the rationals."""
    rows = _sparse_rows(mat)
    p = field.characteristic
    if p:
        for row in rows:
            for c in list(row):
                v = row[c] % p
                if v:
                    row[c] = v
                else:
                    del row[c]
        rows = [r for r in rows if r]
    col_count = {}
    for row in rows:
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    alive = set(range(len(rows)))
    rank = 0
    while alive:
        # pivot row with fewest entries, then its rarest column
        r = min(alive, key=lambda i: len(rows[i]))
        row = rows[r]
        if not row:
            alive.discard(r)
            continue
        c = min(row, key=lambda col: (col_count.get(col, 0), col))
        alive.discard(r)
        rank += 1
        piv = row[c]
        if p:
            inv = pow(piv, p - 2, p)
            row = {cc: (vv * inv) % p for cc, vv in row.items()}
        for i in list(alive):
            other = rows[i]
            a = other.get(c)
            if a is None:
                continue
            for cc in other:
                col_count[cc] -= 1
            if p:
                for cc, vv in row.items():
                    nv = (other.get(cc, 0) - a * vv) % p
                    if nv:
                        other[cc] = nv
                    elif cc in other:
                        del other[cc]
            else:
                for cc in list(other):
                    other[cc] = piv * other[cc]
                for cc, vv in row.items():
                    nv = other.get(cc, 0) - a * vv
                    if nv:
                        other[cc] = nv
                    elif cc in other:
                        del other[cc]
                if other:
                    g = 0
                    for vv in other.values():
                        g = gcd(g, vv)
                    if g > 1:
                        for cc in other:
                            other[cc] //= g
            if not other:
                alive.discard(i)
            else:
                for cc in other:
                    col_count[cc] = col_count.get(cc, 0) + 1
        for cc in row:
            col_count[cc] = col_count.get(cc, 0) - 1
    return rank


def reduced_homology_ranks(K: SimplicialComplexData, field: FieldSpec | None = None):
    """Ranks of reduced homology, as a dict {dimension: rank} for the
    dimensions -1 .. dim(K).

    With ``field=None`` the ranks are computed over GF(32003) and, while the
    boundary matrices stay small, confirmed over the rationals; a mismatch is
    reported as a warning and the rational answer wins.
    """
    if field is not None:
        return _homology_ranks(K, field)
    fast = _homology_ranks(K, FieldSpec(DEFAULT_PRIME))
    if max((K.n_faces(d) for d in K.faces_by_dim), default=0) >= CHAR0_CONFIRM_COLUMNS:
        return fast
    exact = _homology_ranks(K, FieldSpec(0))
    if exact != fast:
        warnings.warn(
            f"homology ranks differ between GF({DEFAULT_PRIME}) and char 0: "
            f"{fast} vs {exact}; using char 0",
            stacklevel=2,
        )
        return exact
    return fast


def _homology_ranks(K: SimplicialComplexData, field: FieldSpec):
    top = K.dim
    ranks = {}
    boundary_rank = {}
    for d in range(0, top + 1):
        boundary_rank[d] = sparse_rank(boundary_matrix(K, d), field)
    for d in range(-1, top + 1):
        ranks[d] = (
            K.n_faces(d) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        )
    return ranks


def euler_characteristic(K: SimplicialComplexData) -> int:
    """Reduced Euler characteristic: alternating face-count sum over
    dimensions >= -1."""
    return sum((-1) ** d * K.n_faces(d) for d in K.faces_by_dim)
