"""Sparse exact Gaussian elimination over an exact field.

Vectors are dicts {column: coefficient} with no stored zeros.  Coefficients
may be Fractions or any field type supporting +, -, *, /, bool and ==.
Pivot choice is always the minimum column of the residue, so every stored
row has its pivot at its minimum column; reductions therefore clear columns
left to right and terminate.  All results are deterministic.
"""

from __future__ import annotations


def vec_add_scaled(target: dict, source: dict, coeff) -> None:
    """target += coeff * source, dropping exact zeros in place."""
    if not coeff:
        return
    for col, val in source.items():
        new = target.get(col, 0) + coeff * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


def vec_scale(vec: dict, coeff) -> dict:
    return {col: coeff * val for col, val in vec.items()} if coeff else {}


class GaussianBasis:
    """Incremental echelon basis of a row space, with optional payloads.

    A payload rides along with its row under normalization; reducing a
    vector reports the payload combination of the rows that were used.
    Payloads are how kernels, intersections and quotient coordinates are
    extracted from one elimination pass.
    """

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: dict = {}  # pivot column -> (row vector, payload or None)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self):
        return self._rows.keys()

    def row(self, pivot):
        return self._rows[pivot]

    def reduce(self, vec: dict):
        """Return (residue, combo): vec = residue + sum(combo-of-payload rows).

        combo accumulates coeff * payload over the rows that were subtracted
        (rows without payloads contribute nothing to combo).
        """
        residue = dict(vec)
        combo: dict = {}
        while True:
            hits = [col for col in residue if col in self._rows]
            if not hits:
                return residue, combo
            col = min(hits)
            coeff = residue.pop(col)
            row, payload = self._rows[col]
            for c, v in row.items():
                if c == col:
                    continue
                new = residue.get(c, 0) - coeff * v
                if new:
                    residue[c] = new
                else:
                    residue.pop(c, None)
            if payload is not None:
                vec_add_scaled(combo, payload, coeff)

    def insert(self, vec: dict, payload: dict | None = None):
        """Insert a vector; return (pivot, residue_payload).

        pivot is None when vec is dependent on the stored rows.  In that
        case residue_payload is payload - combo, i.e. the payload expression
        of the dependency (a kernel element when payloads track preimages).
        """
        residue, combo = self.reduce(vec)
        if payload is None:
            dependency = None
        else:
            dependency = dict(payload)
            vec_add_scaled(dependency, combo, -1)
        if not residue:
            return None, dependency
        pivot = min(residue)
        lead = residue[pivot]
        row = {c: v / lead for c, v in residue.items()}
        stored_payload = None
        if dependency is not None:
            stored_payload = {c: v / lead for c, v in dependency.items()}
        self._rows[pivot] = (row, stored_payload)
        return pivot, None

    def contains(self, vec: dict) -> bool:
        residue, _ = self.reduce(vec)
        return not residue


def span_dim(vectors) -> int:
    basis = GaussianBasis()
    for vec in vectors:
        basis.insert(vec)
    return basis.rank


def kernel_vectors(images) -> list[dict]:
    """Kernel of a linear map given as (source_index, image_vector) pairs.

    Returns coefficient vectors over the source indices spanning the kernel.
    """
    basis = GaussianBasis()
    kernel = []
    for idx, vec in images:
        pivot, dependency = basis.insert(vec, payload={idx: _unit_for(vec)})
        if pivot is None and dependency:
            kernel.append(dependency)
    return kernel


def _unit_for(vec: dict):
    for val in vec.values():
        return val / val  # the field's 1, without naming the type
    return 1


def intersect_with_columns(vectors, keep) -> list[dict]:
    """Spanning set of span(vectors) ∩ {support inside keep}.

    ``keep`` is a predicate on columns.  Eliminates on the discarded
    columns while tracking full vectors; dependencies are exactly the
    combinations supported on the kept columns.
    """
    basis = GaussianBasis()
    result = []
    for vec in vectors:
        outside = {c: v for c, v in vec.items() if not keep(c)}
        if not outside:
            result.append(dict(vec))
            continue
        pivot, dependency = basis.insert(outside, payload=dict(vec))
        if pivot is None and dependency:
            if all(keep(c) for c in dependency):
                result.append(dependency)
    return result


class QuotientSpace:
    """Quotient of a span of cycles by a span of boundaries.

    Homology representatives are the reduced cycle rows; coords() expresses
    any vector of cycles+boundaries in that representative basis.
    """

    def __init__(self, boundaries, cycles):
        self._basis = GaussianBasis()
        for vec in boundaries:
            self._basis.insert(vec)
        self.boundary_rank = self._basis.rank
        self.representatives: list[dict] = []
        for vec in cycles:
            pivot, _ = self._basis.insert(vec)
            if pivot is not None:
                # the stored normalized row is itself the chosen representative
                row, _ = self._basis._rows[pivot]
                index = len(self.representatives)
                self._basis._rows[pivot] = (row, {index: 1})
                self.representatives.append(row)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coords(self, vec: dict) -> dict:
        """Coordinates of vec in the representative basis.

        Raises ValueError if vec is not in cycles + boundaries.
        """
        residue, combo = self._basis.reduce(vec)
        if residue:
            raise ValueError("vector does not lie in cycles + boundaries")
        return combo
