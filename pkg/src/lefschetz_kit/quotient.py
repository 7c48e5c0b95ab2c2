"""Graded pieces of power-sum quotients: bases, initial ideals, map ranks.

The ideal under study is generated by the a-th powers of all variables plus
extra degree-a forms, by default the a-th power of the variable sum. All
ranks and dimensions are exact. Computations run in a basis of monomials
with every exponent below a, which is a valid basis of the quotient by the
pure powers alone; multiples of pure powers are projected away instead of
being carried as matrix rows, which gives the same ranks and the same
initial ideal as the full multiplication matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InternalFault
from .linalg import (FAST_PRIME, RATIONALS, FieldTag, RationalMatrix,
                     _NUMPY_PRIME_LIMIT, _mod_matmul, _residue,
                     _rref_fraction, _rref_mod_numpy, _rref_mod_python,
                     kernel_basis, prime_field)
from .monomials import (GeneratorCase, Monomial, _iter_exponents,
                        in_combinatorial_ideal, initial_generators,
                        revlex_sort_key)


@dataclass(frozen=True)
class Form:
    """Homogeneous polynomial with exact coefficients in revlex order.

    terms maps monomials to nonzero rational coefficients and is kept
    strictly revlex descending. The zero form has no terms but still
    carries its degree.
    """

    degree: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        nvars = None
        keys = []
        for m, c in self.terms:
            if c == 0:
                raise ValueError("zero coefficients are not stored")
            if m.degree != self.degree:
                raise ValueError("every term must have the declared degree")
            if nvars is None:
                nvars = m.nvars
            elif m.nvars != nvars:
                raise ValueError("terms must share one variable count")
            keys.append(revlex_sort_key(m))
        if any(not a < b for a, b in zip(keys, keys[1:])):
            raise ValueError("terms must be strictly revlex descending")

    @property
    def nvars(self) -> int | None:
        return self.terms[0][0].nvars if self.terms else None


def form_from_coefficients(degree: int, coeff_map) -> Form:
    """Build a Form from a monomial-to-coefficient mapping, dropping zeros."""
    items = [(m, Fraction(c)) for m, c in coeff_map.items() if c != 0]
    items.sort(key=lambda mc: revlex_sort_key(mc[0]))
    return Form(degree=degree, terms=tuple(items))


def linear_form(coeffs) -> Form:
    """The degree-1 form with the given per-variable coefficients."""
    coeffs = list(coeffs)
    n = len(coeffs)
    cmap = {}
    for i, c in enumerate(coeffs):
        if c:
            cmap[Monomial(tuple(1 if j == i else 0 for j in range(n)))] = Fraction(c)
    return form_from_coefficients(1, cmap)


def variable_sum(n: int) -> Form:
    return linear_form([1] * n)


def multiply_forms(f: Form, g: Form) -> Form:
    if f.nvars is not None and g.nvars is not None and f.nvars != g.nvars:
        raise ValueError("variable counts differ")
    out: dict = {}
    gterms = [(m.exponents, c) for m, c in g.terms]
    for m1, c1 in f.terms:
        e1 = m1.exponents
        for e2, c2 in gterms:
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return form_from_coefficients(
        f.degree + g.degree, {Monomial(e): c for e, c in out.items()})


def form_power(f: Form, k: int) -> Form:
    if k < 1:
        raise ValueError("power must be at least 1")
    out = f
    for _ in range(k - 1):
        out = multiply_forms(out, f)
    return out


def linear_coefficients(f: Form) -> tuple[Fraction, ...]:
    """Per-variable coefficient vector of a degree-1 form."""
    if f.degree != 1:
        raise ValueError("need a degree-1 form")
    if f.nvars is None:
        raise ValueError("the zero form has no variable count")
    lookup = {m.exponents: c for m, c in f.terms}
    n = f.nvars
    return tuple(lookup.get(tuple(1 if j == i else 0 for j in range(n)), Fraction(0))
                 for i in range(n))


def random_linear_form(n: int, seed, index: int | None = None) -> Form:
    """Deterministic pseudo-random linear form, coefficients in [1, 10^6].

    The stream is keyed by n and the seed; index distinguishes the members
    when one seed must yield several independent forms.
    """
    tag = f"linear-form:{n}:{seed}" if index is None else f"linear-form:{n}:{seed}:{index}"
    rng = random.Random(tag)
    return linear_form([rng.randint(1, 10**6) for _ in range(n)])


@dataclass(frozen=True)
class IdealSpec:
    """Pure a-th powers of all n variables plus extra degree-a forms.

    When extra_forms is omitted, the a-th power of x_1 + ... + x_n is used.
    Passing an empty tuple keeps only the pure powers.
    """

    n: int
    a: int
    extra_forms: tuple[Form, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one variable")
        if self.a < 1:
            raise ValueError("the exponent must be at least 1")
        if self.extra_forms is None:
            object.__setattr__(self, "extra_forms",
                               (form_power(variable_sum(self.n), self.a),))
        else:
            object.__setattr__(self, "extra_forms", tuple(self.extra_forms))
        for f in self.extra_forms:
            if f.degree != self.a:
                raise ValueError("extra forms must be homogeneous of degree a")
            if f.nvars is not None and f.nvars != self.n:
                raise ValueError("extra forms must use n variables")


def _capped_basis(spec: IdealSpec, d: int) -> list[tuple[int, ...]]:
    if d < 0:
        return []
    return list(_iter_exponents(spec.n, d, spec.a - 1))


def _v_rows(spec: IdealSpec, d: int, field_tag: FieldTag):
    """Projections of (monomial times extra form) into the capped basis."""
    basis = _capped_basis(spec, d)
    col = {e: i for i, e in enumerate(basis)}
    p = None if field_tag.is_rational else field_tag.characteristic
    zero = Fraction(0) if p is None else 0
    rows = []
    for f in spec.extra_forms:
        fterms = [(m.exponents, c if p is None else _residue(c, p))
                  for m, c in f.terms]
        for m in _iter_exponents(spec.n, d - spec.a, spec.a - 1):
            row = [zero] * len(basis)
            for e, c in fterms:
                j = col.get(tuple(x + y for x, y in zip(m, e)))
                if j is not None:
                    row[j] = row[j] + c if p is None else (row[j] + c) % p
            if any(row):
                rows.append(row)
    return basis, col, rows


@lru_cache(maxsize=64)
def _reduce_spec(spec: IdealSpec, d: int, field_tag: FieldTag):
    """Cached echelon data of the extra-form span in capped degree d.

    Returns (basis, col, reduced_rows, pivot_columns). The reduced rows are
    Fraction lists in the rational case and an int64 array or int lists in
    the prime case.
    """
    basis, col, rows = _v_rows(spec, d, field_tag)
    if field_tag.is_rational:
        red, piv = _rref_fraction(rows, len(basis))
    elif field_tag.characteristic < _NUMPY_PRIME_LIMIT:
        arr = (np.array(rows, dtype=np.int64) if rows
               else np.zeros((0, len(basis)), dtype=np.int64))
        red, piv = _rref_mod_numpy(arr, field_tag.characteristic)
    else:
        red, piv = _rref_mod_python(rows, len(basis), field_tag.characteristic)
    return basis, col, red, list(piv)


def ideal_degree_basis(spec: IdealSpec, d: int) -> RationalMatrix:
    """Row span of degree d of the ideal in the full monomial basis.

    One row per product of a generator with each degree d-a monomial, pure
    powers included; columns run over all degree-d monomials in revlex
    descending order. Below degree a the matrix has no rows but keeps the
    full column count.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis = list(_iter_exponents(spec.n, d, None))
    col = {e: i for i, e in enumerate(basis)}
    rows = []
    if d >= spec.a:
        mults = list(_iter_exponents(spec.n, d - spec.a, None))
        for i in range(spec.n):
            pure = tuple(spec.a if j == i else 0 for j in range(spec.n))
            for m in mults:
                row = [Fraction(0)] * len(basis)
                row[col[tuple(x + y for x, y in zip(m, pure))]] = Fraction(1)
                rows.append(row)
        for f in spec.extra_forms:
            fterms = [(mm.exponents, c) for mm, c in f.terms]
            for m in mults:
                row = [Fraction(0)] * len(basis)
                for e, c in fterms:
                    j = col[tuple(x + y for x, y in zip(m, e))]
                    row[j] += c
                if any(row):
                    rows.append(row)
    return RationalMatrix.from_rows(rows, cols=len(basis), field_tag=RATIONALS)


def initial_degree_piece(spec: IdealSpec, d: int,
                         field_tag: FieldTag = RATIONALS) -> set[Monomial]:
    """Leading monomials of the degree-d piece of the ideal.

    Equals the pivot-column monomials of echelonize(ideal_degree_basis):
    every monomial divisible by a pure power appears, plus the pivots of
    the reduced extra-form span in the capped basis.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis, _, _, piv = _reduce_spec(spec, d, field_tag)
    out = {Monomial(basis[c]) for c in piv}
    a = spec.a
    for e in _iter_exponents(spec.n, d, None):
        if any(x >= a for x in e):
            out.add(Monomial(e))
    return out


def graded_dimension(spec: IdealSpec, d: int,
                     field_tag: FieldTag = RATIONALS) -> int:
    """Dimension of degree d of the quotient by the ideal."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis, _, _, piv = _reduce_spec(spec, d, field_tag)
    return len(basis) - len(piv)


def standard_monomials(spec: IdealSpec, d: int,
                       field_tag: FieldTag = RATIONALS) -> list[Monomial]:
    """Monomial basis of degree d of the quotient: capped non-pivot columns."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis, _, _, piv = _reduce_spec(spec, d, field_tag)
    pivset = set(piv)
    return [Monomial(e) for i, e in enumerate(basis) if i not in pivset]


def support_bound_check(n: int, a: int, d: int) -> bool:
    """Whether all minimal non-pure generators of the initial ideal through
    degree d involve only the first ceil(2d/(a-1)) variables."""
    if a < 2 or d < a:
        raise ValueError("need d >= a >= 2")
    bound = -(-2 * d // (a - 1))
    if n < bound:
        raise ValueError("need n >= ceil(2d/(a-1))")
    spec = IdealSpec(n=n, a=a)
    pieces = {e: initial_degree_piece(spec, e) for e in range(a - 1, d + 1)}
    for e_deg in range(a, d + 1):
        below = pieces[e_deg - 1]
        for m in pieces[e_deg]:
            exps = m.exponents
            divisible = False
            for i, ex in enumerate(exps):
                if ex and Monomial(exps[:i] + (ex - 1,) + exps[i + 1:]) in below:
                    divisible = True
                    break
            if divisible:
                continue
            if any(ex >= a for ex in exps):
                continue
            if any(exps[bound:]):
                return False
    return True


def _lift_rows(spec: IdealSpec, ell: Form, std_b, col_d, width: int,
               field_tag: FieldTag):
    p = None if field_tag.is_rational else field_tag.characteristic
    zero = Fraction(0) if p is None else 0
    terms = [(m.exponents, c if p is None else _residue(c, p))
             for m, c in ell.terms]
    rows = []
    for mb in std_b:
        row = [zero] * width
        for e, c in terms:
            j = col_d.get(tuple(x + y for x, y in zip(mb, e)))
            if j is not None:
                row[j] = row[j] + c if p is None else (row[j] + c) % p
        rows.append(row)
    return rows


def multiplication_map_rank(spec: IdealSpec, d: int, ell: Form,
                            mode: FieldTag = RATIONALS) -> dict:
    """Exact rank data of multiplication by a linear form into degree d.

    The map goes from degree d-1 of the quotient to degree d. Returns the
    rank together with both quotient dimensions. The rank is obtained by
    reducing the lifted products against the echelonized ideal span, so no
    stacked matrix is ever formed.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if ell.degree != 1:
        raise ValueError("need a degree-1 form")
    if ell.nvars is not None and ell.nvars != spec.n:
        raise ValueError("the form must use n variables")
    basis_d, col_d, red_d, piv_d = _reduce_spec(spec, d, mode)
    basis_b, _, _, piv_b = _reduce_spec(spec, d - 1, mode)
    pivset_b = set(piv_b)
    std_b = [e for i, e in enumerate(basis_b) if i not in pivset_b]
    dim_below = len(std_b)
    dim_at = len(basis_d) - len(piv_d)
    if not std_b:
        return {"rank": 0, "dim_below": 0, "dim_at": dim_at}
    lift = _lift_rows(spec, ell, std_b, col_d, len(basis_d), mode)
    if mode.is_rational:
        for row in lift:
            for rrow, c in zip(red_d, piv_d):
                f = row[c]
                if f:
                    row[:] = [x - f * y for x, y in zip(row, rrow)]
        _, piv_res = _rref_fraction(lift, len(basis_d))
    elif mode.characteristic < _NUMPY_PRIME_LIMIT:
        p = mode.characteristic
        arr = np.array(lift, dtype=np.int64)
        if piv_d:
            arr = (arr - _mod_matmul(arr[:, piv_d], red_d, p)) % p
        _, piv_res = _rref_mod_numpy(arr, p)
    else:
        p = mode.characteristic
        for row in lift:
            for rrow, c in zip(red_d, piv_d):
                f = row[c]
                if f:
                    row[:] = [(x - f * y) % p for x, y in zip(row, rrow)]
        _, piv_res = _rref_mod_python(lift, len(basis_d), p)
    return {"rank": len(piv_res), "dim_below": dim_below, "dim_at": dim_at}


def multiplication_kernel(spec: IdealSpec, d: int, ell: Form) -> list[Form]:
    """Exact rational basis of the kernel of multiplication into degree d.

    Kernel vectors are returned as degree d-1 forms supported on the
    standard monomial basis of the quotient.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if ell.degree != 1:
        raise ValueError("need a degree-1 form")
    basis_d, col_d, red_d, piv_d = _reduce_spec(spec, d, RATIONALS)
    basis_b, _, _, piv_b = _reduce_spec(spec, d - 1, RATIONALS)
    pivset_b = set(piv_b)
    std_b = [e for i, e in enumerate(basis_b) if i not in pivset_b]
    pivset_d = set(piv_d)
    std_d_index = {i: k for k, i in
                   enumerate(i for i in range(len(basis_d)) if i not in pivset_d)}
    if not std_b:
        return []
    lift = _lift_rows(spec, ell, std_b, col_d, len(basis_d), RATIONALS)
    mat_cols = []
    for row in lift:
        for rrow, c in zip(red_d, piv_d):
            f = row[c]
            if f:
                row[:] = [x - f * y for x, y in zip(row, rrow)]
        mat_cols.append([row[i] for i in range(len(basis_d)) if i not in pivset_d])
    nrows = len(std_d_index)
    mat_rows = [[mat_cols[c][r] for c in range(len(std_b))] for r in range(nrows)]
    M = RationalMatrix.from_rows(mat_rows, cols=len(std_b), field_tag=RATIONALS)
    out = []
    for v in kernel_basis(M):
        cmap = {Monomial(e): x for e, x in zip(std_b, v) if x}
        out.append(form_from_coefficients(d - 1, cmap))
    return out


def _monomial_quotient_data(case: GeneratorCase, n: int, d: int):
    if case.kind not in ("squares", "cubes"):
        raise ValueError("need a combinatorial case")
    if d < 1:
        raise ValueError("degree must be at least 1")
    a = case.exponent
    gens = initial_generators(case, n, max(a, d))

    def member(e):
        return in_combinatorial_ideal(Monomial(e), gens)

    std_b = [e for e in _iter_exponents(n, d - 1, a - 1) if not member(e)]
    std_d = [e for e in _iter_exponents(n, d, a - 1) if not member(e)]
    row_index = {e: i for i, e in enumerate(std_d)}
    rows = [[0] * len(std_b) for _ in std_d]
    for c, mu in enumerate(std_b):
        for i in range(n):
            bumped = mu[:i] + (mu[i] + 1,) + mu[i + 1:]
            r = row_index.get(bumped)
            if r is not None:
                rows[r][c] += 1
    return std_b, std_d, rows


def monomial_quotient_map_rank(case: GeneratorCase, n: int, d: int) -> dict:
    """Rank data of multiplication by the variable sum on the quotient by
    the combinatorial monomial ideal, from degree d-1 to degree d."""
    std_b, std_d, rows = _monomial_quotient_data(case, n, d)
    _, piv = _rref_fraction([[Fraction(x) for x in r] for r in rows], len(std_b))
    return {"rank": len(piv), "dim_below": len(std_b), "dim_at": len(std_d)}


def monomial_quotient_kernel(case: GeneratorCase, n: int, d: int) -> list[Form]:
    """Kernel basis of the same combinatorial multiplication map, as forms."""
    std_b, std_d, rows = _monomial_quotient_data(case, n, d)
    M = RationalMatrix.from_rows(rows, cols=len(std_b), field_tag=RATIONALS)
    out = []
    for v in kernel_basis(M):
        cmap = {Monomial(e): x for e, x in zip(std_b, v) if x}
        out.append(form_from_coefficients(d - 1, cmap))
    return out


def injectivity_threshold_check(a: int, d: int, n_range, seeds,
                                field_tag: FieldTag | None = None) -> list[dict]:
    """Injectivity verdicts of multiplication by seeded random linear forms.

    One row per n. Any seed of full column rank certifies injectivity, and
    that certificate is exact even in prime mode. A non-injective verdict
    requires every seed to agree; in prime mode a disagreement escalates to
    rational arithmetic, and a rational disagreement raises InternalFault.
    Each row also reports whether n meets the exact closed-form inequality
    that guarantees injectivity.
    """
    if a < 2 or d < a:
        raise ValueError("need d >= a >= 2")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    bound = -(-2 * d // (a - 1)) + Fraction(2 * d - 1, a - 1)
    rows = []
    for n in n_range:
        row = _injectivity_cell(a, d, int(n), seeds, field_tag)
        row["inequality_met"] = bool(Fraction(n) >= bound)
        rows.append(row)
    return rows


def _injectivity_cell(a: int, d: int, n: int, seeds, field_tag) -> dict:
    tag = field_tag if field_tag is not None else prime_field(FAST_PRIME)
    spec = IdealSpec(n=n, a=a)
    datas = [multiplication_map_rank(spec, d, random_linear_form(n, s), mode=tag)
             for s in seeds]
    dim_below = datas[0]["dim_below"]
    dim_at = datas[0]["dim_at"]
    if any(dt["rank"] == dim_below for dt in datas):
        return {"n": n, "dim_below": dim_below, "dim_at": dim_at,
                "rank": dim_below, "injective": True}
    ranks = {dt["rank"] for dt in datas}
    if len(ranks) > 1:
        if tag.is_rational:
            raise InternalFault(
                f"rational ranks disagree across seeds at n={n}: {sorted(ranks)}")
        return _injectivity_cell(a, d, n, seeds, RATIONALS)
    return {"n": n, "dim_below": dim_below, "dim_at": dim_at,
            "rank": ranks.pop(), "injective": False}


@dataclass(frozen=True)
class DegreeRecord:
    """Per-degree outcome of a weak Lefschetz sweep."""

    d: int
    dim_below: int
    dim_at: int
    map_rank: int
    injective: bool
    surjective: bool
    maximal_rank: bool

    def __post_init__(self) -> None:
        if self.map_rank > min(self.dim_below, self.dim_at):
            raise ValueError("rank exceeds a dimension bound")
        if self.maximal_rank != (self.map_rank == min(self.dim_below, self.dim_at)):
            raise ValueError("the maximal_rank flag is inconsistent")
        if self.injective != (self.map_rank == self.dim_below):
            raise ValueError("the injective flag is inconsistent")
        if self.surjective != (self.map_rank == self.dim_at):
            raise ValueError("the surjective flag is inconsistent")


@dataclass(frozen=True)
class WlpReport:
    """All degree records of one sweep plus the overall verdict."""

    n: int
    a: int
    records: tuple[DegreeRecord, ...]
    overall_wlp: bool
    seeds_used: tuple


def wlp_sweep(n: int, p: int, seeds,
              field_tag: FieldTag = RATIONALS) -> WlpReport:
    """Maximal-rank check of multiplication by seeded random linear forms in
    every degree with a nonzero quotient piece.

    The ideal is the p-th powers of the variables plus the p-th power of the
    variable sum. One linear form per seed is drawn once and reused across
    all degrees. Any seed reaching the maximal possible rank certifies that
    degree; otherwise all seeds must agree, with the same escalation rules
    as the injectivity table.
    """
    if n < 2 or p < 1:
        raise ValueError("need n >= 2 and p >= 1")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    spec = IdealSpec(n=n, a=p)
    forms = {s: random_linear_form(n, s) for s in seeds}
    records = []
    d = 1
    while True:
        if graded_dimension(spec, d, field_tag) == 0:
            break
        datas = [multiplication_map_rank(spec, d, forms[s], mode=field_tag)
                 for s in seeds]
        dim_below = datas[0]["dim_below"]
        dim_at = datas[0]["dim_at"]
        full = min(dim_below, dim_at)
        ranks = {dt["rank"] for dt in datas}
        if any(dt["rank"] == full for dt in datas):
            rank = full
        elif len(ranks) == 1:
            rank = ranks.pop()
        elif field_tag.is_rational:
            raise InternalFault(
                f"rational ranks disagree across seeds at degree {d}: {sorted(ranks)}")
        else:
            retry = [multiplication_map_rank(spec, d, forms[s], mode=RATIONALS)
                     for s in seeds]
            rranks = {dt["rank"] for dt in retry}
            if full in rranks:
                rank = full
            elif len(rranks) > 1:
                raise InternalFault(
                    f"rational ranks disagree across seeds at degree {d}: {sorted(rranks)}")
            else:
                rank = rranks.pop()
        records.append(DegreeRecord(
            d=d, dim_below=dim_below, dim_at=dim_at, map_rank=rank,
            injective=rank == dim_below, surjective=rank == dim_at,
            maximal_rank=rank == min(dim_below, dim_at)))
        d += 1
    return WlpReport(n=n, a=p, records=tuple(records),
                     overall_wlp=all(r.maximal_rank for r in records),
                     seeds_used=tuple(seeds))
