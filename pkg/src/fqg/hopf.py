"""Hopf *-algebra data on top of a StarAlgebra, with axiom verification.

A quantum group packages a StarAlgebra A with a coproduct A → A⊗A, a counit
and a Haar state (both stored as 1 x n functionals), an antipode, and the
Haar element.  The verification battery checks the full axiom list; the two
solvers reconstruct the Haar state and Haar element from the other data by
exact linear algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import InvalidDataError, StarAlgebra, tensor_mult, tensor_star, tensor_vec
from .linalg import LinearMap, nullspace_basis, vec_add_into, vec_eq, vec_scale
from .report import Check, Report
from .scalar import QQi, scalar, zero_like


class QuantumGroup:
    """A finite quantum group: StarAlgebra plus (Δ, ε, S, h, η)."""

    __slots__ = ("algebra", "coproduct", "counit", "antipode",
                 "haar_state", "haar_element", "label", "_cache")

    def __init__(self, algebra: StarAlgebra, coproduct: LinearMap, counit: LinearMap,
                 antipode: LinearMap, haar_state: LinearMap, haar_element: dict,
                 label=""):
        n = algebra.dim
        if coproduct.source_dim != n or coproduct.target_dim != n * n:
            raise InvalidDataError("coproduct must be %d x %d" % (n * n, n))
        if counit.source_dim != n or counit.target_dim != 1:
            raise InvalidDataError("counit must be 1 x %d" % n)
        if antipode.source_dim != n or antipode.target_dim != n:
            raise InvalidDataError("antipode must be %d x %d" % (n, n))
        if haar_state.source_dim != n or haar_state.target_dim != 1:
            raise InvalidDataError("haar state must be 1 x %d" % n)
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.haar_state = haar_state
        self.haar_element = {i: c for i, c in dict(haar_element).items() if not c.is_zero()}
        self.label = label or algebra.label
        self._cache = {}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    # -- functional helpers ------------------------------------------------

    def haar_of(self, vec: dict):
        """h(vec) as a scalar (None means an exact zero)."""
        return self.haar_state.apply(vec).get(0)

    def counit_of(self, vec: dict):
        return self.counit.apply(vec).get(0)

    def haar_of_eta(self):
        v = self.haar_of(self.haar_element)
        return v if v is not None else scalar(0)

    def bullet_map(self) -> LinearMap:
        """Linear part of the convolution adjoint a ↦ S(a*) (coefficients
        still get conjugated when applying it to a general vector)."""
        bul = self._cache.get("bullet")
        if bul is None:
            bul = self.antipode.compose(self.algebra.star)
            self._cache["bullet"] = bul
        return bul

    def bullet_vec(self, v: dict) -> dict:
        cols = self.bullet_map().cols
        acc: dict = {}
        for i, c in v.items():
            vec_add_into(acc, cols[i], c.conj())
        return acc

    def __repr__(self):
        return "QuantumGroup(%r, dim=%d)" % (self.label, self.dim)


# -- solvers -----------------------------------------------------------------


def solve_haar_state(algebra: StarAlgebra, coproduct: LinearMap,
                     stored: LinearMap | None = None) -> LinearMap:
    """The unique functional with h(1)=1 and (id⊗h)Δ(a) = h(a)·1.

    Solves the invariance system exactly; anything but a one-dimensional
    solution space means the data is not a quantum group.
    """
    n = algebra.dim
    unit = algebra.unit
    rows = []
    for j in range(n):
        col = coproduct.cols[j]
        per_i: dict = {}
        for r, c in col.items():
            i, k = divmod(r, n)
            per_i.setdefault(i, {})[k] = c
        touched = set(per_i) | set(unit)
        for i in touched:
            row = dict(per_i.get(i, {}))
            ui = unit.get(i)
            if ui is not None:
                cur = row.get(j)
                t = -ui if cur is None else cur - ui
                if t.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = t
            if row:
                rows.append(row)
    basis = nullspace_basis(rows, n)
    if len(basis) != 1:
        raise InvalidDataError(
            "haar state is not unique (solution space has dimension %d)" % len(basis))
    h = basis[0]
    norm = None
    for i, ui in unit.items():
        hi = h.get(i)
        if hi is not None:
            norm = ui * hi if norm is None else norm + ui * hi
    if norm is None or norm.is_zero():
        raise InvalidDataError("invariant functional kills the unit; no haar state")
    h = vec_scale(h, norm.inv())
    result = LinearMap(n, 1, [{0: h[i]} if i in h else {} for i in range(n)])
    if stored is not None and result != stored:
        raise InvalidDataError("stored haar state disagrees with the solved one")
    return result


def solve_haar_element(algebra: StarAlgebra, counit: LinearMap) -> dict:
    """The unique η with aη = ε(a)η for all a and ε(η) = 1."""
    n = algebra.dim
    eps = counit.cols  # eps[i] = {0: ε(e_i)} when nonzero
    rows = []
    for i in range(n):
        eps_i = eps[i].get(0)
        per_k: dict = {}
        for j in range(n):
            terms = algebra.mult.get((i, j))
            if terms is None:
                continue
            for k, c in terms.items():
                per_k.setdefault(k, {})[j] = c
        touched = set(per_k) | (set(range(n)) if eps_i is not None else set())
        for k in touched:
            row = dict(per_k.get(k, {}))
            if eps_i is not None:
                cur = row.get(k)
                t = -eps_i if cur is None else cur - eps_i
                if t.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = t
            if row:
                rows.append(row)
    basis = nullspace_basis(rows, n)
    if len(basis) != 1:
        raise InvalidDataError(
            "haar element is not unique (solution space has dimension %d)" % len(basis))
    eta = basis[0]
    norm = None
    for i, c in eta.items():
        ei = eps[i].get(0)
        if ei is not None:
            norm = ei * c if norm is None else norm + ei * c
    if norm is None or norm.is_zero():
        raise InvalidDataError("counit kills every candidate haar element")
    return vec_scale(eta, norm.inv())


# -- verification -------------------------------------------------------------


def _lift_first(coproduct: LinearMap, v: dict, n: int) -> dict:
    """(Δ⊗id) applied to a sparse vector over A⊗A."""
    acc: dict = {}
    for r, c in v.items():
        a, b = divmod(r, n)
        for r2, c2 in coproduct.cols[a].items():
            k = r2 * n + b
            cur = acc.get(k)
            t = c * c2 if cur is None else cur + c * c2
            if t.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = t
    return acc


def _lift_second(coproduct: LinearMap, v: dict, n: int) -> dict:
    """(id⊗Δ) applied to a sparse vector over A⊗A."""
    acc: dict = {}
    for r, c in v.items():
        a, b = divmod(r, n)
        base = a * n * n
        for r2, c2 in coproduct.cols[b].items():
            k = base + r2
            cur = acc.get(k)
            t = c * c2 if cur is None else cur + c * c2
            if t.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = t
    return acc


def _contract_functional(fmap: LinearMap, v: dict, n: int, leg: int) -> dict:
    """Apply a 1 x n functional to one leg of a sparse vector over A⊗A."""
    acc: dict = {}
    cols = fmap.cols
    for r, c in v.items():
        a, b = divmod(r, n)
        idx, keep = (a, b) if leg == 0 else (b, a)
        f = cols[idx].get(0)
        if f is None:
            continue
        cur = acc.get(keep)
        t = c * f if cur is None else cur + c * f
        if t.is_zero():
            acc.pop(keep, None)
        else:
            acc[keep] = t
    return acc


def _apply_to_leg(m: LinearMap, v: dict, n: int, leg: int) -> dict:
    """Apply an n x n map to one leg of a sparse vector over A⊗A."""
    acc: dict = {}
    cols = m.cols
    for r, c in v.items():
        a, b = divmod(r, n)
        if leg == 0:
            for r2, c2 in cols[a].items():
                k = r2 * n + b
                cur = acc.get(k)
                t = c * c2 if cur is None else cur + c * c2
                if t.is_zero():
                    acc.pop(k, None)
                else:
                    acc[k] = t
        else:
            base = a * n
            for r2, c2 in cols[b].items():
                k = base + r2
                cur = acc.get(k)
                t = c * c2 if cur is None else cur + c * c2
                if t.is_zero():
                    acc.pop(k, None)
                else:
                    acc[k] = t
    return acc


def _mult_map_apply(algebra: StarAlgebra, v: dict) -> dict:
    """Multiplication A⊗A → A applied to a sparse vector."""
    n = algebra.dim
    acc: dict = {}
    for r, c in v.items():
        i, j = divmod(r, n)
        terms = algebra.mult.get((i, j))
        if terms is None:
            continue
        vec_add_into(acc, terms, c)
    return acc


def verify_quantum_group(g: QuantumGroup) -> Report:
    """Full Hopf/Haar axiom battery; an empty failure list means pass."""
    cached = g._cache.get("verify_report")
    if cached is not None:
        return cached

    from .algebra import verify_star_algebra

    checks = list(verify_star_algebra(g.algebra).checks)
    a = g.algebra
    n = a.dim
    one = scalar(1)
    delta, eps, anti, h = g.coproduct, g.counit, g.antipode, g.haar_state
    unit = a.unit

    def sweep(name, fn, indices):
        witness = None
        for idx in indices:
            if not fn(idx):
                witness = idx if isinstance(idx, tuple) else (idx,)
                break
        checks.append(Check(name, witness is None, witness or ()))

    sweep("coassociativity",
          lambda j: vec_eq(_lift_first(delta, delta.cols[j], n),
                           _lift_second(delta, delta.cols[j], n)),
          range(n))

    sweep("counit_law",
          lambda j: vec_eq(_contract_functional(eps, delta.cols[j], n, 0), {j: one})
          and vec_eq(_contract_functional(eps, delta.cols[j], n, 1), {j: one}),
          range(n))

    unit_tensor = tensor_vec(unit, unit, n)
    checks.append(Check("coproduct_unital", vec_eq(delta.apply(unit), unit_tensor), ()))

    sweep("coproduct_multiplicative",
          lambda ij: vec_eq(delta.apply(a.basis_product(ij[0], ij[1])),
                            tensor_mult(a, a, delta.cols[ij[0]], delta.cols[ij[1]])),
          ((i, j) for i in range(n) for j in range(n)))

    sweep("coproduct_star",
          lambda i: vec_eq(delta.apply(a.star.cols[i]),
                           tensor_star(a, a, delta.cols[i])),
          range(n))

    eps_unit = eps.apply(unit).get(0)
    checks.append(Check("counit_unital",
                        eps_unit is not None and (eps_unit - one).is_zero(), ()))

    def eps_hom(ij):
        i, j = ij
        lhs = eps.apply(a.basis_product(i, j)).get(0)
        ei = eps.cols[i].get(0)
        ej = eps.cols[j].get(0)
        rhs = None if (ei is None or ej is None) else ei * ej
        return _opt_eq(lhs, rhs)

    sweep("counit_multiplicative", eps_hom, ((i, j) for i in range(n) for j in range(n)))

    sweep("counit_star",
          lambda i: _opt_eq(eps.apply(a.star.cols[i]).get(0),
                            (lambda v: v.conj() if v is not None else None)(eps.cols[i].get(0))),
          range(n))

    def antipode_law(j):
        d = delta.cols[j]
        left = _mult_map_apply(a, _apply_to_leg(anti, d, n, 0))
        right = _mult_map_apply(a, _apply_to_leg(anti, d, n, 1))
        target = vec_scale(unit, eps.cols[j].get(0))
        return vec_eq(left, target) and vec_eq(right, target)

    sweep("antipode_law", antipode_law, range(n))

    ident = LinearMap.identity(n, one)
    checks.append(Check("antipode_involutive", anti.compose(anti) == ident, ()))

    sweep("antipode_star",
          lambda i: vec_eq(anti.apply(a.star.cols[i]), a.star_vec(anti.cols[i])),
          range(n))

    h_unit = h.apply(unit).get(0)
    checks.append(Check("haar_unital",
                        h_unit is not None and (h_unit - one).is_zero(), ()))

    def haar_invariant(j):
        d = delta.cols[j]
        hj = h.cols[j].get(0)
        target = vec_scale(unit, hj)
        return (vec_eq(_contract_functional(h, d, n, 1), target)
                and vec_eq(_contract_functional(h, d, n, 0), target))

    sweep("haar_invariance", haar_invariant, range(n))

    checks.append(Check("haar_antipode_invariant", h.compose(anti) == h, ()))

    sweep("haar_tracial",
          lambda ij: _opt_eq(h.apply(a.basis_product(ij[0], ij[1])).get(0),
                             h.apply(a.basis_product(ij[1], ij[0])).get(0)),
          ((i, j) for i in range(n) for j in range(i, n)))

    checks.append(_gram_positivity_check(g))

    eta = g.haar_element
    eps_eta = eps.apply(eta).get(0)
    checks.append(Check("haar_element_counit",
                        eps_eta is not None and (eps_eta - one).is_zero(), ()))

    sweep("haar_element_absorbing",
          lambda i: vec_eq(a.multiply_vec({i: one}, eta),
                           vec_scale(eta, eps.cols[i].get(0))),
          range(n))

    h_eta = g.haar_of_eta()
    expected = scalar(Fraction(1, n))
    checks.append(Check("haar_element_value",
                        (h_eta - expected).is_zero(), (str(h_eta),) if not (h_eta - expected).is_zero() else ()))

    report = Report(g.label or "quantum-group", checks)
    g._cache["verify_report"] = report
    return report


def _opt_eq(x, y) -> bool:
    if x is None:
        return y is None or y.is_zero()
    if y is None:
        return x.is_zero()
    return (x - y).is_zero()


def _gram_positivity_check(g: QuantumGroup) -> Check:
    """h(e_j* e_i) must be Hermitian positive definite (Sylvester pivots)."""
    a = g.algebra
    n = a.dim
    one = scalar(1)
    zero = zero_like(one)
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        ei = {i: one}
        for j in range(n):
            v = g.haar_of(a.multiply_vec(a.star.cols[j], ei))
            gram[i][j] = v if v is not None else zero
    for i in range(n):
        for j in range(n):
            if not (gram[i][j] - gram[j][i].conj()).is_zero():
                return Check("haar_positive", False, ("not-hermitian", i, j))
    m = [row[:] for row in gram]
    exact = type(one) is QQi
    from .scalar import tolerance

    tol = tolerance()
    for k in range(n):
        piv = m[k][k]
        ok = piv.is_real() and (piv.re > 0 if exact else piv.re > tol)
        if not ok:
            return Check("haar_positive", False, ("pivot", k))
        pinv = piv.inv()
        for i in range(k + 1, n):
            f = m[i][k] * pinv
            if f.is_zero():
                continue
            for j in range(k, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return Check("haar_positive", True, ())


def check_haar_antipode_identity(g: QuantumGroup) -> Report:
    """S((id⊗h)(Δ(b)(1⊗c))) = (id⊗h)((1⊗b)Δ(c)) on all basis pairs."""
    cached = g._cache.get("haar_antipode_identity")
    if cached is not None:
        return cached
    a = g.algebra
    n = a.dim
    one = scalar(1)
    h, delta, anti = g.haar_state, g.coproduct, g.antipode
    unit = a.unit
    witness = None
    for b in range(n):
        db = delta.cols[b]
        for c in range(n):
            unit_c = tensor_vec(unit, {c: one}, n)
            lhs = anti.apply(_contract_functional(h, tensor_mult(a, a, db, unit_c), n, 1))
            b_tensor = tensor_vec(unit, {b: one}, n)
            rhs = _contract_functional(h, tensor_mult(a, a, b_tensor, delta.cols[c]), n, 1)
            if not vec_eq(lhs, rhs):
                witness = (b, c)
                break
        if witness:
            break
    report = Report(g.label or "quantum-group",
                    [Check("haar_antipode_identity", witness is None, witness or ())])
    g._cache["haar_antipode_identity"] = report
    return report
