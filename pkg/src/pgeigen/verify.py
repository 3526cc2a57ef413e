"""Exact verification suites.

Each suite runs a family of exact checks for one (q, n) and returns a
:class:`SuiteReport`.  A failing check records a witness naming the objects
involved.  Sampled suites draw pairs with ``random.Random(seed).sample``
over the lexicographically ordered list of index pairs i < j.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import qcomb
from .characters import (Character, char_value, characters, nontrivial_characters, project,
                         project_subspace, x_of_chi)
from .eigenbasis import basis_list
from .errors import InvalidParameter
from .field import FieldSpec
from .lattice import (act, all_vectors, boundary, enumerate_all, enumerate_subspaces, group_elements,
                      hat, lattice, meet_hyperplane, orbit, stabilizer)
from .operators import (act_vector, adjacency_by_components, adjacency_entry, apply_adjacency,
                        apply_dual, in_w0, in_w_chi, inner, lambda_mu, theta, updown)
from .scalars import CycloNum, PhiPoly, as_rational
from .vectors import PosetVector

DEFAULT_MAX_SUBSPACES = 1000
MAX_WITNESSES = 25


@dataclass
class SuiteReport:
    suite: str
    q: int
    n: int
    phi_mode: str = "symbolic"
    checks: int = 0
    failures: list = dc_field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    skipped: str | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.skipped is None

    def check(self, ok: bool, **witness) -> bool:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append({k: _jsonable(v) for k, v in witness.items()})
        return ok

    def to_json(self) -> dict:
        out = {"suite": self.suite, "q": self.q, "n": self.n, "phi_mode": self.phi_mode,
               "checks": self.checks, "failures": self.failures,
               "failure_count": self.failure_count, "passed": self.passed,
               "seconds": round(self.seconds, 3)}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.details:
            out["details"] = self.details
        return out

    def summary(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return (f"{status} {self.suite} q={self.q} n={self.n} checks={self.checks} "
                f"failures={self.failure_count}")


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _phi_mode(phi):
    return "symbolic" if phi is None else "rational"


def _vanishes(x: PhiPoly, phi) -> bool:
    if phi is None:
        return x.is_zero()
    return x.evaluate(phi).is_zero()


def _same_vec(u: PosetVector, v: PosetVector, phi) -> bool:
    if phi is None:
        return u == v
    return all(c.evaluate(phi).is_zero() for c in (u - v).entries.values())


def _too_big(report, field, n, max_subspaces):
    size = qcomb.galois(n, field.q)
    if size > max_subspaces:
        report.skipped = f"G_q(n) = {size} exceeds the bound {max_subspaces}"
        return True
    return False


class _Timer:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.t0
        return False


def suite_eigen(field: FieldSpec, n: int, phi=None,
                max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> SuiteReport:
    """A v_alpha = lambda_{N(alpha)} v_alpha for every alpha, and multiplicities."""
    phi = None if phi is None else as_rational(phi)
    report = SuiteReport("eigen", field.q, n, _phi_mode(phi))
    if _too_big(report, field, n, max_subspaces):
        return report
    with _Timer(report):
        q = field.q
        basis = basis_list(field, n)
        counts = [0] * (n + 1)
        for alpha, v in basis:
            k = alpha.weight
            counts[k] += 1
            report.check(not v.is_zero(), check="nonzero", index=alpha)
            lam = qcomb.eigenvalue_poly(n, k, q, p=field.p)
            report.check(_same_vec(apply_adjacency(v), v.scale(lam), phi),
                         check="eigen_equation", index=alpha, weight=k)
        expected = qcomb.qbinom_row(n, q)
        report.check(counts == expected, check="multiplicities", got=counts, expected=expected)
        report.check(len(basis) == qcomb.galois(n, q), check="basis_size", got=len(basis))
        report.details["multiplicities"] = counts
        report.details["eigenvalues"] = [qcomb.eigenvalue_poly(n, k, q, p=field.p).to_json()
                                         for k in range(n + 1)]
    return report


def _pairs(size, budget, seed):
    total = size * (size - 1) // 2
    if budget is None or total <= budget:
        return [(i, j) for i in range(size) for j in range(i + 1, size)], False
    chosen = sorted(random.Random(seed).sample(range(total), budget))
    out = []
    i, start = 0, 0
    for t in chosen:
        while t >= start + (size - 1 - i):
            start += size - 1 - i
            i += 1
        out.append((i, i + 1 + t - start))
    return out, True


def suite_orthogonality(field: FieldSpec, n: int, pair_budget: int | None = None, seed: int = 0,
                        phi=None, max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> SuiteReport:
    """<v_alpha, v_beta> = 0 for alpha != beta and <v_alpha, v_alpha> != 0."""
    phi = None if phi is None else as_rational(phi)
    report = SuiteReport("orth", field.q, n, _phi_mode(phi))
    if _too_big(report, field, n, max_subspaces):
        return report
    with _Timer(report):
        basis = basis_list(field, n)
        for alpha, v in basis:
            report.check(not _vanishes(inner(v, v), phi), check="norm_nonzero", index=alpha)
        pairs, sampled = _pairs(len(basis), pair_budget, seed)
        for i, j in pairs:
            (a, u), (b, v) = basis[i], basis[j]
            report.check(_vanishes(inner(u, v), phi), check="orthogonal", alpha=a, beta=b)
        report.details.update(pairs=len(pairs), sampled=sampled, seed=seed)
    return report


def suite_qpoly(field: FieldSpec, n: int, pair_budget: int | None = None, seed: int = 0,
                phi=None, max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> SuiteReport:
    """<v_beta, A* v_alpha> = 0 whenever |N(alpha) - N(beta)| >= 2, and some
    neighbouring pair has a nonzero coefficient."""
    phi = None if phi is None else as_rational(phi)
    report = SuiteReport("qpoly", field.q, n, _phi_mode(phi))
    if _too_big(report, field, n, max_subspaces):
        return report
    with _Timer(report):
        basis = basis_list(field, n)
        dual = [apply_dual(v) for _, v in basis]
        far = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
               if abs(basis[i][0].weight - basis[j][0].weight) >= 2]
        if pair_budget is not None and len(far) > pair_budget:
            far = sorted(random.Random(seed).sample(far, pair_budget))
            report.details["sampled"] = True
        for i, j in far:
            report.check(_vanishes(inner(basis[j][1], dual[i]), phi),
                         check="tridiagonal", alpha=basis[i][0], beta=basis[j][0])
        report.details.update(far_pairs=len(far), seed=seed)
        if n >= 2:
            witness = None
            for i in range(len(basis)):
                for j in range(len(basis)):
                    if basis[j][0].weight - basis[i][0].weight == 1:
                        c = inner(basis[j][1], dual[i])
                        if not _vanishes(c, phi):
                            witness = (basis[i][0], basis[j][0], c)
                            break
                if witness:
                    break
            report.check(witness is not None, check="not_diagonal")
            if witness:
                report.details["neighbour_coefficient"] = {
                    "alpha": witness[0].to_json(), "beta": witness[1].to_json(),
                    "value": witness[2].to_json()}
    return report


# -- structural identities, level n -> n+1 --

def _weight_rel(X, Y, phi):
    F = X.field
    wx = PhiPoly.monomial(F.p, F.q ** (X.dim * (X.dim - 1) // 2), X.dim)
    wy = PhiPoly.monomial(F.p, F.q ** (Y.dim * (Y.dim - 1) // 2), Y.dim)
    diff = wx * adjacency_entry(X, Y) - wy * adjacency_entry(Y, X)
    return _vanishes(diff, phi)


def _structure_lattice(report, F, n):
    q = F.q
    lat = lattice(F, n)
    # weighted symmetry of A_n: w(X) A(X,Y) = w(Y) A(Y,X), symbolic and sampled
    for i, X in enumerate(lat.elements):
        for j in lat.up[i]:
            Y = lat.elements[j]
            report.check(_weight_rel(X, Y, None), check="weighted_symmetry", X=X, Y=Y)
            for phi in (1, 2, Fraction(1, 2)):
                report.check(_weight_rel(X, Y, phi), check="weighted_symmetry_sampled",
                             X=X, Y=Y, phi=phi)
    for X in lat.elements:
        e = PosetVector.indicator(X)
        report.check(adjacency_by_components(e) == apply_adjacency(e),
                     check="operator_form", X=X)
    # boundary partition
    bd = boundary(F, n + 1)
    report.check(len(bd) + len(lat) == qcomb.galois(n + 1, q), check="boundary_partition")
    for k in range(n + 2):
        got = sum(1 for X in bd if X.dim == k)
        report.check(got == qcomb.qbinom(n + 1, k, q) - qcomb.qbinom(n, k, q),
                     check="boundary_rank_count", k=k, got=got)
    return bd


def _structure_group(report, F, n, bd):
    q = F.q
    classes = {}
    for X in bd:
        classes.setdefault(meet_hyperplane(X), []).append(X)
    orbits = {}
    for X in bd:
        M = meet_hyperplane(X)
        report.check(M.dim == X.dim - 1, check="meet_dimension", X=X)
        report.check(hat(M) in classes[M], check="hat_meet_class", X=X)
        orb = orbit(X)
        orbits[X] = orb
        report.check(orb == sorted(classes[M], key=lambda Z: Z.sort_key()),
                     check="orbit_is_class", X=X)
        report.check(len(orb) == q ** (n + 1 - X.dim), check="orbit_size", X=X, size=len(orb))
    # biregular covering graph between classes
    lat1 = lattice(F, n + 1)
    for X in bd:
        i = lat1.index[X]
        for j in lat1.up[i]:
            Y = lat1.elements[j]
            if not Y.is_boundary():
                continue
            oy, ox = orbits[Y], set(orbits[X])
            for Yp in oy:
                deg = sum(1 for t in lat1.down[lat1.index[Yp]] if lat1.elements[t] in ox)
                report.check(deg == q, check="biregular_upper", X=X, Y=Yp, degree=deg)
            soy = set(oy)
            for Xp in orbits[X]:
                deg = sum(1 for t in lat1.up[lat1.index[Xp]] if lat1.elements[t] in soy)
                report.check(deg == 1, check="biregular_lower", X=Xp, Y=Y, degree=deg)
    # stabilizers grow along inclusion
    if q ** n <= 81:
        stabs = {X: {g.a for g in stabilizer(X)} for X in bd}
        for X in bd:
            for Y in bd:
                if X.dim < Y.dim and Y.contains_subspace(X):
                    report.check(stabs[X] <= stabs[Y], check="stabilizer_monotone", X=X, Y=Y)


def _structure_theta(report, F, n, H, phi_poly, rng):
    q = F.q
    for X in enumerate_all(F, n):
        e = PosetVector.indicator(X)
        t = theta(e)
        report.check(sorted(t.entries, key=lambda Z: Z.sort_key()) == orbit(hat(X)),
                     check="theta_support", X=X)
        report.check(len(t) == q ** (n - X.dim), check="theta_size", X=X)
        report.check(in_w0(t), check="theta_in_W0", X=X)
        k = X.dim
        rem = updown("D", k + 1, t) - e.embed(n + 1).scale(q ** (n - k))
        report.check(in_w0(rem), check="down_theta_decomposition", X=X)
        # A_{n+1} theta(X) = phi q^n X + q theta(A_n X)
        lhs = apply_adjacency(t)
        rhs = e.embed(n + 1).scale(phi_poly.scale(q ** n)) + theta(apply_adjacency(e)).scale(q)
        report.check(lhs == rhs, check="adjacency_on_theta", X=X)
        # A_{n+1} X = A_n X + theta(X)
        lhs = apply_adjacency(e.embed(n + 1))
        rhs = apply_adjacency(e).embed(n + 1) + t
        report.check(lhs == rhs, check="adjacency_on_embedded", X=X)
        # dual relations
        report.check(apply_dual(e.embed(n + 1)) == apply_dual(e).embed(n + 1),
                     check="dual_on_embedded", X=X)
        report.check(apply_dual(t) == theta(apply_dual(e)).scale(Fraction(1, q)),
                     check="dual_on_theta", X=X)
    # norm scalings with random vectors
    elems = enumerate_all(F, n)
    for _ in range(4):
        u = _random_vector(F, n, elems, rng)
        v = _random_vector(F, n, elems, rng)
        base = inner(u, v)
        report.check(inner(u.embed(n + 1), v.embed(n + 1)) == base, check="norm_embedded")
        report.check(inner(theta(u), theta(v)) == base * phi_poly.scale(q ** n),
                     check="norm_theta")
        report.check(inner(u.embed(n + 1), theta(v)).is_zero(), check="embedded_perp_theta")


def _random_vector(F, n, elems, rng):
    p = F.p
    entries = {}
    for X in rng.sample(elems, min(len(elems), 4)):
        coeffs = [rng.randint(-3, 3) for _ in range((p - 1) * 2)]
        entries[X] = PhiPoly(p, [CycloNum(p, coeffs[:p - 1]), CycloNum(p, coeffs[p - 1:])])
    return PosetVector(F, n, entries)


def _structure_characters(report, F, n, H):
    q = F.q
    sub_n = enumerate_all(F, n)
    bd = boundary(F, n + 1)
    chars = characters(F, n)
    lat = lattice(F, n)
    for chi in chars:
        # disjoint supports of p(chi)(hat Y)
        supports = [set(project(chi, Y).entries) for Y in sub_n]
        union = set().union(*supports)
        report.check(sum(len(s) for s in supports) == len(union),
                     check="disjoint_supports", chi=chi)
        # nonzero p(chi)(hat X) forces nonzero p(chi)(hat Y) for Y covered by X
        for i, X in enumerate(lat.elements):
            if not project(chi, X).is_zero():
                for j in lat.down[i]:
                    report.check(not project(chi, lat.elements[j]).is_zero(),
                                 check="projection_monotone", chi=chi, X=X,
                                 Y=lat.elements[j])
        # counts of nonzero projections per rank
        total = 0
        for k in range(1, n + 2):
            got = sum(1 for Y in sub_n if Y.dim == k - 1 and not project(chi, Y).is_zero())
            total += got
            want = qcomb.qbinom(n, k - 1, q) if chi.is_trivial else qcomb.qbinom(n - 1, k - 1, q)
            report.check(got == want, check="projection_count", chi=chi, k=k, got=got)
        want_total = qcomb.galois(n, q) if chi.is_trivial else (qcomb.galois(n - 1, q) if n else 0)
        report.check(total == want_total, check="isotypic_dimension", chi=chi, got=total)
        # vanishing criterion and equivariance on the whole boundary
        for X in bd:
            px = project_subspace(chi, X)
            nontrivial_on_stab = any(chi.exponent(g.a) for g in stabilizer(X))
            report.check(px.is_zero() == nontrivial_on_stab, check="vanishing_criterion",
                         chi=chi, X=X)
            for h in H:
                lhs = project_subspace(chi, act(h, X))
                scal = _char_conj(chi, h.inverse())
                report.check(lhs == px.scale(scal), check="equivariance", chi=chi, X=X, h=list(h.a))
    # dimension bookkeeping: G(n+1) = 2 G(n) + (q^n - 1) G(n-1)
    if n >= 1:
        dims = qcomb.galois(n, q) * 2 + (q ** n - 1) * qcomb.galois(n - 1, q)
        report.check(dims == qcomb.galois(n + 1, q), check="dimension_bookkeeping")
    # X(chi): unique hyperplane, q-1 characters per hyperplane, equal to a-perp
    if n >= 1:
        hits = {}
        for chi in nontrivial_characters(F, n):
            X = x_of_chi(chi)
            hits[X] = hits.get(X, 0) + 1
            perp = [v for v in _all_vecs(F, n) if F.dot(chi.a, v) == 0]
            report.check(all(X.contains(v) for v in perp) and X.dim == n - 1,
                         check="x_of_chi_is_perp", chi=chi, X=X)
        for Y in enumerate_subspaces(F, n, n - 1):
            report.check(hits.get(Y, 0) == q - 1, check="characters_per_hyperplane",
                         Y=Y, got=hits.get(Y, 0))


def _all_vecs(F, n):
    return list(all_vectors(F, n))


def _char_conj(chi: Character, g):
    return char_value(chi, g).conjugate()


def _structure_lambda(report, F, n, phi_poly, rng):
    if n < 1:
        return
    q = F.q
    below = enumerate_all(F, n - 1)
    for chi in nontrivial_characters(F, n):
        for Y in below:
            e = PosetVector.indicator(Y)
            w = lambda_mu(chi, e)
            report.check(not w.is_zero(), check="lambda_mu_nonzero", chi=chi, Y=Y)
            report.check(in_w_chi(chi, w), check="lambda_mu_in_W_chi", chi=chi, Y=Y)
            report.check(apply_adjacency(w) == lambda_mu(chi, apply_adjacency(e)).scale(q),
                         check="intertwining", chi=chi, Y=Y)
            report.check(apply_dual(w) == lambda_mu(chi, apply_dual(e)).scale(Fraction(1, q)),
                         check="dual_intertwining", chi=chi, Y=Y)
        u = _random_vector(F, n - 1, below, rng)
        v = _random_vector(F, n - 1, below, rng)
        report.check(inner(lambda_mu(chi, u), lambda_mu(chi, v)) ==
                     inner(u, v) * phi_poly.scale(q ** n), check="norm_lambda_mu", chi=chi)


def _structure_lifts(report, F, n, phi_poly):
    q = F.q
    for alpha, v in basis_list(F, n):
        k = alpha.weight
        tv = theta(v)
        a = v.embed(n + 1).scale(q ** k) + tv
        b = v.embed(n + 1).scale(phi_poly.scale(q ** (n - k))) - tv
        la = qcomb.eigenvalue_poly(n + 1, k, q, p=F.p)
        lb = qcomb.eigenvalue_poly(n + 1, k + 1, q, p=F.p)
        report.check(apply_adjacency(a) == a.scale(la), check="lift_zero", index=alpha)
        report.check(apply_adjacency(b) == b.scale(lb), check="lift_one", index=alpha)
        report.check(in_w0(tv), check="lift_in_W0", index=alpha)
    for k in range(n + 1):
        det = PhiPoly.const(F.p, -q ** k) - phi_poly.scale(q ** (n - k))
        report.check(not det.is_zero(), check="mixing_determinant", k=k)
    # support separation in the basis of level n+1
    if n >= 1:
        for alpha, v in basis_list(F, n + 1):
            last = alpha.entries[-1]
            if last.kind == "chi":
                report.check(in_w_chi(last.chi, v), check="basis_in_W_chi", index=alpha)
            else:
                bd = PosetVector(F, n + 1, {X: c for X, c in v.entries.items() if X.is_boundary()})
                report.check(in_w0(bd), check="basis_in_W0", index=alpha)


def suite_structure(field: FieldSpec, n: int, seed: int = 0,
                    max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> SuiteReport:
    """Identity bundle relating level n to level n+1 (and n-1 through lambda mu)."""
    report = SuiteReport("structure", field.q, n)
    if _too_big(report, field, n + 1, max_subspaces):
        return report
    rng = random.Random(seed)
    phi_poly = PhiPoly.phi(field.p)
    with _Timer(report):
        parts = {}

        def run(name, fn, *args):
            before = (report.checks, report.failure_count)
            fn(report, *args)
            parts[name] = {"checks": report.checks - before[0],
                           "failures": report.failure_count - before[1]}
        bd = []
        run("lattice", lambda r: bd.extend(_structure_lattice(r, field, n)))
        H = group_elements(field, n)
        run("group", _structure_group, field, n, bd)
        run("theta", _structure_theta, field, n, H, phi_poly, rng)
        run("characters", _structure_characters, field, n, H)
        run("lambda_mu", _structure_lambda, field, n, phi_poly, rng)
        run("lifts", _structure_lifts, field, n, phi_poly)
        report.details["parts"] = parts
    return report


# -- numeric cross-check --

def dense_adjacency(field: FieldSpec, n: int, phi):
    import numpy as np

    lat = lattice(field, n)
    q = field.q
    f = float(Fraction(phi))
    A = np.zeros((len(lat), len(lat)), dtype=complex)
    for i, X in enumerate(lat.elements):
        k = lat.dims[i]
        A[i, i] = (f - 1) / (q - 1) * q ** k
        for j in lat.down[i]:
            A[i, j] = 1.0
        for j in lat.up[i]:
            A[i, j] = f * q ** k
    return A


def suite_crosscheck(field: FieldSpec, n: int, phi, tolerance: float = 1e-9,
                     max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> SuiteReport:
    """Dense floating-point spectrum and residuals against the exact results."""
    import numpy as np

    if phi is None:
        raise InvalidParameter("the cross-check needs a numeric phi")
    phi = Fraction(phi) if not isinstance(phi, float) else Fraction(phi).limit_denominator(10 ** 12)
    if phi <= 0:
        raise InvalidParameter(f"phi must be positive, got {phi}")
    report = SuiteReport("crosscheck", field.q, n, "rational")
    if _too_big(report, field, n, max_subspaces):
        return report
    with _Timer(report):
        q = field.q
        A = dense_adjacency(field, n, phi)
        numeric = np.linalg.eigvals(A)
        expected = []
        for k in range(n + 1):
            lam = float(qcomb.eigenvalue_poly(n, k, q, p=field.p).evaluate(phi).coords[0])
            expected += [lam] * qcomb.qbinom(n, k, q)
        expected = np.sort(np.array(expected))
        order = np.argsort(numeric.real)
        got = numeric[order]
        worst_imag = float(np.max(np.abs(got.imag))) if len(got) else 0.0
        report.check(worst_imag <= tolerance, check="real_spectrum", max_imag=worst_imag)
        err = float(np.max(np.abs(got.real - expected))) if len(got) else 0.0
        report.check(len(got) == len(expected) and err <= tolerance,
                     check="spectrum_matches_formula", max_error=err)
        lat = lattice(field, n)
        worst = 0.0
        for alpha, v in basis_list(field, n):
            x = np.zeros(len(lat), dtype=complex)
            for X, c in v.entries.items():
                x[lat.index[X]] = c.eval_complex(phi)
            lam = complex(qcomb.eigenvalue_poly(n, alpha.weight, q, p=field.p).eval_complex(phi))
            res = float(np.max(np.abs(A @ x - lam * x)))
            scale = float(np.max(np.abs(x)))
            worst = max(worst, res / scale)
            report.check(res <= tolerance * scale, check="residual", index=alpha,
                         residual=res, scale=scale)
        report.details.update(phi=f"{phi.numerator}/{phi.denominator}",
                              max_eigenvalue_error=err, max_imag=worst_imag,
                              max_relative_residual=worst)
    return report


SUITES = {
    "eigen": suite_eigen,
    "orth": suite_orthogonality,
    "qpoly": suite_qpoly,
    "structure": suite_structure,
}
