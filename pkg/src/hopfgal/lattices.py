"""Z-lattice realizations: associated orders, Hopf orders, integral tameness.

Lattices live in an ambient Q-vector space and are stored by a
canonical basis: scale the generators to integer vectors, take the row
Hermite normal form, divide the scale back out.  Membership, equality
and quotient invariants all reduce to that normal form, so every
verdict here is reproducible bit for bit.

The base principal ideal domain is Z only; obstructions at individual
primes are reported through the Smith invariant factors of the fixed
lattice modulo the image of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import actions as actions_mod
from . import hopf as hopf_mod
from . import linalg
from .errors import (
    InconsistencyError,
    PreconditionError,
    ShapeError,
)
from .linalg import QQ, ZZ, Matrix


def _lcm(a, b):
    return abs(a * b) // math.gcd(a, b)


def _denominator_scale(vectors):
    d = 1
    for v in vectors:
        for x in v:
            d = _lcm(d, Fraction(x).denominator)
    return d


@dataclass(frozen=True)
class IntegerLattice:
    """Full- or partial-rank lattice in Q^n with a canonical basis.

    ``basis`` is a Q-matrix whose columns are the canonical generators
    (Hermite form of the scaled generator rows, rescaled back).
    """

    ambient_dim: int
    basis: Matrix
    tag: str = "module-lattice"

    @classmethod
    def from_generators(cls, ambient_dim, vectors, tag="module-lattice"):
        vectors = [tuple(QQ.normalize(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeError("generator length mismatch")
        vectors = [v for v in vectors if any(x != 0 for x in v)]
        if not vectors:
            return cls(ambient_dim, Matrix.zeros(QQ, ambient_dim, 0), tag)
        scale = _denominator_scale(vectors)
        integer_rows = [[int(x * scale) for x in v] for v in vectors]
        h, _ = linalg.hermite_normal_form(Matrix(ZZ, integer_rows))
        rows = [r for r in h.rows if any(v != 0 for v in r)]
        cols = [tuple(Fraction(x, scale) for x in r) for r in rows]
        return cls(ambient_dim, Matrix.from_cols(QQ, cols, ambient_dim), tag)

    @property
    def rank(self):
        return self.basis.ncols

    def generators(self):
        return [self.basis.col(j) for j in range(self.rank)]

    def coords(self, vec):
        """Rational coordinates of vec in the lattice basis, or None."""
        vec = tuple(QQ.normalize(x) for x in vec)
        return linalg.solve(self.basis, vec)

    def contains(self, vec):
        x = self.coords(vec)
        return x is not None and all(Fraction(v).denominator == 1 for v in x)

    def contains_lattice(self, other):
        return all(self.contains(g) for g in other.generators())

    def __eq__(self, other):
        return (
            isinstance(other, IntegerLattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def scaled(self, q):
        q = QQ.normalize(q)
        return IntegerLattice(
            self.ambient_dim,
            self.basis.scale(q),
            self.tag,
        )


def standard_lattice(n, tag="module-lattice"):
    return IntegerLattice(n, Matrix.identity(QQ, n), tag)


@dataclass(frozen=True)
class LatticeModuleData:
    """A lattice with an H-action on its ambient Q-space.

    ``action`` holds one ambient matrix per basis element of H; the
    module law is verified on the ambient space at construction.  The
    optional algebra encodes the multiplication of the ambient S for
    the rational cross-check.
    """

    hopf: hopf_mod.HopfAlgebraData
    lattice: IntegerLattice
    action: tuple
    unit: tuple
    algebra: hopf_mod.AlgebraData | None = None

    def __post_init__(self):
        n = self.lattice.ambient_dim
        if self.hopf.domain != QQ:
            raise ShapeError("lattice modules need a Hopf algebra over Q")
        if len(self.action) != self.hopf.dim:
            raise ShapeError("one action matrix per Hopf basis element required")
        for m in self.action:
            if m.nrows != n or m.ncols != n:
                raise ShapeError("ambient action matrix shape mismatch")
        if len(self.unit) != n:
            raise ShapeError("unit vector length mismatch")
        ident = None
        for a, c in enumerate(self.hopf.algebra.unit):
            term = self.action[a].scale(c)
            ident = term if ident is None else ident + term
        if ident != Matrix.identity(QQ, n):
            raise InconsistencyError("unit of H does not act as the identity")
        for a in range(self.hopf.dim):
            for b in range(self.hopf.dim):
                composed = self.action[a] @ self.action[b]
                total = None
                for k, c in enumerate(self.hopf.algebra.mult[a][b]):
                    if c == 0:
                        continue
                    term = self.action[k].scale(c)
                    total = term if total is None else total + term
                if total is None:
                    total = Matrix.zeros(QQ, n, n)
                if composed != total:
                    raise InconsistencyError(f"ambient action violates the module law at ({a}, {b})")

    def action_of(self, hvec):
        out = None
        for a, c in enumerate(hvec):
            if c == 0:
                continue
            term = self.action[a].scale(c)
            out = term if out is None else out + term
        if out is None:
            out = Matrix.zeros(QQ, self.lattice.ambient_dim, self.lattice.ambient_dim)
        return out


@dataclass(frozen=True)
class OrderData:
    """A lattice inside a rational Hopf algebra, in H-coordinates."""

    hopf: hopf_mod.HopfAlgebraData
    lattice: IntegerLattice

    @property
    def rank(self):
        return self.lattice.rank


def group_ring_order(h):
    """The Z-span of the stored basis of H (e.g. ZG inside QG)."""
    return OrderData(h, standard_lattice(h.dim, tag="order-in-hopf-algebra"))


def associated_order(h, module):
    """The order {h in H : h . S <= S}, computed through normal forms.

    Stacks the integrality conditions in lattice coordinates, takes the
    Hermite basis of the row lattice they generate, and inverts it: the
    columns of the inverse generate the dual lattice, which is exactly
    the associated order.  The result is asserted to be a unital,
    multiplicatively closed order.
    """
    if module.hopf != h:
        raise ShapeError("module was built over a different Hopf algebra")
    m = h.dim
    lat = module.lattice
    rows = []
    for j, gen in enumerate(lat.generators()):
        images = []
        for a in range(m):
            moved = module.action[a].apply(gen)
            coords = lat.coords(moved)
            if coords is None:
                raise ShapeError(
                    "the H-action does not preserve the rational span of the lattice"
                )
            images.append(coords)
        for t in range(lat.rank):
            rows.append(tuple(images[a][t] for a in range(m)))
    row_lattice = IntegerLattice.from_generators(m, rows)
    if row_lattice.rank < m:
        raise InconsistencyError(
            "associated order is not a lattice; the action is not faithful"
        )
    g = row_lattice.basis.transpose()  # rows = canonical generators
    inv = linalg.invert(g)
    order_lattice = IntegerLattice.from_generators(
        m, [inv.col(j) for j in range(m)], tag="order-in-hopf-algebra"
    )
    order = OrderData(h, order_lattice)
    if not order_lattice.contains(h.algebra.unit):
        raise InconsistencyError("associated order does not contain 1")
    for u in order_lattice.generators():
        for v in order_lattice.generators():
            if not order_lattice.contains(h.algebra.mul_vec(u, v)):
                raise InconsistencyError("associated order is not multiplicatively closed")
    return order


@dataclass(frozen=True)
class HopfOrderReport:
    contains_unit: bool
    mult_closed: bool
    comult_stable: bool
    counit_integral: bool
    antipode_stable: bool
    witness: tuple | None

    @property
    def is_hopf_order(self):
        return (
            self.contains_unit
            and self.mult_closed
            and self.comult_stable
            and self.counit_integral
            and self.antipode_stable
        )


def is_hopf_order(order):
    """Closure flags for an order, all via exact lattice membership."""
    h = order.hopf
    lat = order.lattice
    if lat.rank != h.dim:
        raise PreconditionError("Hopf-order checks need a full-rank order")
    gens = lat.generators()
    contains_unit = lat.contains(h.algebra.unit)
    witness = None

    mult_closed = True
    for i, u in enumerate(gens):
        for j, v in enumerate(gens):
            if not lat.contains(h.algebra.mul_vec(u, v)):
                mult_closed = False
                witness = witness or ("mult", i, j)
                break
        if not mult_closed:
            break

    n = h.dim
    tensor_gens = []
    for u in gens:
        for v in gens:
            vec = [QQ.zero] * (n * n)
            for a, ca in enumerate(u):
                if ca == 0:
                    continue
                for b, cb in enumerate(v):
                    if cb == 0:
                        continue
                    vec[a * n + b] = QQ.add(vec[a * n + b], QQ.mul(ca, cb))
            tensor_gens.append(tuple(vec))
    tensor_lattice = IntegerLattice.from_generators(n * n, tensor_gens)
    comult_stable = True
    for i, u in enumerate(gens):
        image = h.comult_vec(u)
        vec = [QQ.zero] * (n * n)
        for (j, k), c in image.items():
            vec[j * n + k] = c
        if not tensor_lattice.contains(vec):
            comult_stable = False
            witness = witness or ("comult", i)
            break

    counit_integral = True
    for i, u in enumerate(gens):
        if Fraction(h.counit_vec(u)).denominator != 1:
            counit_integral = False
            witness = witness or ("counit", i)
            break

    antipode_stable = True
    for i, u in enumerate(gens):
        if not lat.contains(h.antipode.apply(u)):
            antipode_stable = False
            witness = witness or ("antipode", i)
            break

    return HopfOrderReport(
        contains_unit,
        mult_closed,
        comult_stable,
        counit_integral,
        antipode_stable,
        witness,
    )


def lattice_integrals(order):
    """Generator of J = (rational integral line) intersected with the order.

    Returns (generator vector, rank-one lattice).  The generator is the
    smallest positive rational multiple of the canonical integral that
    lies in the order.
    """
    report = is_hopf_order(order)
    if not report.is_hopf_order:
        raise PreconditionError(f"integral lattice needs a Hopf order; failing flag {report.witness}")
    h = order.hopf
    integral = hopf_mod.left_integrals(h).basis[0]
    coords = order.lattice.coords(integral)
    if coords is None:
        raise InconsistencyError("integral does not lie in the rational span of the order")
    scale = None
    for x in coords:
        x = Fraction(x)
        if x == 0:
            continue
        step = Fraction(x.denominator, abs(x.numerator))
        scale = step if scale is None else Fraction(
            _lcm(scale.numerator, step.numerator),
            math.gcd(scale.denominator, step.denominator),
        )
    if scale is None:
        raise InconsistencyError("zero integral")
    generator = tuple(QQ.mul(scale, v) for v in integral)
    lattice = IntegerLattice.from_generators(h.dim, [generator], tag="order-in-hopf-algebra")
    # h . generator = counit(h) generator for every order generator, exactly
    for u in order.lattice.generators():
        lhs = h.algebra.mul_vec(u, generator)
        rhs = linalg.vec_scale(QQ, h.counit_vec(u), generator)
        if lhs != rhs:
            raise InconsistencyError("integral generator fails the integral property")
    return generator, lattice


@dataclass(frozen=True)
class TameLatticeReport:
    fixed_rank: int
    fixed_is_base: bool
    rank_equal: bool
    faithful: bool
    image_in_fixed: bool
    invariant_factors: tuple  # nontrivial factors of S^A / J.S
    quotient_free_rank: int
    tame: bool
    obstructed_primes: tuple
    integral_generator: tuple
    rational_tame: bool | None


def _prime_factors(n):
    out = []
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def tame_check_integral(order, module):
    """Invariant factors of S^A / J.S and the tame verdict over Z.

    Preconditions: the order is a Hopf order acting integrally on the
    lattice.  The quotient is computed by expressing the image lattice
    in coordinates of the fixed lattice and taking Smith invariant
    factors; trailing unit factors are dropped from the report.  The
    verdict is tame exactly when the quotient is trivial and the
    hypotheses (fixed lattice = Z.1, rank equality, faithfulness) hold.
    Primes dividing any factor are reported as the local obstructions.
    """
    h = order.hopf
    lat = module.lattice
    if lat.rank != lat.ambient_dim:
        raise PreconditionError("integral tameness needs a full-rank module lattice")
    generator, _ = lattice_integrals(order)

    # the order must act integrally on S
    order_gens = order.lattice.generators()
    integer_actions = []
    for u in order_gens:
        mat = module.action_of(u)
        cols = []
        for gen in lat.generators():
            coords = lat.coords(mat.apply(gen))
            if coords is None or any(Fraction(x).denominator != 1 for x in coords):
                raise PreconditionError(
                    "the order does not act integrally on the lattice "
                    "(it is not inside the associated order)"
                )
            cols.append(tuple(int(x) for x in coords))
        integer_actions.append(Matrix.from_cols(ZZ, cols, lat.rank))

    # fixed lattice S^A as the saturated integer kernel
    blocks = []
    for u, mat in zip(order_gens, integer_actions):
        eps = h.counit_vec(u)
        if Fraction(eps).denominator != 1:
            raise PreconditionError("order counit values are not integral")
        blocks.append(mat - Matrix.identity(ZZ, lat.rank).scale(int(eps)))
    fixed_basis = linalg.integer_kernel_basis(linalg.stack(blocks))
    fixed_lattice = IntegerLattice.from_generators(lat.rank, fixed_basis)

    # image lattice J.S in S-coordinates
    lam = module.action_of(generator)
    image_cols = []
    for gen in lat.generators():
        coords = lat.coords(lam.apply(gen))
        image_cols.append(tuple(int(x) for x in coords))
    image_lattice = IntegerLattice.from_generators(lat.rank, image_cols)
    image_in_fixed = fixed_lattice.contains_lattice(image_lattice)
    if not image_in_fixed:
        raise InconsistencyError("J.S is not contained in S^A")

    # quotient S^A / J.S through Smith normal form
    factors = ()
    free_rank = fixed_lattice.rank - image_lattice.rank
    if image_lattice.rank:
        cols = []
        for g in image_lattice.generators():
            coords = fixed_lattice.coords(g)
            cols.append(tuple(int(x) for x in coords))
        rel = Matrix.from_cols(ZZ, cols, fixed_lattice.rank)
        factors = tuple(f for f in linalg.smith_normal_form(rel) if f not in (0, 1))
    quotient_trivial = not factors and free_rank == 0

    unit_coords = lat.coords(module.unit)
    fixed_is_base = (
        unit_coords is not None
        and fixed_lattice
        == IntegerLattice.from_generators(lat.rank, [unit_coords])
    )
    rank_equal = order.rank == lat.rank
    rows = []
    for u in range(lat.ambient_dim):
        for v in range(lat.ambient_dim):
            rows.append([module.action[a].rows[u][v] for a in range(h.dim)])
    faithful = linalg.rank(Matrix(QQ, rows)) == h.dim

    tame = quotient_trivial and fixed_is_base and rank_equal and faithful
    primes = sorted({p for f in factors for p in _prime_factors(f)})

    rational_tame = None
    if module.algebra is not None:
        ma = actions_mod.module_algebra(
            h,
            module.algebra,
            [
                (a, s, t, module.action[a].rows[t][s])
                for a in range(h.dim)
                for s in range(lat.ambient_dim)
                for t in range(lat.ambient_dim)
                if module.action[a].rows[t][s] != 0
            ],
        )
        rational_tame = actions_mod.classify_extension(ma).tame

    return TameLatticeReport(
        fixed_rank=fixed_lattice.rank,
        fixed_is_base=fixed_is_base,
        rank_equal=rank_equal,
        faithful=faithful,
        image_in_fixed=image_in_fixed,
        invariant_factors=factors,
        quotient_free_rank=free_rank,
        tame=tame,
        obstructed_primes=tuple(primes),
        integral_generator=generator,
        rational_tame=rational_tame,
    )


@dataclass(frozen=True)
class FreeGeneratorResult:
    generator: tuple | None
    certificate: Matrix | None
    determinant: int | None
    tried: int


def free_rank_one_generator(order, module, candidates):
    """First candidate z with A . z = S, certified by a unimodular matrix.

    Candidate-list driven: absence among the candidates is reported as
    inconclusive (generator None), never as a negative theorem.
    """
    report = tame_check_integral(order, module)
    if not report.tame:
        raise PreconditionError("freeness certification applies to tame extensions only")
    lat = module.lattice
    for count, z in enumerate(candidates, start=1):
        z = tuple(QQ.normalize(x) for x in z)
        cols = []
        ok = True
        for u in order.lattice.generators():
            moved = module.action_of(u).apply(z)
            coords = lat.coords(moved)
            if coords is None or any(Fraction(x).denominator != 1 for x in coords):
                ok = False
                break
            cols.append(tuple(int(x) for x in coords))
        if not ok or len(cols) != lat.rank:
            continue
        cert = Matrix.from_cols(ZZ, cols, lat.rank)
        d = linalg.det(cert)
        if abs(d) == 1:
            return FreeGeneratorResult(z, cert, d, count)
    return FreeGeneratorResult(None, None, None, len(list(candidates)))
