"""Exact integer linear algebra: Smith normal form, finitely generated
abelian groups presented by relation matrices, and homomorphisms with
kernel / image / cokernel extraction.

Everything runs on plain Python ints (arbitrary precision); matrices are
lists of lists.  The SNF pivot rule is fixed (smallest nonzero absolute
value, row-major tie break) so transforms are reproducible across runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# matrix helpers

def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                row = out[i]
                for j in range(m):
                    row[j] += x * bt[j]
    return out


def mat_vec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def vec_mat(v, m):
    if not m:
        return []
    cols = len(m[0])
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(cols)]


def determinant(m):
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass
class SNFResult:
    """U @ M @ V == D with U, V unimodular; inverses tracked alongside."""

    D: list
    U: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def diagonal(self):
        n = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(n)]


def smith_normal_form(m) -> SNFResult:
    """Exact SNF over Z.

    Pivot rule: smallest nonzero absolute value in the working submatrix,
    ties broken row-major.  Diagonal entries are nonnegative and form a
    divisibility chain.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(map(int, row)) for row in m]
    u, uinv = identity_matrix(rows), identity_matrix(rows)
    v, vinv = identity_matrix(cols), identity_matrix(cols)

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, k):  # row_i += k * row_j
        d[i] = [x + k * y for x, y in zip(d[i], d[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
        for r in uinv:
            r[j] -= k * r[i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(i, j, k):  # col_i += k * col_j
        for r in d:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]
        vinv[j] = [x - k * y for x, y in zip(vinv[j], vinv[i])]

    t = 0
    while t < rows and t < cols:
        # locate pivot: smallest |entry| != 0, row-major tie break
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x and (pivot is None or abs(x) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            # clear column t then row t
            dirty = False
            for i in range(rows):
                if i != t and d[i][t]:
                    k = d[i][t] // d[t][t]
                    row_add(i, t, -k)
                    if d[i][t]:
                        dirty = True
            for j in range(cols):
                if j != t and d[t][j]:
                    k = d[t][j] // d[t][t]
                    col_add(j, t, -k)
                    if d[t][j]:
                        dirty = True
            if dirty:
                pivot = min(
                    ((i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]),
                    key=lambda ij: (abs(d[ij[0]][ij[1]]), ij),
                )
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % d[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
            pivot = min(
                ((i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]),
                key=lambda ij: (abs(d[ij[0]][ij[1]]), ij),
            )
        if d[t][t] < 0:
            row_neg(t)
        t += 1
    return SNFResult(D=d, U=u, V=v, Uinv=uinv, Vinv=vinv)


def left_kernel_basis(m):
    """Basis rows for {x : x @ m == 0} over Z."""
    rows = len(m)
    if rows == 0:
        return []
    res = smith_normal_form(m)
    diag = res.diagonal
    rank = sum(1 for x in diag if x)
    return [res.U[i][:] for i in range(rank, rows)]


def lattice_basis(rows, n):
    """A basis (as rows) of the lattice in Z^n spanned by the given rows."""
    if not rows:
        return []
    res = smith_normal_form(rows)
    dv = mat_mul(res.D, res.Vinv)
    diag = res.diagonal
    return [dv[i] for i in range(len(diag)) if diag[i]]


def express_in_basis(basis, vec):
    """Solve x @ basis == vec exactly; return list of Fractions."""
    n = len(basis)
    if n == 0:
        if any(vec):
            raise ValueError("vector outside the zero lattice")
        return []
    cols = len(basis[0])
    aug = [[Fraction(basis[i][j]) for i in range(n)] + [Fraction(vec[j])] for j in range(cols)]
    # solve (basis^T) x = vec by Gaussian elimination
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, cols) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(cols):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    for i in range(r, cols):
        if aug[i][n]:
            raise ValueError("vector not in the lattice span")
    return x


def lattice_quotient_factors(big_rows, small_rows, n):
    """Invariant factors of (lattice big) / (lattice small), both full rank n."""
    basis = lattice_basis(big_rows, n)
    if len(basis) != n:
        raise ValueError("big lattice is not of full rank")
    c = []
    for row in small_rows:
        coords = express_in_basis(basis, row)
        if any(f.denominator != 1 for f in coords):
            raise ValueError("small lattice is not contained in the big one")
        c.append([int(f) for f in coords])
    diag = smith_normal_form(c).diagonal
    diag += [0] * (n - len(diag))
    if any(x == 0 for x in diag):
        raise ValueError("quotient is infinite; small lattice not full rank")
    return [x for x in diag if x > 1]


# ---------------------------------------------------------------------------
# finitely generated abelian groups

class FinAbGroup:
    """Z^g / (row span of relations), with basis-change bookkeeping.

    Elements are tuples in "canonical" coordinates: position i is taken mod
    diag[i] (diag[i] == 0 marks a free coordinate).  User coordinates (the
    original generators) convert via x_can = x_user @ V.
    """

    def __init__(self, n_gens, diag, v, vinv, gen_names=None):
        self.n_gens = n_gens
        self.diag = tuple(diag)
        self.v = tuple(tuple(r) for r in v)
        self.vinv = tuple(tuple(r) for r in vinv)
        self.gen_names = tuple(gen_names) if gen_names else None

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_relations(cls, n_gens, relations, gen_names=None):
        for row in relations:
            if len(row) != n_gens:
                raise ValueError("relation row length != number of generators")
        if not relations:
            return cls(
                n_gens,
                (0,) * n_gens,
                identity_matrix(n_gens),
                identity_matrix(n_gens),
                gen_names,
            )
        res = smith_normal_form([list(map(int, r)) for r in relations])
        diag = res.diagonal
        diag = list(diag) + [0] * (n_gens - len(diag))
        return cls(n_gens, diag, res.V, res.Vinv, gen_names)

    @classmethod
    def from_factors(cls, factors, rank=0):
        factors = [int(f) for f in factors]
        if any(f < 2 for f in factors):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        n = len(factors) + rank
        diag = tuple(factors) + (0,) * rank
        return cls(n, diag, identity_matrix(n), identity_matrix(n))

    @classmethod
    def trivial(cls):
        return cls(0, (), [], [])

    # -- structure ---------------------------------------------------------
    @property
    def invariant_factors(self):
        return tuple(d for d in self.diag if d > 1)

    @property
    def rank(self):
        return sum(1 for d in self.diag if d == 0)

    @property
    def is_finite(self):
        return self.rank == 0

    @property
    def order(self):
        if not self.is_finite:
            raise ValueError("group is infinite")
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def is_trivial(self):
        return self.is_finite and self.order == 1

    def same_structure(self, other) -> bool:
        return (
            self.invariant_factors == other.invariant_factors
            and self.rank == other.rank
        )

    # -- elements ----------------------------------------------------------
    def reduce(self, canonical):
        out = []
        for x, d in zip(canonical, self.diag):
            out.append(int(x) % d if d else int(x))
        return tuple(out)

    def element_from_user(self, user_vec):
        if len(user_vec) != self.n_gens:
            raise ValueError("coordinate vector has wrong length")
        return self.reduce(vec_mat(list(user_vec), [list(r) for r in self.v]))

    def user_from_element(self, canonical):
        """Any user-coordinate lift of a canonical element."""
        return vec_mat(list(canonical), [list(r) for r in self.vinv])

    @property
    def zero(self):
        return (0,) * self.n_gens

    def add(self, a, b):
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a):
        return self.reduce([-x for x in a])

    def scale(self, k, a):
        return self.reduce([k * x for x in a])

    def element_order(self, a) -> int:
        a = self.reduce(a)
        n = 1
        for x, d in zip(a, self.diag):
            if d == 0:
                if x:
                    raise ValueError("element of infinite order")
                continue
            if x:
                o = d // gcd(d, x)
                n = n * o // gcd(n, o)
        return n

    def elements(self):
        """All elements (finite groups only), canonical coordinates."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        import itertools

        ranges = [range(d) if d else range(1) for d in self.diag]
        for combo in itertools.product(*ranges):
            yield tuple(combo)

    def structure_string(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.rank, "factors": list(self.invariant_factors)}

    def __repr__(self):
        return f"FinAbGroup({self.structure_string()})"


# ---------------------------------------------------------------------------
# homomorphisms

class AbHom:
    """Homomorphism src -> dst, given by images of the src user generators
    (as dst canonical elements).  Well-definedness is verified on build."""

    def __init__(self, src: FinAbGroup, dst: FinAbGroup, images):
        if len(images) != src.n_gens:
            raise ValueError("need one image per source generator")
        self.src = src
        self.dst = dst
        self.images = tuple(dst.reduce(im) for im in images)
        # canonical source generator i = sum_j vinv[i][j] * (user gen j);
        # it must die when multiplied by its invariant factor.
        self._canonical_images = []
        for i in range(src.n_gens):
            img = dst.zero
            for j in range(src.n_gens):
                k = src.vinv[i][j]
                if k:
                    img = dst.add(img, dst.scale(k, self.images[j]))
            self._canonical_images.append(img)
            d = src.diag[i]
            if d and any(dst.scale(d, img)):
                raise ValueError(
                    f"not a homomorphism: relation {d}*g_{i} maps to a nonzero element"
                )

    def apply_user(self, user_vec):
        out = self.dst.zero
        for k, im in zip(user_vec, self.images):
            if k:
                out = self.dst.add(out, self.dst.scale(k, im))
        return out

    def apply(self, canonical):
        return self.apply_user(self.src.user_from_element(canonical))

    # -- kernel / image / cokernel ----------------------------------------
    def kernel_image_cokernel(self):
        """Return (kernel, image, cokernel) as FinAbGroup structures.

        Finite source and target only; verified by |K| * |I| == |src| and
        |I| * |coker| == |dst|.
        """
        if not (self.src.is_finite and self.dst.is_finite):
            raise ValueError("kernel/image/cokernel implemented for finite groups")
        sfac = [d for d in self.src.diag if d > 1]
        sidx = [i for i, d in enumerate(self.src.diag) if d > 1]
        tfac = [d for d in self.dst.diag if d > 1]
        tidx = [i for i, d in enumerate(self.dst.diag) if d > 1]
        s, t = len(sfac), len(tfac)
        w = [[self._canonical_images[i][j] for j in tidx] for i in sidx]

        tdiag_rows = [[tfac[j] if k == j else 0 for k in range(t)] for j in range(t)]
        # cokernel: Z^t / <rows of w, t relations>
        coker = FinAbGroup.from_relations(t, w + tdiag_rows) if t else FinAbGroup.trivial()
        image_order = self.dst.order // coker.order

        # kernel lattice: {x in Z^s : x w == 0 mod target factors}
        if s == 0:
            kernel = FinAbGroup.trivial()
        else:
            if t:
                stacked = [w[i] + [0] * 0 for i in range(s)]
                full = [list(stacked[i]) for i in range(s)] + tdiag_rows
                kb = left_kernel_basis(full)
                k_rows = [row[:s] for row in kb]
            else:
                k_rows = identity_matrix(s)
            sdiag_rows = [[sfac[j] if k == j else 0 for k in range(s)] for j in range(s)]
            factors = lattice_quotient_factors(k_rows + sdiag_rows, sdiag_rows, s)
            kernel = FinAbGroup.from_factors(factors)

        image = self._image_structure(w, tfac, image_order)
        assert kernel.order * image.order == self.src.order
        assert image.order * coker.order == self.dst.order
        return kernel, image, coker

    def _image_structure(self, w, tfac, expected_order):
        t = len(tfac)
        if t == 0 or expected_order == 1:
            img = FinAbGroup.trivial()
            assert img.order == expected_order
            return img
        tdiag_rows = [[tfac[j] if k == j else 0 for k in range(t)] for j in range(t)]
        factors = lattice_quotient_factors(w + tdiag_rows, tdiag_rows, t)
        img = FinAbGroup.from_factors(factors) if factors else FinAbGroup.trivial()
        assert img.order == expected_order
        return img

    def is_injective(self):
        k, _, _ = self.kernel_image_cokernel()
        return k.is_trivial

    def is_isomorphism(self):
        k, _, c = self.kernel_image_cokernel()
        return k.is_trivial and c.is_trivial

    def __repr__(self):
        return f"AbHom({self.src} -> {self.dst})"


# ---------------------------------------------------------------------------
# small arithmetic fact used by the order bookkeeping

def coprimality_pair(n: int):
    """gcd(n^2 + 1, n + 1): 2 when n is odd, 1 when n is even."""
    return gcd(n * n + 1, n + 1)
