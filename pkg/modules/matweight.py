# modules/matweight.py
"""
A_J'nin serbest A₀-modülü yapısı ve matris ağırlıkları.

Katalog tabanları (C1v-C1, J=∅ ve A2, J={2}), m_{v,v'} = (1/|W₀|) Σ_w w(e_v e_{v'}*/Δ₀)
girdileri, operatör matrisleri, benzerlik dönüşümleri ve blok yapı raporu.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import (
    CoordinatesNotPolynomialError, InvariantViolationError, NotDivisibleError, NotWJInvariantError,
    PreconditionError, SingularMatrixError, UnsupportedTypeError,
)
from .hecke import HeckeAction, finite_poincare
from .laurent import LaurentPoly, exact_div, weyl_act, weyl_denominator
from .logger import Logger
from .params import KScalar
from .rootdata import AffineWeylGroup, Labelling, Vector, WeylElement, askey_wilson_parameters
from .weights import TruncSeries, inner, nabla_constant_term, steps_for, weight_polynomial

BASIS_NAMES = ('steinberg', 'eigen')


@dataclass
class ModuleBasis:
    type_name: str
    J: Tuple[int, ...]
    name: str
    reps: List[WeylElement]
    vectors: Dict[WeylElement, LaurentPoly]

    def vector(self, v: WeylElement) -> LaurentPoly:
        return self.vectors[v]


@dataclass
class MatrixWeight:
    basis: ModuleBasis
    entries: Dict[Tuple[WeylElement, WeylElement], LaurentPoly] = field(default_factory=dict)

    def entry(self, v: WeylElement, w: WeylElement) -> LaurentPoly:
        return self.entries[(v, w)]

    def rows(self) -> List[List[LaurentPoly]]:
        reps = self.basis.reps
        return [[self.entries[(v, w)] for w in reps] for v in reps]

    def to_json(self, group: AffineWeylGroup) -> Dict:
        reps = self.basis.reps
        return {
            'type': self.basis.type_name,
            'J': list(self.basis.J),
            'basis': self.basis.name,
            'index': [group.word_text(v) for v in reps],
            'entries': [[self.entries[(v, w)].text() for w in reps] for v in reps],
        }


def determinant(matrix: List[List], zero):
    """Laplace açılımı (katalogda n ≤ 3)"""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = zero
    for col in range(n):
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = matrix[0][col] * determinant(minor, zero)
        total = total + term if col % 2 == 0 else total - term
    return total


def _poly(group: AffineWeylGroup, terms: Dict[Vector, object]) -> LaurentPoly:
    return LaurentPoly(group.data.space, group.data.rank, terms)


def module_basis(group: AffineWeylGroup, k: Labelling, name: str) -> ModuleBasis:
    """Katalog tabanı; determinant kontrolü yüklemede yapılır"""
    data = group.data
    if name not in BASIS_NAMES:
        raise UnsupportedTypeError(f"unknown basis '{name}' (expected {', '.join(BASIS_NAMES)})")
    if data.name == 'C1v-C1':
        J: Tuple[int, ...] = ()
        params = askey_wilson_parameters(data, k)
        a, b = params['a'], params['b']
        x_inv = _poly(group, {(-1,): 1})
        if name == 'steinberg':
            second = x_inv
        else:
            # x^{-1}(1 − ax)(1 − bx)
            second = _poly(group, {(-1,): 1, (0,): -(a + b), (1,): a * b})
        vectors = [_poly(group, {(0,): 1}), second]
    elif data.name == 'A2':
        J = (2,)
        tau = data.tau(k, 1)
        ones = _poly(group, {(0, 0): 1})
        middle = _poly(group, {(-1, 1): 1, (0, -1): 1})
        if name == 'steinberg':
            vectors = [ones, middle, _poly(group, {(-1, 0): 1})]
        else:
            h = _poly(group, {(1, 0): tau * tau + 1}) - middle.scale((tau * tau).inverse())
            vectors = [ones, h, h.star()]
    else:
        raise UnsupportedTypeError(f"no catalog module basis for type {data.name}")
    reps = group.minimal_coset_reps(J)
    basis = ModuleBasis(data.name, J, name, reps, dict(zip(reps, vectors)))
    if determinant(twist_matrix(group, basis), LaurentPoly.zero(data.space, data.rank)).is_zero():
        raise SingularMatrixError(f"{name} basis of {data.name} has a singular twist matrix")
    return basis


def twist_matrix(group: AffineWeylGroup, basis: ModuleBasis) -> List[List[LaurentPoly]]:
    """(w·e_v)_{w,v}, w ∈ W₀^J"""
    data = group.data
    return [[weyl_act(data, w, basis.vectors[v]) for v in basis.reps] for w in basis.reps]


def expand_in_basis(group: AffineWeylGroup, f: LaurentPoly, basis: ModuleBasis) -> Dict[WeylElement, LaurentPoly]:
    """f = Σ_v f_v e_v, f_v ∈ A₀; Cramer kuralıyla"""
    data = group.data
    for j in basis.J:
        if weyl_act(data, group.s(j), f) != f:
            raise NotWJInvariantError(f"polynomial is not W_J-invariant for J={list(basis.J)}")
    zero = LaurentPoly.zero(data.space, data.rank)
    matrix = twist_matrix(group, basis)
    det = determinant(matrix, zero)
    if det.is_zero():
        raise SingularMatrixError("twist matrix is singular")
    rhs = [weyl_act(data, w, f) for w in basis.reps]
    coords = {}
    for col, v in enumerate(basis.reps):
        replaced = [row[:col] + [rhs[r]] + row[col + 1:] for r, row in enumerate(matrix)]
        try:
            coords[v] = exact_div(determinant(replaced, zero), det)
        except NotDivisibleError as e:
            raise CoordinatesNotPolynomialError(f"coordinate at {group.word_text(v)} is not a polynomial: {e}")
    return coords


class MatrixWeightBuilder:
    """Bir (tip, k) çifti için matris ağırlığı ve ilgili denetimler"""

    def __init__(self, group: AffineWeylGroup, k: Labelling, logger: Logger = None):
        self.group = group
        self.data = group.data
        self.k = k
        self.logger = logger or Logger()
        self.hecke = HeckeAction(group, k, self.logger)
        self._F: Optional[LaurentPoly] = None

    @property
    def F(self) -> LaurentPoly:
        if self._F is None:
            self._F = weight_polynomial(self.group, self.k)
        return self._F

    def antisymmetrise(self, f: LaurentPoly) -> LaurentPoly:
        """Σ_w (−1)^{ℓ(w)} w f"""
        total = LaurentPoly.zero(self.data.space, self.data.rank)
        for w in self.group.finite_group():
            image = weyl_act(self.data, w, f)
            total = total + image if self.group.length(w) % 2 == 0 else total - image
        return total

    def weight_entry(self, e_v: LaurentPoly, e_w: LaurentPoly) -> LaurentPoly:
        """m = (1/|W₀|δ)·Σ_w (−1)^{ℓ(w)} w(e_v e_w* F)"""
        anti = self.antisymmetrise(e_v * e_w.star() * self.F)
        try:
            quotient = exact_div(anti, weyl_denominator(self.group))
        except NotDivisibleError as e:
            self.logger.error(f"weight entry is not a polynomial: {e}", "MATWEIGHT",
                              extra={'type': self.data.name})
            raise CoordinatesNotPolynomialError(f"matrix weight entry is not a polynomial: {e}")
        return quotient.scale(self.data.space.from_rational(len(self.group.finite_group())).inverse())

    def weight_matrix(self, basis: ModuleBasis) -> MatrixWeight:
        entries = {}
        for v in basis.reps:
            for w in basis.reps:
                entries[(v, w)] = self.weight_entry(basis.vectors[v], basis.vectors[w])
        self.logger.info(f"matrix weight for {basis.name} basis computed", "MATWEIGHT",
                         extra={'type': self.data.name, 'J': list(basis.J), 'size': len(basis.reps)})
        return MatrixWeight(basis, entries)

    def inner_via_matrix(self, f: LaurentPoly, g: LaurentPoly, basis: ModuleBasis, order: int,
                         weight: Optional[MatrixWeight] = None) -> TruncSeries:
        """(f, g) = ct(f̲ᵀ M g̲* ∇)"""
        weight = weight or self.weight_matrix(basis)
        fv = expand_in_basis(self.group, f, basis)
        gv = expand_in_basis(self.group, g, basis)
        y = LaurentPoly.zero(self.data.space, self.data.rank)
        for v in basis.reps:
            for w in basis.reps:
                y = y + fv[v] * weight.entry(v, w) * gv[w].star()
        return nabla_constant_term(self.group, self.k, y, order, finite_poincare(self.group, self.k))

    # --- operatörler ---

    def x_element(self, f: LaurentPoly) -> LaurentPoly:
        """x = T₁T₂ + T₂T₁ − (τ − τ^{-1})(T₁ + T₂)"""
        if self.data.name != 'A2':
            raise UnsupportedTypeError("the centraliser element x is defined for A2 only")
        T = self.hecke.T
        tau = self.hecke.tau[1]
        linear = T(1, f) + T(2, f)
        return T(1, T(2, f)) + T(2, T(1, f)) - linear.scale(tau - tau.inverse())

    def operator(self, name: str) -> Callable[[LaurentPoly], LaurentPoly]:
        if name == 'x':
            return self.x_element
        if name.startswith('T') and name[1:].isdigit():
            i = int(name[1:])
            if i not in self.data.finite_indices:
                raise PreconditionError(f"T{i} is not a finite Hecke generator")
            return lambda f: self.hecke.T(i, f)
        raise UnsupportedTypeError(f"unknown operator '{name}'")

    def matrix_of_operator(self, name: str, basis: ModuleBasis) -> List[List[LaurentPoly]]:
        """op(e_v) = Σ_{v'} M[v'][v] e_{v'}"""
        op = self.operator(name)
        if name.startswith('T') and basis.J:
            raise PreconditionError("T_i preserves A_J only for J = ∅")
        columns = [expand_in_basis(self.group, op(basis.vectors[v]), basis) for v in basis.reps]
        return [[columns[c][row_v] for c in range(len(basis.reps))] for row_v in basis.reps]

    def x_element_adjointness(self, f: LaurentPoly, g: LaurentPoly, order: int) -> bool:
        """(x f, g) = (f, x g)"""
        prec = steps_for(self.data.space, order)
        lhs = inner(self.group, self.k, self.x_element(f), g, order)
        rhs = inner(self.group, self.k, f, self.x_element(g), order)
        return lhs.agrees(rhs, prec)

    # --- benzerlik ve indirgenebilirlik ---

    def similarity(self, weight: MatrixWeight, R: Sequence[Sequence[KScalar]]) -> MatrixWeight:
        """R M R^{*T}"""
        space = self.data.space
        reps = weight.basis.reps
        n = len(reps)
        if len(R) != n or any(len(row) != n for row in R):
            raise PreconditionError(f"similarity matrix must be {n}x{n}")
        R = [[c if isinstance(c, KScalar) else space.from_rational(c) for c in row] for row in R]
        if determinant(R, space.zero).is_zero():
            raise SingularMatrixError("similarity matrix is singular")
        zero = LaurentPoly.zero(space, self.data.rank)
        entries = {}
        for i, v in enumerate(reps):
            for j, w in enumerate(reps):
                total = zero
                for a, va in enumerate(reps):
                    for b, vb in enumerate(reps):
                        total = total + weight.entry(va, vb).scale(R[i][a] * R[j][b].star())
                entries[(v, w)] = total
        return MatrixWeight(weight.basis, entries)

    def orbit_components(self, weight: MatrixWeight) -> Dict[Vector, List[List[KScalar]]]:
        """M = Σ_μ M_μ m_μ; μ baskın"""
        group = self.group
        finite = self.data.finite_indices
        reps = weight.basis.reps
        n = len(reps)
        space = self.data.space
        components: Dict[Vector, List[List[KScalar]]] = {}
        for i, v in enumerate(reps):
            for j, w in enumerate(reps):
                entry = weight.entry(v, w)
                for idx in finite:
                    if weyl_act(self.data, group.s(idx), entry) != entry:
                        raise InvariantViolationError(f"weight entry ({i},{j}) is not W0-invariant")
                for mu, c in entry.terms.items():
                    if group.j_dominant_rep(mu, finite)[0] != mu:
                        continue
                    matrix = components.setdefault(mu, [[space.zero] * n for _ in range(n)])
                    matrix[i][j] = c
        return components

    def reducibility_check(self, weight: MatrixWeight) -> Dict:
        """Tüm M_μ'lerin ortak blok yapısı (bağlı bileşenler)

        Yalnız verilen tabandaki sıfır desenine bakar; sonuç tabana bağlıdır. Bloklara ayrılma
        indirgenebilirliği gösterir, tek blok ise indirgenemezlik kanıtı değildir (önce uygun bir
        benzerlik, örn. similarity(weight, R), uygulanmalıdır).
        """
        reps = weight.basis.reps
        n = len(reps)
        components = self.orbit_components(weight)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for matrix in components.values():
            for i in range(n):
                for j in range(n):
                    if not matrix[i][j].is_zero():
                        parent[find(i)] = find(j)
        blocks: Dict[int, List[int]] = {}
        for i in range(n):
            blocks.setdefault(find(i), []).append(i)
        block_list = sorted(blocks.values())
        self.logger.info(f"block sizes {[len(b) for b in block_list]}", "MATWEIGHT",
                         extra={'type': self.data.name, 'basis': weight.basis.name})
        return {
            'blocks': [[self.group.word_text(reps[i]) for i in block] for block in block_list],
            'block_sizes': [len(b) for b in block_list],
            'components': components,
        }


def askey_wilson_similarity(group: AffineWeylGroup, k: Labelling) -> List[List[KScalar]]:
    """U = [[−a, 1], [−b, 1]]"""
    params = askey_wilson_parameters(group.data, k)
    one = group.data.space.one
    return [[-params['a'], one], [-params['b'], one]]
