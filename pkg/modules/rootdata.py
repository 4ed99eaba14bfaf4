# modules/rootdata.py
"""
Dualite verisi kataloğu (A1, A2, (C1∨,C1)) ve genişletilmiş afin Weyl grubu.

Koordinatlar: V, temel ağırlık tabanında (C1v-C1 için b = ε tabanında) tutulur;
⟨x, y⟩ = xᵀ G y. Katalogdaki üç tip için L = L' = ℤⁿ ve W' = W sayısal olarak
çakışır; yalnızca etiketler (k ve k') farklıdır.
"""
from collections import deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix

from config import COMPUTE_SETTINGS

from .errors import (
    LatticeMismatchError, NotARootError, PreconditionError, UnknownTypeError,
)
from .logger import Logger
from .params import ExponentVector, KScalar, RationalLike, ScalarField, as_fraction

Vector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]

TYPE_NAMES = ('A1', 'A2', 'C1v-C1')


@dataclass(frozen=True)
class AffineRoot:
    """a(x) = ⟨gradient, x⟩ + constant"""
    gradient: Vector
    constant: Fraction = Fraction(0)

    def __neg__(self) -> 'AffineRoot':
        return AffineRoot(tuple(-g for g in self.gradient), -self.constant)

    def double(self) -> 'AffineRoot':
        return AffineRoot(tuple(2 * g for g in self.gradient), 2 * self.constant)

    def text(self) -> str:
        return f"({','.join(map(str, self.gradient))}; {self.constant})"


@dataclass(frozen=True)
class RootOrbit:
    """W-yörüngesi: gradyanlar × (offset + step·ℤ) sabitleri"""
    name: str
    gradients: Tuple[Vector, ...]
    offset: Fraction
    step: Fraction

    def contains(self, root: AffineRoot) -> bool:
        if root.gradient not in self.gradients:
            return False
        return ((root.constant - self.offset) / self.step).denominator == 1

    def roots_with_constant(self, constant: Fraction) -> List[AffineRoot]:
        if ((constant - self.offset) / self.step).denominator != 1:
            return []
        return [AffineRoot(g, constant) for g in self.gradients]


@dataclass(frozen=True)
class WeylElement:
    """x ↦ Mx + t afin dönüşümü (M tam sayı matrisi, t ∈ L')"""
    linear: Tuple[Tuple[int, ...], ...]
    translation: Vector

    @classmethod
    def identity(cls, rank: int) -> 'WeylElement':
        return cls(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)), (0,) * rank)

    @classmethod
    def from_arrays(cls, matrix: np.ndarray, translation: np.ndarray) -> 'WeylElement':
        return cls(tuple(tuple(int(v) for v in row) for row in matrix), tuple(int(v) for v in translation))

    def matrix(self) -> np.ndarray:
        return np.array(self.linear, dtype=np.int64)

    def vector(self) -> np.ndarray:
        return np.array(self.translation, dtype=np.int64)

    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        m1, m2 = self.matrix(), other.matrix()
        return WeylElement.from_arrays(m1 @ m2, m1 @ other.vector() + self.vector())

    def inverse(self) -> 'WeylElement':
        m = self.matrix()
        inv = np.rint(np.linalg.inv(m)).astype(np.int64)
        if not np.array_equal(inv @ m, np.eye(len(m), dtype=np.int64)):
            raise LatticeMismatchError("linear part is not unimodular")
        return WeylElement.from_arrays(inv, -(inv @ self.vector()))

    def is_linear(self) -> bool:
        return not any(self.translation)

    def act_linear(self, vec: Sequence[int]) -> Vector:
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in self.linear)

    def act_point(self, vec: Sequence) -> tuple:
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) + t
                     for row, t in zip(self.linear, self.translation))


@dataclass(frozen=True)
class Labelling:
    """Yörünge -> etiket değeri (formel sembol ya da birimin rasyonel katı)"""
    values: Tuple[Tuple[str, ExponentVector], ...]

    @classmethod
    def from_map(cls, values: Mapping[str, ExponentVector]) -> 'Labelling':
        return cls(tuple(sorted(values.items())))

    @classmethod
    def formal(cls, orbits: Iterable[str]) -> 'Labelling':
        return cls.from_map({o: ExponentVector.symbol(o) for o in orbits})

    @classmethod
    def specialized(cls, assign: Mapping[str, RationalLike]) -> 'Labelling':
        return cls.from_map({o: ExponentVector.of(v) for o, v in assign.items()})

    def __getitem__(self, orbit: Optional[str]) -> ExponentVector:
        if orbit is None:
            return ExponentVector()
        for name, value in self.values:
            if name == orbit:
                return value
        return ExponentVector()

    def orbits(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.values)

    def shifted(self, delta: Mapping[str, RationalLike]) -> 'Labelling':
        """k + l (l birimin katları)"""
        return Labelling.from_map({o: v + ExponentVector.of(delta.get(o, 0)) for o, v in self.values})

    def signed(self, signs: Mapping[str, int]) -> 'Labelling':
        """Yörünge bazında işaret değişimi (εk, −k gibi)"""
        return Labelling.from_map({o: v.scale(signs.get(o, 1)) for o, v in self.values})

    def negated(self) -> 'Labelling':
        return Labelling.from_map({o: -v for o, v in self.values})


@dataclass
class RootSystemData:
    """Bir katalog tipinin tüm dualite verisi"""
    name: str
    rank: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    simple_roots: Dict[int, AffineRoot]
    orbits: Tuple[RootOrbit, ...]
    positive_finite_roots: Tuple[Vector, ...]
    theta_coefficients: Tuple[int, ...]
    denominator: int
    q0_exponent: Fraction
    duality_mode: str
    highest_root_index: int
    space: ScalarField = dc_field(init=False, repr=False)
    _simple_inverse: Tuple[Tuple[Fraction, ...], ...] = dc_field(init=False, repr=False)

    def __post_init__(self):
        self.space = ScalarField([o.name for o in self.orbits], self.denominator, self.q0_exponent)
        cols = [list(self.simple_roots[i].gradient) for i in self.finite_indices]
        inv = Matrix(cols).T.inv()
        self._simple_inverse = tuple(tuple(Fraction(int(v.p), int(v.q)) for v in inv.row(i)) for i in range(self.rank))

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.simple_roots))

    @property
    def finite_indices(self) -> Tuple[int, ...]:
        return tuple(i for i in self.indices if i != 0)

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((Fraction(x[i]) * self.gram[i][j] * y[j]
                    for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def coroot(self, gradient: Sequence[int]) -> Vector:
        norm = self.pairing(gradient, gradient)
        out = tuple(2 * Fraction(g) / norm for g in gradient)
        if any(v.denominator != 1 for v in out):
            raise LatticeMismatchError(f"coroot of {tuple(gradient)} is not integral")
        return tuple(int(v) for v in out)

    def root_coordinates(self, gradient: Sequence[int]) -> RationalVector:
        """Basit sonlu kökler tabanında koordinatlar"""
        return tuple(sum((row[j] * gradient[j] for j in range(self.rank)), Fraction(0)) for row in self._simple_inverse)

    def orbit_of(self, root: AffineRoot) -> Optional[str]:
        for orbit in self.orbits:
            if orbit.contains(root):
                return orbit.name
        return None

    def in_system(self, root: AffineRoot) -> bool:
        return self.orbit_of(root) is not None

    def is_positive(self, root: AffineRoot, check: bool = False) -> bool:
        if check and not self.in_system(root):
            raise NotARootError(f"{root.text()} is not in S")
        if root.constant != 0:
            return root.constant > 0
        coords = self.root_coordinates(root.gradient)
        return all(c >= 0 for c in coords) and any(c != 0 for c in coords)

    def is_indivisible(self, root: AffineRoot) -> bool:
        half = AffineRoot(tuple(Fraction(g, 2) for g in root.gradient), root.constant / 2)
        if any(Fraction(g).denominator != 1 for g in half.gradient):
            return True
        return not self.in_system(AffineRoot(tuple(int(g) for g in half.gradient), half.constant))

    def positive_linear_roots(self) -> List[Vector]:
        """Sabiti 0 olan pozitif köklerin gradyanları"""
        found = []
        for orbit in self.orbits:
            for root in orbit.roots_with_constant(Fraction(0)):
                if self.is_positive(root) and root.gradient not in found:
                    found.append(root.gradient)
        return sorted(found, key=lambda g: (sum(self.root_coordinates(g)), g))

    def act_root(self, w: WeylElement, root: AffineRoot) -> AffineRoot:
        """w·a = a∘w⁻¹"""
        grad = w.act_linear(root.gradient)
        return AffineRoot(grad, root.constant - self.pairing(grad, w.translation))

    def reflection(self, root: AffineRoot) -> WeylElement:
        """s_a(x) = x − a(x)·(Da)∨"""
        co = self.coroot(root.gradient)
        g_beta = [sum((self.gram[i][j] * root.gradient[j] for j in range(self.rank)), Fraction(0))
                  for i in range(self.rank)]
        linear = []
        for i in range(self.rank):
            row = []
            for j in range(self.rank):
                value = Fraction(int(i == j)) - co[i] * g_beta[j]
                if value.denominator != 1:
                    raise LatticeMismatchError("reflection matrix is not integral")
                row.append(int(value))
            linear.append(tuple(row))
        translation = tuple(-root.constant * c for c in co)
        if any(Fraction(t).denominator != 1 for t in translation):
            raise LatticeMismatchError("reflection translation is not in L'")
        return WeylElement(tuple(linear), tuple(int(t) for t in translation))

    def label(self, k: Labelling, root: AffineRoot) -> ExponentVector:
        return k[self.orbit_of(root)]

    def tau_exponent(self, k: Labelling, root: AffineRoot) -> ExponentVector:
        """τ_a = q((k(a)+k(2a))/2)"""
        return (self.label(k, root) + self.label(k, root.double())).scale(Fraction(1, 2))

    def tau_tilde_exponent(self, k: Labelling, root: AffineRoot) -> ExponentVector:
        """τ̃_a = q((k(a)−k(2a))/2)"""
        return (self.label(k, root) - self.label(k, root.double())).scale(Fraction(1, 2))

    def tau(self, k: Labelling, index: int) -> KScalar:
        return self.space.qpow(self.tau_exponent(k, self.simple_roots[index]))

    def tau_tilde(self, k: Labelling, index: int) -> KScalar:
        return self.space.qpow(self.tau_tilde_exponent(k, self.simple_roots[index]))

    def is_reduced_at(self, root: AffineRoot) -> bool:
        return not self.in_system(root.double())

    def formal_labelling(self) -> Labelling:
        return Labelling.formal(o.name for o in self.orbits)


def _orbit(name, gradients, offset, step) -> RootOrbit:
    return RootOrbit(name, tuple(tuple(g) for g in gradients), as_fraction(offset), as_fraction(step))


@lru_cache(maxsize=None)
def catalog(type_name: str) -> RootSystemData:
    """Katalogdaki tip için dualite verisini döndürür"""
    F = Fraction
    if type_name == 'A1':
        return RootSystemData(
            name='A1', rank=1, gram=((F(1, 2),),),
            simple_roots={0: AffineRoot((-2,), F(1)), 1: AffineRoot((2,), F(0))},
            orbits=(_orbit('O1', [(2,), (-2,)], 0, 1),),
            positive_finite_roots=((2,),), theta_coefficients=(1,),
            denominator=2, q0_exponent=F(1), duality_mode='S(R)', highest_root_index=1,
        )
    if type_name == 'A2':
        roots = [(2, -1), (-1, 2), (1, 1)]
        return RootSystemData(
            name='A2', rank=2, gram=((F(2, 3), F(1, 3)), (F(1, 3), F(2, 3))),
            simple_roots={0: AffineRoot((-1, -1), F(1)), 1: AffineRoot((2, -1), F(0)), 2: AffineRoot((-1, 2), F(0))},
            orbits=(_orbit('O1', roots + [tuple(-v for v in r) for r in roots], 0, 1),),
            positive_finite_roots=tuple(roots), theta_coefficients=(1, 1),
            denominator=6, q0_exponent=F(1), duality_mode='S(R)', highest_root_index=1,
        )
    if type_name == 'C1v-C1':
        return RootSystemData(
            name='C1v-C1', rank=1, gram=((F(1),),),
            simple_roots={0: AffineRoot((-1,), F(1, 2)), 1: AffineRoot((1,), F(0))},
            orbits=(
                _orbit('O1', [(1,), (-1,)], 0, 1),
                _orbit('O2', [(2,), (-2,)], 0, 2),
                _orbit('O3', [(1,), (-1,)], F(1, 2), 1),
                _orbit('O4', [(2,), (-2,)], 1, 2),
            ),
            positive_finite_roots=((2,),), theta_coefficients=(1,),
            denominator=4, q0_exponent=F(1, 2), duality_mode='CC', highest_root_index=1,
        )
    raise UnknownTypeError(f"unknown root system type '{type_name}' (expected one of {', '.join(TYPE_NAMES)})")


# (C1∨,C1) dual etiket matrisi (½ çarpanı ile)
_CC_DUAL = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))


def dual_label(data: RootSystemData, k: Labelling) -> Labelling:
    """k'nın dual etiketi k' (S'-yörüngeleri üzerinde)"""
    if data.duality_mode == 'CC':
        names = ('O1', 'O2', 'O3', 'O4')
        values = {}
        for row, name in zip(_CC_DUAL, names):
            total = ExponentVector()
            for coeff, source in zip(row, names):
                total = total + k[source].scale(coeff)
            values[name] = total.scale(Fraction(1, 2))
        return Labelling.from_map(values)
    # S = S(R), basit bağlı: k'(α∨ + c) = k(α + c)
    return Labelling.from_map({o.name: k[o.name] for o in data.orbits})


def dual_label_lemmas(data: RootSystemData, k: Labelling) -> Dict[str, bool]:
    """k(a_i)+k(2a_i) = k'(a_i')+k'(2a_i') (i∈I₀) ve afin basit kök için k'(a_j')−k'(2a_j')"""
    kp = dual_label(data, k)
    report = {}
    for i in data.finite_indices:
        a = data.simple_roots[i]
        lhs = data.label(k, a) + data.label(k, a.double())
        rhs = data.label(kp, a) + data.label(kp, a.double())
        report[f'linear_{i}'] = lhs == rhs
    a0 = data.simple_roots[0]
    aj = data.simple_roots[data.highest_root_index]
    lhs = data.label(k, a0) + data.label(k, a0.double())
    rhs = data.label(kp, aj) - data.label(kp, aj.double())
    report['affine_0'] = lhs == rhs
    return report


def askey_wilson_parameters(data: RootSystemData, k: Labelling) -> Dict[str, KScalar]:
    """(C1∨,C1) için (a, b, c, d) sözlüğü"""
    if data.duality_mode != 'CC':
        raise UnknownTypeError("Askey-Wilson parameters exist only for C1v-C1")
    t1, u1 = data.tau(k, 1), data.tau_tilde(k, 1)
    t0, u0 = data.tau(k, 0), data.tau_tilde(k, 0)
    q0 = data.space.q0()
    return {'a': t1 * u1, 'b': -(t1 / u1), 'c': q0 * t0 * u0, 'd': -(q0 * t0 / u0)}


@dataclass(frozen=True)
class SpectralPoint:
    """r_{k'}(λ): vektör kısmı + k'-sembollerinin formel lineer birleşimi"""
    data_name: str
    vec: RationalVector
    labels: Tuple[Tuple[str, RationalVector], ...]
    dual: Labelling

    def pair(self, vector: Sequence, constant: RationalLike = 0) -> ExponentVector:
        """⟨vector, r⟩ + constant, k-sembolleri cinsinden"""
        data = catalog(self.data_name)
        result = ExponentVector.of(data.pairing(vector, self.vec) + as_fraction(constant))
        for orbit, part in self.labels:
            coeff = data.pairing(vector, part)
            if coeff != 0:
                result = result + self.dual[orbit].scale(coeff)
        return result

    def evaluate(self, root: AffineRoot) -> ExponentVector:
        return self.pair(root.gradient, root.constant)


class AffineWeylGroup:
    """Genişletilmiş afin Weyl grubu W = W_S ⋊ Ω: indirgenmiş kelimeler, uzunluk, Bruhat, kosetler"""

    def __init__(self, data: RootSystemData, logger: Logger = None, max_word_length: int = 14):
        self.data = data
        self.logger = logger or Logger()
        self.max_word_length = max_word_length
        self.rank = data.rank
        self.one = WeylElement.identity(self.rank)
        self._simple = {i: data.reflection(a) for i, a in data.simple_roots.items()}
        self._words: Dict[WeylElement, Tuple[WeylElement, Tuple[int, ...]]] = {}
        self._bruhat: Dict[Tuple[WeylElement, WeylElement], bool] = {}
        self._parabolic: Dict[Tuple[int, ...], List[WeylElement]] = {}
        self._uprime: Dict[Vector, WeylElement] = {}
        self._downsets: Dict[Vector, List[Vector]] = {}
        self.omega = self._omega_elements()

    # --- üreteçler ---

    def s(self, i: int) -> WeylElement:
        return self._simple[i]

    def translation(self, lam: Sequence) -> WeylElement:
        if any(Fraction(x).denominator != 1 for x in lam) or len(lam) != self.rank:
            raise LatticeMismatchError(f"{tuple(lam)} is not a lattice vector of rank {self.rank}")
        return WeylElement(self.one.linear, tuple(int(x) for x in lam))

    def from_word(self, word: Iterable[int], omega: Optional[WeylElement] = None) -> WeylElement:
        w = omega or self.one
        for i in word:
            w = w * self._simple[i]
        return w

    # --- indirgenmiş kelimeler ---

    def right_descents(self, w: WeylElement, indices: Optional[Iterable[int]] = None) -> List[int]:
        data = self.data
        pool = data.indices if indices is None else indices
        return [i for i in pool if not data.is_positive(data.act_root(w, data.simple_roots[i]))]

    def reduced_word(self, w: WeylElement) -> Tuple[WeylElement, Tuple[int, ...]]:
        """w = u·s_{i1}⋯s_{ip}; her adımda en küçük sağ iniş soyulur"""
        cached = self._words.get(w)
        if cached is not None:
            return cached
        peeled = []
        current = w
        while True:
            descents = self.right_descents(current)
            if not descents:
                break
            i = descents[0]
            current = current * self._simple[i]
            peeled.append(i)
        result = (current, tuple(reversed(peeled)))
        self._words[w] = result
        return result

    def reduce_word(self, word: Iterable[int], omega: Optional[WeylElement] = None) -> WeylElement:
        return self.from_word(word, omega)

    def length(self, w: WeylElement) -> int:
        return len(self.reduced_word(w)[1])

    def omega_part(self, w: WeylElement) -> WeylElement:
        return self.reduced_word(w)[0]

    def word_text(self, w: WeylElement) -> str:
        u, word = self.reduced_word(w)
        prefix = '' if u == self.one else f"u{self.omega.index(u)}"
        body = ''.join(f"s{i}" for i in word)
        return (prefix + body) or 'e'

    def inversion_set(self, w: WeylElement) -> List[AffineRoot]:
        """b_r = s_{ip}⋯s_{i(r+1)} a_{ir}"""
        data = self.data
        _, word = self.reduced_word(w)
        suffix = self.one
        roots = []
        for i in reversed(word):
            roots.append(data.act_root(suffix, data.simple_roots[i]))
            suffix = suffix * self._simple[i]
        roots.reverse()
        return roots

    def _omega_elements(self) -> List[WeylElement]:
        generators = []
        for j in range(self.rank):
            unit = tuple(int(i == j) for i in range(self.rank))
            generators.append(self.reduced_word(self.translation(unit))[0])
        found = [self.one]
        queue = deque([self.one])
        while queue:
            u = queue.popleft()
            for g in generators:
                v = u * g
                if v not in found:
                    found.append(v)
                    queue.append(v)
        return found

    def omega_permutation(self, u: WeylElement) -> Dict[int, int]:
        """u(a_i) = a_{π(i)}"""
        data = self.data
        perm = {}
        for i, a in data.simple_roots.items():
            image = data.act_root(u, a)
            matches = [j for j, b in data.simple_roots.items() if b == image]
            if not matches:
                raise LatticeMismatchError("element does not permute the simple affine roots")
            perm[i] = matches[0]
        return perm

    # --- Bruhat sırası ---

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Ω-parçaları eşit ve Coxeter parçaları alt-kelime özelliğiyle karşılaştırılabilir"""
        key = (v, w)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        if self.omega_part(v) != self.omega_part(w):
            result = False
        else:
            _, word = self.reduced_word(w)
            if not word:
                result = v == w
            else:
                i = word[-1]
                ws = w * self._simple[i]
                vs = v * self._simple[i]
                lower = vs if self.length(vs) < self.length(v) else v
                result = self.bruhat_leq(lower, ws)
        self._bruhat[key] = result
        return result

    # --- sonlu ve parabolik alt gruplar ---

    def parabolic(self, J: Iterable[int]) -> List[WeylElement]:
        """W_J elemanları, (uzunluk, kelime) sırasıyla"""
        key = tuple(sorted(J))
        if key in self._parabolic:
            return self._parabolic[key]
        found = {self.one}
        queue = deque([self.one])
        while queue:
            w = queue.popleft()
            for j in key:
                v = w * self._simple[j]
                if v not in found:
                    found.add(v)
                    queue.append(v)
        elements = sorted(found, key=lambda x: (self.length(x), self.reduced_word(x)[1]))
        self._parabolic[key] = elements
        return elements

    def finite_group(self) -> List[WeylElement]:
        return self.parabolic(self.data.finite_indices)

    def longest(self, J: Iterable[int]) -> WeylElement:
        return self.parabolic(J)[-1]

    def minimal_coset_reps(self, J: Iterable[int], ambient: Optional[Iterable[int]] = None) -> List[WeylElement]:
        """W_{ambient}^J: vW_J içinde en kısa elemanlar"""
        J = tuple(J)
        pool = self.parabolic(self.data.finite_indices if ambient is None else ambient)
        return [w for w in pool if not self.right_descents(w, J)]

    def coxeter_exponent(self, i: int, j: int) -> int:
        product = self._simple[i] * self._simple[j]
        power, order = product, 1
        while power != self.one:
            power = power * product
            order += 1
            if order > 12:
                raise PreconditionError(f"s{i}s{j} has infinite order")
        return order

    def coset_decompose(self, w: WeylElement, J: Iterable[int]) -> Tuple[WeylElement, WeylElement]:
        """w = v·w', v ∈ W^J en kısa, w' ∈ W_J"""
        J = tuple(sorted(J))
        v = w
        while True:
            descents = self.right_descents(v, J)
            if not descents:
                break
            v = v * self._simple[descents[0]]
        return v, v.inverse() * w

    # --- öteleme ayrışımları ---

    def u_prime(self, lam: Sequence[int]) -> WeylElement:
        """t(λ)W₀ kosetinin en kısa elemanı u'(λ)"""
        lam = tuple(int(x) for x in lam)
        cached = self._uprime.get(lam)
        if cached is not None:
            return cached
        w = self.translation(lam)
        finite = self.data.finite_indices
        while True:
            descents = self.right_descents(w, finite)
            if not descents:
                break
            w = w * self._simple[descents[0]]
        self._uprime[lam] = w
        return w

    def uv_decompose(self, lam: Sequence[int]) -> Tuple[WeylElement, WeylElement]:
        """t(λ) = u'(λ)·v(λ), v(λ) ∈ W₀"""
        u = self.u_prime(lam)
        return u, u.inverse() * self.translation(lam)

    def order_leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        return self.bruhat_leq(self.u_prime(mu), self.u_prime(lam))

    def down_set(self, lam: Sequence[int]) -> List[Vector]:
        """μ ≤ λ olan tüm μ; u'(μ) uzunluğuna göre azalan sırada (λ ilk)"""
        lam = tuple(int(x) for x in lam)
        if lam in self._downsets:
            return self._downsets[lam]
        top = self.u_prime(lam)
        u, word = self.reduced_word(top)
        if len(word) > self.max_word_length:
            raise PreconditionError(f"l(u'({lam})) = {len(word)} exceeds max word length {self.max_word_length}")
        products = {u}
        for i in word:
            products |= {y * self._simple[i] for y in products}
        finite = self.data.finite_indices
        minimal = [y for y in products if not self.right_descents(y, finite)]
        result = sorted({y.translation for y in minimal},
                        key=lambda mu: (-self.length(self.u_prime(mu)), mu))
        self.logger.debug(f"down-set of {lam} has {len(result)} weights", "ROOTDATA",
                          extra={'type': self.data.name, 'lambda': lam, 'size': len(result)})
        self._downsets[lam] = result
        return result

    # --- J-yörüngeleri ---

    def _simple_pairing(self, lam: Sequence[int], j: int) -> Fraction:
        return self.data.pairing(lam, self.data.simple_roots[j].gradient)

    def is_j_dominant(self, lam: Sequence[int], J: Iterable[int]) -> bool:
        return all(self._simple_pairing(lam, j) >= 0 for j in J)

    def j_dominant_rep(self, lam: Sequence[int], J: Iterable[int]) -> Tuple[Vector, WeylElement]:
        """(λ₀, v̄_J): v̄_J·λ₀ = λ, λ₀ J-baskın"""
        J = tuple(sorted(J))
        current = tuple(int(x) for x in lam)
        applied = []
        while True:
            negative = [j for j in J if self._simple_pairing(current, j) < 0]
            if not negative:
                break
            j = negative[0]
            current = self._simple[j].act_linear(current)
            applied.append(j)
        return current, self.from_word(applied)

    def stabilizer(self, lam0: Sequence[int], J: Iterable[int]) -> Tuple[int, ...]:
        return tuple(j for j in sorted(J) if self._simple_pairing(lam0, j) == 0)

    def orbit(self, lam0: Sequence[int], J: Iterable[int]) -> List[Vector]:
        J = tuple(sorted(J))
        start = tuple(int(x) for x in lam0)
        found = [start]
        queue = deque([start])
        while queue:
            mu = queue.popleft()
            for j in J:
                nu = self._simple[j].act_linear(mu)
                if nu not in found:
                    found.append(nu)
                    queue.append(nu)
        return sorted(found, key=lambda mu: (self.length(self.u_prime(mu)), mu))

    # --- ρ ve spektral noktalar ---

    def rho(self, kprime: Labelling) -> SpectralPoint:
        """ρ_{k'} = ½ Σ_{α>0} k'(α∨)α, yalnız etiket kısmı"""
        data = self.data
        parts: Dict[str, List[Fraction]] = {}
        for alpha in data.positive_finite_roots:
            orbit = data.orbit_of(AffineRoot(data.coroot(alpha), Fraction(0)))
            acc = parts.setdefault(orbit, [Fraction(0)] * self.rank)
            for idx, value in enumerate(alpha):
                acc[idx] += Fraction(value, 2)
        return SpectralPoint(data.name, (Fraction(0),) * self.rank,
                             tuple((o, tuple(v)) for o, v in sorted(parts.items())), kprime)

    def spectral_point(self, lam: Sequence[int], k: Labelling) -> SpectralPoint:
        """r_{k'}(λ) = u'(λ)(−ρ_{k'})"""
        kprime = dual_label(self.data, k)
        rho = self.rho(kprime)
        u = self.u_prime(lam)
        labels = tuple((o, tuple(-Fraction(x) for x in u.act_linear(v))) for o, v in rho.labels)
        return SpectralPoint(self.data.name, tuple(Fraction(x) for x in lam), labels, kprime)


@lru_cache(maxsize=None)
def weyl_group(type_name: str) -> AffineWeylGroup:
    """Tip başına paylaşılan grup nesnesi (önbellekler yalnızca hafızalama yapar)"""
    return AffineWeylGroup(catalog(type_name), max_word_length=COMPUTE_SETTINGS['max_word_length'])


def catalog_json(type_name: str) -> Dict:
    """Katalog verisinin JSON uyumlu özeti"""
    data = catalog(type_name)
    group = weyl_group(type_name)
    return {
        'type': data.name,
        'rank': data.rank,
        'pairing': [[str(v) for v in row] for row in data.gram],
        'simple_roots': {str(i): {'gradient': list(a.gradient), 'constant': str(a.constant)}
                         for i, a in data.simple_roots.items()},
        'orbits': [{'name': o.name, 'gradients': [list(g) for g in o.gradients],
                    'offset': str(o.offset), 'step': str(o.step)} for o in data.orbits],
        'positive_finite_roots': [list(r) for r in data.positive_finite_roots],
        'exponent_denominator': data.denominator,
        'q0': f"q({data.q0_exponent})",
        'duality_mode': data.duality_mode,
        'omega': [{'linear': [list(r) for r in u.linear], 'translation': list(u.translation),
                   'permutation': {str(i): j for i, j in group.omega_permutation(u).items()}}
                  for u in group.omega],
    }


if __name__ == "__main__":
    # Örnek kullanım
    group = weyl_group('A2')
    w = group.from_word([1, 2, 1])
    print(f"s1s2s1 -> {group.word_text(w)}, length {group.length(w)}")
    print(f"down-set of (1, 0): {group.down_set((1, 0))}")
