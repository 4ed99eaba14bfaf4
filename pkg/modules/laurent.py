# modules/laurent.py
"""
A = K[L] grup cebiri: e(μ) monomları, Weyl grubu etkisi, * involüsyonu ve tam bölme.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import NoUniqueMaximumError, NotDivisibleError, NotJDominantError, UnsupportedTypeError
from .params import KScalar, RationalLike, ScalarField
from .rootdata import AffineRoot, AffineWeylGroup, RootSystemData, Vector, WeylElement

Coefficient = Union[KScalar, int, Fraction]


class LaurentPoly:
    """Sonlu destekli L -> K eşlemesi; sıfır katsayı saklanmaz"""
    __slots__ = ('space', 'rank', 'terms')

    def __init__(self, space: ScalarField, rank: int, terms: Optional[Mapping[Vector, Coefficient]] = None):
        self.space = space
        self.rank = rank
        self.terms: Dict[Vector, KScalar] = {}
        for mu, coeff in (terms or {}).items():
            coeff = self._scalar(coeff)
            if not coeff.is_zero():
                self.terms[tuple(int(x) for x in mu)] = coeff

    def _scalar(self, value: Coefficient) -> KScalar:
        if isinstance(value, KScalar):
            return value
        return self.space.from_rational(value)

    # --- kurucular ---

    @classmethod
    def zero(cls, space: ScalarField, rank: int) -> 'LaurentPoly':
        return cls(space, rank)

    @classmethod
    def constant(cls, space: ScalarField, rank: int, value: Coefficient = 1) -> 'LaurentPoly':
        return cls(space, rank, {(0,) * rank: value})

    @classmethod
    def monomial(cls, space: ScalarField, mu: Sequence[int], coeff: Coefficient = 1) -> 'LaurentPoly':
        return cls(space, len(mu), {tuple(mu): coeff})

    def _like(self, terms: Mapping[Vector, KScalar]) -> 'LaurentPoly':
        return LaurentPoly(self.space, self.rank, terms)

    # --- aritmetik ---

    def _coerce(self, other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (KScalar, int, Fraction)):
            return LaurentPoly.constant(self.space, self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            terms[mu] = terms[mu] + c if mu in terms else c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return self._like({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (KScalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: Dict[Vector, KScalar] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                key = tuple(x + y for x, y in zip(mu, nu))
                terms[key] = terms[key] + a * b if key in terms else a * b
        return self._like(terms)

    def __rmul__(self, other):
        if isinstance(other, (KScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        result = LaurentPoly.constant(self.space, self.rank)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Coefficient) -> 'LaurentPoly':
        factor = self._scalar(factor)
        if factor.is_zero():
            return LaurentPoly.zero(self.space, self.rank)
        return self._like({mu: c * factor for mu, c in self.terms.items()})

    def shift(self, mu: Sequence[int]) -> 'LaurentPoly':
        """e(μ)·f"""
        return self._like({tuple(x + y for x, y in zip(nu, mu)): c for nu, c in self.terms.items()})

    # --- karşılaştırma ve erişim ---

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[mu] == other.terms[mu] for mu in self.terms)

    def __ne__(self, other) -> bool:
        return not self == other

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Vector]:
        return sorted(self.terms, key=lambda mu: (sum(mu), mu), reverse=True)

    def coefficient(self, mu: Sequence[int]) -> KScalar:
        return self.terms.get(tuple(mu), self.space.zero)

    def items(self) -> List[Tuple[Vector, KScalar]]:
        return [(mu, self.terms[mu]) for mu in self.support()]

    def map_coefficients(self, func) -> 'LaurentPoly':
        return self._like({mu: func(c) for mu, c in self.terms.items()})

    # --- involüsyon ve özelleştirme ---

    def star(self) -> 'LaurentPoly':
        """e(μ)* = e(−μ), katsayılarda q(x) -> q(−x)"""
        return self._like({tuple(-x for x in mu): c.star() for mu, c in self.terms.items()})

    def specialize(self, assign: Mapping[str, RationalLike]) -> 'LaurentPoly':
        return self.map_coefficients(lambda c: c.specialize(assign))

    # --- metin ---

    def text(self) -> str:
        """Kanonik metin: Σ (c)·e[μ]"""
        if not self.terms:
            return "0"
        parts = []
        for mu, c in self.items():
            coords = ','.join(map(str, mu))
            if not any(mu):
                parts.append(c.text())
            elif c.is_one():
                parts.append(f"e[{coords}]")
            else:
                parts.append(f"({c.text()})*e[{coords}]")
        return " + ".join(parts)

    def to_json(self) -> List[Dict]:
        return [{'exponent': list(mu), 'coeff': c.text()} for mu, c in self.items()]

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()})"


def affine_monomial(data: RootSystemData, root: AffineRoot) -> LaurentPoly:
    """e(a) = q(sabit)·e(Da)"""
    return LaurentPoly.monomial(data.space, root.gradient, data.space.q(root.constant))


def weyl_act(data: RootSystemData, w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    """w·e(μ) = q(−⟨Mμ, t⟩)·e(Mμ); katsayılar değişmez"""
    if w.is_linear():
        return f._like({w.act_linear(mu): c for mu, c in f.terms.items()})
    terms: Dict[Vector, KScalar] = {}
    for mu, c in f.terms.items():
        nu = w.act_linear(mu)
        shift = -data.pairing(nu, w.translation)
        value = c * data.space.q(shift) if shift != 0 else c
        terms[nu] = terms[nu] + value if nu in terms else value
    return f._like(terms)


def _order_key(mu: Vector) -> Tuple[int, Vector]:
    return sum(mu), mu


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """f = g·h olan h; yoksa NotDivisibleError"""
    if g.is_zero():
        raise NotDivisibleError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.space, f.rank)
    rank = f.rank
    lead = max(g.terms, key=_order_key)
    lead_coeff = g.terms[lead]
    # Bölümün üsleri bu kutunun dışına çıkamaz
    low = [min(mu[i] for mu in f.terms) - min(mu[i] for mu in g.terms) for i in range(rank)]
    high = [max(mu[i] for mu in f.terms) - max(mu[i] for mu in g.terms) for i in range(rank)]
    quotient: Dict[Vector, KScalar] = {}
    remainder = dict(f.terms)
    while remainder:
        top = max(remainder, key=_order_key)
        d = tuple(top[i] - lead[i] for i in range(rank))
        if any(d[i] < low[i] or d[i] > high[i] for i in range(rank)):
            raise NotDivisibleError(f"{f.text()} is not divisible by {g.text()}")
        c = remainder[top] / lead_coeff
        quotient[d] = c
        for mu, b in g.terms.items():
            key = tuple(d[i] + mu[i] for i in range(rank))
            value = remainder.get(key, f.space.zero) - c * b
            if value.is_zero():
                remainder.pop(key, None)
            else:
                remainder[key] = value
    return LaurentPoly(f.space, rank, quotient)


def orbit_sum(group: AffineWeylGroup, J: Iterable[int], lam0: Sequence[int]) -> LaurentPoly:
    """m_{J,λ₀} = Σ_{μ ∈ W_J λ₀} e(μ)"""
    J = tuple(J)
    if not group.is_j_dominant(lam0, J):
        raise NotJDominantError(f"{tuple(lam0)} is not J-dominant for J={list(J)}")
    data = group.data
    return LaurentPoly(data.space, data.rank, {mu: 1 for mu in group.orbit(lam0, J)})


def monomial_symmetric(group: AffineWeylGroup, lam: Sequence[int]) -> LaurentPoly:
    """W₀-yörünge toplamı m_λ (λ herhangi bir yörünge elemanı olabilir)"""
    finite = group.data.finite_indices
    lam0, _ = group.j_dominant_rep(lam, finite)
    return orbit_sum(group, finite, lam0)


def rho_s(data: RootSystemData) -> Vector:
    """½ Σ pozitif çarpılamaz doğrusal kök"""
    total = [Fraction(0)] * data.rank
    for g in data.positive_linear_roots():
        if data.in_system(AffineRoot(tuple(2 * x for x in g), Fraction(0))):
            continue
        for i, x in enumerate(g):
            total[i] += Fraction(x, 2)
    return tuple(int(x) for x in total)


def weyl_denominator(group: AffineWeylGroup) -> LaurentPoly:
    """δ = Σ_{w∈W₀} (−1)^{ℓ(w)} e(wρ)"""
    data = group.data
    rho = rho_s(data)
    terms: Dict[Vector, KScalar] = {}
    for w in group.finite_group():
        mu = w.act_linear(rho)
        sign = data.space.from_rational((-1) ** group.length(w))
        terms[mu] = terms[mu] + sign if mu in terms else sign
    return LaurentPoly(data.space, data.rank, terms)


def f_poly(group: AffineWeylGroup, tau: KScalar) -> LaurentPoly:
    """F = Σ_{w∈W₀} (−τ²)^{ℓ(w)} e(wρ), yalnızca indirgenmiş tiplerde"""
    data = group.data
    if data.duality_mode == 'CC':
        raise UnsupportedTypeError("closed form F exists only for reduced types; use weights.delta0")
    rho = rho_s(data)
    factor = -(tau * tau)
    terms: Dict[Vector, KScalar] = {}
    for w in group.finite_group():
        mu = w.act_linear(rho)
        value = factor ** group.length(w)
        terms[mu] = terms[mu] + value if mu in terms else value
    return LaurentPoly(data.space, data.rank, terms)


def leading_term(group: AffineWeylGroup, f: LaurentPoly) -> Tuple[Vector, KScalar]:
    """Desteğin kısmi sıraya göre tek maksimumu ve katsayısı"""
    if f.is_zero():
        raise NoUniqueMaximumError("zero polynomial has no leading term")
    support = f.support()
    maximal = [mu for mu in support
               if not any(nu != mu and group.order_leq(mu, nu) for nu in support)]
    if len(maximal) != 1:
        raise NoUniqueMaximumError(f"support has {len(maximal)} maximal elements: {maximal}")
    return maximal[0], f.terms[maximal[0]]


def random_poly(data: RootSystemData, rng: np.random.Generator, terms: int = 3, radius: int = 2,
                with_labels: bool = True) -> LaurentPoly:
    """Testler için küçük rastgele Laurent polinomu"""
    space = data.space
    orbits = list(space.orbits)
    result: Dict[Vector, KScalar] = {}
    for _ in range(terms):
        mu = tuple(int(x) for x in rng.integers(-radius, radius + 1, size=data.rank))
        coeff = space.from_rational(int(rng.integers(1, 6)) * int(rng.choice([-1, 1])))
        if with_labels and orbits and rng.random() < 0.5:
            orbit = orbits[int(rng.integers(0, len(orbits)))]
            coeff = coeff * space.qpow(data.tau_exponent(data.formal_labelling(), _root_in(data, orbit)))
        result[mu] = result[mu] + coeff if mu in result else coeff
    return LaurentPoly(space, data.rank, result)


def _root_in(data: RootSystemData, orbit_name: str) -> AffineRoot:
    orbit = next(o for o in data.orbits if o.name == orbit_name)
    return AffineRoot(orbit.gradients[0], orbit.offset)
