# modules/weights.py
"""
Ağırlık fonksiyonları ve iç çarpım.

Δ = Π_{a>0, a/2∉S} h_a(e(a)), h(y) = (1−y²)/((1−Ay)(1−By)), A = q(k(a)), B = −q(k(2a)).
İndirgenmiş yörüngelerde h(y) = (1−y)/(1−Ay). Δ'nın e(ν) katsayısı q₀ cinsinden kesik
seri olarak, afin basit kök monomları x_i = e(a_i) üzerinde kutu ile kesilmiş çarpımdan okunur.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import ring as poly_ring

from .errors import NonExpandableError, PreconditionError
from .laurent import LaurentPoly, exact_div, weyl_act, weyl_denominator
from .logger import Logger
from .params import ExponentVector, KScalar, ScalarField
from .rootdata import AffineRoot, AffineWeylGroup, Labelling, RootSystemData, Vector


class TruncSeries:
    """q(1/D) adımlarında kesik seri; katsayılar yalnız etiket içerir, prec'e kadar bilinir"""
    __slots__ = ('space', 'coeffs', 'prec')

    def __init__(self, space: ScalarField, coeffs: Optional[Mapping[int, KScalar]], prec: int):
        self.space = space
        self.prec = prec
        self.coeffs: Dict[int, KScalar] = {d: c for d, c in (coeffs or {}).items() if d <= prec and not c.is_zero()}

    @classmethod
    def zero(cls, space: ScalarField, prec: int) -> 'TruncSeries':
        return cls(space, {}, prec)

    @classmethod
    def constant(cls, space: ScalarField, value: KScalar, prec: int) -> 'TruncSeries':
        return cls(space, {0: value}, prec)

    def valuation(self) -> int:
        return min(self.coeffs) if self.coeffs else self.prec + 1

    def coefficient(self, degree: int) -> KScalar:
        if degree > self.prec:
            raise PreconditionError(f"coefficient q-step {degree} beyond precision {self.prec}")
        return self.coeffs.get(degree, self.space.zero)

    def __add__(self, other: 'TruncSeries') -> 'TruncSeries':
        prec = min(self.prec, other.prec)
        coeffs = dict(self.coeffs)
        for d, c in other.coeffs.items():
            coeffs[d] = coeffs[d] + c if d in coeffs else c
        return TruncSeries(self.space, coeffs, prec)

    def __neg__(self) -> 'TruncSeries':
        return TruncSeries(self.space, {d: -c for d, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other: 'TruncSeries') -> 'TruncSeries':
        return self + (-other)

    def __mul__(self, other) -> 'TruncSeries':
        if isinstance(other, KScalar):
            return self.scale(other)
        prec = min(self.prec + other.valuation(), other.prec + self.valuation())
        coeffs: Dict[int, KScalar] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                d = i + j
                if d <= prec:
                    coeffs[d] = coeffs[d] + a * b if d in coeffs else a * b
        return TruncSeries(self.space, coeffs, prec)

    def scale(self, factor: KScalar) -> 'TruncSeries':
        return TruncSeries(self.space, {d: c * factor for d, c in self.coeffs.items()}, self.prec)

    def shift(self, steps: int) -> 'TruncSeries':
        """q(steps/D) ile çarpım"""
        return TruncSeries(self.space, {d + steps: c for d, c in self.coeffs.items()}, self.prec + steps)

    def truncate(self, prec: int) -> 'TruncSeries':
        return TruncSeries(self.space, self.coeffs, min(prec, self.prec))

    def inverse(self) -> 'TruncSeries':
        if not self.coeffs:
            raise NonExpandableError("series vanishes to its precision; no inverse")
        v = self.valuation()
        inv_lead = self.coeffs[v].inverse()
        prec = self.prec - 2 * v
        result: Dict[int, KScalar] = {-v: inv_lead}
        for n in range(1, prec + v + 1):
            acc = self.space.zero
            for m in range(1, n + 1):
                a = self.coeffs.get(v + m)
                b = result.get(-v + n - m)
                if a is not None and b is not None:
                    acc = acc + a * b
            if not acc.is_zero():
                result[-v + n] = -(inv_lead * acc)
        return TruncSeries(self.space, result, prec)

    def __truediv__(self, other: 'TruncSeries') -> 'TruncSeries':
        return self * other.inverse()

    def agrees(self, other: 'TruncSeries', prec: Optional[int] = None) -> bool:
        limit = min(self.prec, other.prec) if prec is None else prec
        keys = {d for d in set(self.coeffs) | set(other.coeffs) if d <= limit}
        return all(self.coefficient(d) == other.coefficient(d) for d in keys)

    def is_zero_to(self, prec: Optional[int] = None) -> bool:
        limit = self.prec if prec is None else prec
        return all(d > limit for d in self.coeffs)

    def text(self) -> str:
        if not self.coeffs:
            return f"O(q^{Fraction(self.prec + 1, self.space.denominator)})"
        parts = []
        for d in sorted(self.coeffs):
            parts.append(f"q^({Fraction(d, self.space.denominator)})*({self.coeffs[d].text()})")
        parts.append(f"O(q^{Fraction(self.prec + 1, self.space.denominator)})")
        return " + ".join(parts)

    def to_json(self) -> Dict:
        return {
            'precision': str(Fraction(self.prec, self.space.denominator)),
            'terms': [{'q': str(Fraction(d, self.space.denominator)), 'coeff': self.coeffs[d].text()}
                      for d in sorted(self.coeffs)],
        }

    def __str__(self) -> str:
        return self.text()


def series_expand(a: KScalar, prec: int) -> TruncSeries:
    """a'nın q(1/D) cinsinden prec adıma kadar açılımı"""
    space = a.space
    if a.is_zero():
        return TruncSeries.zero(space, prec)
    numer, denom = a.q_grading()
    if not denom:
        raise NonExpandableError("zero denominator")
    dv = min(denom)
    inv_lead = denom[dv].inverse()
    start = min(numer) - dv
    result: Dict[int, KScalar] = {}
    for m in range(start, prec + 1):
        acc = numer.get(m + dv, space.zero)
        for j, dj in denom.items():
            if j == dv:
                continue
            prev = result.get(m + dv - j)
            if prev is not None:
                acc = acc - dj * prev
        if not acc.is_zero():
            result[m] = acc * inv_lead
    return TruncSeries(space, result, prec)


def steps_for(space: ScalarField, order: int) -> int:
    """q₀^order'a karşılık gelen q(1/D) adımı"""
    return order * space.q0_steps


# --- Δ ---

@dataclass(frozen=True)
class RootFactor:
    """Pozitif bölünemez kök ve x_i üsleri (m_0 = q₀-derecesi)"""
    root: AffineRoot
    exponents: Tuple[int, ...]
    orbit: str
    double_orbit: Optional[str]


def positive_indivisible_roots(data: RootSystemData, order: int, include_linear: bool = True) -> List[RootFactor]:
    """Sabiti order·r₀'ı aşmayan pozitif bölünemez kökler"""
    r0 = data.simple_roots[0].constant
    theta = data.theta_coefficients
    found: List[RootFactor] = []
    for orbit in data.orbits:
        j = ceil(-orbit.offset / orbit.step)
        while orbit.offset + orbit.step * j <= order * r0:
            constant = orbit.offset + orbit.step * j
            j += 1
            if constant == 0 and not include_linear:
                continue
            for g in orbit.gradients:
                root = AffineRoot(g, constant)
                if not data.is_positive(root) or not data.is_indivisible(root):
                    continue
                m0 = constant / r0
                coords = data.root_coordinates(g)
                exps = [m0] + [coords[i] + m0 * theta[i] for i in range(data.rank)]
                if any(Fraction(e).denominator != 1 or e < 0 for e in exps):
                    raise PreconditionError(f"root {root.text()} is not a nonnegative combination of simple roots")
                found.append(RootFactor(root, tuple(int(e) for e in exps), orbit.name,
                                        data.orbit_of(root.double())))
    found.sort(key=lambda f: (f.exponents[0], sum(f.exponents), f.exponents))
    return found


def _h_coefficients(A, B, count: int, one) -> List:
    """h(y) = (1−y²)/((1−Ay)(1−By)) katsayıları h_0..h_{count}"""
    H = [one]
    power = one
    for _ in range(count):
        power = power * B
        H.append(A * H[-1] + power)
    return [H[m] - (H[m - 2] if m >= 2 else 0 * one) for m in range(len(H))]


class WeightFunction:
    """Bir (tip, k) için Δ katsayıları; kutu büyüdükçe yeniden hesaplanır"""

    def __init__(self, group: AffineWeylGroup, k: Labelling, logger: Logger = None):
        self.group = group
        self.data = group.data
        negative = sorted(name for name, value in k.values if not value.labels and value.unit < 0)
        if negative:
            raise PreconditionError(f"weight expansion needs nonnegative labels, got negative values for {negative}")
        self.k = k
        self.logger = logger or Logger()
        rank = self.data.rank
        self.orbit_names = [o.name for o in self.data.orbits]
        names = [f"x{i}" for i in range(rank + 1)] + [f"K_{o}" for o in self.orbit_names]
        self.ring, *gens = poly_ring(",".join(names), QQ)
        self._x = gens[:rank + 1]
        self._K = dict(zip(self.orbit_names, gens[rank + 1:]))
        self._order = -1
        self._bounds: Tuple[int, ...] = ()
        self._index: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
        self._series: Dict[Tuple[Vector, int], TruncSeries] = {}

    def _within(self, exps: Sequence[int], bounds: Sequence[int]) -> bool:
        return all(exps[i] <= bounds[i] for i in range(len(bounds)))

    def _truncate(self, p, bounds):
        n = len(bounds)
        return self.ring.from_dict({e: c for e, c in p.items() if self._within(e[:n], bounds)})

    def _build(self, order: int, bounds: Tuple[int, ...]) -> None:
        ring = self.ring
        n = len(bounds)
        product = ring.one
        for factor in positive_indivisible_roots(self.data, order):
            m = factor.exponents
            if not self._within(m, bounds):
                continue
            count = min(bounds[i] // m[i] for i in range(n) if m[i] > 0)
            A = self._K[factor.orbit]
            B = -self._K[factor.double_orbit] if factor.double_orbit else -ring.one
            coeffs = _h_coefficients(A, B, count, ring.one)
            series = ring.zero
            for j, c in enumerate(coeffs):
                monom = ring.one
                for i in range(n):
                    if m[i]:
                        monom = monom * self._x[i] ** (j * m[i])
                series = series + c * monom
            product = self._truncate(product * series, bounds)
        index: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
        for exps, coeff in product.items():
            index.setdefault(tuple(exps[:n]), {})[tuple(exps[n:])] = coeff
        self._index = index
        self._order = order
        self._bounds = bounds
        self._series.clear()
        self.logger.debug(f"weight function rebuilt to order {order}", "WEIGHTS",
                          extra={'type': self.data.name, 'bounds': list(bounds), 'terms': len(product)})

    def _needed_bounds(self, nus: Iterable[Vector], order: int) -> Tuple[int, ...]:
        theta = self.data.theta_coefficients
        bounds = [order] + [0] * self.data.rank
        for nu in nus:
            coords = self.data.root_coordinates(nu)
            if any(c.denominator != 1 for c in coords):
                continue
            for i, c in enumerate(coords):
                bounds[i + 1] = max(bounds[i + 1], int(c) + order * theta[i])
        return tuple(bounds)

    def prepare(self, nus: Iterable[Vector], order: int) -> None:
        needed = self._needed_bounds(nus, order)
        if order <= self._order and self._within(needed, self._bounds):
            return
        merged = tuple(max(a, b) for a, b in zip(needed, self._bounds)) if self._bounds else needed
        self._build(max(order, self._order), merged)

    def _label_scalar(self, kpoly: Mapping[Tuple[int, ...], object]) -> KScalar:
        terms: Dict[ExponentVector, Fraction] = {}
        for exps, coeff in kpoly.items():
            x = ExponentVector()
            for e, orbit in zip(exps, self.orbit_names):
                if e:
                    x = x + self.k[orbit].scale(e)
            terms[x] = terms.get(x, Fraction(0)) + Fraction(int(coeff.numerator), int(coeff.denominator))
        return self.data.space.from_kpoly(terms)

    def coefficient(self, nu: Sequence[int], order: int) -> TruncSeries:
        """Δ'nın e(ν) katsayısı, q₀^order'a kadar"""
        nu = tuple(int(x) for x in nu)
        key = (nu, order)
        if key in self._series:
            return self._series[key]
        self.prepare([nu], order)
        space = self.data.space
        prec = steps_for(space, order)
        coords = self.data.root_coordinates(nu)
        result = TruncSeries.zero(space, prec)
        if all(c.denominator == 1 for c in coords):
            theta = self.data.theta_coefficients
            for n0 in range(order + 1):
                exps = (n0,) + tuple(int(c) + n0 * theta[i] for i, c in enumerate(coords))
                kpoly = self._index.get(exps)
                if not kpoly:
                    continue
                scalar = self._label_scalar(kpoly)
                shift = steps_for(space, n0)
                if scalar.is_label_only():
                    result = result + TruncSeries(space, {shift: scalar}, prec)
                else:
                    result = result + series_expand(scalar, prec - shift).shift(shift)
        self._series[key] = result
        return result


_WEIGHT_CACHE: Dict[Tuple[str, Labelling], WeightFunction] = {}


def weight_function(group: AffineWeylGroup, k: Labelling, logger: Optional[Logger] = None) -> WeightFunction:
    key = (group.data.name, k)
    if key not in _WEIGHT_CACHE:
        _WEIGHT_CACHE[key] = WeightFunction(group, k, logger)
    return _WEIGHT_CACHE[key]


def delta_series(group: AffineWeylGroup, k: Labelling, order: int, support: Iterable[Sequence[int]]) -> Dict[Vector, TruncSeries]:
    """Verilen ağırlıklarda Δ katsayıları"""
    wf = weight_function(group, k)
    support = [tuple(int(x) for x in nu) for nu in support]
    wf.prepare(support, order)
    return {nu: wf.coefficient(nu, order) for nu in support}


# --- Δ₀, F ve ∇ ---

def _binomial(data: RootSystemData, coeff: KScalar, gradient: Sequence[int], sign: int = 1) -> LaurentPoly:
    """1 − sign·coeff·e(gradient)"""
    space = data.space
    one = LaurentPoly.constant(space, data.rank)
    return one - LaurentPoly.monomial(space, gradient, coeff * sign)


def _linear_factor(data: RootSystemData, k: Labelling, gradient: Vector) -> Tuple[LaurentPoly, LaurentPoly]:
    """h(e(gradient)) = pay/payda, gradyan doğrusal pozitif ya da negatif bir kök"""
    space = data.space
    root = AffineRoot(gradient, Fraction(0))
    A = space.qpow(data.label(k, root))
    if data.is_reduced_at(root):
        return _binomial(data, space.one, gradient), _binomial(data, A, gradient)
    B = -space.qpow(data.label(k, root.double()))
    doubled = tuple(2 * g for g in gradient)
    return _binomial(data, space.one, doubled), _binomial(data, A, gradient) * _binomial(data, B, gradient)


def _indivisible_linear(data: RootSystemData) -> List[Vector]:
    return [g for g in data.positive_linear_roots() if data.is_indivisible(AffineRoot(g, Fraction(0)))]


def delta0(group: AffineWeylGroup, k: Labelling) -> Tuple[LaurentPoly, LaurentPoly]:
    """Δ₀ = Π_{α>0} h_α(e(−α)) (pay, payda)"""
    data = group.data
    numer = LaurentPoly.constant(data.space, data.rank)
    denom = LaurentPoly.constant(data.space, data.rank)
    for g in _indivisible_linear(data):
        p, q = _linear_factor(data, k, tuple(-x for x in g))
        numer, denom = numer * p, denom * q
    return numer, denom


def weight_polynomial(group: AffineWeylGroup, k: Labelling) -> LaurentPoly:
    """F = δ·Δ₀^{-1}"""
    numer, denom = delta0(group, k)
    return exact_div(weyl_denominator(group) * denom, numer)


def delta0_symmetry_check(group: AffineWeylGroup, k: Labelling, target: KScalar) -> bool:
    """Σ_{w∈W₀} w(Δ₀^{-1}) = target, ortak paydada"""
    data = group.data
    numer, denom = delta0(group, k)
    images = [(weyl_act(data, w, denom), weyl_act(data, w, numer)) for w in group.finite_group()]
    common = LaurentPoly.constant(data.space, data.rank)
    for _, q in images:
        common = common * q
    total = LaurentPoly.zero(data.space, data.rank)
    for idx, (p, _) in enumerate(images):
        term = p
        for jdx, (_, q) in enumerate(images):
            if jdx != idx:
                term = term * q
        total = total + term
    return total == common.scale(target)


@dataclass
class NablaSeries:
    """∇ = Φ·(afin kısım); Φ doğrusal köklerden gelen rasyonel kısım, afin kısım q₀-derecesine göre"""
    phi_numerator: LaurentPoly
    phi_denominator: LaurentPoly
    affine: Dict[int, LaurentPoly]
    order: int

    def is_w0_invariant(self, group: AffineWeylGroup) -> bool:
        data = group.data
        for i in data.finite_indices:
            s = group.s(i)
            if weyl_act(data, s, self.phi_numerator) * self.phi_denominator != \
                    self.phi_numerator * weyl_act(data, s, self.phi_denominator):
                return False
            for degree, part in self.affine.items():
                if weyl_act(data, s, part) != part:
                    return False
        return True


def _graded_multiply(a: Dict[int, LaurentPoly], b: Dict[int, LaurentPoly], limit: int) -> Dict[int, LaurentPoly]:
    out: Dict[int, LaurentPoly] = {}
    for i, p in a.items():
        for j, q in b.items():
            if i + j <= limit:
                term = p * q
                out[i + j] = out[i + j] + term if i + j in out else term
    return {d: p for d, p in out.items() if not p.is_zero()}


def nabla_series(group: AffineWeylGroup, k: Labelling, order: int) -> NablaSeries:
    data = group.data
    space = data.space
    phi_num = LaurentPoly.constant(space, data.rank)
    phi_den = LaurentPoly.constant(space, data.rank)
    for g in _indivisible_linear(data):
        for grad in (g, tuple(-x for x in g)):
            p, q = _linear_factor(data, k, grad)
            phi_num, phi_den = phi_num * p, phi_den * q
    affine = {0: LaurentPoly.constant(space, data.rank)}
    for factor in positive_indivisible_roots(data, order, include_linear=False):
        m0 = factor.exponents[0]
        A = space.qpow(k[factor.orbit])
        B = -space.qpow(k[factor.double_orbit]) if factor.double_orbit else -space.one
        coeffs = _h_coefficients(A, B, order // m0, space.one)
        q_const = space.q(factor.root.constant)
        series = {}
        for j, c in enumerate(coeffs):
            if c.is_zero():
                continue
            grad = tuple(j * x for x in factor.root.gradient)
            series[j * m0] = LaurentPoly.monomial(space, grad, c * q_const ** j)
        affine = _graded_multiply(affine, series, order)
    return NablaSeries(phi_num, phi_den, affine, order)


def _graded(f: LaurentPoly) -> Dict[int, LaurentPoly]:
    """Katsayıları q-derecesine göre ayırır; her payda tek dereceli olmalı"""
    space = f.space
    out: Dict[int, Dict[Vector, KScalar]] = {}
    for mu, c in f.terms.items():
        numer, denom = c.q_grading()
        if len(denom) != 1:
            raise NonExpandableError(f"coefficient {c.text()} has a mixed-degree denominator")
        (dd, cd), = denom.items()
        for d, cn in numer.items():
            bucket = out.setdefault(d - dd, {})
            value = cn / cd
            bucket[mu] = bucket[mu] + value if mu in bucket else value
    return {d: LaurentPoly(space, f.rank, terms) for d, terms in out.items()}


def _denominator_binomials(data: RootSystemData, k: Labelling, factor: RootFactor) -> List[Tuple[ExponentVector, int]]:
    """(1 − s·q(x)·e(a)) çarpanları için (x, s) listesi"""
    items = [(k[factor.orbit], 1)]
    if factor.double_orbit:
        items.append((k[factor.double_orbit], -1))
    return items


def nabla_ratio_check(group: AffineWeylGroup, k: Labelling, shift: Mapping[str, int], ratio: LaurentPoly,
                      order: int) -> bool:
    """∇_{k+l}/∇_k = ratio, q₀^{order+1} modülünde; payda çarpımları çapraz çarpılarak"""
    data = group.data
    space = data.space
    limit = steps_for(space, order)
    kl = k.shifted(shift)
    roots = positive_indivisible_roots(data, order)
    # Doğrusal kökler Δ₀ yüzünden iki yönde de girer
    for g in _indivisible_linear(data):
        neg = AffineRoot(tuple(-x for x in g), Fraction(0))
        roots.append(RootFactor(neg, (), data.orbit_of(neg), data.orbit_of(neg.double())))
    d_k: Dict[int, LaurentPoly] = {0: LaurentPoly.constant(space, data.rank)}
    d_kl: Dict[int, LaurentPoly] = {0: LaurentPoly.constant(space, data.rank)}
    for factor in roots:
        left = _denominator_binomials(data, k, factor)
        right = _denominator_binomials(data, kl, factor)
        if left == right:
            continue
        for labels, target in ((left, 'k'), (right, 'kl')):
            for x, sign in labels:
                total = x + ExponentVector.of(factor.root.constant)
                steps = int(total.unit * space.denominator)
                coeff = space.qpow(ExponentVector(Fraction(0), total.labels)) * (-sign)
                binomial = {0: LaurentPoly.constant(space, data.rank)}
                term = LaurentPoly.monomial(space, factor.root.gradient, coeff)
                binomial[steps] = binomial[steps] + term if steps in binomial else term
                if target == 'k':
                    d_k = _graded_multiply(d_k, binomial, limit)
                else:
                    d_kl = _graded_multiply(d_kl, binomial, limit)
    rhs = _graded_multiply(_graded(ratio), d_kl, limit)
    for d in set(d_k) | set(rhs):
        left = d_k.get(d, LaurentPoly.zero(space, data.rank))
        right = rhs.get(d, LaurentPoly.zero(space, data.rank))
        if left != right:
            return False
    return True


# --- sabit terim ve iç çarpım ---

def constant_term(group: AffineWeylGroup, k: Labelling, h: LaurentPoly, order: int) -> TruncSeries:
    """ct(h·Δ) = Σ_μ h_μ Δ[−μ], q₀^order'a kadar"""
    space = group.data.space
    prec = steps_for(space, order)
    wf = weight_function(group, k)
    expansions = {mu: series_expand(c, prec) for mu, c in h.terms.items()}
    lowest = min((s.valuation() for s in expansions.values() if s.coeffs), default=0)
    needed = ceil((prec - min(lowest, 0)) / space.q0_steps)
    wf.prepare([tuple(-x for x in mu) for mu in expansions], needed)
    total = TruncSeries.zero(space, prec)
    for mu, s in expansions.items():
        if not s.coeffs:
            continue
        d = wf.coefficient(tuple(-x for x in mu), needed)
        total = total + (s * d).truncate(prec)
    return total


def inner(group: AffineWeylGroup, k: Labelling, f: LaurentPoly, g: LaurentPoly, order: int) -> TruncSeries:
    """(f, g) = ct(f·g*·Δ)"""
    return constant_term(group, k, f * g.star(), order)


def inner1(group: AffineWeylGroup, k: Labelling, f: LaurentPoly, g: LaurentPoly, order: int) -> TruncSeries:
    """(f, g)₁ = (f, g)/(1, 1)"""
    one = LaurentPoly.constant(group.data.space, group.data.rank)
    return (inner(group, k, f, g, order) / inner(group, k, one, one, order)).truncate(steps_for(group.data.space, order))


def nabla_constant_term(group: AffineWeylGroup, k: Labelling, y: LaurentPoly, order: int,
                        w0_poincare: KScalar) -> TruncSeries:
    """W₀-değişmez y için ct(y·∇) = (|W₀|/W₀(τ²))·ct(y·Δ)"""
    data = group.data
    for i in data.finite_indices:
        if weyl_act(data, group.s(i), y) != y:
            raise PreconditionError("nabla constant term needs a W0-invariant polynomial")
    scale = data.space.from_rational(len(group.finite_group())) / w0_poincare
    prec = steps_for(data.space, order)
    return (constant_term(group, k, y, order) * series_expand(scale, prec)).truncate(prec)
