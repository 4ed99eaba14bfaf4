# modules/params.py
"""
Katsayı cismi K: q(x) değerlerini içeren tam rasyonel fonksiyon cismi.

x, birim (q(1) üreteci) ile her kök yörüngesinin k(o) etiket sembolünün rasyonel
lineer birleşimidir. Cisim, sympy'nin seyrek rasyonel fonksiyon cismi üzerine kuruludur:
Q = q(1/D) ve K_o = q(k(o)/D) olmak üzere q(x) = Q^{D·birim} · Π K_o^{D·etiket}.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.fields import field as frac_field

from .errors import DenominatorOverflowError, DivisionByZeroError, UnknownTypeError

RationalLike = Union[int, Fraction, str]


def as_fraction(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class ExponentVector:
    """q(·) argümanı: birim katsayısı ve yörünge etiketlerinin katsayıları"""
    unit: Fraction = Fraction(0)
    labels: Tuple[Tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, unit: RationalLike = 0, labels: Optional[Mapping[str, RationalLike]] = None) -> 'ExponentVector':
        items = []
        for orbit, coeff in sorted((labels or {}).items()):
            coeff = as_fraction(coeff)
            if coeff != 0:
                items.append((orbit, coeff))
        return cls(as_fraction(unit), tuple(items))

    @classmethod
    def symbol(cls, orbit: str) -> 'ExponentVector':
        return cls.of(0, {orbit: 1})

    def label(self, orbit: str) -> Fraction:
        for name, coeff in self.labels:
            if name == orbit:
                return coeff
        return Fraction(0)

    def label_map(self) -> Dict[str, Fraction]:
        return dict(self.labels)

    def is_zero(self) -> bool:
        return self.unit == 0 and not self.labels

    def __add__(self, other: 'ExponentVector') -> 'ExponentVector':
        merged = self.label_map()
        for orbit, coeff in other.labels:
            merged[orbit] = merged.get(orbit, Fraction(0)) + coeff
        return ExponentVector.of(self.unit + other.unit, merged)

    def __neg__(self) -> 'ExponentVector':
        return ExponentVector(-self.unit, tuple((o, -c) for o, c in self.labels))

    def __sub__(self, other: 'ExponentVector') -> 'ExponentVector':
        return self + (-other)

    def scale(self, factor: RationalLike) -> 'ExponentVector':
        factor = as_fraction(factor)
        return ExponentVector.of(self.unit * factor, {o: c * factor for o, c in self.labels})

    def __mul__(self, factor: RationalLike) -> 'ExponentVector':
        return self.scale(factor)

    __rmul__ = __mul__

    def denominator(self) -> int:
        return lcm(self.unit.denominator, *(c.denominator for _, c in self.labels))

    def text(self) -> str:
        parts = []
        if self.unit != 0 or not self.labels:
            parts.append(str(self.unit))
        for orbit, coeff in self.labels:
            if coeff == 1:
                parts.append(f"k_{orbit}")
            elif coeff == -1:
                parts.append(f"-k_{orbit}")
            else:
                parts.append(f"{coeff}*k_{orbit}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.text()


class ScalarField:
    """Bir kök sistemi tipi için K cismi (Q ve K_o üreteçleri)"""

    def __init__(self, orbits: Iterable[str], denominator: int, q0_exponent: RationalLike = 1):
        self.orbits: Tuple[str, ...] = tuple(orbits)
        self.denominator = int(denominator)
        self.q0_exponent = as_fraction(q0_exponent)
        steps = self.q0_exponent * self.denominator
        if steps.denominator != 1:
            raise DenominatorOverflowError(f"q0 = q({self.q0_exponent}) is not a power of q(1/{denominator})")
        # q0 başına Q üssü
        self.q0_steps = int(steps)
        names = ['Q'] + [f'K_{orbit}' for orbit in self.orbits]
        self.field, *self._gens = frac_field(','.join(names), QQ)
        self.ring = self.field.ring
        self.ngens = len(names)
        self._orbit_index = {orbit: i + 1 for i, orbit in enumerate(self.orbits)}
        self.one = KScalar(self, self.field.one)
        self.zero = KScalar(self, self.field.zero)

    # --- kurucular ---

    def from_rational(self, value: RationalLike) -> 'KScalar':
        value = as_fraction(value)
        return KScalar(self, self.field.new(self.ring.ground_new(QQ(value.numerator, value.denominator))))

    def exponent_tuple(self, x: ExponentVector) -> Tuple[int, ...]:
        """ExponentVector -> (Q, K_o ...) tam sayı üsleri"""
        exps = [0] * self.ngens
        scaled = x.unit * self.denominator
        if scaled.denominator != 1:
            raise DenominatorOverflowError(f"unit exponent {x.unit} exceeds denominator bound {self.denominator}")
        exps[0] = int(scaled)
        for orbit, coeff in x.labels:
            if orbit not in self._orbit_index:
                raise UnknownTypeError(f"unknown label symbol k_{orbit}")
            scaled = coeff * self.denominator
            if scaled.denominator != 1:
                raise DenominatorOverflowError(f"label exponent {coeff} of k_{orbit} exceeds denominator bound {self.denominator}")
            exps[self._orbit_index[orbit]] = int(scaled)
        return tuple(exps)

    def exponent_vector(self, exps: Tuple[int, ...]) -> ExponentVector:
        return ExponentVector.of(
            Fraction(exps[0], self.denominator),
            {orbit: Fraction(exps[i], self.denominator) for orbit, i in self._orbit_index.items()},
        )

    def qpow(self, x: ExponentVector) -> 'KScalar':
        """q(x) monomu"""
        return KScalar(self, self._laurent_to_frac({self.exponent_tuple(x): QQ(1)}))

    def q(self, unit: RationalLike) -> 'KScalar':
        return self.qpow(ExponentVector.of(unit))

    def q0(self) -> 'KScalar':
        return self.q(self.q0_exponent)

    def from_kpoly(self, terms: Mapping[ExponentVector, RationalLike]) -> 'KScalar':
        """Sonlu destekli ExponentVector -> rasyonel eşlemesini (grup cebiri elemanı) K'ya taşır"""
        laurent: Dict[Tuple[int, ...], object] = {}
        for x, coeff in terms.items():
            coeff = as_fraction(coeff)
            if coeff == 0:
                continue
            key = self.exponent_tuple(x)
            laurent[key] = laurent.get(key, QQ(0)) + QQ(coeff.numerator, coeff.denominator)
        return KScalar(self, self._laurent_to_frac(laurent))

    def _laurent_to_frac(self, terms: Mapping[Tuple[int, ...], object]):
        # Negatif üsler paydadaki monoma taşınır
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return self.field.zero
        shift = [min(0, min(e[i] for e in terms)) for i in range(self.ngens)]
        numer = self.ring.from_dict({tuple(e[i] - shift[i] for i in range(self.ngens)): c for e, c in terms.items()})
        denom = self.ring.from_dict({tuple(-s for s in shift): QQ(1)})
        return self.field.new(numer, denom)


class KScalar:
    """K cisminin elemanı; değişmez"""
    __slots__ = ('space', 'value')

    def __init__(self, space: ScalarField, value):
        self.space = space
        self.value = value

    # --- aritmetik ---

    def _coerce(self, other) -> 'KScalar':
        if isinstance(other, KScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.space.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KScalar(self.space, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KScalar(self.space, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KScalar(self.space, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KScalar(self.space, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroError("division by zero in K")
        return KScalar(self.space, self.value / other.value)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return KScalar(self.space, -self.value)

    def __pow__(self, exponent: int):
        if exponent < 0 and self.is_zero():
            raise DivisionByZeroError("inverse of zero in K")
        return KScalar(self.space, self.value ** exponent)

    def inverse(self) -> 'KScalar':
        return self ** -1

    # --- karşılaştırma ---

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        # Çapraz çarpımla karar
        return self.value.numer * other.value.denom == other.value.numer * self.value.denom

    def __ne__(self, other) -> bool:
        return not self == other

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.value.numer

    def is_one(self) -> bool:
        return self.value.numer == self.value.denom

    # --- involüsyon ve özelleştirme ---

    def star(self) -> 'KScalar':
        """q(x) -> q(-x) involüsyonu"""
        space = self.space
        numer = space._laurent_to_frac({tuple(-e for e in m): c for m, c in self.value.numer.items()})
        denom = space._laurent_to_frac({tuple(-e for e in m): c for m, c in self.value.denom.items()})
        return KScalar(space, numer / denom)

    def specialize(self, assign: Mapping[str, RationalLike]) -> 'KScalar':
        """Her k(o) sembolünü assign[o]·birim ile değiştirir"""
        space = self.space
        values = {space._orbit_index[o]: as_fraction(a) for o, a in assign.items() if o in space._orbit_index}

        def substitute(poly):
            out: Dict[Tuple[int, ...], object] = {}
            for monom, coeff in poly.items():
                q_exp = Fraction(monom[0]) + sum(monom[i] * a for i, a in values.items())
                if q_exp.denominator != 1:
                    raise DenominatorOverflowError(f"specialization produces q-exponent {q_exp / space.denominator}")
                exps = list(monom)
                exps[0] = int(q_exp)
                for i in values:
                    exps[i] = 0
                key = tuple(exps)
                out[key] = out.get(key, QQ(0)) + coeff
            return space._laurent_to_frac(out)

        return KScalar(space, substitute(self.value.numer) / substitute(self.value.denom))

    # --- q-derecelendirmesi ---

    def q_grading(self) -> Tuple[Dict[int, 'KScalar'], Dict[int, 'KScalar']]:
        """Pay ve paydayı Q üssüne göre etiket-yalnız parçalara ayırır"""
        space = self.space

        def split(poly) -> Dict[int, KScalar]:
            parts: Dict[int, Dict[Tuple[int, ...], object]] = {}
            for monom, coeff in poly.items():
                parts.setdefault(monom[0], {})[(0,) + tuple(monom[1:])] = coeff
            return {deg: KScalar(space, space._laurent_to_frac(terms)) for deg, terms in parts.items()}

        return split(self.value.numer), split(self.value.denom)

    def is_label_only(self) -> bool:
        return all(m[0] == 0 for m in self.value.numer.keys()) and all(m[0] == 0 for m in self.value.denom.keys())

    # --- metin ---

    def _poly_text(self, poly) -> str:
        if not poly:
            return "0"
        parts = []
        for monom, coeff in poly.terms():
            c = Fraction(int(coeff.numerator), int(coeff.denominator))
            if any(monom):
                x = self.space.exponent_vector(monom)
                parts.append(f"{c}*q^({x.text()})")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def text(self) -> str:
        """Kanonik metin: '(pay)/(payda)' ya da yalnız pay"""
        numer = self._poly_text(self.value.numer)
        if self.value.denom == self.space.ring.one:
            return numer
        return f"({numer})/({self._poly_text(self.value.denom)})"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"KScalar({self.text()})"
