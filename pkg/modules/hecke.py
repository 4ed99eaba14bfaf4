# modules/hecke.py
"""
Temel gösterim üzerindeki Hecke operatörleri.

T_i f = τ_i s_i f + b_{a_i}(f − s_i f) Demazure-Lusztig operatörleri, Ω elemanları,
indirgenmiş kelimeler boyunca T(w), Cherednik Y^{λ'} operatörleri, çarpımsal etiketler,
Poincaré polinomları ve U_J^{(ε)} simetrikleştiricileri.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar

from .errors import InvalidCharacterError, NotDivisibleError
from .laurent import LaurentPoly, affine_monomial, exact_div, weyl_act
from .logger import Logger
from .params import KScalar
from .rootdata import AffineWeylGroup, Labelling, WeylElement, dual_label

Element = TypeVar('Element')


@dataclass
class MultLabel:
    """Çarpımsal etiket: üreteç başına değer, indirgenmiş kelimeler boyunca çarpım"""
    group: AffineWeylGroup
    values: Dict[int, KScalar]

    def __call__(self, w: WeylElement) -> KScalar:
        _, word = self.group.reduced_word(w)
        result = self.group.data.space.one
        for i in word:
            result = result * self.values[i]
        return result

    def squared(self) -> 'MultLabel':
        return MultLabel(self.group, {i: v * v for i, v in self.values.items()})


@dataclass(frozen=True)
class EpsilonChar:
    """W_J'nin ±1 değerli karakteri"""
    signs: Tuple[Tuple[int, int], ...]

    @classmethod
    def trivial(cls, J: Iterable[int]) -> 'EpsilonChar':
        return cls(tuple((j, 1) for j in sorted(J)))

    @classmethod
    def sign(cls, J: Iterable[int]) -> 'EpsilonChar':
        return cls(tuple((j, -1) for j in sorted(J)))

    @classmethod
    def from_map(cls, signs: Mapping[int, int]) -> 'EpsilonChar':
        return cls(tuple(sorted(signs.items())))

    def __getitem__(self, j: int) -> int:
        return dict(self.signs).get(j, 1)

    def indices(self) -> Tuple[int, ...]:
        return tuple(j for j, _ in self.signs)

    def validate(self, group: AffineWeylGroup) -> 'EpsilonChar':
        for j, s in self.signs:
            if s not in (1, -1):
                raise InvalidCharacterError(f"epsilon(s{j}) = {s} is not a sign")
        for j, s in self.signs:
            for i, t in self.signs:
                if i < j and s != t and group.coxeter_exponent(i, j) % 2 == 1:
                    raise InvalidCharacterError(f"epsilon differs on s{i}, s{j} although m_{i}{j} is odd")
        return self

    def value(self, group: AffineWeylGroup, w: WeylElement) -> int:
        _, word = group.reduced_word(w)
        result = 1
        for i in word:
            result *= self[i]
        return result


def tau_label(group: AffineWeylGroup, k: Labelling) -> MultLabel:
    return MultLabel(group, {i: group.data.tau(k, i) for i in group.data.indices})


def epsilon_label(group: AffineWeylGroup, J: Iterable[int], eps: EpsilonChar, k: Labelling) -> MultLabel:
    """τ^{(ε)}_j = τ_j (ε(s_j)=1) ya da −τ_j^{-1} (ε(s_j)=−1)"""
    eps.validate(group)
    data = group.data
    values = {}
    for j in J:
        tau = data.tau(k, j)
        values[j] = tau if eps[j] == 1 else -tau.inverse()
    return MultLabel(group, values)


def poincare(elements: Iterable[WeylElement], label: MultLabel) -> KScalar:
    """X(τ) = Σ_{w∈X} τ_w"""
    total = label.group.data.space.zero
    for w in elements:
        total = total + label(w)
    return total


def hecke_sum(group: AffineWeylGroup, J: Sequence[int], apply_T: Callable[[int, Element], Element],
              start: Element, label: MultLabel) -> Element:
    """Σ_{w∈W_J} label(w)·T(w)start; T(s_j w) = T_j T(w) uzunluk arttığında"""
    images: Dict[WeylElement, Element] = {group.one: start}
    for w in group.parabolic(J):
        if w in images:
            continue
        # w = s_j w' olan bir j: w'nin sol inişi
        for j in J:
            prev = group.s(j) * w
            if group.length(prev) < group.length(w) and prev in images:
                images[w] = apply_T(j, images[prev])
                break
    total = None
    for w, image in images.items():
        term = image.scale(label(w))
        total = term if total is None else total + term
    return total


class HeckeAction:
    """(kök verisi, etiket) çifti için temel gösterim operatörleri"""

    def __init__(self, group: AffineWeylGroup, k: Labelling, logger: Logger = None):
        self.group = group
        self.data = group.data
        self.k = k
        self.logger = logger or Logger()
        self.space = self.data.space
        self.tau = {i: self.data.tau(k, i) for i in self.data.indices}
        self.tau_tilde = {i: self.data.tau_tilde(k, i) for i in self.data.indices}
        self._b_numerator: Dict[int, LaurentPoly] = {}
        self._b_denominator: Dict[int, LaurentPoly] = {}
        for i, root in self.data.simple_roots.items():
            x = affine_monomial(self.data, root)
            one = LaurentPoly.constant(self.space, self.data.rank)
            t, u = self.tau[i], self.tau_tilde[i]
            if self.data.is_reduced_at(root):
                self._b_numerator[i] = one.scale(t - t.inverse())
                self._b_denominator[i] = one - x
            else:
                self._b_numerator[i] = one.scale(t - t.inverse()) + x.scale(u - u.inverse())
                self._b_denominator[i] = one - x * x

    def s_act(self, i: int, f: LaurentPoly) -> LaurentPoly:
        return weyl_act(self.data, self.group.s(i), f)

    def b_apply(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """b_{a_i}·f, f tam bölünebilir olduğunda"""
        if f.is_zero():
            return f
        try:
            return exact_div(self._b_numerator[i] * f, self._b_denominator[i])
        except NotDivisibleError as e:
            self.logger.error(f"Demazure-Lusztig division failed at index {i}: {e}", "HECKE",
                              extra={'type': self.data.name, 'index': i})
            raise

    def T(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """T_i f = τ_i s_i f + b_{a_i}(f − s_i f)"""
        sf = self.s_act(i, f)
        return sf.scale(self.tau[i]) + self.b_apply(i, f - sf)

    def T_inv(self, i: int, f: LaurentPoly) -> LaurentPoly:
        t = self.tau[i]
        return self.T(i, f) - f.scale(t - t.inverse())

    def omega(self, u: WeylElement, f: LaurentPoly) -> LaurentPoly:
        """T(u) f = u f"""
        return weyl_act(self.data, u, f)

    def T_w(self, w: WeylElement, f: LaurentPoly) -> LaurentPoly:
        """T(w) = T(u) T_{i1} ⋯ T_{ip}"""
        u, word = self.group.reduced_word(w)
        for i in reversed(word):
            f = self.T(i, f)
        if u != self.group.one:
            f = self.omega(u, f)
        return f

    def T_w_inv(self, w: WeylElement, f: LaurentPoly) -> LaurentPoly:
        u, word = self.group.reduced_word(w)
        if u != self.group.one:
            f = self.omega(u.inverse(), f)
        for i in word:
            f = self.T_inv(i, f)
        return f

    def X(self, mu: Sequence[int], f: LaurentPoly) -> LaurentPoly:
        return f.shift(mu)

    def Y(self, lam: Sequence[int], f: LaurentPoly) -> LaurentPoly:
        """Y^{λ'} = T(t(μ'))·T(t(ν'))^{-1}, λ' = μ' − ν' baskın parçalara ayrılır"""
        positive = tuple(max(int(x), 0) for x in lam)
        negative = tuple(max(-int(x), 0) for x in lam)
        if any(negative):
            f = self.T_w_inv(self.group.translation(negative), f)
        if any(positive):
            f = self.T_w(self.group.translation(positive), f)
        return f

    def symmetrise(self, J: Sequence[int], eps: EpsilonChar, f: LaurentPoly) -> LaurentPoly:
        """U_J^{(ε)} f = (τ^{(ε)}_{w_J})^{-1} Σ_{w∈W_J} τ^{(ε)}_w T(w) f"""
        J = tuple(sorted(J))
        if not J:
            return f
        label = epsilon_label(self.group, J, eps, self.k)
        total = hecke_sum(self.group, J, self.T, f, label)
        return total.scale(label(self.group.longest(J)).inverse())


def symmetrise(group: AffineWeylGroup, J: Sequence[int], eps: EpsilonChar, f: LaurentPoly,
               k: Labelling, logger: Optional[Logger] = None) -> LaurentPoly:
    return HeckeAction(group, k, logger).symmetrise(J, eps, f)


def finite_poincare(group: AffineWeylGroup, k: Labelling, J: Optional[Iterable[int]] = None,
                    squared: bool = True) -> KScalar:
    """W_J(τ²) (J verilmezse W₀)"""
    J = group.data.finite_indices if J is None else tuple(J)
    label = tau_label(group, k)
    return poincare(group.parabolic(J), label.squared() if squared else label)


def coset_poincare(group: AffineWeylGroup, label: MultLabel, J: Iterable[int], ambient: Iterable[int]) -> KScalar:
    """W_{ambient}^J(τ)"""
    return poincare(group.minimal_coset_reps(J, ambient), label)


def hecke_word_check(action: HeckeAction, words: List[Tuple[int, ...]], f: LaurentPoly) -> bool:
    """Aynı elemanın farklı indirgenmiş kelimeleri aynı operatörü verir"""
    images = []
    for word in words:
        g = f
        for i in reversed(word):
            g = action.T(i, g)
        images.append(g)
    return all(img == images[0] for img in images[1:])


def y_bernstein_check(action: HeckeAction, i: int, lam: Sequence[int], f: LaurentPoly) -> bool:
    """Y-tarafı BLZ bağıntısı, b'_{a'_i}(Y^{-1}) paydası temizlenmiş hâliyle:

    (1 − Y^{−2a'_i})(Y^λT_i − T_iY^{s_iλ})f = (τ' − τ'^{-1} + (τ̃' − τ̃'^{-1})Y^{−a'_i})(Y^λ − Y^{s_iλ})f

    τ', τ̃' dual etiketten gelir; indirgenmiş köklerde τ̃' = τ' olduğundan aynı biçim geçerlidir.
    """
    data = action.data
    root = data.simple_roots[i]
    kprime = dual_label(data, action.k)
    t = data.space.qpow(data.tau_exponent(kprime, root))
    u = data.space.qpow(data.tau_tilde_exponent(kprime, root))
    neg = tuple(-int(g) for g in root.gradient)
    lam = tuple(int(x) for x in lam)
    s_lam = action.group.s(i).act_linear(lam)
    diff = action.Y(lam, action.T(i, f)) - action.T(i, action.Y(s_lam, f))
    cleared = diff - action.Y(neg, action.Y(neg, diff))
    rest = action.Y(lam, f) - action.Y(s_lam, f)
    return cleared == rest.scale(t - t.inverse()) + action.Y(neg, rest).scale(u - u.inverse())
