# modules/induced.py
"""
Y-parabolik indüklenmiş modül M_J: (T(v))_{v∈W₀^J} tabanlı serbest A-modülü.

T_i ve X eylemleri, Γ: A_J → M_J küresel vektör gönderimi ve ters izdüşüm burada.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import NotSphericalError, NotWJInvariantError
from .hecke import HeckeAction, finite_poincare, hecke_sum, tau_label
from .laurent import LaurentPoly, weyl_act
from .logger import Logger
from .params import KScalar
from .rootdata import AffineWeylGroup, Labelling, WeylElement
from .weights import TruncSeries, inner


@dataclass
class InducedElement:
    """Σ_v f_v(X) T(v); sıfır koordinatlar saklanmaz"""
    module: 'InducedModule'
    coords: Dict[WeylElement, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.coords = {v: f for v, f in self.coords.items() if not f.is_zero()}

    def coordinate(self, v: WeylElement) -> LaurentPoly:
        return self.coords.get(v, self.module.zero_poly())

    def __add__(self, other: 'InducedElement') -> 'InducedElement':
        coords = dict(self.coords)
        for v, f in other.coords.items():
            coords[v] = coords[v] + f if v in coords else f
        return InducedElement(self.module, coords)

    def __sub__(self, other: 'InducedElement') -> 'InducedElement':
        return self + other.scale(-1)

    def scale(self, factor) -> 'InducedElement':
        return InducedElement(self.module, {v: f.scale(factor) for v, f in self.coords.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, InducedElement):
            return NotImplemented
        keys = set(self.coords) | set(other.coords)
        return all(self.coordinate(v) == other.coordinate(v) for v in keys)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coords

    def to_json(self) -> Dict[str, List[Dict]]:
        group = self.module.group
        return {group.word_text(v): self.coords[v].to_json() for v in self.module.reps if v in self.coords}

    def text(self) -> str:
        group = self.module.group
        parts = [f"({self.coords[v].text()})·T({group.word_text(v)})" for v in self.module.reps if v in self.coords]
        return ' + '.join(parts) or '0'


class InducedModule:
    """M_J; 𝔥_J karakteri τ_j (j∈J) üzerinden etkir"""

    def __init__(self, group: AffineWeylGroup, J: Sequence[int], k: Labelling, logger: Logger = None):
        self.group = group
        self.data = group.data
        self.J = tuple(sorted(J))
        self.k = k
        self.logger = logger or Logger()
        self.hecke = HeckeAction(group, k, self.logger)
        self.reps: List[WeylElement] = group.minimal_coset_reps(self.J)
        self.tau = tau_label(group, k)
        self.w0 = group.longest(self.data.finite_indices)
        self.wJ = group.longest(self.J)
        self.top = self.w0 * self.wJ
        self._cocycle: Dict[Tuple[int, WeylElement], Tuple[WeylElement, WeylElement]] = {}

    def zero_poly(self) -> LaurentPoly:
        return LaurentPoly.zero(self.data.space, self.data.rank)

    def element(self, coords: Mapping[WeylElement, LaurentPoly]) -> InducedElement:
        return InducedElement(self, dict(coords))

    def basis_vector(self, f: LaurentPoly, v: Optional[WeylElement] = None) -> InducedElement:
        """f(X)·T(v), v verilmezse T(e)"""
        return InducedElement(self, {self.group.one if v is None else v: f})

    def cocycle(self, i: int, v: WeylElement) -> Tuple[WeylElement, WeylElement]:
        """s_i v = (s_i•v)·m_i(v)"""
        key = (i, v)
        if key not in self._cocycle:
            self._cocycle[key] = self.group.coset_decompose(self.group.s(i) * v, self.J)
        return self._cocycle[key]

    # --- eylemler ---

    def act_Ti(self, i: int, h: InducedElement) -> InducedElement:
        """T_i(f T(v)) = (s_i f)·T_iT(v) + b_i(f − s_i f)·T(v)"""
        group = self.group
        t = self.hecke.tau[i]
        result = InducedElement(self, {})
        for v, f in h.coords.items():
            sf = self.hecke.s_act(i, f)
            target, m = self.cocycle(i, v)
            coords = {target: sf.scale(self.tau(m))}
            rest = self.hecke.b_apply(i, f - sf)
            if group.length(group.s(i) * v) < group.length(v):
                rest = rest + sf.scale(t - t.inverse())
            coords[v] = coords[v] + rest if v in coords else rest
            result = result + InducedElement(self, coords)
        return result

    def act_Ti_inv(self, i: int, h: InducedElement) -> InducedElement:
        t = self.hecke.tau[i]
        return self.act_Ti(i, h) - h.scale(t - t.inverse())

    def act_X(self, mu: Sequence[int], h: InducedElement) -> InducedElement:
        return InducedElement(self, {v: f.shift(mu) for v, f in h.coords.items()})

    def act_poly(self, g: LaurentPoly, h: InducedElement) -> InducedElement:
        """g(X)·h"""
        return InducedElement(self, {v: g * f for v, f in h.coords.items()})

    def is_spherical(self, h: InducedElement) -> bool:
        return all(self.act_Ti(i, h) == h.scale(self.hecke.tau[i]) for i in self.data.finite_indices)

    # --- Γ ---

    def is_wj_invariant(self, f: LaurentPoly) -> bool:
        return all(self.hecke.s_act(j, f) == f for j in self.J)

    def gamma(self, f: LaurentPoly) -> InducedElement:
        """Γ(f) = U₀(f(X)·T(e))"""
        if not self.is_wj_invariant(f):
            raise NotWJInvariantError(f"polynomial is not W_J-invariant for J={list(self.J)}")
        finite = self.data.finite_indices
        total = hecke_sum(self.group, finite, self.act_Ti, self.basis_vector(f), self.tau)
        image = total.scale(self.tau(self.w0).inverse())
        self.logger.debug(f"gamma image has {len(image.coords)} coordinates", "INDUCED",
                          extra={'type': self.data.name, 'J': list(self.J)})
        return image

    def highest_scalar(self) -> KScalar:
        """W_J(τ²)/τ_{w_J}"""
        return finite_poincare(self.group, self.k, self.J) / self.tau(self.wJ)

    def spherical_project(self, h: InducedElement) -> Dict:
        """Küresel h için f = (τ_{w_J}/W_J(τ²))·w₀(f_{w₀w_J}), Γ(f) = h kontrolüyle"""
        if not self.is_spherical(h):
            self.logger.error("element is not spherical", "INDUCED",
                              extra={'type': self.data.name, 'J': list(self.J)})
            raise NotSphericalError("element is not fixed by the finite Hecke algebra")
        top_coord = h.coordinate(self.top)
        f = weyl_act(self.data, self.w0, top_coord).scale(self.highest_scalar().inverse())
        symmetric = all(
            weyl_act(self.data, self.w0 * self.group.s(j) * self.w0, top_coord) == top_coord
            for j in self.J
        )
        invariant = self.is_wj_invariant(f)
        recovered = invariant and self.gamma(f) == h
        return {'f': f, 'in_AJ': invariant, 'gamma_matches': recovered, 'top_symmetric': symmetric}

    def gamma_inner(self, h1: InducedElement, h2: InducedElement, order: int) -> TruncSeries:
        """⟪Γ(f),Γ(g)⟫ := (f, g)"""
        f = self.spherical_project(h1)['f']
        g = self.spherical_project(h2)['f']
        return inner(self.group, self.k, f, g, order)


def induced_module(group: AffineWeylGroup, J: Sequence[int], k: Labelling,
                   logger: Optional[Logger] = None) -> InducedModule:
    return InducedModule(group, J, k, logger)
