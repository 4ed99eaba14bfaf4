# modules/macpoly.py
"""
Simetrik olmayan Macdonald polinomları E_λ, F^{(ε)}_{J,λ} ve P^{(ε)}_{J,λ}.

E_λ, aşağı kümenin {e(μ)} tabanında Y-operatörlerinin ortak öz vektörü olarak tam
doğrusal cebirle bulunur. c-fonksiyonu çarpımları, yörünge içi bağıntılar ve norm
formülü denetleyicisi de burada.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from .errors import (
    InvariantViolationError, NotJDominantError, PoleAtPointError, PreconditionError,
    SingularMatrixError, SpectralCollisionError, TriangularityError,
)
from .hecke import EpsilonChar, HeckeAction, epsilon_label, poincare, tau_label
from .laurent import LaurentPoly
from .logger import Logger
from .params import KScalar
from .rootdata import AffineRoot, AffineWeylGroup, Labelling, SpectralPoint, Vector, dual_label
from .weights import TruncSeries, inner, inner1, series_expand, steps_for, weight_function


def b_eval(t: KScalar, u: KScalar, x: KScalar) -> KScalar:
    """b(t,u;x) = (t − t^{-1} + (u − u^{-1})x)/(1 − x²)"""
    denom = 1 - x * x
    if denom.is_zero():
        raise PoleAtPointError("b(t,u;x) has a pole at x = ±1")
    return (t - t.inverse() + (u - u.inverse()) * x) / denom


def c_eval(t: KScalar, u: KScalar, x: KScalar) -> KScalar:
    """c(t,u;x) = t − b(t,u;x)"""
    return t - b_eval(t, u, x)


@dataclass(frozen=True)
class CFactor:
    root: AffineRoot
    sign: int = 1

    def parameters(self, group: AffineWeylGroup, kprime: Labelling) -> Tuple[KScalar, KScalar]:
        data = group.data
        t = data.space.qpow(data.tau_exponent(kprime, self.root).scale(self.sign))
        u = data.space.qpow(data.tau_tilde_exponent(kprime, self.root).scale(self.sign))
        return t, u

    def evaluate(self, group: AffineWeylGroup, kprime: Labelling, point: SpectralPoint) -> KScalar:
        t, u = self.parameters(group, kprime)
        exponent = point.evaluate(self.root)
        if exponent.is_zero():
            raise PoleAtPointError(f"root {self.root.text()} vanishes at the spectral point")
        return c_eval(t, u, group.data.space.qpow(exponent))


@dataclass
class MacdonaldRecord:
    lam: Vector
    poly: LaurentPoly
    eigen: Dict[Vector, KScalar] = field(default_factory=dict)


_E_CACHE: Dict[Tuple[str, Vector, Labelling], MacdonaldRecord] = {}


class MacdonaldFamily:
    """Bir (tip, k) için E, F, P ve norm denetimleri"""

    def __init__(self, group: AffineWeylGroup, k: Labelling, logger: Logger = None):
        self.group = group
        self.data = group.data
        self.k = k
        self.kprime = dual_label(self.data, k)
        self.logger = logger or Logger()
        self.hecke = HeckeAction(group, k, self.logger)
        self.space = self.data.space
        self.basis: List[Vector] = [tuple(int(i == j) for j in range(self.data.rank)) for i in range(self.data.rank)]

    # --- öz değerler ---

    def eigenvalue(self, b: Sequence[int], lam: Sequence[int]) -> KScalar:
        """q(⟨b, −r_{k'}(λ)⟩)"""
        point = self.group.spectral_point(lam, self.k)
        return self.space.qpow(-point.pair(b))

    def eigen_tuple(self, lam: Sequence[int]) -> Dict[Vector, KScalar]:
        return {b: self.eigenvalue(b, lam) for b in self.basis}

    # --- E_λ ---

    def compute_e(self, lam: Sequence[int]) -> MacdonaldRecord:
        lam = tuple(int(x) for x in lam)
        key = (self.data.name, lam, self.k)
        if key in _E_CACHE:
            return _E_CACHE[key]
        group = self.group
        down = group.down_set(lam)
        eigen = {mu: self.eigen_tuple(mu) for mu in down}
        columns: Dict[Vector, Dict[Vector, LaurentPoly]] = {b: {} for b in self.basis}
        for b in self.basis:
            for mu in down:
                image = self.hecke.Y(b, LaurentPoly.monomial(self.space, mu))
                for nu in image.terms:
                    if not group.order_leq(nu, mu):
                        raise TriangularityError(f"Y^{b} e({mu}) has support at {nu}, not below {mu}")
                if image.coefficient(mu) != eigen[mu][b]:
                    self.logger.error(f"diagonal of Y^{b} at {mu} differs from the spectral eigenvalue", "MACPOLY",
                                      extra={'type': self.data.name, 'lambda': mu})
                    raise InvariantViolationError(f"Y^{b} diagonal mismatch at {mu}")
                columns[b][mu] = image
        coeffs: Dict[Vector, KScalar] = {lam: self.space.one}
        for mu in down[1:]:
            b = next((b for b in self.basis if eigen[mu][b] != eigen[lam][b]), None)
            if b is None:
                raise SpectralCollisionError(f"weights {mu} and {lam} share all Y-eigenvalues")
            acc = self.space.zero
            for nu, c in coeffs.items():
                acc = acc + c * columns[b][nu].coefficient(mu)
            coeffs[mu] = acc / (eigen[lam][b] - eigen[mu][b])
        poly = LaurentPoly(self.space, self.data.rank, coeffs)
        for b in self.basis:
            if self.hecke.Y(b, poly) != poly.scale(eigen[lam][b]):
                self.logger.error(f"E{lam} fails the Y^{b} eigen equation", "MACPOLY",
                                  extra={'type': self.data.name, 'lambda': lam})
                raise InvariantViolationError(f"E{lam} is not a Y^{b} eigenvector")
        record = MacdonaldRecord(lam, poly, eigen[lam])
        _E_CACHE[key] = record
        self.logger.info(f"E{lam} computed", "MACPOLY",
                         extra={'type': self.data.name, 'lambda': lam, 'support': len(poly.terms)})
        return record

    def b_prime(self, i: int, lam: Sequence[int]) -> KScalar:
        """b'_{a'_i}(r_{k'}(λ))"""
        data = self.data
        root = data.simple_roots[i]
        point = self.group.spectral_point(lam, self.k)
        exponent = point.evaluate(root)
        if exponent.is_zero():
            raise PoleAtPointError(f"a'_{i} vanishes at r({tuple(lam)})")
        t = data.space.qpow(data.tau_exponent(self.kprime, root))
        u = data.space.qpow(data.tau_tilde_exponent(self.kprime, root))
        return b_eval(t, u, data.space.qpow(exponent))

    def ti_on_e(self, i: int, lam: Sequence[int]) -> Dict:
        """⟨λ,a'_i⟩ = 0 ise T_iE_λ = τ_iE_λ; > 0 ise E_{s_iλ} = τ_i(T_iE_λ − b'E_λ)"""
        lam = tuple(int(x) for x in lam)
        if i not in self.data.finite_indices:
            raise PreconditionError(f"index {i} is not in I0")
        pairing = self.data.pairing(lam, self.data.simple_roots[i].gradient)
        if pairing < 0:
            raise PreconditionError(f"<{lam}, a'_{i}> = {pairing} is negative")
        E = self.compute_e(lam).poly
        TE = self.hecke.T(i, E)
        tau = self.hecke.tau[i]
        if pairing == 0:
            return {'case': 'stabilized', 'holds': TE == E.scale(tau), 'poly': E}
        target = self.group.s(i).act_linear(lam)
        recursed = (TE - E.scale(self.b_prime(i, lam))).scale(tau)
        direct = self.compute_e(target).poly
        return {'case': 'raised', 'target': target, 'holds': recursed == direct, 'poly': recursed}

    # --- F ve P ---

    def compute_f(self, J: Sequence[int], eps: EpsilonChar, lam: Sequence[int]) -> LaurentPoly:
        return self.hecke.symmetrise(J, eps, self.compute_e(lam).poly)

    def compute_p(self, J: Sequence[int], eps: EpsilonChar, lam0: Sequence[int]) -> LaurentPoly:
        """P = (τ_{w_J}/W_{J,λ₀}(τ²))·F; ε stabilizatörde −1 alırsa 0"""
        J = tuple(sorted(J))
        lam0 = tuple(int(x) for x in lam0)
        if not self.group.is_j_dominant(lam0, J):
            raise NotJDominantError(f"{lam0} is not J-dominant for J={list(J)}")
        stab = self.group.stabilizer(lam0, J)
        if any(eps[j] == -1 for j in stab):
            return LaurentPoly.zero(self.space, self.data.rank)
        label = tau_label(self.group, self.k)
        scalar = label(self.group.longest(J)) / poincare(self.group.parabolic(stab), label.squared())
        return self.compute_f(J, eps, lam0).scale(scalar)

    # --- c-fonksiyonu çarpımları ---

    def c_product(self, v, eps: EpsilonChar, point: SpectralPoint) -> KScalar:
        """Π_r c(τ'^{ε_r}, τ̃'^{ε_r}; e(b'_r)(nokta)), b_r v'nin ters çevrilen kökleri"""
        _, word = self.group.reduced_word(v)
        roots = self.group.inversion_set(v)
        result = self.space.one
        for i, root in zip(word, roots):
            result = result * CFactor(root, eps[i]).evaluate(self.group, self.kprime, point)
        return result

    def orbit_relation(self, J: Sequence[int], eps: EpsilonChar, lam0: Sequence[int], mu: Sequence[int]) -> KScalar:
        """F_{J,μ} = ε(v)τ_v c_{εk'}(v)(r(λ₀))·F_{J,λ₀}, v = v̄_J(μ)"""
        J = tuple(sorted(J))
        rep, v = self.group.j_dominant_rep(mu, J)
        if rep != tuple(int(x) for x in lam0):
            raise PreconditionError(f"{tuple(mu)} is not in the W_J-orbit of {tuple(lam0)}")
        point = self.group.spectral_point(lam0, self.k)
        tau_v = tau_label(self.group, self.k)(v)
        return self.c_product(v, eps, point) * tau_v * eps.value(self.group, v)

    def norm_scalar(self, J: Sequence[int], eps: EpsilonChar, lam0: Sequence[int]) -> KScalar:
        """ε(v)·W_J^{J'}(τ^{(ε)2}) / (τ^{(ε)}_v · c_{εk'}(v)(r(λ₀))), v = w_J w_{J'}"""
        J = tuple(sorted(J))
        group = self.group
        stab = group.stabilizer(lam0, J)
        v = group.longest(J) * group.longest(stab)
        eps_label = epsilon_label(group, J, eps, self.k)
        coset_sum = poincare(group.minimal_coset_reps(stab, J), eps_label.squared())
        point = group.spectral_point(lam0, self.k)
        return coset_sum * eps.value(group, v) / (eps_label(v) * self.c_product(v, eps, point))

    def norm_check(self, J: Sequence[int], eps: EpsilonChar, lam0: Sequence[int], order: int) -> Dict:
        J = tuple(sorted(J))
        lam0 = tuple(int(x) for x in lam0)
        stab = self.group.stabilizer(lam0, J)
        if any(eps[j] == -1 for j in stab):
            raise PreconditionError(f"epsilon is nontrivial on the stabilizer of {lam0}")
        P = self.compute_p(J, eps, lam0)
        lhs = inner(self.group, self.k, P, P, order)
        top = self.group.longest(J).act_linear(lam0)
        E_top = self.compute_e(top).poly
        prec = steps_for(self.space, order)
        scalar = series_expand(self.norm_scalar(J, eps, lam0), prec)
        rhs = (scalar * inner(self.group, self.k, E_top, E_top, order)).truncate(prec)
        holds = lhs.agrees(rhs, prec)
        log = self.logger.info if holds else self.logger.error
        log(f"norm check for lambda0={lam0}, J={list(J)}: {'ok' if holds else 'mismatch'}", "MACPOLY",
            extra={'type': self.data.name, 'lambda': lam0, 'J': list(J), 'order': order})
        return {'lambda0': lam0, 'J': list(J), 'epsilon': [eps[j] for j in J], 'holds': holds,
                'lhs': lhs, 'rhs': rhs}

    # --- Hermitian simetri ---

    def orbit_norms(self, lam_min: Sequence[int]) -> Dict[Vector, KScalar]:
        """W₀λ üzerinde (E_μ, E_μ)₁; E_λ = e(λ) olmalı. N_{s_iμ} = (1 − b'b'*)·N_μ, ⟨μ,a'_i⟩ > 0"""
        lam_min = tuple(int(x) for x in lam_min)
        if self.group.down_set(lam_min) != [lam_min]:
            raise PreconditionError(f"E{lam_min} is not the monomial e{lam_min}")
        norms: Dict[Vector, KScalar] = {lam_min: self.space.one}
        queue = [lam_min]
        while queue:
            mu = queue.pop(0)
            for i in self.data.finite_indices:
                if self.data.pairing(mu, self.data.simple_roots[i].gradient) <= 0:
                    continue
                target = self.group.s(i).act_linear(mu)
                if target not in norms:
                    b = self.b_prime(i, mu)
                    norms[target] = norms[mu] * (1 - b * b.star())
                    queue.append(target)
        return norms

    def hermitian_check(self, lam_min: Sequence[int], coeffs_f: Mapping[Vector, KScalar],
                        coeffs_g: Mapping[Vector, KScalar], order: int) -> Dict:
        """f = Σ a_μE_μ, g = Σ b_μE_μ için (f,g)₁ = S ve (g,f)₁ = S*, S = Σ a_μ b_μ* N_μ tam değeri"""
        norms = self.orbit_norms(lam_min)
        zero = LaurentPoly.zero(self.space, self.data.rank)
        f, g, exact = zero, zero, self.space.zero
        for mu, norm in norms.items():
            a = coeffs_f.get(mu, self.space.zero)
            b = coeffs_g.get(mu, self.space.zero)
            E = self.compute_e(mu).poly
            f = f + E.scale(a)
            g = g + E.scale(b)
            exact = exact + a * b.star() * norm
        prec = steps_for(self.space, order)
        lhs = inner1(self.group, self.k, f, g, order)
        rhs = inner1(self.group, self.k, g, f, order)
        holds = lhs.agrees(series_expand(exact, prec), prec) and rhs.agrees(series_expand(exact.star(), prec), prec)
        if not holds:
            self.logger.error(f"hermitian symmetry fails on the orbit of {tuple(lam_min)}", "MACPOLY",
                              extra={'type': self.data.name, 'order': order})
        return {'holds': holds, 'exact': exact, 'lhs': lhs, 'rhs': rhs}

    # --- Gram-Schmidt doğrulaması ---

    def gram_schmidt_e(self, lam: Sequence[int], order: int) -> Dict[Vector, TruncSeries]:
        """(E, e(ν)) = 0 (ν < λ) Gram sisteminin kesik seri çözümü"""
        lam = tuple(int(x) for x in lam)
        lower = self.group.down_set(lam)[1:]
        prec = steps_for(self.space, order)
        wf = weight_function(self.group, self.k)
        diffs = {tuple(a - b for a, b in zip(nu, mu)) for nu in lower for mu in lower + [lam]}
        wf.prepare(diffs, order)

        def gram(nu, mu):
            return wf.coefficient(tuple(a - b for a, b in zip(nu, mu)), order)

        size = len(lower)
        matrix = [[gram(nu, mu) for mu in lower] for nu in lower]
        rhs = [-gram(nu, lam) for nu in lower]
        for col in range(size):
            pivot = min(range(col, size), key=lambda r: matrix[r][col].valuation())
            if matrix[pivot][col].valuation() > 0 or not matrix[pivot][col].coeffs:
                raise SingularMatrixError("Gram matrix has no unit pivot")
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
            inv = matrix[col][col].inverse()
            for r in range(size):
                if r == col or not matrix[r][col].coeffs:
                    continue
                factor = matrix[r][col] * inv
                matrix[r] = [(matrix[r][c] - factor * matrix[col][c]).truncate(prec) for c in range(size)]
                rhs[r] = (rhs[r] - factor * rhs[col]).truncate(prec)
        solution = {lam: TruncSeries.constant(self.space, self.space.one, prec)}
        for idx, mu in enumerate(lower):
            solution[mu] = (rhs[idx] * matrix[idx][idx].inverse()).truncate(prec)
        return solution

    def gram_schmidt_check(self, lam: Sequence[int], order: int) -> bool:
        E = self.compute_e(lam).poly
        prec = steps_for(self.space, order)
        solution = self.gram_schmidt_e(lam, order)
        for mu, series in solution.items():
            if not series_expand(E.coefficient(mu), prec).agrees(series, prec):
                return False
        return all(mu in solution for mu in E.terms)
